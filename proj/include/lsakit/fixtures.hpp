#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lsakit/complements.hpp"
#include "lsakit/flag.hpp"

namespace lsakit::fixtures {

/// The 4-dimensional complete simple left-symmetric algebra (over fields of
/// characteristic 0; the same table is usable over any prime field).
inline Algebra ex46(const FieldSpec& k) {
    Algebra a = Algebra::zero(k, 4);
    auto one = Scalar::one(k);
    a.set_c(0, 1, 3, one);              // e1∘e2 = e4
    a.set_c(2, 1, 0, one);              // e3∘e2 = e1
    a.set_c(3, 2, 2, Scalar::integer(k, 2));  // e4∘e3 = 2e3
    a.set_c(1, 0, 3, one);              // e2∘e1 = e4
    a.set_c(3, 0, 0, one);              // e4∘e1 = e1
    a.set_c(1, 2, 0, Scalar::integer(k, 2));  // e2∘e3 = 2e1
    a.set_c(3, 1, 1, -one);             // e4∘e2 = −e2
    return a;
}

/// 3-dimensional Novikov algebra whose sub-adjacent Lie algebra has
/// [e1,e2] = e2, [e1,e3] = e3.
inline Algebra ex47(const FieldSpec& k) {
    Algebra a = Algebra::zero(k, 3);
    auto one = Scalar::one(k);
    a.set_c(0, 0, 0, -one);  // e1∘e1 = −e1 + e2
    a.set_c(0, 0, 1, one);
    a.set_c(1, 0, 1, -one);  // e2∘e1 = −e2
    a.set_c(2, 0, 2, -one);  // e3∘e1 = −e3
    return a;
}

/// 4-dimensional left-symmetric algebra that factors through the subalgebras
/// spanned by {e1,e3} and {e2,e4}.
inline Algebra ex55(const FieldSpec& k) {
    Algebra a = Algebra::zero(k, 4);
    auto one = Scalar::one(k);
    a.set_c(0, 2, 2, one);              // e1∘e3 = e3
    a.set_c(1, 1, 1, Scalar::integer(k, 2));  // e2∘e2 = 2e2
    a.set_c(2, 3, 1, one);              // e3∘e4 = e2
    a.set_c(0, 3, 3, -one);             // e1∘e4 = −e4
    a.set_c(1, 2, 2, one);              // e2∘e3 = e3
    a.set_c(3, 2, 1, one);              // e4∘e3 = e2
    a.set_c(1, 3, 3, one);              // e2∘e4 = e4
    return a;
}

/// Codimension-1 family over ex46: h = g = 0, D = diag(c,b,c,b),
/// T = diag(c,c,b,b), a0 = d·e4, α = e. Valid exactly when c² = ec, b² = eb.
inline FlagDatum ex46_ext(const FieldSpec& k, const Scalar& b, const Scalar& c, const Scalar& d,
                          const Scalar& e) {
    FlagDatum fd = FlagDatum::zero(ex46(k));
    fd.D.at(0, 0) = c;
    fd.D.at(1, 1) = b;
    fd.D.at(2, 2) = c;
    fd.D.at(3, 3) = b;
    fd.T.at(0, 0) = c;
    fd.T.at(1, 1) = c;
    fd.T.at(2, 2) = b;
    fd.T.at(3, 3) = b;
    fd.a0[3] = d;
    fd.alpha = e;
    return fd;
}

/// Case-1 family over ex47: D sends e1 to a11·e1 + a12·e2 + a13·e3, T is
/// a11·Id − a11·E12 in the printed pattern, and a0 is pinned by the family
/// formulas c1 = a11α − a11², c2 = α(a11+a12) − a11a12, c3 = αa13 − a11a13.
inline FlagDatum ex47_case1(const FieldSpec& k, const Scalar& a11, const Scalar& a12, const Scalar& a13,
                            const Scalar& alpha) {
    FlagDatum fd = FlagDatum::zero(ex47(k));
    fd.D.at(0, 0) = a11;
    fd.D.at(1, 0) = a12;
    fd.D.at(2, 0) = a13;
    fd.T.at(0, 0) = a11;
    fd.T.at(1, 0) = -a11;
    fd.T.at(1, 1) = a11;
    fd.T.at(2, 2) = a11;
    fd.a0[0] = a11 * alpha - a11 * a11;
    fd.a0[1] = alpha * (a11 + a12) - a11 * a12;
    fd.a0[2] = alpha * a13 - a11 * a13;
    fd.alpha = alpha;
    return fd;
}

/// Case-2 family over ex47: g(e1) = −1, D(e1) = a12·e2,
/// T = −a12·Id + b12·E21 + b13·E31 (so T(e_i) = −a12·e_i off the first
/// column), a0 = (a12b12 + a12b13)·e2, α = −a12.
inline FlagDatum ex47_case2(const FieldSpec& k, const Scalar& a12, const Scalar& b12, const Scalar& b13) {
    FlagDatum fd = FlagDatum::zero(ex47(k));
    auto one = Scalar::one(k);
    fd.g[0] = -one;
    fd.D.at(1, 0) = a12;
    fd.T.at(0, 0) = -a12;
    fd.T.at(1, 0) = b12;
    fd.T.at(2, 0) = b13;
    fd.T.at(1, 1) = -a12;
    fd.T.at(2, 2) = -a12;
    fd.a0[1] = a12 * b12 + a12 * b13;
    fd.alpha = -a12;
    return fd;
}

/// Case-3 family over ex47: h(e1) = g(e1) = −1; all parameters supplied by
/// the caller and validated by check_flag (the printed subcase constraints
/// among c1..c3, α are not re-encoded here).
inline FlagDatum ex47_case3(const FieldSpec& k, const Scalar& a12, const Scalar& a13, const Scalar& b12,
                            const Scalar& b13, const Scalar& b32, const Scalar& b33, const Scalar& c1,
                            const Scalar& c2, const Scalar& c3, const Scalar& alpha) {
    FlagDatum fd = FlagDatum::zero(ex47(k));
    auto one = Scalar::one(k);
    fd.h[0] = -one;
    fd.g[0] = -one;
    fd.D.at(1, 0) = a12;
    fd.D.at(2, 0) = a13;
    fd.T.at(1, 0) = b12;
    fd.T.at(2, 0) = b13;
    fd.T.at(1, 1) = -a12;
    fd.T.at(2, 1) = -a13;
    fd.T.at(1, 2) = b32;
    fd.T.at(2, 2) = b33;
    fd.a0[0] = c1;
    fd.a0[1] = c2;
    fd.a0[2] = c3;
    fd.alpha = alpha;
    return fd;
}

/// Case-4 family over ex47: h(e1) = γ, g(e1) = −1, D = 0, T(e1) = b12e2+b13e3,
/// a0 = c2e2 + c3e3, α = 0. γ-dependent degeneracies are left to check_flag.
inline FlagDatum ex47_case4(const FieldSpec& k, const Scalar& b12, const Scalar& b13, const Scalar& c2,
                            const Scalar& c3, const Scalar& gamma) {
    FlagDatum fd = FlagDatum::zero(ex47(k));
    fd.h[0] = gamma;
    fd.g[0] = -Scalar::one(k);
    fd.T.at(1, 0) = b12;
    fd.T.at(2, 0) = b13;
    fd.a0[1] = c2;
    fd.a0[2] = c3;
    fd.alpha = Scalar::zero(k);
    return fd;
}

/// The matched pair carried by ex55 along the split {e1,e3} | {e2,e4}:
/// A = span(e1,e3) with e1∘e3 = e3, B = span(e2,e4) with e2∘e2 = 2e2,
/// e2∘e4 = e4; the four nonzero actions are l_A(e1)e4 = −e4,
/// l_A(e3)e4 = e2, r_A(e3)e4 = e2, l_B(e2)e3 = e3.
inline MatchedPair ex55_mp(const FieldSpec& k) {
    MatchedPair mp;
    auto one = Scalar::one(k);
    mp.A = Algebra::zero(k, 2);
    mp.A.set_labels({"e1", "e3"});
    mp.A.set_c(0, 1, 1, one);
    mp.B = Algebra::zero(k, 2);
    mp.B.set_labels({"e2", "e4"});
    mp.B.set_c(0, 0, 0, Scalar::integer(k, 2));
    mp.B.set_c(0, 1, 1, one);
    mp.la.assign(2, Matrix::zero(k, 2, 2));
    mp.ra.assign(2, Matrix::zero(k, 2, 2));
    mp.lb.assign(2, Matrix::zero(k, 2, 2));
    mp.rb.assign(2, Matrix::zero(k, 2, 2));
    mp.la[0].at(1, 1) = -one;  // l_A(e1)e4 = −e4
    mp.la[1].at(0, 1) = one;   // l_A(e3)e4 = e2
    mp.ra[1].at(0, 1) = one;   // r_A(e3)e4 = e2
    mp.lb[0].at(1, 1) = one;   // l_B(e2)e3 = e3
    return mp;
}

/// The deformation-map family of ex55-mp: φ(e2) = 0, φ(e4) = b·e3.
inline DeformationMap ex55_phi(const FieldSpec& k, const Scalar& b) {
    DeformationMap dm;
    dm.phi = Matrix::zero(k, 2, 2);
    dm.phi.at(1, 1) = b;
    return dm;
}

struct Ex46Params {
    Scalar b, c, d, e;
};

namespace detail_fx {

inline std::optional<BigInt> bigint_sqrt(const BigInt& v) {
    if (v.sign() < 0) return std::nullopt;
    if (v.is_zero()) return BigInt(0);
    BigInt lo(1), hi = v;
    while (lo <= hi) {
        BigInt mid = (lo + hi) / BigInt(2);
        BigInt sq = mid * mid;
        if (sq == v) return mid;
        if (sq < v) lo = mid + BigInt(1);
        else hi = mid - BigInt(1);
    }
    return std::nullopt;
}

inline std::optional<Scalar> scalar_sqrt(const Scalar& s) {
    if (s.field().is_prime()) {
        for (std::int64_t r = 0; r < s.field().p; ++r) {
            Scalar c = Scalar::integer(s.field(), r);
            if (c * c == s) return c;
        }
        return std::nullopt;
    }
    auto n = bigint_sqrt(s.numerator());
    auto d = bigint_sqrt(s.denominator());
    if (!n || !d) return std::nullopt;
    return Scalar::rational(*n, *d);
}

}  // namespace detail_fx

/// Decides whether two members of the ex46 family are linked by the family
/// relation b = βb', c = βc', d = β²d', e = βe' for some β ≠ 0; returns the
/// witness β if one exists. This is exactly the shape every equivalence of
/// family datums must take (q1/q2 force D = βD', T = βT' when h = g = 0 and
/// b0 drops out), so a miss here refutes equivalence inside the family.
inline std::optional<Scalar> ex46_family_witness(const Ex46Params& lhs, const Ex46Params& rhs) {
    const FieldSpec& k = lhs.b.field();
    auto relations_hold = [&](const Scalar& beta) {
        return !beta.is_zero() && lhs.b == beta * rhs.b && lhs.c == beta * rhs.c &&
               lhs.d == beta * beta * rhs.d && lhs.e == beta * rhs.e;
    };
    for (const auto& [num, den] : {std::pair(&lhs.b, &rhs.b), std::pair(&lhs.c, &rhs.c), std::pair(&lhs.e, &rhs.e)}) {
        if (!den->is_zero()) {
            Scalar beta = *num / *den;
            return relations_hold(beta) ? std::optional<Scalar>(beta) : std::nullopt;
        }
        if (!num->is_zero()) return std::nullopt;  // βb' = 0 cannot reach b ≠ 0
    }
    // b' = c' = e' = 0: only d = β²d' constrains β
    if (rhs.d.is_zero()) return lhs.d.is_zero() ? std::optional<Scalar>(Scalar::one(k)) : std::nullopt;
    auto beta = detail_fx::scalar_sqrt(lhs.d / rhs.d);
    if (beta && relations_hold(*beta)) return beta;
    return std::nullopt;
}

}  // namespace lsakit::fixtures
