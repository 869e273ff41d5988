#pragma once

#include <map>
#include <vector>

#include "lsakit/datum.hpp"
#include "lsakit/union_find.hpp"

namespace lsakit {

/// Matched pair (A, B, l_A, r_A, l_B, r_B): the data of a bicrossed product.
/// l_A(e_i), r_A(e_i) act on B; l_B(x_t), r_B(x_t) act on A.
struct MatchedPair {
    Algebra A, B;
    std::vector<Matrix> la, ra;  // per A-basis vector, nB × nB
    std::vector<Matrix> lb, rb;  // per B-basis vector, nA × nA

    const FieldSpec& field() const { return A.field(); }

    /// The induced extending datum: f = 0 and dot = the product of B.
    ExtendingDatum to_datum() const {
        ExtendingDatum d = ExtendingDatum::zero(A, B.dim());
        d.la = la;
        d.ra = ra;
        d.lv = lb;
        d.rv = rb;
        for (std::size_t t = 0; t < B.dim(); ++t)
            for (std::size_t u = 0; u < B.dim(); ++u) d.dot[t][u] = B.basis_product(t, u);
        d.validate_shapes();
        return d;
    }

    /// The bicrossed product A ⋈ B (A-block first).
    UnifiedAlgebra bicrossed() const { return unified_product(to_datum()); }
};

/// A matched pair is valid exactly when its induced datum is an extending
/// structure, i.e. when A ⋈ B is an algebra of the requested kind.
inline CheckReport check_matched_pair(const MatchedPair& mp, AlgKind kind) {
    if (!check_identity(mp.A, to_identity_kind(kind)).pass || !check_identity(mp.B, to_identity_kind(kind)).pass)
        throw error(errc::base_algebra_invalid,
                    std::string("matched pair factors must pass the ") + alg_kind_name(kind) + " identity");
    return check_extending(mp.to_datum(), kind, DatumCase::bicrossed);
}

/// Linear map φ: B → A (column t = φ(x_t)).
struct DeformationMap {
    Matrix phi;  // nA × nB
};

namespace detail {

inline void require_matched_pair(const MatchedPair& mp, AlgKind kind) {
    if (!check_matched_pair(mp, kind).pass)
        throw error(errc::matched_pair_invalid, "not a matched pair of the requested kind");
}

}  // namespace detail

/// Deformation-map equation on all B-basis pairs:
/// φ(x∘y) − φ(x)∘φ(y) = l_B(x)φ(y) + r_B(y)φ(x) − φ(l_A(φ(x))y + r_A(φ(y))x).
inline CheckReport check_deformation(const MatchedPair& mp, const DeformationMap& dm, AlgKind kind,
                                     bool check_pair = true) {
    if (check_pair) detail::require_matched_pair(mp, kind);
    ExtendingDatum d = mp.to_datum();
    std::size_t nb = mp.B.dim();
    if (dm.phi.rows() != mp.A.dim() || dm.phi.cols() != nb || !(dm.phi.field() == mp.field()))
        throw error(errc::shape_mismatch, "deformation map must be nA x nB over the pair's field");

    CheckReport rep;
    auto phi = [&](const Vec& x) { return dm.phi.apply(x); };
    for (std::size_t t = 0; t < nb && rep.pass; ++t)
        for (std::size_t u = 0; u < nb; ++u) {
            Vec x = mp.B.unit(t), y = mp.B.unit(u);
            Vec lhs = phi(mp.B.mul(x, y)) - mp.A.mul(phi(x), phi(y));
            Vec rhs = d.act_lv(x, phi(y)) + d.act_rv(y, phi(x)) -
                      phi(d.act_la(phi(x), y) + d.act_ra(phi(y), x));
            if (!(lhs == rhs)) {
                rep.add("eq43", {t, u}, std::move(lhs), std::move(rhs));
                break;
            }
        }
    return rep;
}

struct Deformed {
    Algebra bphi;      // B with the deformed product
    Matrix embedding;  // column t = (φ(x_t), x_t) in A ⋈ B coordinates
};

/// φ-deformation of B: x ∘_φ y = x∘y + l_A(φ(x))y + r_A(φ(y))x, together with
/// the embedding x -> (φ(x), x) onto an A-complement of A ⋈ B.
inline Deformed deform(const MatchedPair& mp, const DeformationMap& dm, AlgKind kind, bool check = true) {
    if (check && !check_deformation(mp, dm, kind).pass)
        throw error(errc::not_deformation_map, "map fails the deformation equation");
    ExtendingDatum d = mp.to_datum();
    std::size_t na = mp.A.dim(), nb = mp.B.dim();
    const FieldSpec& k = mp.field();
    Algebra bphi = Algebra::zero(k, nb);
    bphi.set_labels(mp.B.labels());
    for (std::size_t t = 0; t < nb; ++t)
        for (std::size_t u = 0; u < nb; ++u) {
            Vec x = mp.B.unit(t), y = mp.B.unit(u);
            Vec prod = mp.B.basis_product(t, u) + d.act_la(dm.phi.column(t), y) + d.act_ra(dm.phi.column(u), x);
            for (std::size_t kk = 0; kk < nb; ++kk) bphi.set_c(t, u, kk, prod[kk]);
        }
    Matrix emb = Matrix::zero(k, na + nb, nb);
    for (std::size_t t = 0; t < nb; ++t) {
        Vec col = Vec::zero(k, na + nb);
        Vec ph = dm.phi.column(t);
        for (std::size_t i = 0; i < na; ++i) col[i] = ph[i];
        col[na + t] = Scalar::one(k);
        emb.set_column(t, col);
    }
    return Deformed{std::move(bphi), std::move(emb)};
}

/// ρ: B → B invertible, candidate equivalence between two deformation maps.
struct DeformEquivWitness {
    Matrix rho;  // nB × nB
};

/// Equivalence of deformation maps φ (d1) and ψ (d2) under ρ:
/// ρ(x∘y) − ρ(x)∘ρ(y) = l_A(ψ(ρx))ρy + r_A(ψ(ρy))ρx − ρ(l_A(φx)y) − ρ(r_A(φy)x),
/// which is precisely "ρ is an algebra isomorphism B_φ → B_ψ" unfolded.
inline CheckReport check_deform_equiv(const MatchedPair& mp, const DeformationMap& d1, const DeformationMap& d2,
                                      const DeformEquivWitness& w, AlgKind kind, bool check_inputs = true) {
    if (check_inputs) {
        detail::require_matched_pair(mp, kind);
        if (!check_deformation(mp, d1, kind, false).pass || !check_deformation(mp, d2, kind, false).pass)
            throw error(errc::not_deformation_map, "both maps must satisfy the deformation equation");
    }
    if (w.rho.rows() != mp.B.dim() || w.rho.cols() != mp.B.dim() || !(w.rho.field() == mp.field()))
        throw error(errc::shape_mismatch, "witness rho must be nB x nB over the pair's field");
    if (!invertible(w.rho))
        throw error(errc::not_invertible, "witness rho must be invertible");
    ExtendingDatum d = mp.to_datum();
    std::size_t nb = mp.B.dim();
    CheckReport rep;
    auto phi = [&](const Vec& x) { return d1.phi.apply(x); };
    auto psi = [&](const Vec& x) { return d2.phi.apply(x); };
    auto rho = [&](const Vec& x) { return w.rho.apply(x); };
    for (std::size_t t = 0; t < nb && rep.pass; ++t)
        for (std::size_t u = 0; u < nb; ++u) {
            Vec x = mp.B.unit(t), y = mp.B.unit(u);
            Vec rx = rho(x), ry = rho(y);
            Vec lhs = rho(mp.B.mul(x, y)) - mp.B.mul(rx, ry);
            Vec rhs = d.act_la(psi(rx), ry) + d.act_ra(psi(ry), rx) - rho(d.act_la(phi(x), y)) -
                      rho(d.act_ra(phi(y), x));
            if (!(lhs == rhs)) {
                rep.add("equiv", {t, u}, std::move(lhs), std::move(rhs));
                break;
            }
        }
    return rep;
}

struct ComplementClass {
    std::size_t representative = 0;
    std::vector<std::size_t> members;
    std::vector<Matrix> witnesses;  // per member: rho to the representative
};

struct ComplementReport {
    FieldSpec field;
    AlgKind kind = AlgKind::left_symmetric;
    std::uint64_t candidates_checked = 0;
    std::vector<DeformationMap> deformation_maps;  // lexicographic by flattened entries
    std::vector<ComplementClass> classes;
    std::size_t index = 0;  // number of classes = factorization index
};

namespace detail {

/// Odometer over all nr × nc matrices with residue entries, ascending
/// lexicographic in row-major order.
template <typename F>
inline std::uint64_t each_matrix(const FieldSpec& k, std::size_t nr, std::size_t nc, F&& fn) {
    std::uint32_t p = k.p;
    std::size_t slots = nr * nc;
    std::vector<std::uint32_t> r(slots, 0);
    std::uint64_t count = 0;
    while (true) {
        Matrix m = Matrix::zero(k, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = Scalar::integer(k, r[i * nc + j]);
        ++count;
        if (fn(m)) return count;
        std::size_t s = slots;
        bool wrapped = true;
        while (s-- > 0) {
            if (++r[s] < p) {
                wrapped = false;
                break;
            }
            r[s] = 0;
        }
        if (wrapped || slots == 0) break;
    }
    return count;
}

inline void guard_cap(const FieldSpec& k, std::size_t slots, std::uint64_t cap, const char* what) {
    if (!k.is_prime())
        throw error(errc::usage_error, std::string(what) + " needs a prime field");
    BigInt space = BigInt::pow_u64(BigInt(static_cast<std::int64_t>(k.p)), slots);
    if (space > BigInt(static_cast<std::int64_t>(cap)))
        throw error(errc::enumeration_too_large,
                    std::string(what) + " space " + space.str() + " exceeds cap " + std::to_string(cap));
}

inline std::vector<Matrix> invertible_matrices(const FieldSpec& k, std::size_t n, std::uint64_t cap) {
    guard_cap(k, n * n, cap, "GL exhaustion");
    std::vector<Matrix> out;
    each_matrix(k, n, n, [&](const Matrix& m) {
        if (invertible(m)) out.push_back(m);
        return false;
    });
    return out;
}

}  // namespace detail

/// All deformation maps of a matched pair over F_p by exhaustion over the
/// p^(nA·nB) linear maps B → A.
inline ComplementReport enumerate_deformations(const MatchedPair& mp, AlgKind kind,
                                               std::uint64_t cap = 100'000'000) {
    detail::require_matched_pair(mp, kind);
    detail::guard_cap(mp.field(), mp.A.dim() * mp.B.dim(), cap, "deformation-map enumeration");
    ComplementReport rep;
    rep.field = mp.field();
    rep.kind = kind;
    rep.candidates_checked =
        detail::each_matrix(mp.field(), mp.A.dim(), mp.B.dim(), [&](const Matrix& m) {
            DeformationMap dm{m};
            if (check_deformation(mp, dm, kind, false).pass) rep.deformation_maps.push_back(std::move(dm));
            return false;
        });
    return rep;
}

/// Splits the deformation maps into equivalence classes by exhausting
/// ρ ∈ GL(nB, F_p); the class count is the factorization index [E:A] of the
/// bicrossed product over F_p. Each member stores a verified ρ-witness to its
/// class representative.
inline ComplementReport classify_complements(const MatchedPair& mp, AlgKind kind,
                                             std::uint64_t cap = 100'000'000) {
    ComplementReport rep = enumerate_deformations(mp, kind, cap);
    std::vector<Matrix> gl = detail::invertible_matrices(mp.field(), mp.B.dim(), cap);
    std::size_t m = rep.deformation_maps.size();

    UnionFind uf(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (uf.same(i, j)) continue;
            for (const Matrix& rho : gl) {
                if (check_deform_equiv(mp, rep.deformation_maps[i], rep.deformation_maps[j],
                                       DeformEquivWitness{rho}, kind, false)
                        .pass) {
                    uf.unite(i, j);
                    break;
                }
            }
        }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m; ++i) groups[uf.find(i)].push_back(i);
    for (auto& [root, members] : groups) {
        ComplementClass c;
        c.representative = members.front();
        c.members = members;
        for (std::size_t mem : members) {
            if (mem == c.representative) {
                c.witnesses.push_back(Matrix::identity(mp.field(), mp.B.dim()));
                continue;
            }
            bool found = false;
            for (const Matrix& rho : gl) {
                if (check_deform_equiv(mp, rep.deformation_maps[mem], rep.deformation_maps[c.representative],
                                       DeformEquivWitness{rho}, kind, false)
                        .pass) {
                    c.witnesses.push_back(rho);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw error(errc::datum_invalid, "no direct witness to the class representative");
        }
        rep.classes.push_back(std::move(c));
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const ComplementClass& a, const ComplementClass& b) { return a.representative < b.representative; });
    rep.index = rep.classes.size();
    return rep;
}

/// Basis-free separating invariants: dimension, the rank of the span of all
/// products, and the ranks of the trace pairings tr(L_x L_y), tr(R_x R_y),
/// tr(L_x R_y). Over Q exhaustive isomorphism search is unavailable, so
/// non-isomorphism of two algebras (deformed complements in particular) is
/// certified by the first invariant that separates; nullopt means undecided.
inline std::optional<std::string> nonisomorphism_witness(const Algebra& a, const Algebra& b) {
    require_same_field(a.field(), b.field());
    if (a.dim() != b.dim()) return "dimension";
    const FieldSpec& k = a.field();
    std::size_t n = a.dim();

    auto product_span_rank = [&](const Algebra& x) {
        std::vector<Vec> prods;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) prods.push_back(x.basis_product(i, j));
        return rank(Matrix::from_columns(k, n, prods));
    };
    if (product_span_rank(a) != product_span_rank(b)) return "rank of the product span";

    auto mult_ops = [&](const Algebra& x, bool left) {
        std::vector<Matrix> ops;
        for (std::size_t i = 0; i < n; ++i) {
            Matrix m = Matrix::zero(k, n, n);
            for (std::size_t j = 0; j < n; ++j)
                m.set_column(j, left ? x.basis_product(i, j) : x.basis_product(j, i));
            ops.push_back(std::move(m));
        }
        return ops;
    };
    auto trace = [&](const Matrix& m) {
        Scalar t = Scalar::zero(k);
        for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
        return t;
    };
    auto pairing_rank = [&](const std::vector<Matrix>& u, const std::vector<Matrix>& v) {
        Matrix gram = Matrix::zero(k, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gram.at(i, j) = trace(u[i] * v[j]);
        return rank(gram);
    };
    auto la = mult_ops(a, true), ra = mult_ops(a, false);
    auto lb = mult_ops(b, true), rb = mult_ops(b, false);
    if (pairing_rank(la, la) != pairing_rank(lb, lb)) return "rank of tr(L_x L_y)";
    if (pairing_rank(ra, ra) != pairing_rank(rb, rb)) return "rank of tr(R_x R_y)";
    if (pairing_rank(la, ra) != pairing_rank(lb, rb)) return "rank of tr(L_x R_y)";
    return std::nullopt;  // undecided
}

struct BruteForceReport {
    FieldSpec field;
    AlgKind kind = AlgKind::left_symmetric;
    std::uint64_t candidates_checked = 0;
    std::vector<std::vector<Vec>> complements;  // bases in E-coordinates
    std::vector<Algebra> induced;               // induced product per complement
    std::vector<ComplementClass> classes;       // witnesses are GL isomorphisms
    std::size_t index = 0;
};

/// Independent oracle for the complement classification: enumerates every
/// subspace complementary to A (the graph of a linear map V → A for each of
/// the p^(nA·nB) maps), keeps those closed under the product of E, and groups
/// the induced algebras by isomorphism via GL(nB, F_p) exhaustion.
inline BruteForceReport brute_force_complements(const Algebra& e, const std::vector<std::size_t>& sub_basis,
                                                AlgKind kind, std::uint64_t cap = 100'000'000) {
    ExtractResult extraction = extract_datum(e, sub_basis);  // validates the subalgebra
    const BasisSplit& split = *extraction.iso.split;
    std::size_t na = split.sub.size(), nb = split.comp.size();
    const FieldSpec& k = e.field();
    detail::guard_cap(k, na * nb, cap, "complement enumeration");

    BruteForceReport rep;
    rep.field = k;
    rep.kind = kind;

    rep.candidates_checked = detail::each_matrix(k, na, nb, [&](const Matrix& graph) {
        // basis w_t = e_{comp[t]} + Σ_i graph(i,t) e_{sub[i]}
        std::vector<Vec> basis;
        for (std::size_t t = 0; t < nb; ++t) {
            Vec w = Vec::unit(k, e.dim(), split.comp[t]);
            for (std::size_t i = 0; i < na; ++i) w[split.sub[i]] = graph(i, t);
            basis.push_back(std::move(w));
        }
        SubalgebraResult sr = subalgebra_test(e, basis);
        if (sr.is_subalgebra) {
            if (!check_identity(*sr.induced, to_identity_kind(kind)).pass)
                return false;  // closed but of the wrong kind (cannot happen when E has the kind)
            rep.complements.push_back(std::move(basis));
            rep.induced.push_back(std::move(*sr.induced));
        }
        return false;
    });

    std::vector<Matrix> gl = detail::invertible_matrices(k, nb, cap);
    auto isomorphic_via = [&](const Algebra& b1, const Algebra& b2, const Matrix& t) {
        MorphismWitness w;
        w.map = t;
        return check_morphism(b1, b2, w).report.pass;  // t invertible by construction
    };

    std::size_t m = rep.complements.size();
    UnionFind uf(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (uf.same(i, j)) continue;
            for (const Matrix& t : gl)
                if (isomorphic_via(rep.induced[i], rep.induced[j], t)) {
                    uf.unite(i, j);
                    break;
                }
        }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m; ++i) groups[uf.find(i)].push_back(i);
    for (auto& [root, members] : groups) {
        ComplementClass c;
        c.representative = members.front();
        c.members = members;
        for (std::size_t mem : members) {
            if (mem == c.representative) {
                c.witnesses.push_back(Matrix::identity(k, nb));
                continue;
            }
            bool found = false;
            for (const Matrix& t : gl)
                if (isomorphic_via(rep.induced[mem], rep.induced[c.representative], t)) {
                    c.witnesses.push_back(t);
                    found = true;
                    break;
                }
            if (!found)
                throw error(errc::datum_invalid, "no direct witness to the class representative");
        }
        rep.classes.push_back(std::move(c));
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const ComplementClass& a, const ComplementClass& b) { return a.representative < b.representative; });
    rep.index = rep.classes.size();
    return rep;
}

}  // namespace lsakit
