#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lsakit/datum.hpp"
#include "lsakit/union_find.hpp"

namespace lsakit {

/// Codimension-1 extending structure compressed to the 6-tuple
/// (h, g, D, T, a0, α): h, g are covectors on A, D and T are linear maps on A,
/// a0 ∈ A and α a scalar.
struct FlagDatum {
    Algebra base;
    Vec h, g;      // covectors, length dim(A)
    Matrix D, T;   // dim(A) × dim(A)
    Vec a0;
    Scalar alpha;

    static FlagDatum zero(Algebra base_alg) {
        const FieldSpec& k = base_alg.field();
        std::size_t n = base_alg.dim();
        FlagDatum fd;
        fd.base = std::move(base_alg);
        fd.h = Vec::zero(k, n);
        fd.g = Vec::zero(k, n);
        fd.D = Matrix::zero(k, n, n);
        fd.T = Matrix::zero(k, n, n);
        fd.a0 = Vec::zero(k, n);
        fd.alpha = Scalar::zero(k);
        return fd;
    }

    const FieldSpec& field() const { return base.field(); }
    std::size_t dim() const { return base.dim(); }

    void validate_shapes() const {
        std::size_t n = base.dim();
        if (h.size() != n || g.size() != n || a0.size() != n || D.rows() != n || D.cols() != n ||
            T.rows() != n || T.cols() != n || !(alpha.field() == field()))
            throw error(errc::shape_mismatch, "flag datum component shape mismatch");
    }

    friend bool operator==(const FlagDatum& a, const FlagDatum& b) {
        return a.base == b.base && a.h == b.h && a.g == b.g && a.D == b.D && a.T == b.T && a.a0 == b.a0 &&
               a.alpha == b.alpha;
    }
};

namespace detail {

inline Scalar covector_apply(const Vec& cov, const Vec& v) {
    Scalar r = Scalar::zero(cov.field());
    for (std::size_t i = 0; i < cov.size(); ++i)
        if (!cov[i].is_zero() && !v[i].is_zero()) r = r + cov[i] * v[i];
    return r;
}

inline Vec scalar1(const Scalar& s) {
    Vec v = Vec::zero(s.field(), 1);
    v[0] = s;
    return v;
}

}  // namespace detail

/// Conditions making (h,g,D,T,a0,α) a flag datum: g an algebra morphism to k,
/// es1-es5 always, df1-df5 additionally for the Novikov kind.
inline CheckReport check_flag(const FlagDatum& fd, AlgKind kind) {
    fd.validate_shapes();
    if (!check_identity(fd.base, to_identity_kind(kind)).pass)
        throw error(errc::base_algebra_invalid,
                    std::string("base algebra fails the ") + alg_kind_name(kind) + " identity");

    const Algebra& A = fd.base;
    std::size_t n = A.dim();
    CheckReport rep;

    auto h = [&](const Vec& v) { return detail::covector_apply(fd.h, v); };
    auto g = [&](const Vec& v) { return detail::covector_apply(fd.g, v); };
    auto mul = [&](const Vec& a, const Vec& b) { return A.mul(a, b); };

    // scalar-valued pair conditions
    struct SPair {
        const char* id;
        std::function<std::pair<Scalar, Scalar>(const Vec&, const Vec&)> eval;
        bool enabled;
    };
    // vector-valued pair conditions
    struct VPair {
        const char* id;
        std::function<std::pair<Vec, Vec>(const Vec&, const Vec&)> eval;
        bool enabled;
    };
    bool nov = kind == AlgKind::novikov;
    std::vector<SPair> spairs = {
        {"gmor", [&](const Vec& a, const Vec& b) { return std::pair(g(mul(a, b)), g(a) * g(b)); }, true},
        {"es1", [&](const Vec& a, const Vec& b) { return std::pair(h(mul(a, b)), h(mul(b, a))); }, true},
        {"df3", [&](const Vec& a, const Vec& b) { return std::pair(h(mul(a, b)), h(a) * g(b)); }, nov},
    };
    std::vector<VPair> vpairs = {
        {"es2",
         [&](const Vec& a, const Vec& b) {
             Vec da = fd.D.apply(a), db = fd.D.apply(b), ta = fd.T.apply(a);
             Vec lhs = fd.D.apply(mul(a, b));
             Vec rhs = mul(da, b) + mul(a, db) + db.scaled(g(a) - h(a)) + ta.scaled(g(b)) - mul(ta, b);
             return std::pair(std::move(lhs), std::move(rhs));
         },
         true},
        {"es3",
         [&](const Vec& a, const Vec& b) {
             Vec ta = fd.T.apply(a), tb = fd.T.apply(b);
             Vec lhs = fd.T.apply(mul(a, b)) - fd.T.apply(mul(b, a));
             Vec rhs = ta.scaled(h(b)) - tb.scaled(h(a)) + mul(a, tb) - mul(b, ta);
             return std::pair(std::move(lhs), std::move(rhs));
         },
         true},
        {"df1",
         [&](const Vec& a, const Vec& b) {
             Vec da = fd.D.apply(a), db = fd.D.apply(b);
             return std::pair(mul(da, b) + db.scaled(g(a)), mul(db, a) + da.scaled(g(b)));
         },
         nov},
        {"df2",
         [&](const Vec& a, const Vec& b) {
             Vec lhs = fd.T.apply(mul(a, b));
             Vec rhs = mul(fd.T.apply(a), b) + fd.D.apply(b).scaled(h(a));
             return std::pair(std::move(lhs), std::move(rhs));
         },
         nov},
    };

    for (const auto& c : spairs) {
        if (!c.enabled) continue;
        bool hit = false;
        for (std::size_t i = 0; i < n && !hit; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto [lhs, rhs] = c.eval(A.unit(i), A.unit(j));
                if (!(lhs == rhs)) {
                    rep.add(c.id, {i, j}, detail::scalar1(lhs), detail::scalar1(rhs));
                    hit = true;
                    break;
                }
            }
    }
    for (const auto& c : vpairs) {
        if (!c.enabled) continue;
        bool hit = false;
        for (std::size_t i = 0; i < n && !hit; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto [lhs, rhs] = c.eval(A.unit(i), A.unit(j));
                if (!(lhs == rhs)) {
                    rep.add(c.id, {i, j}, std::move(lhs), std::move(rhs));
                    hit = true;
                    break;
                }
            }
    }

    // single-argument conditions
    for (std::size_t i = 0; i < n; ++i) {
        Vec a = A.unit(i);
        Vec ta = fd.T.apply(a);
        Vec lhs = fd.T.apply(ta);
        Vec rhs = fd.T.apply(fd.D.apply(a)) - fd.D.apply(ta) + mul(a, fd.a0) +
                  fd.a0.scaled(g(a) - (h(a) + h(a))) + ta.scaled(fd.alpha);
        if (!(lhs == rhs)) {
            rep.add("es4", {i}, std::move(lhs), std::move(rhs));
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec a = A.unit(i);
        Scalar lhs = h(fd.D.apply(a)) - h(fd.T.apply(a));
        Scalar rhs = g(fd.T.apply(a)) + fd.alpha * (h(a) - g(a));
        if (!(lhs == rhs)) {
            rep.add("es5", {i}, detail::scalar1(lhs), detail::scalar1(rhs));
            break;
        }
    }
    if (nov) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec a = A.unit(i);
            Vec lhs = fd.T.apply(fd.D.apply(a));
            Vec rhs = mul(fd.a0, a) + fd.D.apply(a).scaled(fd.alpha) - fd.a0.scaled(g(a));
            if (!(lhs == rhs)) {
                rep.add("df4", {i}, std::move(lhs), std::move(rhs));
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            Scalar lhs = h(fd.D.apply(A.unit(i)));
            if (!lhs.is_zero()) {
                rep.add("df5", {i}, detail::scalar1(lhs), detail::scalar1(Scalar::zero(fd.field())));
                break;
            }
        }
    }
    return rep;
}

/// The codimension-1 dictionary: l_A(a)x = h(a)x, r_A(a)x = g(a)x,
/// l_V(x) = D, r_V(x) = T, f(x,x) = a0, x·x = αx. A flag datum passes
/// check_flag exactly when this datum passes check_extending.
inline ExtendingDatum flag_to_datum(const FlagDatum& fd) {
    fd.validate_shapes();
    ExtendingDatum d = ExtendingDatum::zero(fd.base, 1);
    std::size_t n = fd.base.dim();
    for (std::size_t i = 0; i < n; ++i) {
        d.la[i].at(0, 0) = fd.h[i];
        d.ra[i].at(0, 0) = fd.g[i];
    }
    d.lv[0] = fd.D;
    d.rv[0] = fd.T;
    d.f[0][0] = fd.a0;
    d.dot[0][0][0] = fd.alpha;
    return d;
}

/// Witness for flag-datum equivalence: a unit β and b0 ∈ A.
struct FlagEquivWitness {
    Scalar beta;
    Vec b0;
};

enum class EquivMode { equivalent, cohomologous };

/// Verifies h = h', g = g' and the four transformation equations tying fd
/// (unprimed) to fd2 (primed) under (β, b0); cohomologous mode requires β = 1.
inline CheckReport check_flag_equiv(const FlagDatum& fd, const FlagDatum& fd2, const FlagEquivWitness& w,
                                    EquivMode mode = EquivMode::equivalent) {
    fd.validate_shapes();
    fd2.validate_shapes();
    if (!(fd.base == fd2.base))
        throw error(errc::shape_mismatch, "flag equivalence needs a shared base algebra");
    if (w.beta.is_zero())
        throw error(errc::shape_mismatch, "witness beta must be nonzero");
    if (mode == EquivMode::cohomologous && !w.beta.is_one())
        throw error(errc::shape_mismatch, "cohomologous witnesses require beta = 1");
    if (w.b0.size() != fd.dim() || !(w.beta.field() == fd.field()))
        throw error(errc::shape_mismatch, "witness shape mismatch");

    const Algebra& A = fd.base;
    std::size_t n = A.dim();
    CheckReport rep;

    if (!(fd.h == fd2.h)) rep.add("h", {}, fd.h, fd2.h);
    if (!(fd.g == fd2.g)) rep.add("g", {}, fd.g, fd2.g);

    auto g2 = [&](const Vec& v) { return detail::covector_apply(fd2.g, v); };
    auto h2 = [&](const Vec& v) { return detail::covector_apply(fd2.h, v); };
    auto g1 = [&](const Vec& v) { return detail::covector_apply(fd.g, v); };
    auto h1 = [&](const Vec& v) { return detail::covector_apply(fd.h, v); };

    for (std::size_t i = 0; i < n; ++i) {
        Vec a = A.unit(i);
        Vec lhs = fd.D.apply(a);
        Vec rhs = A.mul(w.b0, a) + fd2.D.apply(a).scaled(w.beta) - w.b0.scaled(g1(a));
        if (!(lhs == rhs)) {
            rep.add("q1", {i}, std::move(lhs), std::move(rhs));
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec a = A.unit(i);
        Vec lhs = fd.T.apply(a);
        Vec rhs = A.mul(a, w.b0) + fd2.T.apply(a).scaled(w.beta) - w.b0.scaled(h1(a));
        if (!(lhs == rhs)) {
            rep.add("q2", {i}, std::move(lhs), std::move(rhs));
            break;
        }
    }
    {
        Vec lhs = fd.a0;
        Vec rhs = A.mul(w.b0, w.b0) + fd2.D.apply(w.b0).scaled(w.beta) + fd2.T.apply(w.b0).scaled(w.beta) +
                  fd2.a0.scaled(w.beta * w.beta) - w.b0.scaled(fd.alpha);
        if (!(lhs == rhs)) rep.add("q3", {}, std::move(lhs), std::move(rhs));
    }
    {
        Scalar lhs = fd.alpha;
        Scalar rhs = w.beta * fd2.alpha + h2(w.b0) + g2(w.b0);
        if (!(lhs == rhs)) rep.add("q4", {}, detail::scalar1(lhs), detail::scalar1(rhs));
    }
    return rep;
}

/// The λ(x) = b0, μ(x) = βx lift of a flag-equivalence witness.
inline DatumMorphismWitness flag_witness_to_datum_witness(const FlagEquivWitness& w) {
    DatumMorphismWitness dw;
    dw.lam = Matrix::zero(w.beta.field(), w.b0.size(), 1);
    dw.lam.set_column(0, w.b0);
    dw.mu = Matrix::zero(w.beta.field(), 1, 1);
    dw.mu.at(0, 0) = w.beta;
    return dw;
}

struct FlagClass {
    std::size_t representative = 0;          // position into `valid`
    std::vector<std::size_t> members;        // positions, ascending
    std::vector<FlagEquivWitness> witnesses; // per member, to the representative
};

struct FlagClassification {
    FieldSpec field;
    AlgKind kind = AlgKind::left_symmetric;
    EquivMode mode = EquivMode::equivalent;
    BigInt space;                       // full candidate-tuple count
    std::uint64_t candidates_checked = 0;
    std::vector<FlagDatum> valid;       // lexicographic by flattened residues
    std::vector<std::uint64_t> valid_index;  // enumeration index per valid entry
    std::vector<FlagClass> classes;     // empty until classified
};

namespace detail {

/// Residue slots of a flag datum in canonical order (h | g | D | T | a0 | α).
inline std::size_t flag_slot_count(std::size_t n) { return 3 * n + 2 * n * n + 1; }

inline FlagDatum flag_from_residues(const Algebra& base, const std::vector<std::uint32_t>& r) {
    const FieldSpec& k = base.field();
    std::size_t n = base.dim();
    FlagDatum fd = FlagDatum::zero(base);
    std::size_t pos = 0;
    auto next = [&] { return Scalar::integer(k, r[pos++]); };
    for (std::size_t i = 0; i < n; ++i) fd.h[i] = next();
    for (std::size_t i = 0; i < n; ++i) fd.g[i] = next();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fd.D.at(i, j) = next();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fd.T.at(i, j) = next();
    for (std::size_t i = 0; i < n; ++i) fd.a0[i] = next();
    fd.alpha = next();
    return fd;
}

inline std::uint64_t flag_to_index(const FlagDatum& fd) {
    std::uint32_t p = fd.field().p;
    std::size_t n = fd.dim();
    std::uint64_t idx = 0;
    auto push = [&](const Scalar& s) { idx = idx * p + static_cast<std::uint64_t>(s.residue_value()); };
    for (std::size_t i = 0; i < n; ++i) push(fd.h[i]);
    for (std::size_t i = 0; i < n; ++i) push(fd.g[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) push(fd.D(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) push(fd.T(i, j));
    for (std::size_t i = 0; i < n; ++i) push(fd.a0[i]);
    push(fd.alpha);
    return idx;
}

}  // namespace detail

/// Exhaustively tests every flag-datum tuple over F_p against check_flag.
/// Refuses when the candidate space exceeds `cap`, reporting the exact size.
inline FlagClassification enumerate_flags(const Algebra& base, AlgKind kind,
                                          std::uint64_t cap = 100'000'000) {
    if (!base.field().is_prime())
        throw error(errc::usage_error, "flag enumeration needs a prime field");
    if (!check_identity(base, to_identity_kind(kind)).pass)
        throw error(errc::base_algebra_invalid,
                    std::string("base algebra fails the ") + alg_kind_name(kind) + " identity");
    std::uint32_t p = base.field().p;
    std::size_t n = base.dim();
    std::size_t slots = detail::flag_slot_count(n);
    BigInt space = BigInt::pow_u64(BigInt(static_cast<std::int64_t>(p)), slots);
    FlagClassification out;
    out.field = base.field();
    out.kind = kind;
    out.space = space;
    if (space > BigInt(static_cast<std::int64_t>(cap)))
        throw error(errc::enumeration_too_large,
                    "flag candidate space " + space.str() + " exceeds cap " + std::to_string(cap));

    std::vector<std::uint32_t> r(slots, 0);
    std::uint64_t index = 0;
    bool done = slots == 0;
    while (true) {
        FlagDatum fd = detail::flag_from_residues(base, r);
        ++out.candidates_checked;
        if (check_flag(fd, kind).pass) {
            out.valid.push_back(std::move(fd));
            out.valid_index.push_back(index);
        }
        if (done) break;
        std::size_t s = slots;
        bool wrapped = true;
        while (s-- > 0) {
            if (++r[s] < p) {
                wrapped = false;
                break;
            }
            r[s] = 0;
        }
        ++index;
        if (wrapped) break;
    }
    return out;
}

/// Partitions the valid list into equivalence classes by running every
/// witness (β, b0) through the transformation equations (orbit construction)
/// and union-find; every member of every class then gets a directly verified
/// witness to its representative.
inline void classify_flags(FlagClassification& cls, std::uint64_t cap = 100'000'000) {
    if (!cls.field.is_prime())
        throw error(errc::usage_error, "flag classification needs a prime field");
    std::uint32_t p = cls.field.p;
    std::size_t n = cls.valid.empty() ? 0 : cls.valid[0].dim();
    const FieldSpec k = cls.field;

    std::uint64_t beta_count = cls.mode == EquivMode::cohomologous ? 1 : p - 1;
    std::uint64_t witness_count = beta_count;
    for (std::size_t i = 0; i < n; ++i) {
        witness_count *= p;
        if (witness_count > cap) break;
    }
    if (cls.valid.size() > 0 && witness_count > cap / cls.valid.size())
        throw error(errc::enumeration_too_large, "witness search space exceeds cap");

    std::map<std::uint64_t, std::size_t> pos_of_index;
    for (std::size_t i = 0; i < cls.valid.size(); ++i) pos_of_index[cls.valid_index[i]] = i;

    auto each_witness = [&](auto&& fn) {
        std::vector<std::uint32_t> b0(n, 0);
        for (std::uint32_t beta = 1; beta < p; ++beta) {
            if (cls.mode == EquivMode::cohomologous && beta != 1) continue;
            while (true) {
                FlagEquivWitness w{Scalar::integer(k, beta), Vec::zero(k, n)};
                for (std::size_t i = 0; i < n; ++i) w.b0[i] = Scalar::integer(k, b0[i]);
                if (fn(w)) return true;
                std::size_t s = n;
                bool wrapped = true;
                while (s-- > 0) {
                    if (++b0[s] < p) {
                        wrapped = false;
                        break;
                    }
                    b0[s] = 0;
                }
                if (wrapped) break;
            }
        }
        return false;
    };

    UnionFind uf(cls.valid.size());
    for (std::size_t v = 0; v < cls.valid.size(); ++v) {
        const FlagDatum& primed = cls.valid[v];
        each_witness([&](const FlagEquivWitness& w) {
            // build the unprimed datum equivalent to `primed` under w
            FlagDatum fd = FlagDatum::zero(primed.base);
            fd.h = primed.h;
            fd.g = primed.g;
            const Algebra& A = primed.base;
            for (std::size_t i = 0; i < n; ++i) {
                Vec a = A.unit(i);
                fd.D.set_column(i, A.mul(w.b0, a) + primed.D.apply(a).scaled(w.beta) -
                                       w.b0.scaled(detail::covector_apply(fd.g, a)));
                fd.T.set_column(i, A.mul(a, w.b0) + primed.T.apply(a).scaled(w.beta) -
                                       w.b0.scaled(detail::covector_apply(fd.h, a)));
            }
            fd.alpha = w.beta * primed.alpha + detail::covector_apply(primed.h, w.b0) +
                       detail::covector_apply(primed.g, w.b0);
            fd.a0 = A.mul(w.b0, w.b0) + primed.D.apply(w.b0).scaled(w.beta) +
                    primed.T.apply(w.b0).scaled(w.beta) + primed.a0.scaled(w.beta * w.beta) -
                    w.b0.scaled(fd.alpha);
            auto it = pos_of_index.find(detail::flag_to_index(fd));
            if (it == pos_of_index.end())
                throw error(errc::datum_invalid, "equivalence transform left the valid set");
            uf.unite(it->second, v);
            return false;  // keep sweeping all witnesses
        });
    }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < cls.valid.size(); ++v) groups[uf.find(v)].push_back(v);

    cls.classes.clear();
    for (auto& [root, members] : groups) {
        FlagClass c;
        c.representative = members.front();  // smallest position: groups are built ascending
        c.members = members;
        for (std::size_t m : members) {
            if (m == c.representative) {
                c.witnesses.push_back({Scalar::one(k), Vec::zero(k, n)});
                continue;
            }
            bool found = each_witness([&](const FlagEquivWitness& w) {
                if (check_flag_equiv(cls.valid[m], cls.valid[c.representative], w, cls.mode).pass) {
                    c.witnesses.push_back(w);
                    return true;
                }
                return false;
            });
            if (!found)
                throw error(errc::datum_invalid, "no direct witness to the class representative");
        }
        cls.classes.push_back(std::move(c));
    }
    // order classes by their representative position
    std::sort(cls.classes.begin(), cls.classes.end(),
              [](const FlagClass& a, const FlagClass& b) { return a.representative < b.representative; });
}

}  // namespace lsakit
