#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lsakit/linalg.hpp"
#include "lsakit/report.hpp"

namespace lsakit {

/// Finite-dimensional algebra given by structure constants:
/// e_i ∘ e_j = Σ_k c(i,j,k) e_k. No unit, commutativity or associativity is
/// assumed; identities are checked, never presupposed.
class Algebra {
public:
    Algebra() = default;

    static Algebra zero(const FieldSpec& f, std::size_t dim) {
        Algebra a;
        a.field_ = f;
        a.dim_ = dim;
        a.sc_.assign(dim * dim * dim, Scalar::zero(f));
        a.labels_.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) a.labels_.push_back("e" + std::to_string(i + 1));
        return a;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) {
        if (labels.size() != dim_)
            throw error(errc::dimension_mismatch, "label count != dimension");
        labels_ = std::move(labels);
    }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return sc_[(i * dim_ + j) * dim_ + k];
    }

    void set_c(std::size_t i, std::size_t j, std::size_t k, Scalar v) {
        require_same_field(field_, v.field());
        sc_[(i * dim_ + j) * dim_ + k] = std::move(v);
    }

    /// e_i ∘ e_j as a coordinate vector.
    Vec basis_product(std::size_t i, std::size_t j) const {
        Vec v = Vec::zero(field_, dim_);
        for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
        return v;
    }

    /// Bilinear extension of the product to arbitrary coordinate vectors.
    Vec mul(const Vec& a, const Vec& b) const {
        require_same_field(field_, a.field());
        if (a.size() != dim_ || b.size() != dim_)
            throw error(errc::dimension_mismatch, "product operand dimension mismatch");
        Vec r = Vec::zero(field_, dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (b[j].is_zero()) continue;
                Scalar coef = a[i] * b[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c(i, j, k).is_zero()) r[k] = r[k] + coef * c(i, j, k);
            }
        }
        return r;
    }

    Vec unit(std::size_t i) const { return Vec::unit(field_, dim_, i); }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.sc_ == b.sc_;
    }

private:
    FieldSpec field_;
    std::size_t dim_ = 0;
    std::vector<Scalar> sc_;  // (i*dim + j)*dim + k
    std::vector<std::string> labels_;
};

enum class IdentityKind {
    left_symmetric,
    novikov,
    lie_jacobi_of_commutator,
    antisymmetry_of_commutator,
};

inline IdentityKind to_identity_kind(AlgKind k) {
    return k == AlgKind::left_symmetric ? IdentityKind::left_symmetric : IdentityKind::novikov;
}

namespace detail {

/// Associator (a,b,c) = (a∘b)∘c − a∘(b∘c) on basis vectors.
inline Vec associator(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
    return a.mul(a.basis_product(i, j), a.unit(k)) - a.mul(a.unit(i), a.basis_product(j, k));
}

/// Scans basis triples from the top index downward and reports the first
/// failure of `eval` (lhs, rhs); the descending scan is the kit-wide witness
/// order for identity checks.
template <typename F>
inline void scan_triples_desc(const Algebra& a, CheckReport& rep, const std::string& id, F&& eval) {
    std::size_t n = a.dim();
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = n; j-- > 0;)
            for (std::size_t k = n; k-- > 0;) {
                auto [lhs, rhs] = eval(i, j, k);
                if (!(lhs == rhs)) {
                    rep.add(id, {i, j, k}, std::move(lhs), std::move(rhs));
                    return;
                }
            }
}

}  // namespace detail

/// Identity checker over basis triples; bilinearity of every identity in each
/// argument makes basis tuples sufficient. The two "commutator" kinds read the
/// structure-constant table itself as a bracket (typically the output of
/// commutator_lie) and test antisymmetry resp. the Jacobi identity.
inline CheckReport check_identity(const Algebra& a, IdentityKind kind) {
    CheckReport rep;
    switch (kind) {
    case IdentityKind::left_symmetric:
        detail::scan_triples_desc(a, rep, "eq1", [&](std::size_t i, std::size_t j, std::size_t k) {
            return std::pair<Vec, Vec>(detail::associator(a, i, j, k), detail::associator(a, j, i, k));
        });
        break;
    case IdentityKind::novikov:
        detail::scan_triples_desc(a, rep, "eq1", [&](std::size_t i, std::size_t j, std::size_t k) {
            return std::pair<Vec, Vec>(detail::associator(a, i, j, k), detail::associator(a, j, i, k));
        });
        detail::scan_triples_desc(a, rep, "eq2", [&](std::size_t i, std::size_t j, std::size_t k) {
            return std::pair<Vec, Vec>(a.mul(a.basis_product(i, j), a.unit(k)),
                                       a.mul(a.basis_product(i, k), a.unit(j)));
        });
        break;
    case IdentityKind::antisymmetry_of_commutator: {
        std::size_t n = a.dim();
        for (std::size_t i = n; i-- > 0;)
            for (std::size_t j = n; j-- > 0;) {
                Vec lhs = a.basis_product(i, j);
                Vec rhs = -a.basis_product(j, i);
                if (!(lhs == rhs)) {
                    rep.add("antisym", {i, j}, std::move(lhs), std::move(rhs));
                    return rep;
                }
            }
        break;
    }
    case IdentityKind::lie_jacobi_of_commutator:
        detail::scan_triples_desc(a, rep, "jacobi", [&](std::size_t i, std::size_t j, std::size_t k) {
            Vec sum = a.mul(a.basis_product(i, j), a.unit(k)) + a.mul(a.basis_product(j, k), a.unit(i)) +
                      a.mul(a.basis_product(k, i), a.unit(j));
            return std::pair<Vec, Vec>(std::move(sum), Vec::zero(a.field(), a.dim()));
        });
        break;
    }
    return rep;
}

/// Sub-adjacent bracket [a,b] = a∘b − b∘a as a structure-constant table.
inline Algebra commutator_lie(const Algebra& a) {
    Algebra r = Algebra::zero(a.field(), a.dim());
    r.set_labels(a.labels());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                r.set_c(i, j, k, a.c(i, j, k) - a.c(j, i, k));
    return r;
}

struct SubalgebraResult {
    bool is_subalgebra = false;
    bool is_ideal = false;
    std::optional<Algebra> induced;  // structure constants in the given spanning basis
};

/// Decides whether the span of `basis` is closed under the product of E
/// (subalgebra) and under products with all of E (ideal); when closed,
/// returns the induced structure constants in the given spanning basis.
inline SubalgebraResult subalgebra_test(const Algebra& e, const std::vector<Vec>& basis) {
    const FieldSpec& f = e.field();
    std::size_t m = basis.size();
    for (const auto& v : basis)
        if (v.size() != e.dim())
            throw error(errc::dimension_mismatch, "span vector dimension mismatch");
    Matrix span = Matrix::from_columns(f, e.dim(), basis);
    if (rank(span) != m)
        throw error(errc::dependent_span, "span vectors are linearly dependent");

    // coordinates of v in the spanning basis, or nullopt when outside the span
    auto coords = [&](const Vec& v) -> std::optional<Vec> {
        auto sol = solve(span, v);
        if (!sol) return std::nullopt;
        return sol->particular;  // unique: columns independent
    };

    SubalgebraResult res;
    Algebra induced = Algebra::zero(f, m);
    res.is_subalgebra = true;
    for (std::size_t i = 0; i < m && res.is_subalgebra; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto u = coords(e.mul(basis[i], basis[j]));
            if (!u) {
                res.is_subalgebra = false;
                break;
            }
            for (std::size_t k = 0; k < m; ++k) induced.set_c(i, j, k, (*u)[k]);
        }
    if (res.is_subalgebra) res.induced = std::move(induced);

    res.is_ideal = res.is_subalgebra;
    for (std::size_t g = 0; g < e.dim() && res.is_ideal; ++g)
        for (std::size_t i = 0; i < m; ++i) {
            Vec left = e.mul(e.unit(g), basis[i]);
            Vec right = e.mul(basis[i], e.unit(g));
            if (!coords(left) || !coords(right)) {
                res.is_ideal = false;
                break;
            }
        }
    return res;
}

}  // namespace lsakit
