#pragma once

#include <vector>

#include "lsakit/algebra.hpp"

namespace lsakit {

/// Bimodule data (S, T, M) for an algebra: S[i], T[i] are the matrices of
/// S(e_i), T(e_i) acting on an m-dimensional module.
struct Bimodule {
    Algebra base;
    std::size_t mdim = 0;
    std::vector<Matrix> S, T;

    void validate_shapes() const {
        if (S.size() != base.dim() || T.size() != base.dim())
            throw error(errc::shape_mismatch, "bimodule needs one S and one T matrix per basis vector");
        for (const auto& m : S)
            if (m.rows() != mdim || m.cols() != mdim || !(m.field() == base.field()))
                throw error(errc::shape_mismatch, "bimodule S matrix shape/field mismatch");
        for (const auto& m : T)
            if (m.rows() != mdim || m.cols() != mdim || !(m.field() == base.field()))
                throw error(errc::shape_mismatch, "bimodule T matrix shape/field mismatch");
    }

    /// Linear extension S(v) = Σ v_i S[i].
    Matrix s_of(const Vec& v) const { return combine(S, v); }
    Matrix t_of(const Vec& v) const { return combine(T, v); }

private:
    Matrix combine(const std::vector<Matrix>& maps, const Vec& v) const {
        Matrix r = Matrix::zero(base.field(), mdim, mdim);
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (!v[i].is_zero()) r = r + maps[i].scaled(v[i]);
        return r;
    }
};

namespace detail {

/// Report the first module basis vector on which two operator matrices differ.
inline bool report_matrix_mismatch(CheckReport& rep, const std::string& id, std::size_t i, std::size_t j,
                                   const Matrix& lhs, const Matrix& rhs) {
    if (lhs == rhs) return false;
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
        Vec l = lhs.column(k), r = rhs.column(k);
        if (!(l == r)) {
            rep.add(id, {i, j, k}, std::move(l), std::move(r));
            return true;
        }
    }
    return true;  // unreachable for differing matrices
}

}  // namespace detail

/// Compatibility equations for (S, T, M): eq4/eq5 always, eq6/eq7 for the
/// Novikov kind. One violation per condition, first failing (i, j, v) tuple.
inline CheckReport check_bimodule(const Bimodule& bm, AlgKind kind) {
    bm.validate_shapes();
    const Algebra& a = bm.base;
    std::size_t n = a.dim();
    CheckReport rep;

    auto s_prod = [&](std::size_t i, std::size_t j) { return bm.s_of(a.basis_product(i, j)); };
    auto t_prod = [&](std::size_t i, std::size_t j) { return bm.t_of(a.basis_product(i, j)); };

    bool hit4 = false, hit5 = false, hit6 = false, hit7 = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!hit4)
                hit4 = detail::report_matrix_mismatch(rep, "eq4", i, j, bm.S[i] * bm.S[j] - s_prod(i, j),
                                                      bm.S[j] * bm.S[i] - s_prod(j, i));
            if (!hit5)
                hit5 = detail::report_matrix_mismatch(rep, "eq5", i, j, bm.S[i] * bm.T[j] - bm.T[j] * bm.S[i],
                                                      t_prod(i, j) - bm.T[j] * bm.T[i]);
            if (kind == AlgKind::novikov) {
                if (!hit6)
                    hit6 = detail::report_matrix_mismatch(rep, "eq6", i, j, s_prod(i, j), bm.T[j] * bm.S[i]);
                if (!hit7)
                    hit7 = detail::report_matrix_mismatch(rep, "eq7", i, j, bm.T[i] * bm.T[j], bm.T[j] * bm.T[i]);
            }
        }
    return rep;
}

/// ρ = S − T against the bracket of the base: ρ([x,y]) = ρ(x)ρ(y) − ρ(y)ρ(x).
inline CheckReport check_commutator_representation(const Bimodule& bm) {
    bm.validate_shapes();
    const Algebra& a = bm.base;
    Algebra g = commutator_lie(a);
    std::size_t n = a.dim();
    CheckReport rep;
    std::vector<Matrix> rho;
    rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rho.push_back(bm.S[i] - bm.T[i]);

    Bimodule rho_bm{a, bm.mdim, rho, rho};  // reuse linear combination helper
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = rho_bm.s_of(g.basis_product(i, j));
            Matrix rhs = rho[i] * rho[j] - rho[j] * rho[i];
            if (detail::report_matrix_mismatch(rep, "rep", i, j, lhs, rhs)) return rep;
        }
    return rep;
}

}  // namespace lsakit
