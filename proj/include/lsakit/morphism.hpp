#pragma once

#include <optional>
#include <vector>

#include "lsakit/algebra.hpp"

namespace lsakit {

/// Index lists describing where the subalgebra block and its complement sit
/// inside a basis (a decomposition E = A ⊕ V by coordinates).
struct BasisSplit {
    std::vector<std::size_t> sub, comp;

    void validate(std::size_t dim) const {
        std::vector<bool> seen(dim, false);
        if (sub.size() + comp.size() != dim)
            throw error(errc::shape_mismatch, "split does not partition the basis");
        for (std::size_t i : sub) {
            if (i >= dim || seen[i]) throw error(errc::shape_mismatch, "bad split index");
            seen[i] = true;
        }
        for (std::size_t i : comp) {
            if (i >= dim || seen[i]) throw error(errc::shape_mismatch, "bad split index");
            seen[i] = true;
        }
    }

    static BasisSplit blocks(std::size_t sub_dim, std::size_t dim) {
        BasisSplit s;
        for (std::size_t i = 0; i < sub_dim; ++i) s.sub.push_back(i);
        for (std::size_t i = sub_dim; i < dim; ++i) s.comp.push_back(i);
        return s;
    }
};

/// A candidate algebra map src → dst given by its coordinate matrix
/// (column j = image of source basis vector j), plus which diagram squares
/// to check. `split` locates A and V in the target; `src_split` locates them
/// in the source and defaults to `split` (same positions on both sides).
struct MorphismWitness {
    Matrix map;
    bool stabilizes = false;
    bool costabilizes = false;
    std::optional<BasisSplit> split;
    std::optional<BasisSplit> src_split;
};

struct MorphismReport {
    CheckReport report;
    bool invertible = false;
};

/// Verifies map(u∘v) = map(u)∘map(v) on all source basis pairs; when
/// requested, that the map fixes the subalgebra block (stabilizes) and
/// commutes with the projection onto the complement block (co-stabilizes).
/// Invertibility is reported separately, not required.
inline MorphismReport check_morphism(const Algebra& src, const Algebra& dst, const MorphismWitness& w) {
    require_same_field(src.field(), dst.field());
    if (w.map.rows() != dst.dim() || w.map.cols() != src.dim())
        throw error(errc::dimension_mismatch, "morphism matrix must be dst.dim x src.dim");

    MorphismReport out;
    CheckReport& rep = out.report;

    bool product_ok = true;
    for (std::size_t i = 0; i < src.dim() && product_ok; ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
            Vec lhs = w.map.apply(src.basis_product(i, j));
            Vec rhs = dst.mul(w.map.column(i), w.map.column(j));
            if (!(lhs == rhs)) {
                rep.add("hom", {i, j}, std::move(lhs), std::move(rhs));
                product_ok = false;
                break;
            }
        }

    if (w.stabilizes || w.costabilizes) {
        if (!w.split)
            throw error(errc::shape_mismatch, "stabilize/co-stabilize checks need a split");
        const BasisSplit& dsplit = *w.split;
        const BasisSplit& ssplit = w.src_split ? *w.src_split : dsplit;
        dsplit.validate(dst.dim());
        ssplit.validate(src.dim());
        if (dsplit.sub.size() != ssplit.sub.size())
            throw error(errc::shape_mismatch, "split block sizes differ between source and target");

        if (w.stabilizes) {
            for (std::size_t k = 0; k < ssplit.sub.size(); ++k) {
                Vec lhs = w.map.column(ssplit.sub[k]);
                Vec rhs = Vec::unit(dst.field(), dst.dim(), dsplit.sub[k]);
                if (!(lhs == rhs)) {
                    rep.add("stab", {ssplit.sub[k]}, std::move(lhs), std::move(rhs));
                    break;
                }
            }
        }
        if (w.costabilizes) {
            // comp coordinates of map(e_j) must match the V-identification
            bool hit = false;
            for (std::size_t j = 0; j < src.dim() && !hit; ++j) {
                Vec img = w.map.column(j);
                for (std::size_t t = 0; t < dsplit.comp.size(); ++t) {
                    Scalar want = (j == ssplit.comp[t]) ? Scalar::one(src.field()) : Scalar::zero(src.field());
                    const Scalar& got = img[dsplit.comp[t]];
                    if (!(got == want)) {
                        Vec l = Vec::zero(src.field(), 1), r = Vec::zero(src.field(), 1);
                        l[0] = got;
                        r[0] = want;
                        rep.add("costab", {j, dsplit.comp[t]}, std::move(l), std::move(r));
                        hit = true;
                        break;
                    }
                }
            }
        }
    }

    out.invertible = w.map.rows() == w.map.cols() && invertible(w.map);
    return out;
}

}  // namespace lsakit
