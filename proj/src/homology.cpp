#include "monring/homology.hpp"

#include <unordered_map>

namespace monring {

ChainComplexOverField chain_complex(const SimplicialComplex& delta,
                                    const FieldSpec& field) {
    ChainComplexOverField cc;
    cc.field = field;
    if (delta.is_void()) return cc;

    int dim = delta.dimension();
    cc.basis.resize(static_cast<std::size_t>(dim) + 2);
    for (FaceMask f : delta.faces())
        cc.basis[static_cast<std::size_t>(__builtin_popcountll(f))].push_back(f);

    std::unordered_map<FaceMask, int> index_below;
    cc.boundary.resize(cc.basis.size());
    for (std::size_t d = 1; d < cc.basis.size(); ++d) {
        const auto& below = cc.basis[d - 1];
        const auto& here = cc.basis[d];
        index_below.clear();
        for (std::size_t i = 0; i < below.size(); ++i)
            index_below[below[i]] = static_cast<int>(i);
        SparseIntMatrix& b = cc.boundary[d];
        b.rows = static_cast<int>(below.size());
        b.cols.resize(here.size());
        for (std::size_t j = 0; j < here.size(); ++j) {
            FaceMask f = here[j];
            int sign = 1;
            for (FaceMask rest = f; rest; rest &= rest - 1) {
                FaceMask child = f & ~(rest & -rest); // delete the k-th lowest vertex
                auto it = index_below.find(child);
                MONRING_ASSERT(it != index_below.end(), "complex not downward closed");
                b.cols[j].emplace_back(it->second, sign);
                sign = -sign;
            }
            std::sort(b.cols[j].begin(), b.cols[j].end());
        }
    }
    return cc;
}

LaurentGF reduced_homology_gf(const SimplicialComplex& delta, const FieldSpec& field) {
    LaurentGF out;
    if (delta.is_void()) return out;
    ChainComplexOverField cc = chain_complex(delta, field);
    std::vector<long> ranks(cc.basis.size() + 1, 0);
    for (std::size_t d = 1; d < cc.basis.size(); ++d)
        ranks[d] = rank(cc.boundary[d], field);
    for (std::size_t d = 0; d < cc.basis.size(); ++d) {
        long h = static_cast<long>(cc.basis[d].size()) - ranks[d] - ranks[d + 1];
        MONRING_ASSERT(h >= 0, "negative homology dimension");
        if (h != 0) out.add(static_cast<int>(d) - 1, h);
    }
    return out;
}

long reduced_homology_dim(const SimplicialComplex& delta, const FieldSpec& field,
                          int degree) {
    return reduced_homology_gf(delta, field).coeff(degree);
}

} // namespace monring
