#ifndef MONRING_HOMOLOGY_HPP
#define MONRING_HOMOLOGY_HPP

#include <vector>

#include "monring/field.hpp"
#include "monring/laurent.hpp"
#include "monring/linalg.hpp"
#include "monring/simplicial.hpp"

namespace monring {

// Augmented chain complex of a finite simplicial complex over a field.
// Degree d lives at index d+1: the empty face is the unique (-1)-face.
// Boundary signs come from the ascending vertex index order.
struct ChainComplexOverField {
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::vector<FaceMask>> basis; // basis[d+1] = d-faces
    std::vector<SparseIntMatrix> boundary;    // boundary[d+1]: C_d -> C_{d-1}

    int top_degree() const { return static_cast<int>(basis.size()) - 2; }
};

ChainComplexOverField chain_complex(const SimplicialComplex& delta,
                                    const FieldSpec& field);

// Generating function of reduced homology: sum over i of dim H~_i(delta; k)
// times z^i, with i >= -1. Identically zero for the void complex.
LaurentGF reduced_homology_gf(const SimplicialComplex& delta, const FieldSpec& field);

// Reduced homology dimension in a single degree.
long reduced_homology_dim(const SimplicialComplex& delta, const FieldSpec& field,
                          int degree);

} // namespace monring

#endif
