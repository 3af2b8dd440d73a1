#ifndef MONRING_SIMPLICIAL_HPP
#define MONRING_SIMPLICIAL_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "monring/generators.hpp"

namespace monring {

using FaceMask = std::uint64_t;

constexpr int kMaxVertices = 62;

// A finite simplicial complex on indexed vertices 0..n-1 with every face
// stored explicitly as a bitmask. The face family is downward closed; the
// void complex (no faces at all, not even the empty face) is representable
// and distinct from {()}. Vertex index order is the orientation.
class SimplicialComplex {
public:
    // The complex with no faces at all.
    static SimplicialComplex void_complex(int n);
    // The complex whose only face is the empty set.
    static SimplicialComplex empty_face_only(int n);
    static SimplicialComplex full_simplex(int n);

    // Closes the given faces downward.
    static SimplicialComplex from_faces(int n, const std::vector<FaceMask>& faces);
    // Keeps exactly the subsets satisfying the predicate; the caller is
    // responsible for the predicate being downward closed (checked).
    static SimplicialComplex from_predicate(int n,
                                            const std::function<bool(FaceMask)>& pred);

    int vertex_count() const { return n_; }
    bool is_void() const { return faces_.empty(); }
    int dimension() const; // -2 for void, -1 for {()}
    const std::vector<FaceMask>& faces() const { return faces_; }
    bool has_face(FaceMask f) const;
    std::size_t face_count() const { return faces_.size(); }

    // Faces of dimension d (cardinality d+1), in increasing mask order.
    std::vector<FaceMask> faces_of_dimension(int d) const;

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && faces_ == o.faces_;
    }

private:
    SimplicialComplex(int n, std::vector<FaceMask> sorted_faces);

    int n_ = 0;
    std::vector<FaceMask> faces_; // sorted ascending, deduplicated
};

// Alexander dual: faces are the complements of non-faces.
SimplicialComplex alexander_dual(const SimplicialComplex& delta);

// Join: faces F1 | (F2 << n1) for F1 in d1, F2 in d2. Vertex sets are made
// disjoint by shifting the second complex.
SimplicialComplex join(const SimplicialComplex& d1, const SimplicialComplex& d2);

// Dual join: F is a face iff F cap V1 in d1 or F cap V2 in d2. Equals the
// dual of the join of the duals (tested, not assumed).
SimplicialComplex dual_join(const SimplicialComplex& d1, const SimplicialComplex& d2);

// Order complex of a finite poset given by a strict comparability test:
// vertices 0..n-1, faces are the chains. less(a, b) must be a strict
// partial order.
SimplicialComplex order_complex(int n, const std::function<bool(int, int)>& less);

// The complex on the generators of S (as local vertex indices, ascending
// generator index) whose faces F satisfy m_F != m_S or F disconnected.
SimplicialComplex lcm_complex(Mask s, const GeneratorSet& m);

// The component-refined variant: F is a face iff m_F != m_S or F cap S_i is
// disconnected for some connected component S_i of S. Coincides with the
// iterated dual join of lcm_complex over the components.
SimplicialComplex lcm_complex_componentwise(Mask s, const GeneratorSet& m);

} // namespace monring

#endif
