#include "monring/simplicial.hpp"

#include <algorithm>
#include <string>

namespace monring {

namespace {

void check_vertex_count(int n) {
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorKind::CapExceeded,
                    "vertex count " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxVertices) + "]");
}

FaceMask universe(int n) {
    return n == 0 ? 0 : ((FaceMask(1) << n) - 1);
}

} // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<FaceMask> sorted_faces)
    : n_(n), faces_(std::move(sorted_faces)) {}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    check_vertex_count(n);
    return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::empty_face_only(int n) {
    check_vertex_count(n);
    return SimplicialComplex(n, {0});
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    check_vertex_count(n);
    if (n > 26)
        throw Error(ErrorKind::CapExceeded, "full simplex enumeration too large");
    std::vector<FaceMask> f(std::size_t(1) << n);
    for (FaceMask m = 0; m <= universe(n) && !(n == 0 && m > 0); ++m) {
        f[static_cast<std::size_t>(m)] = m;
        if (m == universe(n)) break;
    }
    return SimplicialComplex(n, std::move(f));
}

SimplicialComplex SimplicialComplex::from_faces(int n,
                                                const std::vector<FaceMask>& faces) {
    check_vertex_count(n);
    std::vector<FaceMask> all;
    for (FaceMask f : faces) {
        if (f & ~universe(n))
            throw Error(ErrorKind::IndexOutOfRange, "face references missing vertices");
        // enumerate all subsets of f
        FaceMask sub = f;
        for (;;) {
            all.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return SimplicialComplex(n, std::move(all));
}

SimplicialComplex SimplicialComplex::from_predicate(
    int n, const std::function<bool(FaceMask)>& pred) {
    check_vertex_count(n);
    if (n > 26)
        throw Error(ErrorKind::CapExceeded, "predicate enumeration too large");
    std::vector<FaceMask> all;
    FaceMask top = universe(n);
    for (FaceMask m = 0;; ++m) {
        if (pred(m)) all.push_back(m);
        if (m == top) break;
    }
    // downward closure check: parent face present => child present
    for (FaceMask f : all)
        if (f != 0) {
            FaceMask child = f & (f - 1); // drop lowest vertex
            if (!std::binary_search(all.begin(), all.end(), child))
                throw InternalError("face predicate is not downward closed");
        }
    return SimplicialComplex(n, std::move(all));
}

int SimplicialComplex::dimension() const {
    if (faces_.empty()) return -2;
    int d = -1;
    for (FaceMask f : faces_) d = std::max(d, __builtin_popcountll(f) - 1);
    return d;
}

bool SimplicialComplex::has_face(FaceMask f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f);
}

std::vector<FaceMask> SimplicialComplex::faces_of_dimension(int d) const {
    std::vector<FaceMask> out;
    for (FaceMask f : faces_)
        if (__builtin_popcountll(f) == d + 1) out.push_back(f);
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta) {
    int n = delta.vertex_count();
    FaceMask top = universe(n);
    return SimplicialComplex::from_predicate(n, [&](FaceMask f) {
        return !delta.has_face(top & ~f);
    });
}

SimplicialComplex join(const SimplicialComplex& d1, const SimplicialComplex& d2) {
    int n = d1.vertex_count() + d2.vertex_count();
    check_vertex_count(n);
    std::vector<FaceMask> all;
    all.reserve(d1.face_count() * d2.face_count());
    for (FaceMask f1 : d1.faces())
        for (FaceMask f2 : d2.faces())
            all.push_back(f1 | (f2 << d1.vertex_count()));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return SimplicialComplex::from_faces(n, all);
}

SimplicialComplex dual_join(const SimplicialComplex& d1, const SimplicialComplex& d2) {
    int n1 = d1.vertex_count();
    int n = n1 + d2.vertex_count();
    FaceMask v1 = universe(n1);
    return SimplicialComplex::from_predicate(n, [&](FaceMask f) {
        return d1.has_face(f & v1) || d2.has_face(f >> n1);
    });
}

SimplicialComplex order_complex(int n, const std::function<bool(int, int)>& less) {
    check_vertex_count(n);
    // linear extension: sorting by how many elements lie strictly below is
    // compatible with any partial order
    std::vector<int> below(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && less(j, i)) ++below[static_cast<std::size_t>(i)];
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return below[static_cast<std::size_t>(a)] != below[static_cast<std::size_t>(b)]
                   ? below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)]
                   : a < b;
    });
    constexpr std::size_t kChainCap = std::size_t(1) << 22;
    std::vector<FaceMask> chains{0};
    auto extend = [&](auto&& self, FaceMask chain, int last, std::size_t from) -> void {
        for (std::size_t k = from; k < order.size(); ++k) {
            int v = order[k];
            if (last >= 0 && !less(last, v)) continue;
            if (chains.size() >= kChainCap)
                throw Error(ErrorKind::CapExceeded, "order complex face budget exhausted");
            FaceMask next = chain | (FaceMask(1) << v);
            chains.push_back(next);
            self(self, next, v, k + 1);
        }
    };
    extend(extend, 0, -1, 0);
    std::sort(chains.begin(), chains.end());
    return SimplicialComplex::from_faces(n, chains);
}

SimplicialComplex lcm_complex(Mask s, const GeneratorSet& m) {
    int k = popcount(s);
    std::vector<int> global(static_cast<std::size_t>(k));
    {
        int idx = 0;
        for (Mask c = s; c; c &= c - 1) global[static_cast<std::size_t>(idx++)] = lowest_bit(c);
    }
    auto to_global = [&](FaceMask local) {
        Mask g = 0;
        for (int i = 0; i < k; ++i)
            if (local & (FaceMask(1) << i)) g |= Mask(1) << global[static_cast<std::size_t>(i)];
        return g;
    };
    Monomial ms = m.lcm_of(s);
    return SimplicialComplex::from_predicate(k, [&](FaceMask f) {
        Mask g = to_global(f);
        return m.lcm_of(g) != ms || m.component_count(g) > 1;
    });
}

SimplicialComplex lcm_complex_componentwise(Mask s, const GeneratorSet& m) {
    int k = popcount(s);
    std::vector<int> global(static_cast<std::size_t>(k));
    {
        int idx = 0;
        for (Mask c = s; c; c &= c - 1) global[static_cast<std::size_t>(idx++)] = lowest_bit(c);
    }
    auto to_global = [&](FaceMask local) {
        Mask g = 0;
        for (int i = 0; i < k; ++i)
            if (local & (FaceMask(1) << i)) g |= Mask(1) << global[static_cast<std::size_t>(i)];
        return g;
    };
    Monomial ms = m.lcm_of(s);
    std::vector<Mask> comps = m.connected_components(s);
    return SimplicialComplex::from_predicate(k, [&](FaceMask f) {
        Mask g = to_global(f);
        if (m.lcm_of(g) != ms) return true;
        for (Mask comp : comps)
            if (m.component_count(g & comp) > 1) return true;
        return false;
    });
}

} // namespace monring
