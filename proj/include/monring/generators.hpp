#ifndef MONRING_GENERATORS_HPP
#define MONRING_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "monring/monomial.hpp"

namespace monring {

// Subsets of the generator list are bitmasks over generator indices.
// The generator count is capped (default 24): face enumeration downstream
// is 2^|S|, so we fail loudly instead of blowing up silently.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline int lowest_bit(Mask m) { return __builtin_ctz(m); }

constexpr int kDefaultGeneratorCap = 24;
constexpr int kMaskBits = 31;

// An ordered antichain of monomials of total degree >= 2 together with its
// gcd-graph (edges between generators sharing a variable). The input order
// of the generators is the canonical orientation for all sign conventions.
class GeneratorSet {
public:
    // Removes duplicates and non-minimal elements (anything divisible by an
    // earlier or later survivor), preserving input order among survivors.
    // Rejects surviving generators of degree < 2.
    static GeneratorSet normalize(const std::vector<Monomial>& raw, int t,
                                  int cap = kDefaultGeneratorCap);

    // For generator lists already known to be antichains of degree >= 2
    // (e.g. sub-generator-sets); still verifies and throws otherwise.
    static GeneratorSet from_antichain(std::vector<Monomial> gens, int t,
                                       int cap = kDefaultGeneratorCap);

    int ambient() const { return t_; }
    int size() const { return static_cast<int>(gens_.size()); }
    bool empty() const { return gens_.empty(); }
    const Monomial& gen(int i) const;
    const std::vector<Monomial>& gens() const { return gens_; }
    Mask full_mask() const { return size() == 0 ? 0 : ((Mask(1) << size()) - 1); }
    Mask adjacency(int i) const;

    // m_S: componentwise max over S; m_() = 1.
    Monomial lcm_of(Mask s) const;

    // Connected components of S under the gcd-graph, as masks. c(()) = 0.
    std::vector<Mask> connected_components(Mask s) const;
    int component_count(Mask s) const;
    bool is_connected(Mask s) const { return component_count(s) <= 1; }
    bool is_discrete(Mask s) const;

    // M_N: generators dividing some monomial in N.
    Mask restriction(const std::vector<Monomial>& targets) const;
    Mask restriction(const Monomial& target) const;

    // All non-empty subsets without internal gcd edges, ordered by
    // (size, mask value). `independence_number` receives max |S| (0 if none).
    std::vector<Mask> discrete_subsets(int* independence_number = nullptr) const;

    bool is_square_free() const;

    // The sub-generator-set indexed by s, keeping relative order.
    // local index k of the result corresponds to the k-th set bit of s.
    GeneratorSet subset(Mask s) const;

    bool operator==(const GeneratorSet& o) const {
        return t_ == o.t_ && gens_ == o.gens_;
    }

private:
    GeneratorSet(int t, std::vector<Monomial> gens, int cap);
    void check_mask(Mask s) const;

    int t_ = 0;
    std::vector<Monomial> gens_;
    std::vector<Mask> adj_; // adj_[i] = neighbors of generator i
};

} // namespace monring

#endif
