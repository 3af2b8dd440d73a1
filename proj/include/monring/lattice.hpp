#ifndef MONRING_LATTICE_HPP
#define MONRING_LATTICE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monring/generators.hpp"
#include "monring/simplicial.hpp"

namespace monring {

// The lcm-lattice L_M: all distinct values of m_S for S subseteq M, ordered
// by divisibility, with lcm as join. Elements are kept in the deterministic
// (degree, lex) monomial order; element 0 is always the unit.
class LcmLattice {
public:
    static LcmLattice build(const GeneratorSet& m, std::size_t cap = 1 << 16);

    const GeneratorSet& generators() const { return gens_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const Monomial& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    const std::vector<Monomial>& elements() const { return elems_; }
    int unit_index() const { return 0; }
    int top_index() const { return size() - 1; }
    std::optional<int> index_of(const Monomial& m) const;

    bool leq(int a, int b) const { return element(a).divides(element(b)); }
    bool gcd_edge(int a, int b) const { return element(a).shares_factor(element(b)); }

    // Indices of the atoms (the generators, when M is an antichain).
    std::vector<int> atom_indices() const;

    // Elements l != 1 whose restriction M_l is connected.
    std::vector<int> connected_part() const;

    // Order complex of the open interval (1, element(i)) under divisibility.
    SimplicialComplex open_interval_complex(int i) const;

    // Order complex of L_M with 1 and the top element removed.
    SimplicialComplex punctured_complex() const;

private:
    LcmLattice(GeneratorSet gens, std::vector<Monomial> elems)
        : gens_(std::move(gens)), elems_(std::move(elems)) {}

    GeneratorSet gens_;
    std::vector<Monomial> elems_;
};

// The saturation closure and the lattice Sat(M) of non-empty saturated
// subsets. Members are held in (size, mask) order.
Mask saturate(Mask s, const GeneratorSet& m);
bool is_saturated(Mask s, const GeneratorSet& m);

// One application of the defining operator (components -> lcms -> divisors),
// without iterating to a fixed point. Exposed for tests.
Mask saturation_pass(Mask s, const GeneratorSet& m);

struct SaturatedFamily {
    std::vector<Mask> members; // non-empty saturated subsets, (size, mask) order
    bool contains(Mask s) const;
};

SaturatedFamily enumerate_saturated(const GeneratorSet& m);
// Brute-force oracle: filter all 2^n - 1 subsets through is_saturated.
SaturatedFamily enumerate_saturated_brute(const GeneratorSet& m);

Mask satt_meet(Mask s, Mask t);
Mask satt_join(Mask s, Mask t, const GeneratorSet& m);

// Order complex of the open interval (emptyset, S) in Satt(M): chains of
// saturated subsets strictly between. Requires S saturated.
SimplicialComplex interval_order_complex(Mask s, const GeneratorSet& m);

// Validation of a claimed equivalence f: L_source -> image: a bijection
// preserving divisibility and gcd edges in both directions.
struct EquivalenceReport {
    bool valid = true;
    std::string reason;
    std::optional<std::pair<Monomial, Monomial>> witness; // offending source pair
    // induced data, populated only when valid:
    std::vector<std::pair<Monomial, Monomial>> atom_map;
    std::vector<std::pair<Mask, Mask>> sat_map; // Sat(M_src) -> Sat(M_img)
};

EquivalenceReport apply_equivalence(const std::map<Monomial, Monomial>& f,
                                    const LcmLattice& source);

} // namespace monring

#endif
