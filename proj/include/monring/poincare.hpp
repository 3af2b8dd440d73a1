#ifndef MONRING_POINCARE_HPP
#define MONRING_POINCARE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monring/homology.hpp"
#include "monring/lattice.hpp"
#include "monring/multipoly.hpp"

namespace monring {

// Which route computes the Poincare-series denominator. All three agree;
// the deviations route needs square-free generators (non-square-free input
// is polarized first on every route).
enum class DenominatorPath { Formula, Intervals, Deviations };

// Square-free deviations eps_{i,alpha} and the per-multidegree polynomials
// p_alpha(z) = z^3 * H~(Delta_{M_alpha}; k)(z) for x^alpha in the
// lcm-lattice. Only nonzero entries are stored.
struct DeviationTable {
    int t = 0;
    std::map<std::pair<int, Monomial>, long> eps; // (homological degree, alpha)
    std::map<Monomial, LaurentGF> p;              // per x^alpha in L_I

    long eps_at(int i, const Monomial& alpha) const {
        auto it = eps.find({i, alpha});
        return it == eps.end() ? 0 : it->second;
    }
};

// Fr\"oberg polarization: each generator x^alpha becomes the square-free
// product over x_{i,j}, 1 <= j <= alpha_i, and the induced map f on the
// lcm-lattices is an equivalence (validated, not assumed).
struct PolarizationResult {
    GeneratorSet target;                          // M', square-free
    int source_ambient = 0;
    std::vector<std::pair<int, int>> target_vars; // (source variable, power index j)
    std::map<Monomial, Monomial> forward;         // generator -> polarized generator
    std::map<Monomial, Monomial> lattice_map;     // f: L_{I'} -> L_I
    EquivalenceReport report;

    // f on an arbitrary element of L_{I'}: variable i gets the largest j
    // with x_{i,j} present.
    Monomial map_back(const Monomial& target_elem) const;
};

PolarizationResult polarize(const GeneratorSet& m);

// The denominator b_R(x, z) of the multigraded Poincare series, as the sum
// over Sat(M) of m_S (-z)^{c(S)+2} H~(Delta'_S; k)(z) (or the equivalent
// interval / deviation routes). Non-square-free input is polarized,
// computed square-free, and mapped back.
MultiPoly denominator(const GeneratorSet& m, const FieldSpec& field,
                      DenominatorPath path = DenominatorPath::Formula);

// The same sum with the order-complex homology of the open intervals
// (emptyset, S) in Satt(M). Requires square-free input.
MultiPoly denominator_via_intervals(const GeneratorSet& m, const FieldSpec& field);

// Expansion of the product of (1 - x^alpha p_alpha(z)) over the connected
// lattice part, keeping square-free terms only. Requires square-free input.
MultiPoly denominator_via_deviations(const GeneratorSet& m, const FieldSpec& field);

DeviationTable squarefree_deviations(const GeneratorSet& m, const FieldSpec& field);

// prod (1 + x^alpha z^(2i-1))^eps / (1 - x^alpha z^(2i))^eps, truncated.
// Coincides with the Poincare series in square-free multidegrees.
TruncatedSeries product_representation(const DeviationTable& dev, int dz, int dalpha);

// prod(1 + x_i z) / b_R, truncated.
TruncatedSeries poincare_series(const GeneratorSet& m, const FieldSpec& field,
                                int dz, int dalpha);

// The Betti numerator P^Q_R(x, z) from the lcm-lattice interval homology.
MultiPoly betti_numerator(const GeneratorSet& m, const FieldSpec& field);

// Whether S -> m_S is injective on subsets (the Taylor complex is minimal).
bool is_taylor_minimal(const GeneratorSet& m);

// Closed form sum over all subsets (-1)^c(S) z^(|S|+c(S)) m_S; only valid
// when the Taylor complex is minimal.
MultiPoly taylor_closed_form(const GeneratorSet& m);

// Golod by the denominator equation b_R = 1 - z (P^Q_R - 1).
bool is_golod(const GeneratorSet& m, const FieldSpec& field);

// Pre-Golod test for a generator set N: punctured-lattice homology equals
// the signed sum of interval homologies over saturated S with m_S = m_N.
bool is_pre_golod(const GeneratorSet& n, const FieldSpec& field);

// Golod via the combinatorial criterion: every non-empty M_m, m in L_I,
// is pre-Golod. On failure, *failing receives the first bad lattice
// element in canonical order.
bool golod_via_criterion(const GeneratorSet& m, const FieldSpec& field,
                         std::optional<Monomial>* failing = nullptr);

struct DegreeStats {
    int n = 0;
    int g = 0;
    int deg_z = 0;
    bool complete_intersection = false;
};

DegreeStats degree_stats(const GeneratorSet& m, const FieldSpec& field);

} // namespace monring

#endif
