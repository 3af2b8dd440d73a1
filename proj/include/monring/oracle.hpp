#ifndef MONRING_ORACLE_HPP
#define MONRING_ORACLE_HPP

#include <map>
#include <vector>

#include "monring/multipoly.hpp"
#include "monring/poincare.hpp"

namespace monring {

// Brute-force verifiers, independent of the formula machinery they check.

struct BarLimits {
    std::size_t max_strand_tuples = 2000000;
};

// The multidegree-alpha strand of the normalized bar complex of R: basis in
// homological degree r are the r-tuples of monomials that are nonzero in
// R_+ and sum to alpha; the differential merges adjacent entries with
// alternating signs, dropping merges that land in the ideal.
struct BarStrand {
    std::vector<std::size_t> dims;           // dims[r] = |C_r|, r = 0..|alpha|
    std::vector<SparseIntMatrix> boundaries; // boundaries[r]: C_r -> C_{r-1}
};

BarStrand bar_strand(const GeneratorSet& m, const Monomial& alpha,
                     const BarLimits& limits = {});

// dim Tor^R_{i,alpha}(k,k) per homological degree i, nonzero entries only.
std::map<int, long> bar_tor_dims(const GeneratorSet& m, const FieldSpec& field,
                                 const Monomial& alpha, const BarLimits& limits = {});

// The whole multigraded Poincare series within the bounds, strand by strand.
TruncatedSeries oracle_poincare_series(const GeneratorSet& m, const FieldSpec& field,
                                       int dz, int dalpha,
                                       const BarLimits& limits = {});

// Betti numbers of R over the polynomial ring from the Taylor complex,
// reduced modulo the maximal ideal: sum of dim Tor^Q_{i,alpha}(R,k) x^alpha z^i.
MultiPoly taylor_betti_dims(const GeneratorSet& m, const FieldSpec& field);

// Integral homology of a complex via Smith normal form.
struct IntegralHomology {
    struct Group {
        long free_rank = 0;
        std::vector<mpz_class> torsion; // invariant factors > 1
    };
    std::map<int, Group> groups; // degree -> group, degrees -1..dim

    // dim over GF(p) predicted by universal coefficients.
    long gf_dimension(int degree, const mpz_class& p) const;
    long rational_dimension(int degree) const;
};

IntegralHomology integer_snf_homology(const SimplicialComplex& delta);

// Checks b_R * P^R_k = prod(1 + x_i z) coefficientwise within the bounds,
// with P^R_k taken from the bar oracle. A denominator override supports
// mutation testing.
struct IdentityReport {
    bool ok = true;
    struct Discrepancy {
        std::vector<int> alpha;
        int z = 0;
        mpz_class got;
        mpz_class want;
    };
    std::vector<Discrepancy> discrepancies; // capped at a handful
};

IdentityReport verify_main_identity(const GeneratorSet& m, const FieldSpec& field,
                                    int dz, int dalpha,
                                    const MultiPoly* denominator_override = nullptr,
                                    const BarLimits& limits = {});

} // namespace monring

#endif
