#ifndef MONRING_MULTIPOLY_HPP
#define MONRING_MULTIPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "monring/laurent.hpp"
#include "monring/monomial.hpp"

namespace monring {

// Key of one term x^alpha z^d. Terms are kept in the canonical output
// order: z-degree ascending, then alpha lexicographically descending, so
// iteration order is printing order.
struct TermKey {
    std::vector<int> alpha;
    int z = 0;

    bool operator==(const TermKey& o) const { return z == o.z && alpha == o.alpha; }
};

struct TermOrder {
    bool operator()(const TermKey& a, const TermKey& b) const {
        if (a.z != b.z) return a.z < b.z;
        return std::lexicographical_compare(b.alpha.begin(), b.alpha.end(),
                                            a.alpha.begin(), a.alpha.end());
    }
};

// Exact integer polynomial in x_1..x_t and z, finitely supported, with
// arbitrary-precision coefficients.
class MultiPoly {
public:
    using Terms = std::map<TermKey, mpz_class, TermOrder>;

    explicit MultiPoly(int t = 0) : t_(t) {}
    static MultiPoly constant(int t, const mpz_class& c);
    static MultiPoly one(int t) { return constant(t, 1); }
    // prod over i of (1 + x_i z)
    static MultiPoly koszul_numerator(int t);

    int ambient() const { return t_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpz_class coeff(const std::vector<int>& alpha, int z) const;
    void add_term(const std::vector<int>& alpha, int z, const mpz_class& c);
    void add_term(const Monomial& m, int z, const mpz_class& c) {
        add_term(m.exponents(), z, c);
    }
    // m * (sign z)^shift * gf, accumulated in; asserts nothing here, the
    // caller checks polynomiality at the end.
    void add_monomial_times_gf(const Monomial& m, int z_shift, int sign,
                               const LaurentGF& gf);

    int min_z_degree() const; // 0 for the zero polynomial
    int max_z_degree() const;
    int max_alpha_degree() const;
    bool has_negative_z() const { return !terms_.empty() && terms_.begin()->first.z < 0; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly negated() const;
    // multiply by z^k
    MultiPoly z_shifted(int k) const;

    // Drop terms with z-degree > dz or total alpha-degree > dalpha.
    MultiPoly truncated(int dz, int dalpha) const;

    // Replace each coefficient monomial via f (the polynomial is regarded
    // as a polynomial in z). Throws UnmappedMonomial if an alpha appearing
    // in the support has no image. The ambient of the result is target_t.
    MultiPoly substituted(const std::map<Monomial, Monomial>& f, int target_t) const;

    // Specialize all x_i to 1, leaving a univariate polynomial in z.
    LaurentGF specialized_z() const;

    bool operator==(const MultiPoly& o) const {
        return t_ == o.t_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Canonical text form: "1 - x1*x2*z^2 - 2*x1*x2*x3*z^3".
    std::string to_string(const std::vector<std::string>& var_names) const;
    std::string to_string() const; // default names x1..xt

private:
    void check_same(const MultiPoly& o) const {
        MONRING_ASSERT(t_ == o.t_, "mixed ambient variable counts");
    }

    int t_;
    Terms terms_;
};

// A MultiPoly together with truncation bounds; products stay within them.
class TruncatedSeries {
public:
    TruncatedSeries(int t, int dz, int dalpha)
        : poly_(t), dz_(dz), dalpha_(dalpha) {}
    TruncatedSeries(MultiPoly p, int dz, int dalpha)
        : poly_(p.truncated(dz, dalpha)), dz_(dz), dalpha_(dalpha) {}

    const MultiPoly& poly() const { return poly_; }
    int z_bound() const { return dz_; }
    int alpha_bound() const { return dalpha_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries times(const MultiPoly& p) const;

    bool operator==(const TruncatedSeries& o) const {
        return dz_ == o.dz_ && dalpha_ == o.dalpha_ && poly_ == o.poly_;
    }

private:
    void check_bounds(const TruncatedSeries& o) const;

    MultiPoly poly_;
    int dz_;
    int dalpha_;
};

// Geometric-series inverse of p, truncated: requires constant term 1 and
// p - 1 of minimum z-degree >= 1, which makes the expansion finite.
TruncatedSeries invert_truncated(const MultiPoly& p, int dz, int dalpha);

} // namespace monring

#endif
