#ifndef MONRING_MONOMIAL_HPP
#define MONRING_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "monring/errors.hpp"

namespace monring {

// A monomial in a fixed ambient polynomial ring, stored as its exponent
// vector. The ambient variable count t is the vector length; all monomials
// taking part in one computation must share it.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {}
    static Monomial unit(int t) { return Monomial(std::vector<int>(t, 0)); }

    int ambient() const { return static_cast<int>(e_.size()); }
    int exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_unit() const { return degree() == 0; }

    bool is_square_free() const {
        for (int v : e_)
            if (v > 1) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        check_same_ambient(other);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    // Non-trivial common factor: some variable occurs in both.
    bool shares_factor(const Monomial& other) const {
        check_same_ambient(other);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && other.e_[i] > 0) return true;
        return false;
    }

    Monomial lcm(const Monomial& other) const {
        check_same_ambient(other);
        std::vector<int> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i)
            r[i] = std::max(e_[i], other.e_[i]);
        return Monomial(std::move(r));
    }

    Monomial times(const Monomial& other) const {
        check_same_ambient(other);
        std::vector<int> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i)
            r[i] = e_[i] + other.e_[i];
        return Monomial(std::move(r));
    }

    bool operator==(const Monomial& other) const { return e_ == other.e_; }
    bool operator!=(const Monomial& other) const { return e_ != other.e_; }

    // Deterministic total order: total degree first, then lexicographic on
    // the exponent vector. Used wherever monomial collections need a
    // reproducible ordering (lattices, table keys).
    bool operator<(const Monomial& other) const {
        int da = degree(), db = other.degree();
        if (da != db) return da < db;
        return e_ < other.e_;
    }

private:
    void check_same_ambient(const Monomial& other) const {
        MONRING_ASSERT(e_.size() == other.e_.size(),
                       "monomials from different ambient rings");
    }

    std::vector<int> e_;
};

} // namespace monring

#endif
