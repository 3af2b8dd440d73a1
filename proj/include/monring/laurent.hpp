#ifndef MONRING_LAURENT_HPP
#define MONRING_LAURENT_HPP

#include <map>
#include <string>

#include "monring/errors.hpp"

namespace monring {

// An integer Laurent polynomial in z, finitely supported. Homology
// generating functions live here: the empty-face class contributes z^-1.
class LaurentGF {
public:
    LaurentGF() = default;
    static LaurentGF term(int exponent, long long coeff) {
        LaurentGF g;
        g.set(exponent, coeff);
        return g;
    }

    long long coeff(int exponent) const {
        auto it = c_.find(exponent);
        return it == c_.end() ? 0 : it->second;
    }
    void set(int exponent, long long value) {
        if (value == 0)
            c_.erase(exponent);
        else
            c_[exponent] = value;
    }
    void add(int exponent, long long value) { set(exponent, coeff(exponent) + value); }

    bool is_zero() const { return c_.empty(); }
    int min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    const std::map<int, long long>& coeffs() const { return c_; }

    LaurentGF operator+(const LaurentGF& o) const {
        LaurentGF r = *this;
        for (auto [e, v] : o.c_) r.add(e, v);
        return r;
    }
    LaurentGF operator-(const LaurentGF& o) const {
        LaurentGF r = *this;
        for (auto [e, v] : o.c_) r.add(e, -v);
        return r;
    }
    LaurentGF operator*(const LaurentGF& o) const {
        LaurentGF r;
        for (auto [e1, v1] : c_)
            for (auto [e2, v2] : o.c_) r.add(e1 + e2, v1 * v2);
        return r;
    }
    LaurentGF scaled(long long f) const {
        LaurentGF r;
        for (auto [e, v] : c_) r.add(e, v * f);
        return r;
    }
    LaurentGF shifted(int by) const {
        LaurentGF r;
        for (auto [e, v] : c_) r.set(e + by, v);
        return r;
    }
    // z -> z^-1 substitution.
    LaurentGF reversed() const {
        LaurentGF r;
        for (auto [e, v] : c_) r.set(-e, v);
        return r;
    }

    bool operator==(const LaurentGF& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentGF& o) const { return c_ != o.c_; }

    std::string to_string() const;

private:
    std::map<int, long long> c_;
};

} // namespace monring

#endif
