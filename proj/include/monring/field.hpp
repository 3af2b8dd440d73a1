#ifndef MONRING_FIELD_HPP
#define MONRING_FIELD_HPP

#include <cstdint>
#include <string>

#include "monring/errors.hpp"

namespace monring {

// Coefficient field for homology: the rationals or a prime field GF(p).
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec gf(std::uint64_t p) {
        if (!is_prime(p))
            throw Error(ErrorKind::ParseError,
                        std::to_string(p) + " is not prime");
        return FieldSpec(p);
    }

    bool is_rational() const { return p_ == 0; }
    std::uint64_t prime() const { return p_; }

    std::string name() const {
        return is_rational() ? "rational" : "gf:" + std::to_string(p_);
    }

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    explicit FieldSpec(std::uint64_t p) : p_(p) {}
    std::uint64_t p_; // 0 encodes the rationals
};

} // namespace monring

#endif
