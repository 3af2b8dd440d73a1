#ifndef MONRING_ERRORS_HPP
#define MONRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monring {

// User-facing error categories. Everything a malformed input or an
// over-budget computation can trigger maps onto one of these kinds;
// internal invariant violations use InternalError instead.
enum class ErrorKind {
    DegreeTooLow,       // a minimal generator of total degree < 2
    EmptyAmbient,       // t = 0 with nonempty generator input
    IndexOutOfRange,
    CapExceeded,        // generator / lattice / strand budget exhausted
    NotSquareFree,
    NotTaylorMinimal,
    NotAnEquivalence,
    UnmappedMonomial,
    ConstantTermNotOne,
    BoundMismatch,      // truncated-series operands with different bounds
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// A broken internal invariant (e.g. a Laurent residue that should have
// cancelled). Distinct from Error so the CLI can exit 2 instead of 1.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

#define MONRING_ASSERT(cond, msg)                                          \
    do {                                                                   \
        if (!(cond)) throw ::monring::InternalError(std::string("internal invariant violated: ") + (msg)); \
    } while (0)

} // namespace monring

#endif
