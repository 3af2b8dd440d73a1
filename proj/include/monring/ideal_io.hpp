#ifndef MONRING_IDEAL_IO_HPP
#define MONRING_IDEAL_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "monring/generators.hpp"

namespace monring {

// A parsed ideal file: a header "vars: x1 x2 x3" (or "vars: t=<n>"),
// then one monomial per line in the syntax "x1^2*x3"; '#' starts a comment.
struct IdealFile {
    std::vector<std::string> var_names;
    std::vector<Monomial> raw_generators;

    int ambient() const { return static_cast<int>(var_names.size()); }
    GeneratorSet generators(int cap = kDefaultGeneratorCap) const {
        return GeneratorSet::normalize(raw_generators, ambient(), cap);
    }
};

IdealFile parse_ideal_file(std::istream& in);
IdealFile parse_ideal_file(const std::string& text);

// "x1^2*x3" with '*' separators, '^' only for exponents >= 2; "1" for the
// unit monomial.
Monomial parse_monomial(const std::string& text,
                        const std::vector<std::string>& var_names);
std::string render_monomial(const Monomial& m,
                            const std::vector<std::string>& var_names);

// default names x1..xt
std::vector<std::string> default_var_names(int t);

} // namespace monring

#endif
