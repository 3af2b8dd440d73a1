#include "monring/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace monring {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void parse_fail(int line, const std::string& why) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ": " + why);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

std::vector<std::string> default_var_names(int t) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(t));
    for (int i = 1; i <= t; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

Monomial parse_monomial(const std::string& text,
                        const std::vector<std::string>& var_names) {
    std::string body = strip(text);
    if (body.empty())
        throw Error(ErrorKind::ParseError, "empty monomial");
    std::vector<int> e(var_names.size(), 0);
    if (body == "1") return Monomial(std::move(e));

    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t star = body.find('*', pos);
        std::string factor = strip(body.substr(pos, star == std::string::npos
                                                        ? std::string::npos
                                                        : star - pos));
        pos = star == std::string::npos ? body.size() : star + 1;
        if (factor.empty())
            throw Error(ErrorKind::ParseError, "empty factor in monomial '" + body + "'");
        std::string name = factor;
        long exp = 1;
        std::size_t caret = factor.find('^');
        if (caret != std::string::npos) {
            name = strip(factor.substr(0, caret));
            std::string expo = strip(factor.substr(caret + 1));
            try {
                std::size_t used = 0;
                exp = std::stol(expo, &used);
                if (used != expo.size()) throw std::invalid_argument(expo);
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "bad exponent '" + expo + "'");
            }
            if (exp < 0)
                throw Error(ErrorKind::ParseError, "negative exponent in '" + factor + "'");
        }
        auto it = std::find(var_names.begin(), var_names.end(), name);
        if (it == var_names.end())
            throw Error(ErrorKind::ParseError, "unknown variable '" + name + "'");
        e[static_cast<std::size_t>(it - var_names.begin())] += static_cast<int>(exp);
    }
    return Monomial(std::move(e));
}

std::string render_monomial(const Monomial& m,
                            const std::vector<std::string>& var_names) {
    MONRING_ASSERT(m.ambient() == static_cast<int>(var_names.size()),
                   "variable name count mismatch");
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < m.ambient(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (any) out << "*";
        out << var_names[static_cast<std::size_t>(i)];
        if (e >= 2) out << "^" << e;
        any = true;
    }
    return any ? out.str() : "1";
}

IdealFile parse_ideal_file(std::istream& in) {
    IdealFile file;
    bool header_seen = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line.rfind("vars:", 0) != 0)
                parse_fail(lineno, "expected a 'vars:' header line");
            std::string rest = strip(line.substr(5));
            if (rest.rfind("t=", 0) == 0) {
                std::string num = strip(rest.substr(2));
                int t = 0;
                try {
                    std::size_t used = 0;
                    t = std::stoi(num, &used);
                    if (used != num.size() || t < 0) throw std::invalid_argument(num);
                } catch (const std::exception&) {
                    parse_fail(lineno, "bad variable count '" + num + "'");
                }
                file.var_names = default_var_names(t);
            } else {
                std::istringstream words(rest);
                std::string w;
                while (words >> w) {
                    if (!valid_name(w)) parse_fail(lineno, "bad variable name '" + w + "'");
                    if (std::find(file.var_names.begin(), file.var_names.end(), w) !=
                        file.var_names.end())
                        parse_fail(lineno, "duplicate variable name '" + w + "'");
                    file.var_names.push_back(w);
                }
            }
            header_seen = true;
            continue;
        }
        try {
            file.raw_generators.push_back(parse_monomial(line, file.var_names));
        } catch (const Error& e) {
            parse_fail(lineno, e.what());
        }
    }
    if (!header_seen)
        throw Error(ErrorKind::ParseError, "missing 'vars:' header");
    return file;
}

IdealFile parse_ideal_file(const std::string& text) {
    std::istringstream in(text);
    return parse_ideal_file(in);
}

} // namespace monring
