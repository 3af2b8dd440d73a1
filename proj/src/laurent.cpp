#include "monring/laurent.hpp"

#include <sstream>

namespace monring {

std::string LaurentGF::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto [e, v] : c_) {
        long long mag = v < 0 ? -v : v;
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "z";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

} // namespace monring
