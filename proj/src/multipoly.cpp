#include "monring/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace monring {

MultiPoly MultiPoly::constant(int t, const mpz_class& c) {
    MultiPoly p(t);
    p.add_term(std::vector<int>(static_cast<std::size_t>(t), 0), 0, c);
    return p;
}

MultiPoly MultiPoly::koszul_numerator(int t) {
    MultiPoly p = one(t);
    for (int i = 0; i < t; ++i) {
        MultiPoly factor = one(t);
        std::vector<int> alpha(static_cast<std::size_t>(t), 0);
        alpha[static_cast<std::size_t>(i)] = 1;
        factor.add_term(alpha, 1, 1);
        p = p * factor;
    }
    return p;
}

mpz_class MultiPoly::coeff(const std::vector<int>& alpha, int z) const {
    auto it = terms_.find(TermKey{alpha, z});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void MultiPoly::add_term(const std::vector<int>& alpha, int z, const mpz_class& c) {
    MONRING_ASSERT(static_cast<int>(alpha.size()) == t_, "term with wrong ambient");
    if (c == 0) return;
    TermKey key{alpha, z};
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::add_monomial_times_gf(const Monomial& m, int z_shift, int sign,
                                      const LaurentGF& gf) {
    for (auto [e, v] : gf.coeffs())
        add_term(m.exponents(), e + z_shift,
                 mpz_class(static_cast<long>(v)) * sign);
}

int MultiPoly::min_z_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.z;
}

int MultiPoly::max_z_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.z;
}

int MultiPoly::max_alpha_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_)
        d = std::max(d, std::accumulate(k.alpha.begin(), k.alpha.end(), 0));
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same(o);
    MultiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.alpha, k.z, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same(o);
    MultiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.alpha, k.z, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same(o);
    MultiPoly r(t_);
    std::vector<int> alpha(static_cast<std::size_t>(t_));
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            for (int i = 0; i < t_; ++i)
                alpha[static_cast<std::size_t>(i)] =
                    ka.alpha[static_cast<std::size_t>(i)] + kb.alpha[static_cast<std::size_t>(i)];
            r.add_term(alpha, ka.z + kb.z, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::negated() const {
    MultiPoly r(t_);
    for (const auto& [k, c] : terms_) r.add_term(k.alpha, k.z, -c);
    return r;
}

MultiPoly MultiPoly::z_shifted(int k) const {
    MultiPoly r(t_);
    for (const auto& [key, c] : terms_) r.add_term(key.alpha, key.z + k, c);
    return r;
}

MultiPoly MultiPoly::truncated(int dz, int dalpha) const {
    MultiPoly r(t_);
    for (const auto& [k, c] : terms_) {
        if (k.z > dz) continue;
        if (std::accumulate(k.alpha.begin(), k.alpha.end(), 0) > dalpha) continue;
        r.add_term(k.alpha, k.z, c);
    }
    return r;
}

MultiPoly MultiPoly::substituted(const std::map<Monomial, Monomial>& f,
                                 int target_t) const {
    MultiPoly r(target_t);
    for (const auto& [k, c] : terms_) {
        auto it = f.find(Monomial(k.alpha));
        if (it == f.end())
            throw Error(ErrorKind::UnmappedMonomial,
                        "substitution map lacks a coefficient monomial");
        MONRING_ASSERT(it->second.ambient() == target_t,
                       "substitution image has wrong ambient");
        r.add_term(it->second.exponents(), k.z, c);
    }
    return r;
}

LaurentGF MultiPoly::specialized_z() const {
    LaurentGF g;
    for (const auto& [k, c] : terms_) {
        MONRING_ASSERT(c.fits_slong_p(), "coefficient too large for z-specialization");
        g.add(k.z, c.get_si());
    }
    return g;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
    MONRING_ASSERT(static_cast<int>(var_names.size()) == t_,
                   "variable name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        mpz_class mag = abs(c);
        bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (mag != 1) factors.push_back(mag.get_str());
        for (int i = 0; i < t_; ++i) {
            int e = k.alpha[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            std::string v = var_names[static_cast<std::size_t>(i)];
            if (e >= 2) v += "^" + std::to_string(e);
            factors.push_back(v);
        }
        if (k.z != 0) {
            std::string v = "z";
            if (k.z != 1) v += "^" + std::to_string(k.z);
            factors.push_back(v);
        }
        if (factors.empty()) factors.push_back(mag.get_str());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

std::string MultiPoly::to_string() const {
    std::vector<std::string> names;
    for (int i = 1; i <= t_; ++i) names.push_back("x" + std::to_string(i));
    return to_string(names);
}

void TruncatedSeries::check_bounds(const TruncatedSeries& o) const {
    if (dz_ != o.dz_ || dalpha_ != o.dalpha_)
        throw Error(ErrorKind::BoundMismatch, "truncation bounds differ");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_bounds(o);
    return TruncatedSeries(poly_ + o.poly_, dz_, dalpha_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_bounds(o);
    return TruncatedSeries(poly_ * o.poly_, dz_, dalpha_);
}

TruncatedSeries TruncatedSeries::times(const MultiPoly& p) const {
    return TruncatedSeries(poly_ * p, dz_, dalpha_);
}

TruncatedSeries invert_truncated(const MultiPoly& p, int dz, int dalpha) {
    std::vector<int> zero(static_cast<std::size_t>(p.ambient()), 0);
    if (p.coeff(zero, 0) != 1)
        throw Error(ErrorKind::ConstantTermNotOne, "constant term is not 1");
    MultiPoly q = MultiPoly::one(p.ambient()) - p; // 1 - p
    if (!q.is_zero() && q.min_z_degree() < 1)
        throw Error(ErrorKind::ConstantTermNotOne,
                    "p - 1 has a term of z-degree 0");
    // geometric series: sum of q^j; ord_z(q^j) >= j bounds the expansion
    MultiPoly result = MultiPoly::one(p.ambient());
    MultiPoly power = MultiPoly::one(p.ambient());
    for (int j = 1; j <= dz; ++j) {
        power = (power * q).truncated(dz, dalpha);
        if (power.is_zero()) break;
        result = result + power;
    }
    return TruncatedSeries(result, dz, dalpha);
}

} // namespace monring
