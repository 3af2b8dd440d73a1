#include "monring/generators.hpp"

#include <algorithm>
#include <string>

namespace monring {

GeneratorSet::GeneratorSet(int t, std::vector<Monomial> gens, int cap)
    : t_(t), gens_(std::move(gens)) {
    if (static_cast<int>(gens_.size()) > cap ||
        static_cast<int>(gens_.size()) > kMaskBits)
        throw Error(ErrorKind::CapExceeded,
                    "generator count " + std::to_string(gens_.size()) +
                        " exceeds cap " + std::to_string(std::min(cap, kMaskBits)));
    for (const Monomial& m : gens_) {
        if (m.ambient() != t_)
            throw Error(ErrorKind::ParseError, "generator has wrong ambient variable count");
        if (m.degree() < 2)
            throw Error(ErrorKind::DegreeTooLow,
                        "minimal generator of total degree < 2");
    }
    if (t_ == 0 && !gens_.empty())
        throw Error(ErrorKind::EmptyAmbient, "generators in a ring with no variables");
    adj_.assign(gens_.size(), 0);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i].shares_factor(gens_[j])) {
                adj_[i] |= Mask(1) << j;
                adj_[j] |= Mask(1) << i;
            }
}

GeneratorSet GeneratorSet::normalize(const std::vector<Monomial>& raw, int t,
                                     int cap) {
    if (t == 0 && !raw.empty())
        throw Error(ErrorKind::EmptyAmbient, "generators in a ring with no variables");
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < raw.size() && minimal; ++j) {
            if (i == j) continue;
            if (raw[j].divides(raw[i]) && raw[i] != raw[j]) minimal = false;
            if (raw[i] == raw[j] && j < i) minimal = false; // duplicate, keep first
        }
        if (minimal) kept.push_back(raw[i]);
    }
    return GeneratorSet(t, std::move(kept), cap);
}

GeneratorSet GeneratorSet::from_antichain(std::vector<Monomial> gens, int t,
                                          int cap) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && gens[i].divides(gens[j]))
                throw Error(ErrorKind::ParseError, "generator list is not an antichain");
    return GeneratorSet(t, std::move(gens), cap);
}

const Monomial& GeneratorSet::gen(int i) const {
    if (i < 0 || i >= size())
        throw Error(ErrorKind::IndexOutOfRange, "generator index out of range");
    return gens_[static_cast<std::size_t>(i)];
}

Mask GeneratorSet::adjacency(int i) const {
    if (i < 0 || i >= size())
        throw Error(ErrorKind::IndexOutOfRange, "generator index out of range");
    return adj_[static_cast<std::size_t>(i)];
}

void GeneratorSet::check_mask(Mask s) const {
    if (s & ~full_mask())
        throw Error(ErrorKind::IndexOutOfRange, "subset mask references missing generators");
}

Monomial GeneratorSet::lcm_of(Mask s) const {
    check_mask(s);
    Monomial m = Monomial::unit(t_);
    for (Mask rest = s; rest;) {
        int i = lowest_bit(rest);
        rest &= rest - 1;
        m = m.lcm(gens_[static_cast<std::size_t>(i)]);
    }
    return m;
}

std::vector<Mask> GeneratorSet::connected_components(Mask s) const {
    check_mask(s);
    std::vector<Mask> parts;
    Mask rest = s;
    while (rest) {
        Mask comp = Mask(1) << lowest_bit(rest);
        // grow to the closure of the edge relation inside s
        for (;;) {
            Mask grown = comp;
            for (Mask c = comp; c;) {
                int i = lowest_bit(c);
                c &= c - 1;
                grown |= adj_[static_cast<std::size_t>(i)] & s;
            }
            if (grown == comp) break;
            comp = grown;
        }
        parts.push_back(comp);
        rest &= ~comp;
    }
    return parts;
}

int GeneratorSet::component_count(Mask s) const {
    return static_cast<int>(connected_components(s).size());
}

bool GeneratorSet::is_discrete(Mask s) const {
    check_mask(s);
    for (Mask c = s; c;) {
        int i = lowest_bit(c);
        c &= c - 1;
        if (adj_[static_cast<std::size_t>(i)] & s) return false;
    }
    return true;
}

Mask GeneratorSet::restriction(const std::vector<Monomial>& targets) const {
    Mask out = 0;
    for (int i = 0; i < size(); ++i)
        for (const Monomial& n : targets)
            if (gens_[static_cast<std::size_t>(i)].divides(n)) {
                out |= Mask(1) << i;
                break;
            }
    return out;
}

Mask GeneratorSet::restriction(const Monomial& target) const {
    return restriction(std::vector<Monomial>{target});
}

std::vector<Mask> GeneratorSet::discrete_subsets(int* independence_number) const {
    std::vector<Mask> out;
    int g = 0;
    // branch on the lowest eligible generator: in (and drop its neighbors)
    // or out
    auto rec = [&](auto&& self, Mask chosen, Mask candidates) -> void {
        if (chosen) {
            out.push_back(chosen);
            g = std::max(g, popcount(chosen));
        }
        while (candidates) {
            int i = lowest_bit(candidates);
            candidates &= candidates - 1;
            self(self, chosen | (Mask(1) << i),
                 candidates & ~adj_[static_cast<std::size_t>(i)]);
        }
    };
    rec(rec, 0, full_mask());
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    if (independence_number) *independence_number = g;
    return out;
}

bool GeneratorSet::is_square_free() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& m) { return m.is_square_free(); });
}

GeneratorSet GeneratorSet::subset(Mask s) const {
    check_mask(s);
    std::vector<Monomial> sub;
    for (Mask c = s; c;) {
        int i = lowest_bit(c);
        c &= c - 1;
        sub.push_back(gens_[static_cast<std::size_t>(i)]);
    }
    return GeneratorSet(t_, std::move(sub), kMaskBits);
}

} // namespace monring
