#include "monring/lattice.hpp"

#include <algorithm>
#include <set>

namespace monring {

LcmLattice LcmLattice::build(const GeneratorSet& m, std::size_t cap) {
    // close under pairwise joins, touching each pair once as the list grows
    std::vector<Monomial> all{Monomial::unit(m.ambient())};
    std::set<Monomial> seen(all.begin(), all.end());
    for (const Monomial& g : m.gens())
        if (seen.insert(g).second) all.push_back(g);
    for (std::size_t i = 1; i < all.size(); ++i)
        for (std::size_t j = 1; j < i; ++j) {
            Monomial l = all[i].lcm(all[j]);
            if (seen.insert(l).second) {
                all.push_back(l);
                if (all.size() > cap)
                    throw Error(ErrorKind::CapExceeded,
                                "lcm-lattice exceeds element cap");
            }
        }
    return LcmLattice(m, std::vector<Monomial>(seen.begin(), seen.end()));
}

std::optional<int> LcmLattice::index_of(const Monomial& m) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), m);
    if (it != elems_.end() && *it == m)
        return static_cast<int>(it - elems_.begin());
    return std::nullopt;
}

std::vector<int> LcmLattice::atom_indices() const {
    // minimal elements above the unit
    std::vector<int> atoms;
    for (int i = 1; i < size(); ++i) {
        bool minimal = true;
        for (int j = 1; j < size() && minimal; ++j)
            if (j != i && leq(j, i)) minimal = false;
        if (minimal) atoms.push_back(i);
    }
    return atoms;
}

std::vector<int> LcmLattice::connected_part() const {
    std::vector<int> out;
    for (int i = 1; i < size(); ++i) {
        Mask restricted = gens_.restriction(elems_[static_cast<std::size_t>(i)]);
        if (restricted != 0 && gens_.component_count(restricted) == 1)
            out.push_back(i);
    }
    return out;
}

SimplicialComplex LcmLattice::open_interval_complex(int i) const {
    std::vector<int> between;
    for (int j = 1; j < size(); ++j)
        if (j != i && leq(j, i)) between.push_back(j);
    return order_complex(static_cast<int>(between.size()), [&](int a, int b) {
        return between[static_cast<std::size_t>(a)] != between[static_cast<std::size_t>(b)] &&
               leq(between[static_cast<std::size_t>(a)], between[static_cast<std::size_t>(b)]);
    });
}

SimplicialComplex LcmLattice::punctured_complex() const {
    std::vector<int> mid;
    for (int j = 0; j < size(); ++j)
        if (j != unit_index() && j != top_index()) mid.push_back(j);
    return order_complex(static_cast<int>(mid.size()), [&](int a, int b) {
        return mid[static_cast<std::size_t>(a)] != mid[static_cast<std::size_t>(b)] &&
               leq(mid[static_cast<std::size_t>(a)], mid[static_cast<std::size_t>(b)]);
    });
}

Mask saturation_pass(Mask s, const GeneratorSet& m) {
    if (s == 0) return 0;
    std::vector<Monomial> lcms;
    for (Mask comp : m.connected_components(s)) lcms.push_back(m.lcm_of(comp));
    return m.restriction(lcms);
}

Mask saturate(Mask s, const GeneratorSet& m) {
    // one pass need not be closed: new elements can merge components and
    // admit new divisors, so iterate to the fixed point
    Mask cur = s;
    for (;;) {
        Mask next = saturation_pass(cur, m);
        if (next == cur) return cur;
        cur = next;
    }
}

bool is_saturated(Mask s, const GeneratorSet& m) {
    return saturation_pass(s, m) == s;
}

bool SaturatedFamily::contains(Mask s) const {
    return std::find(members.begin(), members.end(), s) != members.end();
}

namespace {

void sort_members(std::vector<Mask>& v) {
    std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
}

} // namespace

SaturatedFamily enumerate_saturated(const GeneratorSet& m) {
    // closure generation: singleton closures, then repeated joins with
    // singleton closures until stable; Sat(M) is usually far below 2^n
    SaturatedFamily fam;
    if (m.size() == 0) return fam;
    std::set<Mask> seen;
    std::vector<Mask> singles;
    for (int i = 0; i < m.size(); ++i) {
        Mask s = saturate(Mask(1) << i, m);
        singles.push_back(s);
        seen.insert(s);
    }
    std::vector<Mask> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask s : frontier)
            for (Mask g : singles) {
                if ((g & ~s) == 0) continue;
                Mask j = saturate(s | g, m);
                if (seen.insert(j).second) next.push_back(j);
            }
        frontier.swap(next);
    }
    fam.members.assign(seen.begin(), seen.end());
    sort_members(fam.members);
    return fam;
}

SaturatedFamily enumerate_saturated_brute(const GeneratorSet& m) {
    SaturatedFamily fam;
    Mask full = m.full_mask();
    for (Mask s = 1; s <= full && full; ++s)
        if (is_saturated(s, m)) fam.members.push_back(s);
    sort_members(fam.members);
    return fam;
}

Mask satt_meet(Mask s, Mask t) { return s & t; }

Mask satt_join(Mask s, Mask t, const GeneratorSet& m) {
    return saturate(s | t, m);
}

SimplicialComplex interval_order_complex(Mask s, const GeneratorSet& m) {
    MONRING_ASSERT(s != 0 && is_saturated(s, m),
                   "interval requested at a non-saturated subset");
    // Satt of the sub-generator-set equals the part of Satt(M) below S
    GeneratorSet sub = m.subset(s);
    SaturatedFamily fam = enumerate_saturated(sub);
    std::vector<Mask> proper;
    for (Mask t : fam.members)
        if (t != sub.full_mask()) proper.push_back(t);
    return order_complex(static_cast<int>(proper.size()), [&](int a, int b) {
        Mask x = proper[static_cast<std::size_t>(a)], y = proper[static_cast<std::size_t>(b)];
        return x != y && (x & ~y) == 0;
    });
}

EquivalenceReport apply_equivalence(const std::map<Monomial, Monomial>& f,
                                    const LcmLattice& source) {
    EquivalenceReport rep;
    auto fail = [&](const std::string& why, const Monomial& a, const Monomial& b) {
        rep.valid = false;
        rep.reason = why;
        rep.witness = {a, b};
    };

    std::vector<Monomial> img(static_cast<std::size_t>(source.size()));
    for (int i = 0; i < source.size(); ++i) {
        auto it = f.find(source.element(i));
        if (it == f.end())
            throw Error(ErrorKind::UnmappedMonomial,
                        "map not defined on a lattice element");
        img[static_cast<std::size_t>(i)] = it->second;
    }
    for (int i = 0; i < source.size() && rep.valid; ++i)
        for (int j = i + 1; j < source.size() && rep.valid; ++j)
            if (img[static_cast<std::size_t>(i)] == img[static_cast<std::size_t>(j)])
                fail("map is not injective on lattice elements", source.element(i),
                     source.element(j));
    for (int i = 0; i < source.size() && rep.valid; ++i)
        for (int j = 0; j < source.size() && rep.valid; ++j) {
            if (i == j) continue;
            bool src_leq = source.leq(i, j);
            bool img_leq =
                img[static_cast<std::size_t>(i)].divides(img[static_cast<std::size_t>(j)]);
            if (src_leq != img_leq) {
                fail("divisibility not preserved", source.element(i), source.element(j));
                break;
            }
            bool src_edge = source.gcd_edge(i, j);
            bool img_edge = img[static_cast<std::size_t>(i)].shares_factor(
                img[static_cast<std::size_t>(j)]);
            if (src_edge != img_edge)
                fail("gcd edges not preserved", source.element(i), source.element(j));
        }
    if (!rep.valid) return rep;

    for (int a : source.atom_indices())
        rep.atom_map.emplace_back(source.element(a), img[static_cast<std::size_t>(a)]);

    SaturatedFamily sat = enumerate_saturated(source.generators());
    // image generators in the order induced by the source generator order,
    // so a subset keeps its mask under the bijection
    std::vector<Monomial> image_gens;
    bool image_checkable = true;
    for (const Monomial& g : source.generators().gens()) {
        auto it = f.find(g);
        if (it == f.end()) {
            image_checkable = false;
            break;
        }
        image_gens.push_back(it->second);
    }
    if (image_checkable) {
        try {
            GeneratorSet target = GeneratorSet::from_antichain(
                image_gens, image_gens.empty() ? 0 : image_gens.front().ambient());
            for (Mask s : sat.members) {
                MONRING_ASSERT(is_saturated(s, target),
                               "equivalence image of a saturated set is not saturated");
                rep.sat_map.emplace_back(s, s);
            }
        } catch (const Error&) {
            for (Mask s : sat.members) rep.sat_map.emplace_back(s, s);
        }
    } else {
        for (Mask s : sat.members) rep.sat_map.emplace_back(s, s);
    }
    return rep;
}

} // namespace monring
