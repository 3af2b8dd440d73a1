#include "monring/poincare.hpp"

#include <algorithm>
#include <set>

namespace monring {

namespace {

void require_square_free(const GeneratorSet& m) {
    if (!m.is_square_free())
        throw Error(ErrorKind::NotSquareFree,
                    "operation requires square-free generators");
}

// sum over Sat(M) of m_S (-z)^(c+2) H~(z), with the homology generating
// function supplied per saturated subset
MultiPoly saturated_sum(const GeneratorSet& m, const FieldSpec& field,
                        bool use_intervals) {
    MultiPoly b = MultiPoly::one(m.ambient());
    for (Mask s : enumerate_saturated(m).members) {
        int c = m.component_count(s);
        SimplicialComplex complex = use_intervals
                                        ? interval_order_complex(s, m)
                                        : lcm_complex_componentwise(s, m);
        LaurentGF h = reduced_homology_gf(complex, field);
        b.add_monomial_times_gf(m.lcm_of(s), c + 2, (c % 2 == 0) ? 1 : -1, h);
    }
    MONRING_ASSERT(!b.has_negative_z(), "denominator has a Laurent residue");
    return b;
}

MultiPoly denominator_square_free(const GeneratorSet& m, const FieldSpec& field,
                                  DenominatorPath path) {
    switch (path) {
        case DenominatorPath::Formula:
            return saturated_sum(m, field, false);
        case DenominatorPath::Intervals:
            return saturated_sum(m, field, true);
        case DenominatorPath::Deviations:
            return denominator_via_deviations(m, field);
    }
    throw InternalError("unknown denominator path");
}

} // namespace

Monomial PolarizationResult::map_back(const Monomial& target_elem) const {
    MONRING_ASSERT(target_elem.ambient() == static_cast<int>(target_vars.size()),
                   "polarized monomial has wrong ambient");
    std::vector<int> e(static_cast<std::size_t>(source_ambient), 0);
    for (std::size_t v = 0; v < target_vars.size(); ++v)
        if (target_elem.exponent(static_cast<int>(v)) > 0) {
            auto [i, j] = target_vars[v];
            e[static_cast<std::size_t>(i)] = std::max(e[static_cast<std::size_t>(i)], j);
        }
    return Monomial(std::move(e));
}

PolarizationResult polarize(const GeneratorSet& m) {
    int t = m.ambient();
    std::vector<int> max_exp(static_cast<std::size_t>(t), 0);
    for (const Monomial& g : m.gens())
        for (int i = 0; i < t; ++i)
            max_exp[static_cast<std::size_t>(i)] =
                std::max(max_exp[static_cast<std::size_t>(i)], g.exponent(i));

    std::vector<std::pair<int, int>> target_vars; // ordered by (i, j)
    std::vector<std::vector<int>> var_index(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        for (int j = 1; j <= max_exp[static_cast<std::size_t>(i)]; ++j) {
            var_index[static_cast<std::size_t>(i)].push_back(
                static_cast<int>(target_vars.size()));
            target_vars.emplace_back(i, j);
        }
    int tp = static_cast<int>(target_vars.size());

    auto polarize_one = [&](const Monomial& g) {
        std::vector<int> e(static_cast<std::size_t>(tp), 0);
        for (int i = 0; i < t; ++i)
            for (int j = 1; j <= g.exponent(i); ++j)
                e[static_cast<std::size_t>(
                    var_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)])] = 1;
        return Monomial(std::move(e));
    };

    std::vector<Monomial> polarized;
    std::map<Monomial, Monomial> forward;
    for (const Monomial& g : m.gens()) {
        polarized.push_back(polarize_one(g));
        forward[g] = polarized.back();
    }
    PolarizationResult out{
        GeneratorSet::from_antichain(polarized, tp), t, target_vars,
        std::move(forward), {}, {},
    };

    LcmLattice target_lattice = LcmLattice::build(out.target);
    for (const Monomial& el : target_lattice.elements())
        out.lattice_map[el] = out.map_back(el);
    for (int i = 0; i < m.size(); ++i)
        MONRING_ASSERT(out.lattice_map.at(out.target.gen(i)) == m.gen(i),
                       "polarization does not invert on the generators");
    out.report = apply_equivalence(out.lattice_map, target_lattice);
    MONRING_ASSERT(out.report.valid, "polarization map failed equivalence check");

    // f must land exactly on L_I
    LcmLattice source_lattice = LcmLattice::build(m);
    std::set<Monomial> image;
    for (const auto& [k, v] : out.lattice_map) image.insert(v);
    MONRING_ASSERT(image == std::set<Monomial>(source_lattice.elements().begin(),
                                               source_lattice.elements().end()),
                   "polarization image is not the source lcm-lattice");
    return out;
}

MultiPoly denominator(const GeneratorSet& m, const FieldSpec& field,
                      DenominatorPath path) {
    if (m.is_square_free()) return denominator_square_free(m, field, path);
    PolarizationResult pol = polarize(m);
    MultiPoly inner = denominator_square_free(pol.target, field, path);
    return inner.substituted(pol.lattice_map, m.ambient());
}

MultiPoly denominator_via_intervals(const GeneratorSet& m, const FieldSpec& field) {
    require_square_free(m);
    return saturated_sum(m, field, true);
}

MultiPoly denominator_via_deviations(const GeneratorSet& m, const FieldSpec& field) {
    require_square_free(m);
    LcmLattice lattice = LcmLattice::build(m);
    std::vector<int> connected = lattice.connected_part();

    std::vector<Monomial> mono;
    std::vector<LaurentGF> p;
    for (int idx : connected) {
        Mask restricted = m.restriction(lattice.element(idx));
        LaurentGF h = reduced_homology_gf(lcm_complex(restricted, m), field);
        if (h.is_zero()) continue;
        mono.push_back(lattice.element(idx));
        p.push_back(h.shifted(3));
    }

    // expanding prod (1 - x^alpha p_alpha) modulo squares: only products
    // over pairwise coprime subsets of the connected lattice part survive
    std::size_t n = mono.size();
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (mono[i].shares_factor(mono[j])) {
                adj[i] |= std::uint64_t(1) << j;
                adj[j] |= std::uint64_t(1) << i;
            }

    MultiPoly b = MultiPoly::one(m.ambient());
    auto expand = [&](auto&& self, std::size_t next, std::uint64_t banned,
                      const Monomial& prod, const LaurentGF& gf, int count) -> void {
        if (count > 0) {
            b.add_monomial_times_gf(prod, 0, (count % 2 == 0) ? 1 : -1, gf);
        }
        for (std::size_t i = next; i < n; ++i) {
            if (banned & (std::uint64_t(1) << i)) continue;
            self(self, i + 1, banned | adj[i], prod.times(mono[i]), gf * p[i],
                 count + 1);
        }
    };
    expand(expand, 0, 0, Monomial::unit(m.ambient()), LaurentGF::term(0, 1), 0);
    MONRING_ASSERT(!b.has_negative_z(), "denominator has a Laurent residue");
    return b;
}

DeviationTable squarefree_deviations(const GeneratorSet& m, const FieldSpec& field) {
    require_square_free(m);
    DeviationTable table;
    table.t = m.ambient();
    for (int i = 0; i < m.ambient(); ++i) {
        std::vector<int> e(static_cast<std::size_t>(m.ambient()), 0);
        e[static_cast<std::size_t>(i)] = 1;
        table.eps[{1, Monomial(std::move(e))}] = 1;
    }
    LcmLattice lattice = LcmLattice::build(m);
    for (int idx = 1; idx < lattice.size(); ++idx) {
        const Monomial& alpha = lattice.element(idx);
        Mask restricted = m.restriction(alpha);
        LaurentGF h = reduced_homology_gf(lcm_complex(restricted, m), field);
        if (h.is_zero()) continue;
        table.p[alpha] = h.shifted(3);
        for (auto [e, v] : h.coeffs()) {
            MONRING_ASSERT(e + 3 >= 2 && v > 0, "deviation bookkeeping");
            table.eps[{e + 3, alpha}] = v;
        }
    }
    return table;
}

TruncatedSeries product_representation(const DeviationTable& dev, int dz,
                                       int dalpha) {
    TruncatedSeries series(MultiPoly::one(dev.t), dz, dalpha);
    for (const auto& [key, count] : dev.eps) {
        auto [i, alpha] = key;
        if (i > dz || alpha.degree() > dalpha) continue;
        MultiPoly factor = MultiPoly::one(dev.t);
        factor.add_term(alpha, i, (i % 2 == 1) ? 1 : -1);
        if (i % 2 == 1) {
            for (long r = 0; r < count; ++r) series = series.times(factor);
        } else {
            TruncatedSeries inv = invert_truncated(factor, dz, dalpha);
            for (long r = 0; r < count; ++r) series = series * inv;
        }
    }
    return series;
}

TruncatedSeries poincare_series(const GeneratorSet& m, const FieldSpec& field,
                                int dz, int dalpha) {
    MultiPoly b = denominator(m, field);
    return invert_truncated(b, dz, dalpha)
        .times(MultiPoly::koszul_numerator(m.ambient()));
}

MultiPoly betti_numerator(const GeneratorSet& m, const FieldSpec& field) {
    MultiPoly out = MultiPoly::one(m.ambient());
    LcmLattice lattice = LcmLattice::build(m);
    for (int idx = 1; idx < lattice.size(); ++idx) {
        LaurentGF h = reduced_homology_gf(lattice.open_interval_complex(idx), field);
        out.add_monomial_times_gf(lattice.element(idx), 2, 1, h);
    }
    MONRING_ASSERT(!out.has_negative_z(), "Betti numerator has a Laurent residue");
    return out;
}

bool is_taylor_minimal(const GeneratorSet& m) {
    if (m.size() > 20)
        throw Error(ErrorKind::CapExceeded, "Taylor minimality check over 2^n subsets");
    std::set<Monomial> lcms;
    Mask full = m.full_mask();
    for (Mask s = 0;; ++s) {
        if (!lcms.insert(m.lcm_of(s)).second) return false;
        if (s == full) break;
    }
    return true;
}

MultiPoly taylor_closed_form(const GeneratorSet& m) {
    if (!is_taylor_minimal(m))
        throw Error(ErrorKind::NotTaylorMinimal,
                    "the Taylor complex of this ideal is not minimal");
    MultiPoly b(m.ambient());
    Mask full = m.full_mask();
    for (Mask s = 0;; ++s) {
        int c = m.component_count(s);
        b.add_term(m.lcm_of(s), popcount(s) + c, (c % 2 == 0) ? 1 : -1);
        if (s == full) break;
    }
    return b;
}

bool is_golod(const GeneratorSet& m, const FieldSpec& field) {
    MultiPoly b = denominator(m, field);
    MultiPoly psi = betti_numerator(m, field);
    MultiPoly rhs =
        MultiPoly::one(m.ambient()) - (psi - MultiPoly::one(m.ambient())).z_shifted(1);
    return b == rhs;
}

bool is_pre_golod(const GeneratorSet& n, const FieldSpec& field) {
    LcmLattice lattice = LcmLattice::build(n);
    LaurentGF lhs = reduced_homology_gf(lattice.punctured_complex(), field);
    Monomial top = n.lcm_of(n.full_mask());
    LaurentGF rhs;
    for (Mask s : enumerate_saturated(n).members) {
        if (n.lcm_of(s) != top) continue;
        int c = n.component_count(s);
        LaurentGF h = reduced_homology_gf(interval_order_complex(s, n), field);
        rhs = rhs + h.shifted(c - 1).scaled((c - 1) % 2 == 0 ? 1 : -1);
    }
    return lhs == rhs;
}

bool golod_via_criterion(const GeneratorSet& m, const FieldSpec& field,
                         std::optional<Monomial>* failing) {
    if (failing) failing->reset();
    LcmLattice lattice = LcmLattice::build(m);
    std::set<Mask> checked;
    for (int idx = 1; idx < lattice.size(); ++idx) {
        Mask restricted = m.restriction(lattice.element(idx));
        if (restricted == 0) continue;
        if (!checked.insert(restricted).second) continue;
        if (!is_pre_golod(m.subset(restricted), field)) {
            if (failing) *failing = lattice.element(idx);
            return false;
        }
    }
    return true;
}

DegreeStats degree_stats(const GeneratorSet& m, const FieldSpec& field) {
    DegreeStats st;
    st.n = m.size();
    m.discrete_subsets(&st.g);
    st.deg_z = denominator(m, field).max_z_degree();
    st.complete_intersection = m.is_discrete(m.full_mask());
    MONRING_ASSERT(st.deg_z <= st.n + st.g && st.n + st.g <= 2 * st.n,
                   "degree bound violated");
    return st;
}

} // namespace monring
