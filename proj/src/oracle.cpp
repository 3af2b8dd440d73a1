#include "monring/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace monring {

namespace {

bool in_ideal(const Monomial& beta, const GeneratorSet& m) {
    for (const Monomial& g : m.gens())
        if (g.divides(beta)) return true;
    return false;
}

// nonzero beta <= alpha with x^beta not in I, in lexicographic order
std::vector<Monomial> allowed_parts(const GeneratorSet& m, const Monomial& alpha) {
    std::vector<Monomial> out;
    int t = alpha.ambient();
    std::vector<int> e(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == t) {
            Monomial beta(e);
            if (beta.degree() > 0 && !in_ideal(beta, m)) out.push_back(beta);
            return;
        }
        for (int v = 0; v <= alpha.exponent(i); ++v) {
            e[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
        e[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0);
    return out;
}

struct TupleKeyHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

BarStrand bar_strand(const GeneratorSet& m, const Monomial& alpha,
                     const BarLimits& limits) {
    MONRING_ASSERT(alpha.ambient() == m.ambient(), "strand multidegree ambient");
    int total = alpha.degree();
    BarStrand strand;
    strand.dims.assign(static_cast<std::size_t>(total) + 1, 0);
    strand.boundaries.resize(static_cast<std::size_t>(total) + 1);
    if (total == 0) {
        strand.dims[0] = 1; // the empty tuple
        return strand;
    }

    std::vector<Monomial> parts = allowed_parts(m, alpha);
    std::map<Monomial, int> part_index;
    for (std::size_t i = 0; i < parts.size(); ++i)
        part_index[parts[i]] = static_cast<int>(i);

    // tuples[r] lists the length-r tuples in lexicographic part order
    std::vector<std::vector<std::vector<int>>> tuples(
        static_cast<std::size_t>(total) + 1);
    std::size_t generated = 0;
    std::vector<int> cur;
    std::vector<int> remaining(alpha.exponents());
    auto fits = [&](const Monomial& p) {
        for (int i = 0; i < p.ambient(); ++i)
            if (p.exponent(i) > remaining[static_cast<std::size_t>(i)]) return false;
        return true;
    };
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            tuples[cur.size()].push_back(cur);
            if (++generated > limits.max_strand_tuples)
                throw Error(ErrorKind::CapExceeded,
                            "bar strand exceeds the tuple budget");
            return;
        }
        for (std::size_t pi = 0; pi < parts.size(); ++pi) {
            const Monomial& p = parts[pi];
            if (p.degree() > left || !fits(p)) continue;
            for (int i = 0; i < p.ambient(); ++i)
                remaining[static_cast<std::size_t>(i)] -= p.exponent(i);
            cur.push_back(static_cast<int>(pi));
            self(self, left - p.degree());
            cur.pop_back();
            for (int i = 0; i < p.ambient(); ++i)
                remaining[static_cast<std::size_t>(i)] += p.exponent(i);
        }
    };
    rec(rec, total);

    for (std::size_t r = 0; r <= static_cast<std::size_t>(total); ++r)
        strand.dims[r] = tuples[r].size();

    // boundaries: merge adjacent entries; a merge landing in the ideal is
    // dropped; signs alternate over the merge position
    std::unordered_map<std::vector<int>, int, TupleKeyHash> index_below;
    for (std::size_t r = 2; r <= static_cast<std::size_t>(total); ++r) {
        const auto& below = tuples[r - 1];
        const auto& here = tuples[r];
        if (here.empty()) continue;
        index_below.clear();
        index_below.reserve(below.size() * 2);
        for (std::size_t i = 0; i < below.size(); ++i)
            index_below[below[i]] = static_cast<int>(i);
        SparseIntMatrix& b = strand.boundaries[r];
        b.rows = static_cast<int>(below.size());
        b.cols.resize(here.size());
        std::vector<int> merged;
        for (std::size_t j = 0; j < here.size(); ++j) {
            const std::vector<int>& tup = here[j];
            std::map<int, int> entries;
            for (std::size_t pos = 0; pos + 1 < tup.size(); ++pos) {
                Monomial prod = parts[static_cast<std::size_t>(tup[pos])].times(
                    parts[static_cast<std::size_t>(tup[pos + 1])]);
                if (in_ideal(prod, m)) continue;
                auto pit = part_index.find(prod);
                MONRING_ASSERT(pit != part_index.end(), "merged part missing");
                merged.assign(tup.begin(), tup.end());
                merged[pos] = pit->second;
                merged.erase(merged.begin() + static_cast<long>(pos) + 1);
                auto it = index_below.find(merged);
                MONRING_ASSERT(it != index_below.end(), "merged tuple missing");
                entries[it->second] += (pos % 2 == 0) ? -1 : 1;
            }
            for (auto [row, val] : entries)
                if (val != 0) b.cols[j].emplace_back(row, val);
        }
    }
    return strand;
}

std::map<int, long> bar_tor_dims(const GeneratorSet& m, const FieldSpec& field,
                                 const Monomial& alpha, const BarLimits& limits) {
    BarStrand strand = bar_strand(m, alpha, limits);
    std::map<int, long> dims;
    if (alpha.degree() == 0) {
        dims[0] = 1;
        return dims;
    }
    std::vector<long> ranks(strand.dims.size() + 1, 0);
    for (std::size_t r = 2; r < strand.dims.size(); ++r)
        ranks[r] = rank(strand.boundaries[r], field);
    for (std::size_t r = 1; r < strand.dims.size(); ++r) {
        long h = static_cast<long>(strand.dims[r]) - ranks[r] - ranks[r + 1];
        MONRING_ASSERT(h >= 0, "negative Tor dimension");
        if (h) dims[static_cast<int>(r)] = h;
    }
    return dims;
}

TruncatedSeries oracle_poincare_series(const GeneratorSet& m, const FieldSpec& field,
                                       int dz, int dalpha, const BarLimits& limits) {
    MultiPoly p = MultiPoly::one(m.ambient());
    int t = m.ambient();
    std::vector<int> alpha(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, int i, int budget) -> void {
        if (i == t) {
            Monomial a(alpha);
            if (a.degree() == 0) return;
            for (auto [deg, dim] : bar_tor_dims(m, field, a, limits))
                if (deg <= dz) p.add_term(alpha, deg, dim);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            alpha[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, budget - v);
        }
        alpha[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, dalpha);
    return TruncatedSeries(p, dz, dalpha);
}

MultiPoly taylor_betti_dims(const GeneratorSet& m, const FieldSpec& field) {
    int n = m.size();
    if (n > 20)
        throw Error(ErrorKind::CapExceeded, "Taylor complex over 2^n subsets");
    // group subsets by the multidegree of their lcm
    std::map<Monomial, std::vector<std::vector<Mask>>> by_alpha;
    Mask full = m.full_mask();
    for (Mask s = 0;; ++s) {
        Monomial lcm = m.lcm_of(s);
        auto& buckets = by_alpha[lcm];
        if (buckets.empty()) buckets.resize(static_cast<std::size_t>(n) + 1);
        buckets[static_cast<std::size_t>(popcount(s))].push_back(s);
        if (s == full) break;
    }

    MultiPoly out(m.ambient());
    for (const auto& [alpha, buckets] : by_alpha) {
        // reduced Taylor differential: the entry for dropping s from S
        // survives exactly when m_S = m_{S minus s}
        std::vector<long> ranks(buckets.size() + 1, 0);
        for (std::size_t d = 1; d < buckets.size(); ++d) {
            const auto& here = buckets[d];
            const auto& below = buckets[d - 1];
            if (here.empty() || below.empty()) continue;
            std::map<Mask, int> below_index;
            for (std::size_t i = 0; i < below.size(); ++i)
                below_index[below[i]] = static_cast<int>(i);
            SparseIntMatrix b;
            b.rows = static_cast<int>(below.size());
            b.cols.resize(here.size());
            for (std::size_t j = 0; j < here.size(); ++j) {
                Mask s = here[j];
                int position = 0; // 1-based index of the dropped generator in S
                for (Mask rest = s; rest; rest &= rest - 1) {
                    ++position;
                    Mask child = s & ~(rest & -rest);
                    if (m.lcm_of(child) != alpha) continue; // coefficient in the maximal ideal
                    auto it = below_index.find(child);
                    MONRING_ASSERT(it != below_index.end(), "Taylor face missing");
                    b.cols[j].emplace_back(it->second, position % 2 == 1 ? 1 : -1);
                }
                std::sort(b.cols[j].begin(), b.cols[j].end());
            }
            ranks[d] = rank(b, field);
        }
        for (std::size_t d = 0; d < buckets.size(); ++d) {
            long h = static_cast<long>(buckets[d].size()) - ranks[d] - ranks[d + 1];
            MONRING_ASSERT(h >= 0, "negative Taylor Betti number");
            if (h) out.add_term(alpha, static_cast<int>(d), h);
        }
    }
    return out;
}

long IntegralHomology::gf_dimension(int degree, const mpz_class& p) const {
    long dim = 0;
    auto it = groups.find(degree);
    if (it != groups.end()) {
        dim += it->second.free_rank;
        for (const mpz_class& d : it->second.torsion)
            if (d % p == 0) ++dim;
    }
    auto below = groups.find(degree - 1);
    if (below != groups.end())
        for (const mpz_class& d : below->second.torsion)
            if (d % p == 0) ++dim;
    return dim;
}

long IntegralHomology::rational_dimension(int degree) const {
    auto it = groups.find(degree);
    return it == groups.end() ? 0 : it->second.free_rank;
}

IntegralHomology integer_snf_homology(const SimplicialComplex& delta) {
    IntegralHomology out;
    if (delta.is_void()) return out;
    ChainComplexOverField cc = chain_complex(delta, FieldSpec::rationals());
    std::vector<std::vector<mpz_class>> factors(cc.basis.size() + 1);
    for (std::size_t d = 1; d < cc.basis.size(); ++d)
        factors[d] = smith_normal_form(to_dense(cc.boundary[d]));
    for (std::size_t d = 0; d < cc.basis.size(); ++d) {
        IntegralHomology::Group g;
        long rank_here = static_cast<long>(factors[d].size());
        long rank_above = static_cast<long>(factors[d + 1].size());
        g.free_rank = static_cast<long>(cc.basis[d].size()) - rank_here - rank_above;
        MONRING_ASSERT(g.free_rank >= 0, "negative free rank");
        for (const mpz_class& f : factors[d + 1])
            if (f > 1) g.torsion.push_back(f);
        if (g.free_rank != 0 || !g.torsion.empty())
            out.groups[static_cast<int>(d) - 1] = g;
    }
    return out;
}

IdentityReport verify_main_identity(const GeneratorSet& m, const FieldSpec& field,
                                    int dz, int dalpha,
                                    const MultiPoly* denominator_override,
                                    const BarLimits& limits) {
    MultiPoly b = denominator_override ? *denominator_override
                                       : denominator(m, field);
    TruncatedSeries series = oracle_poincare_series(m, field, dz, dalpha, limits);
    MultiPoly product = (series.poly() * b).truncated(dz, dalpha);
    MultiPoly expected = MultiPoly::koszul_numerator(m.ambient()).truncated(dz, dalpha);

    IdentityReport report;
    MultiPoly diff = product - expected;
    for (const auto& [key, coeff] : diff.terms()) {
        report.ok = false;
        if (report.discrepancies.size() < 8)
            report.discrepancies.push_back({key.alpha, key.z,
                                            product.coeff(key.alpha, key.z),
                                            expected.coeff(key.alpha, key.z)});
    }
    return report;
}

} // namespace monring
