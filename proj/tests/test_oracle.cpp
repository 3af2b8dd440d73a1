#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monring/oracle.hpp"
#include "corpus.hpp"

using namespace monring;
using monring::testing::corpus_ideal;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::gf(2);

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

} // namespace

TEST_CASE("bar strand basics for k[x,y]/(xy)") {
    GeneratorSet m = corpus_ideal("xy");

    // alpha = (1,1): basis x|y and y|x, the merge dies in the ideal
    auto dims11 = bar_tor_dims(m, Q, mono({1, 1}));
    CHECK(dims11 == std::map<int, long>{{2, 2}});

    // alpha = e_1: the variable itself
    auto dims_e = bar_tor_dims(m, Q, mono({1, 0}));
    CHECK(dims_e == std::map<int, long>{{1, 1}});

    // alpha = (2,0): x|x cancels x^2 exactly
    auto dims20 = bar_tor_dims(m, Q, mono({2, 0}));
    CHECK(dims20.empty());

    BarStrand strand = bar_strand(m, mono({2, 0}));
    CHECK(strand.dims[1] == 1);
    CHECK(strand.dims[2] == 1);
}

TEST_CASE("bar differential squares to zero") {
    for (const std::string name : {"xy", "triangle", "xsq_xy", "two_coprime"}) {
        GeneratorSet m = corpus_ideal(name);
        int t = m.ambient();
        std::vector<int> alpha(static_cast<std::size_t>(t), 0);
        auto rec = [&](auto&& self, int i, int budget) -> void {
            if (i == t) {
                BarStrand strand = bar_strand(m, Monomial(alpha));
                for (std::size_t r = 3; r < strand.boundaries.size(); ++r) {
                    if (strand.boundaries[r].col_count() == 0 ||
                        strand.boundaries[r - 1].col_count() == 0)
                        continue;
                    SparseIntMatrix square =
                        multiply(strand.boundaries[r - 1], strand.boundaries[r]);
                    for (const auto& col : square.cols) CHECK(col.empty());
                }
                return;
            }
            for (int v = 0; v <= budget; ++v) {
                alpha[static_cast<std::size_t>(i)] = v;
                self(self, i + 1, budget - v);
            }
            alpha[static_cast<std::size_t>(i)] = 0;
        };
        rec(rec, 0, 4);
    }
}

TEST_CASE("tor vanishes below the multidegree diagonal") {
    GeneratorSet m = corpus_ideal("triangle");
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                Monomial alpha = mono({a, b, c});
                if (alpha.degree() == 0) continue;
                for (auto [i, dim] : bar_tor_dims(m, Q, alpha)) {
                    CHECK(i <= alpha.degree());
                    CHECK(dim > 0);
                }
            }
}

TEST_CASE("strand cap") {
    GeneratorSet m = corpus_ideal("xy");
    BarLimits tiny;
    tiny.max_strand_tuples = 3;
    CHECK_THROWS_AS(bar_strand(m, mono({2, 2}), tiny), Error);
}

TEST_CASE("taylor betti numbers") {
    // triangle: 1 + (xy+xz+yz) z + 2xyz z^2, the lattice-interval values
    GeneratorSet tri = corpus_ideal("triangle");
    MultiPoly taylor = taylor_betti_dims(tri, Q);
    CHECK(taylor == betti_numerator(tri, Q));
    CHECK(taylor.coeff({1, 1, 1}, 2) == 2);

    // Taylor-minimal: reduced differential vanishes, Betti = face counts
    GeneratorSet p2 = corpus_ideal("path2");
    MultiPoly b2 = taylor_betti_dims(p2, Q);
    CHECK(b2.coeff({0, 0, 0}, 0) == 1);
    CHECK(b2.coeff({1, 1, 0}, 1) == 1);
    CHECK(b2.coeff({0, 1, 1}, 1) == 1);
    CHECK(b2.coeff({1, 1, 1}, 2) == 1);

    GeneratorSet one = corpus_ideal("xyz");
    MultiPoly b1 = taylor_betti_dims(one, Q);
    CHECK(b1 == betti_numerator(one, Q));
    CHECK(b1.terms().size() == 2); // 1 + m z
}

TEST_CASE("symbolic taylor differential squares to zero") {
    // d y_S = sum over s in S of (-1)^(j-1) (m_S / m_{S-s}) y_{S-s}, with j
    // the position of s in S; compose two deletions and check cancellation
    for (const std::string name : {"triangle", "xsq_xy", "path3", "mixed_deg"}) {
        GeneratorSet m = corpus_ideal(name);
        auto quotient = [&](const Monomial& a, const Monomial& b) {
            std::vector<int> e;
            for (int i = 0; i < a.ambient(); ++i) e.push_back(a.exponent(i) - b.exponent(i));
            return Monomial(std::move(e));
        };
        auto sign_of = [&](Mask s, int gen) {
            int j = 0;
            for (Mask c = s; c; c &= c - 1) {
                ++j;
                if (lowest_bit(c) == gen) break;
            }
            return j % 2 == 1 ? 1 : -1;
        };
        for (Mask s = 0; s <= m.full_mask(); ++s) {
            if (popcount(s) < 2) continue;
            // coefficient sums per target subset, as monomial -> integer
            std::map<std::pair<Mask, Monomial>, int> acc;
            Monomial ms = m.lcm_of(s);
            for (Mask c1 = s; c1; c1 &= c1 - 1) {
                int g1 = lowest_bit(c1);
                Mask mid = s & ~(Mask(1) << g1);
                Monomial mmid = m.lcm_of(mid);
                Monomial q1 = quotient(ms, mmid);
                int s1 = sign_of(s, g1);
                for (Mask c2 = mid; c2; c2 &= c2 - 1) {
                    int g2 = lowest_bit(c2);
                    Mask target = mid & ~(Mask(1) << g2);
                    Monomial q2 = quotient(mmid, m.lcm_of(target));
                    acc[{target, q1.times(q2)}] += s1 * sign_of(mid, g2);
                }
            }
            for (const auto& [key, total] : acc) CHECK(total == 0);
        }
    }
}

TEST_CASE("taylor betti equals the lattice formula on the corpus") {
    for (const auto& c : monring::testing::corpus()) {
        GeneratorSet m = corpus_ideal(c.name);
        CAPTURE(c.name);
        CHECK(taylor_betti_dims(m, Q) == betti_numerator(m, Q));
        CHECK(taylor_betti_dims(m, F2) == betti_numerator(m, F2));
    }
}

TEST_CASE("integral homology oracle") {
    auto circle = SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110});
    IntegralHomology h = integer_snf_homology(circle);
    CHECK(h.rational_dimension(1) == 1);
    CHECK(h.groups.at(1).torsion.empty());

    IntegralHomology rp2 = integer_snf_homology(monring::testing::projective_plane());
    REQUIRE(rp2.groups.count(1) == 1);
    CHECK(rp2.groups.at(1).free_rank == 0);
    REQUIRE(rp2.groups.at(1).torsion.size() == 1);
    CHECK(rp2.groups.at(1).torsion[0] == 2);
    CHECK(rp2.groups.count(2) == 0);

    IntegralHomology empt = integer_snf_homology(SimplicialComplex::empty_face_only(0));
    CHECK(empt.rational_dimension(-1) == 1);
}

TEST_CASE("main identity via the bar oracle") {
    GeneratorSet xy = corpus_ideal("xy");
    IdentityReport r = verify_main_identity(xy, Q, 6, 6);
    CHECK(r.ok);
    CHECK(r.discrepancies.empty());

    GeneratorSet tri = corpus_ideal("triangle");
    CHECK(verify_main_identity(tri, Q, 5, 5).ok);
    CHECK(verify_main_identity(tri, F2, 5, 5).ok);
}

TEST_CASE("mutation test: a perturbed denominator is caught") {
    GeneratorSet xy = corpus_ideal("xy");
    MultiPoly bad = denominator(xy, Q);
    bad.add_term({1, 1}, 2, 1); // flips -xy z^2 to 0
    IdentityReport r = verify_main_identity(xy, Q, 5, 5, &bad);
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.discrepancies.empty());
    CHECK(r.discrepancies.front().z == 2);
    CHECK(r.discrepancies.front().alpha == std::vector<int>{1, 1});
}
