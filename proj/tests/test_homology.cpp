#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monring/homology.hpp"
#include "monring/oracle.hpp"
#include "corpus.hpp"

using namespace monring;

namespace {

std::mt19937 rng(55511);

SimplicialComplex random_complex(int n, int generators) {
    std::uniform_int_distribution<FaceMask> pick(0, (FaceMask(1) << n) - 1);
    std::vector<FaceMask> faces;
    for (int i = 0; i < generators; ++i) faces.push_back(pick(rng));
    return SimplicialComplex::from_faces(n, faces);
}

DenseIntMatrix dense(std::vector<std::vector<long>> rows) {
    DenseIntMatrix m(static_cast<int>(rows.size()),
                     rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

SparseIntMatrix sparse_of(const DenseIntMatrix& d) {
    SparseIntMatrix s;
    s.rows = d.rows;
    s.cols.resize(static_cast<std::size_t>(d.cols));
    for (int j = 0; j < d.cols; ++j)
        for (int i = 0; i < d.rows; ++i)
            if (d.at(i, j) != 0)
                s.cols[static_cast<std::size_t>(j)].emplace_back(
                    i, static_cast<int>(d.at(i, j).get_si()));
    return s;
}

DenseIntMatrix random_matrix(int rows, int cols, int lo, int hi) {
    std::uniform_int_distribution<int> val(lo, hi);
    DenseIntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = val(rng);
    return m;
}

long euler_from_faces(const SimplicialComplex& c) {
    long chi = 0;
    for (FaceMask f : c.faces())
        chi += (__builtin_popcountll(f) % 2 == 0) ? -1 : 1; // (-1)^(|f|-1)
    return chi;
}

long euler_from_homology(const LaurentGF& h) {
    long chi = 0;
    for (auto [e, v] : h.coeffs()) chi += (e % 2 == 0 ? 1 : -1) * v;
    return chi;
}

} // namespace

TEST_CASE("rank basics") {
    auto id3 = dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(rank(id3, FieldSpec::rationals()) == 3);
    CHECK(rank(id3, FieldSpec::gf(2)) == 3);
    CHECK(rank(sparse_of(id3), FieldSpec::rationals()) == 3);

    auto ones = dense({{1, 1}, {1, 1}});
    CHECK(rank(ones, FieldSpec::gf(2)) == 1);
    CHECK(rank(ones, FieldSpec::rationals()) == 1);

    auto zero = dense({{0, 0}, {0, 0}});
    CHECK(rank(zero, FieldSpec::rationals()) == 0);
    CHECK(rank(zero, FieldSpec::gf(5)) == 0);

    // rank can drop modulo p
    auto twos = dense({{2}});
    CHECK(rank(twos, FieldSpec::rationals()) == 1);
    CHECK(rank(twos, FieldSpec::gf(2)) == 0);
}

TEST_CASE("sparse and dense ranks agree") {
    for (int trial = 0; trial < 60; ++trial) {
        DenseIntMatrix m = random_matrix(6, 7, -3, 3);
        for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(5)})
            CHECK(rank(m, f) == rank(sparse_of(m), f));
    }
}

TEST_CASE("prime field validation") {
    CHECK_THROWS_AS(FieldSpec::gf(1), Error);
    CHECK_THROWS_AS(FieldSpec::gf(6), Error);
    CHECK_NOTHROW(FieldSpec::gf(7));
}

TEST_CASE("homology of tiny complexes") {
    CHECK(reduced_homology_gf(SimplicialComplex::empty_face_only(0),
                              FieldSpec::rationals()) == LaurentGF::term(-1, 1));
    CHECK(reduced_homology_gf(SimplicialComplex::void_complex(2),
                              FieldSpec::rationals()).is_zero());

    auto s0 = SimplicialComplex::from_faces(2, {0b01, 0b10});
    CHECK(reduced_homology_gf(s0, FieldSpec::rationals()) == LaurentGF::term(0, 1));
    // the augmentation is the all-ones row up to sign
    ChainComplexOverField cc = chain_complex(s0, FieldSpec::rationals());
    REQUIRE(cc.boundary[1].col_count() == 2);
    CHECK(cc.boundary[1].cols[0] == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(cc.boundary[1].cols[1] == std::vector<std::pair<int, int>>{{0, 1}});

    // boundary of the 2-simplex is a circle
    auto circle = SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110});
    CHECK(reduced_homology_gf(circle, FieldSpec::rationals()) == LaurentGF::term(1, 1));
    CHECK(reduced_homology_gf(circle, FieldSpec::gf(2)) == LaurentGF::term(1, 1));
}

TEST_CASE("full simplexes on n >= 1 vertices are acyclic") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(reduced_homology_gf(SimplicialComplex::full_simplex(n),
                                  FieldSpec::rationals()).is_zero());
        CHECK(reduced_homology_gf(SimplicialComplex::full_simplex(n),
                                  FieldSpec::gf(3)).is_zero());
    }
}

TEST_CASE("boundary of boundary vanishes") {
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex c = random_complex(6, 5);
        ChainComplexOverField cc = chain_complex(c, FieldSpec::rationals());
        for (std::size_t d = 2; d < cc.boundary.size(); ++d) {
            if (cc.boundary[d].col_count() == 0) continue;
            SparseIntMatrix square = multiply(cc.boundary[d - 1], cc.boundary[d]);
            for (const auto& col : square.cols) CHECK(col.empty());
        }
    }
}

TEST_CASE("Euler characteristic matches face counts over every field") {
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex c = random_complex(7, 6);
        long chi = euler_from_faces(c);
        for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3)})
            CHECK(euler_from_homology(reduced_homology_gf(c, f)) == chi);
    }
}

TEST_CASE("projective plane: characteristic matters") {
    SimplicialComplex rp2 = monring::testing::projective_plane();
    CHECK(reduced_homology_gf(rp2, FieldSpec::rationals()).is_zero());
    LaurentGF mod2 = reduced_homology_gf(rp2, FieldSpec::gf(2));
    LaurentGF expected = LaurentGF::term(1, 1) + LaurentGF::term(2, 1);
    CHECK(mod2 == expected);
    CHECK(reduced_homology_gf(rp2, FieldSpec::gf(3)).is_zero());

    IntegralHomology snf = integer_snf_homology(rp2);
    CHECK(snf.rational_dimension(1) == 0);
    REQUIRE(snf.groups.count(1) == 1);
    REQUIRE(snf.groups.at(1).torsion.size() == 1);
    CHECK(snf.groups.at(1).torsion[0] == 2);
}

TEST_CASE("integral homology of tiny complexes") {
    auto circle = SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110});
    IntegralHomology snf = integer_snf_homology(circle);
    CHECK(snf.rational_dimension(1) == 1);
    CHECK(snf.groups.at(1).torsion.empty());

    IntegralHomology point = integer_snf_homology(SimplicialComplex::empty_face_only(0));
    CHECK(point.rational_dimension(-1) == 1);
}

TEST_CASE("field dimensions against the Smith normal form oracle") {
    for (int trial = 0; trial < 30; ++trial) {
        SimplicialComplex c = random_complex(6, 5);
        IntegralHomology snf = integer_snf_homology(c);
        LaurentGF rational = reduced_homology_gf(c, FieldSpec::rationals());
        for (int d = -1; d <= c.dimension(); ++d)
            CHECK(rational.coeff(d) == snf.rational_dimension(d));
        for (unsigned long p : {2ul, 3ul, 5ul}) {
            LaurentGF modp = reduced_homology_gf(c, FieldSpec::gf(p));
            for (int d = -1; d <= c.dimension(); ++d) {
                CHECK(modp.coeff(d) == snf.gf_dimension(d, static_cast<long>(p)));
                CHECK(modp.coeff(d) >= rational.coeff(d)); // universal coefficients
            }
        }
    }
}

TEST_CASE("smith normal form invariants") {
    auto m = dense({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    std::vector<mpz_class> d = smith_normal_form(m);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 2);
    CHECK(d[1] == 2);
    CHECK(d[2] == 156);
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
}
