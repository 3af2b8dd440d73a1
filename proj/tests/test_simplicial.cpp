#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monring/lattice.hpp"
#include "monring/simplicial.hpp"

using namespace monring;

namespace {

std::mt19937 rng(987123);

GeneratorSet gens(int t, std::vector<std::vector<int>> es) {
    std::vector<Monomial> ms;
    for (auto& e : es) ms.emplace_back(std::move(e));
    return GeneratorSet::normalize(ms, t);
}

SimplicialComplex random_complex(int n, int generators) {
    std::uniform_int_distribution<FaceMask> pick(0, (FaceMask(1) << n) - 1);
    std::vector<FaceMask> faces;
    for (int i = 0; i < generators; ++i) faces.push_back(pick(rng));
    return SimplicialComplex::from_faces(n, faces);
}

// random square-free generator sets for the saturation-vs-faces identity
GeneratorSet random_squarefree(int t, int n) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::vector<Monomial> raw;
    for (int k = 0; k < n; ++k) {
        std::vector<int> e(static_cast<std::size_t>(t));
        int deg = 0;
        for (int i = 0; i < t; ++i) deg += (e[static_cast<std::size_t>(i)] = coin(rng) == 0 ? 1 : 0);
        if (deg < 2) {
            e[static_cast<std::size_t>(k % t)] = 1;
            e[static_cast<std::size_t>((k + 1) % t)] = 1;
        }
        raw.emplace_back(std::move(e));
    }
    return GeneratorSet::normalize(raw, t);
}

} // namespace

TEST_CASE("void and empty-face complexes are distinct") {
    SimplicialComplex v = SimplicialComplex::void_complex(3);
    SimplicialComplex e = SimplicialComplex::empty_face_only(3);
    CHECK(v.is_void());
    CHECK_FALSE(e.is_void());
    CHECK(v.dimension() == -2);
    CHECK(e.dimension() == -1);
    CHECK(v != e);
}

TEST_CASE("downward closure") {
    auto c = SimplicialComplex::from_faces(3, {0b111});
    CHECK(c.face_count() == 8);
    CHECK(c.has_face(0));
    CHECK(c.has_face(0b101));
}

TEST_CASE("lcm complex of a subset") {
    GeneratorSet one = gens(2, {{1, 1}});
    CHECK(lcm_complex(0b1, one) == SimplicialComplex::empty_face_only(1));

    GeneratorSet two = gens(3, {{1, 1, 0}, {0, 1, 1}});
    SimplicialComplex c = lcm_complex(0b11, two);
    CHECK(c.faces() == std::vector<FaceMask>{0, 1, 2}); // two isolated points

    GeneratorSet tri = gens(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    SimplicialComplex d = lcm_complex(0b111, tri);
    CHECK(d.faces() == std::vector<FaceMask>{0, 1, 2, 4}); // three isolated points
}

TEST_CASE("componentwise lcm complex") {
    GeneratorSet two = gens(3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(lcm_complex_componentwise(0b11, two) == lcm_complex(0b11, two));

    GeneratorSet co = gens(4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    SimplicialComplex c = lcm_complex_componentwise(0b11, co);
    CHECK(c.faces() == std::vector<FaceMask>{0, 1, 2}); // two points, no edge

    GeneratorSet path = gens(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
    SimplicialComplex d = lcm_complex_componentwise(0b111, path);
    // boundary of the 2-simplex: all proper subsets of the three generators
    CHECK(d.faces() == std::vector<FaceMask>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("connected subsets give the same complex on both predicates") {
    GeneratorSet path = gens(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}});
    for (Mask s = 1; s <= path.full_mask(); ++s)
        if (path.component_count(s) == 1)
            CHECK(lcm_complex(s, path) == lcm_complex_componentwise(s, path));
}

TEST_CASE("Alexander duals") {
    CHECK(alexander_dual(SimplicialComplex::empty_face_only(1)) ==
          SimplicialComplex::empty_face_only(1));
    CHECK(alexander_dual(SimplicialComplex::full_simplex(3)).is_void());
    // S^0 on two vertices
    auto s0 = SimplicialComplex::from_faces(2, {0b01, 0b10});
    CHECK(alexander_dual(s0) == SimplicialComplex::empty_face_only(2));
    // dual is involutive on a fixed vertex set
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex c = random_complex(5, 4);
        CHECK(alexander_dual(alexander_dual(c)) == c);
    }
}

TEST_CASE("joins") {
    auto s0 = SimplicialComplex::from_faces(2, {0b01, 0b10});
    auto square = join(s0, s0);
    CHECK(square.vertex_count() == 4);
    CHECK(square.faces_of_dimension(1).size() == 4);

    auto point = SimplicialComplex::from_faces(1, {0b1});
    auto cone = join(point, s0);
    CHECK(cone.faces_of_dimension(1).size() == 2);

    // the empty-face complex on no vertices is the join identity
    auto unit = SimplicialComplex::empty_face_only(0);
    CHECK(join(unit, s0) == s0);

    CHECK(join(SimplicialComplex::void_complex(1), s0).is_void());

    // joined vertex count beyond the mask width
    auto wide = SimplicialComplex::void_complex(32);
    CHECK_THROWS_AS(join(wide, wide), Error);
}

TEST_CASE("dual join") {
    auto e1 = SimplicialComplex::empty_face_only(1);
    auto s0 = dual_join(e1, e1);
    CHECK(s0.faces() == std::vector<FaceMask>{0, 1, 2});

    auto full = SimplicialComplex::full_simplex(2);
    auto any = random_complex(3, 3);
    CHECK(dual_join(full, any) == SimplicialComplex::full_simplex(5));

    // predicate route agrees with the dual of the join of the duals
    for (int trial = 0; trial < 60; ++trial) {
        SimplicialComplex a = random_complex(3, 3);
        SimplicialComplex b = random_complex(3, 3);
        CHECK(dual_join(a, b) == alexander_dual(join(alexander_dual(a), alexander_dual(b))));
    }
}

TEST_CASE("componentwise complex is the dual join over components") {
    auto check_ideal = [](const GeneratorSet& m) {
        for (Mask s = 1; s <= m.full_mask(); ++s) {
            std::vector<Mask> comps = m.connected_components(s);
            // iterated dual join, components ordered by lowest member, which
            // matches ascending vertex order inside the mask
            std::sort(comps.begin(), comps.end(),
                      [](Mask a, Mask b) { return lowest_bit(a) < lowest_bit(b); });
            SimplicialComplex acc = lcm_complex(comps[0], m);
            for (std::size_t i = 1; i < comps.size(); ++i)
                acc = dual_join(acc, lcm_complex(comps[i], m));
            // vertex order: dual join concatenates, so relabel faces of the
            // componentwise complex into the concatenated order
            std::vector<int> concat;
            for (Mask c : comps)
                for (Mask rest = c; rest; rest &= rest - 1) concat.push_back(lowest_bit(rest));
            std::vector<int> ascending;
            for (Mask rest = s; rest; rest &= rest - 1) ascending.push_back(lowest_bit(rest));
            SimplicialComplex direct = lcm_complex_componentwise(s, m);
            std::vector<FaceMask> relabeled;
            for (FaceMask f : direct.faces()) {
                FaceMask g = 0;
                for (std::size_t v = 0; v < ascending.size(); ++v)
                    if (f & (FaceMask(1) << v)) {
                        auto pos = std::find(concat.begin(), concat.end(),
                                             ascending[v]);
                        g |= FaceMask(1) << (pos - concat.begin());
                    }
                relabeled.push_back(g);
            }
            std::sort(relabeled.begin(), relabeled.end());
            CHECK(relabeled == acc.faces());
        }
    };
    check_ideal(gens(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
    check_ideal(gens(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    check_ideal(gens(5, {{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}}));
}

TEST_CASE("faces are exactly the subsets whose saturation inside S is proper") {
    auto check_ideal = [](const GeneratorSet& m) {
        for (Mask s = 1; s <= m.full_mask(); ++s) {
            GeneratorSet sub = m.subset(s);
            SimplicialComplex direct = lcm_complex_componentwise(s, m);
            SimplicialComplex via_saturation = SimplicialComplex::from_predicate(
                sub.size(), [&](FaceMask f) {
                    return saturate(static_cast<Mask>(f), sub) != sub.full_mask();
                });
            CHECK(direct == via_saturation);
        }
    };
    check_ideal(gens(4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
    check_ideal(gens(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    check_ideal(gens(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    for (int trial = 0; trial < 25; ++trial) check_ideal(random_squarefree(5, 4));
    for (int trial = 0; trial < 10; ++trial) check_ideal(random_squarefree(6, 5));
}

TEST_CASE("order complex of small posets") {
    // chain 0 < 1 < 2: order complex is the full simplex
    auto chain = order_complex(3, [](int a, int b) { return a < b; });
    CHECK(chain == SimplicialComplex::full_simplex(3));
    // antichain: no edges
    auto anti = order_complex(3, [](int, int) { return false; });
    CHECK(anti.faces() == std::vector<FaceMask>{0, 1, 2, 4});
    // empty poset
    CHECK(order_complex(0, [](int, int) { return false; }) ==
          SimplicialComplex::empty_face_only(0));
}
