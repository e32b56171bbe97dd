#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qskein/enumerate.hpp"

using namespace qskein;

TEST_CASE("acyclic freeway counts match the published sequence") {
    const long expect[] = {1, 0, 1, 1, 4, 10, 35, 120, 455, 1728};
    for (int n = 0; n <= 7; ++n)
        CHECK(static_cast<long>(enumerate_acyclic(n).size()) == expect[n]);
}

TEST_CASE("acyclic counts n = 8, 9") {
    CHECK(enumerate_acyclic(8).size() == 455);
    CHECK(enumerate_acyclic(9).size() == 1728);
}

TEST_CASE("arity-4 basis: two matchings and two H graphs") {
    auto basis = enumerate_acyclic(4);
    REQUIRE(basis.size() == 4);
    int with_junctions = 0;
    for (const auto& d : basis) {
        CHECK((d.junction_count() == 0 || d.junction_count() == 2));
        with_junctions += d.junction_count() == 2;
    }
    CHECK(with_junctions == 2);
}

TEST_CASE("arity-5 basis: 5 cup-plus-junction and 5 three-junction trees") {
    auto basis = enumerate_acyclic(5);
    REQUIRE(basis.size() == 10);
    int cups = 0, trees = 0;
    for (const auto& d : basis) {
        if (d.junction_count() == 1)
            ++cups;
        else if (d.junction_count() == 3)
            ++trees;
    }
    CHECK(cups == 5);
    CHECK(trees == 5);
}

TEST_CASE("non-positive curvature equals acyclic for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        auto np = enumerate_nonpositive_curvature(n);
        auto ac = enumerate_acyclic(n);
        CHECK(np.diagrams.size() == ac.size());
        std::set<std::string> a, b;
        for (const auto& d : np.diagrams) a.insert(canonical_code(d));
        for (const auto& d : ac) b.insert(canonical_code(d));
        CHECK(a == b);
        CHECK(!np.bound_log.empty());
    }
}

TEST_CASE("non-positive curvature at n = 6 includes the hexagon ring") {
    auto np = enumerate_nonpositive_curvature(6);
    int cyclic = 0;
    for (const auto& d : np.diagrams)
        if (d.junction_count() == 6) ++cyclic;
    CHECK(np.diagrams.size() == 36);
    CHECK(cyclic == 1);
}

TEST_CASE("catalan check") {
    const long expect[] = {1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n) {
        auto [generated, catalan] = catalan_check(n);
        CHECK(generated == expect[n]);
        CHECK(catalan == expect[n]);
    }
    auto [g8, c8] = catalan_check(8);
    CHECK(g8 == c8);
}

TEST_CASE("matchings and the 6-point condition") {
    CHECK(enumerate_matchings(2).size() == 1);
    CHECK(enumerate_matchings(4).size() == 3);
    CHECK(enumerate_matchings(6).size() == 15);
    CHECK(sixpoint_filter(enumerate_matchings(2)).size() == 1);
    CHECK(sixpoint_filter(enumerate_matchings(4)).size() == 3);

    auto ms = enumerate_matchings(6);
    auto ok = sixpoint_filter(ms);
    CHECK(ok.size() == 14);
    // the unique violator pairs 1<->4, 2<->5, 3<->6
    Matching violator = {3, 4, 5, 0, 1, 2};
    CHECK(!satisfies_sixpoint(violator));
}

TEST_CASE("chord diagrams") {
    Matching two_disjoint = {1, 0, 3, 2};
    Diagram d = matching_to_freeway(two_disjoint);
    CHECK(d.vertex_count() == 4);  // endpoints only
    CHECK(freeway_to_matching(d) == two_disjoint);

    Matching crossing = {2, 3, 0, 1};
    Diagram x = matching_to_freeway(crossing);
    CHECK(x.crossing_count() == 1);
    CHECK(freeway_to_matching(x) == crossing);
}

TEST_CASE("chord round trip on all 6-point matchings up to 2n = 10") {
    for (int n2 = 2; n2 <= 10; n2 += 2) {
        for (const Matching& m : sixpoint_filter(enumerate_matchings(n2))) {
            Diagram d = matching_to_freeway(m);
            CHECK(freeway_to_matching(d) == m);
        }
    }
}

TEST_CASE("chord image characterization for 2n <= 10") {
    // 6-point matchings map injectively onto tetravalent diagrams with all
    // interior faces >= 4 sides; violators produce a small interior face
    for (int n2 = 2; n2 <= 10; n2 += 2) {
        std::set<std::string> image;
        for (const Matching& m : enumerate_matchings(n2)) {
            Diagram d = matching_to_freeway(m);
            bool small_face = false;
            for (const Face& f : faces(d))
                if (!f.touches_boundary && f.sides < 4) small_face = true;
            CHECK(small_face == !satisfies_sixpoint(m));
            if (!small_face) image.insert(canonical_code(d));
        }
        CHECK(image.size() == sixpoint_filter(enumerate_matchings(n2)).size());
    }
}

TEST_CASE("berele traces from the algorithm") {
    // (1<->2)(3<->4): insert, delete, insert, delete
    UpDownTableau t1 = berele({1, 0, 3, 2});
    REQUIRE(t1.shapes.size() == 5);
    CHECK(t1.shapes[0] == Shape{});
    CHECK(t1.shapes[1] == Shape{1});
    CHECK(t1.shapes[2] == Shape{});
    CHECK(t1.shapes[3] == Shape{1});
    CHECK(t1.shapes[4] == Shape{});

    // (1<->3)(2<->4): column insertion stacks the second entry below
    UpDownTableau t2 = berele({2, 3, 0, 1});
    REQUIRE(t2.shapes.size() == 5);
    CHECK(t2.shapes[1] == Shape{1});
    CHECK(t2.shapes[2] == Shape{1, 1});
    CHECK(t2.shapes[3] == Shape{1});
    CHECK(t2.shapes[4] == Shape{});
    CHECK(max_rows(t2) == 2);

    // the violator reaches three rows
    UpDownTableau t3 = berele({3, 4, 5, 0, 1, 2});
    CHECK(max_rows(t3) == 3);
}

TEST_CASE("berele is a bijection onto up-down tableaux") {
    for (int n2 = 2; n2 <= 8; n2 += 2) {
        auto ms = enumerate_matchings(n2);
        std::set<std::vector<Shape>> images;
        for (const Matching& m : ms) {
            UpDownTableau t = berele(m);
            REQUIRE(static_cast<int>(t.shapes.size()) == n2 + 1);
            CHECK(t.shapes.front().empty());
            CHECK(t.shapes.back().empty());
            images.insert(t.shapes);
        }
        CHECK(images.size() == ms.size());  // injective
        CHECK(count_up_down_tableaux(n2) ==
              static_cast<long>(ms.size()));  // same count as all UDTs
    }
}

TEST_CASE("two-row tableaux characterize the 6-point condition") {
    for (int n2 = 2; n2 <= 10; n2 += 2)
        for (const Matching& m : enumerate_matchings(n2))
            CHECK((max_rows(berele(m)) <= 2) == satisfies_sixpoint(m));
}

TEST_CASE("C2 lattice paths") {
    CHECK(count_c2_lattice_paths(2) == 1);
    CHECK(count_c2_lattice_paths(4) == 3);
    CHECK(count_c2_lattice_paths(6) == 14);
    // equality with 6-point matching counts
    for (int n2 = 2; n2 <= 12; n2 += 2)
        CHECK(count_c2_lattice_paths(n2) ==
              static_cast<long>(
                  sixpoint_filter(enumerate_matchings(n2)).size()));
}
