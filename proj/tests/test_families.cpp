#include <doctest.h>

#include <set>

#include "itdom/families.hpp"

using namespace itdom;

TEST_SUITE("families") {

TEST_CASE("paths and cycles") {
    Digraph p3 = directed_path(3);
    CHECK(p3.arcs() == std::vector<Arc>{{0, 1}, {1, 2}});
    CHECK(directed_path(1).arc_count() == 0);
    CHECK_THROWS_AS(directed_path(0), std::invalid_argument);

    Digraph c3 = directed_cycle(3);
    CHECK(c3.arc_count() == 3);
    for (int v = 0; v < 3; ++v) {
        CHECK(c3.out_degree(v) == 1);
        CHECK(c3.in_degree(v) == 1);
    }
    CHECK_THROWS_AS(directed_cycle(1), std::invalid_argument);
}

TEST_CASE("complete, bipartite, empty") {
    CHECK(complete_digraph(4).arc_count() == 12);
    CHECK(complete_bipartite_digraph(2, 3).arc_count() == 12);
    CHECK(empty_digraph(5).arc_count() == 0);
    CHECK_THROWS_AS(complete_bipartite_digraph(0, 3), std::invalid_argument);
}

TEST_CASE("associated digraph") {
    CHECK(associated_digraph({{0, 1}, {1, 2}, {0, 2}}, 3) == complete_digraph(3));
    CHECK(associated_digraph({{0, 1}}, 2).arc_count() == 2);
    CHECK(associated_digraph({}, 3) == empty_digraph(3));
    CHECK_THROWS_AS(associated_digraph({{1, 1}}, 3), std::invalid_argument);
    // associated K_{m,n} is the complete bipartite digraph, arc for arc
    std::vector<std::pair<int, int>> kmn_edges;
    for (int x = 0; x < 2; ++x)
        for (int y = 2; y < 5; ++y) kmn_edges.emplace_back(x, y);
    CHECK(associated_digraph(kmn_edges, 5) == complete_bipartite_digraph(2, 3));
}

TEST_CASE("joins") {
    Digraph p2 = directed_path(2);
    CHECK(join_oneway(p2, p2).arc_count() == 1 + 1 + 4);
    CHECK(join_twoway(empty_digraph(1), empty_digraph(1)) == complete_digraph(2));
    // join arcs run from the G block into the shifted H block
    Digraph j = join_oneway(directed_path(2), directed_cycle(3));
    CHECK(j.order() == 5);
    CHECK(j.has_arc(0, 2));
    CHECK(j.has_arc(1, 4));
    CHECK(!j.has_arc(2, 0));
    CHECK(j.has_arc(2, 3));  // H keeps its internal arcs, shifted
}

TEST_CASE("corona") {
    Digraph c = corona(empty_digraph(2), empty_digraph(2));
    CHECK(c.order() == 6);
    CHECK(c.arc_count() == 4);
    CHECK(c.has_arc(0, 2));
    CHECK(c.has_arc(0, 3));
    CHECK(c.has_arc(1, 4));
    CHECK(c.has_arc(1, 5));
    // copies keep H's internal arcs and sit in consecutive blocks
    Digraph c2 = corona(directed_path(2), directed_path(2));
    CHECK(c2.order() == 6);
    CHECK(c2.has_arc(2, 3));
    CHECK(c2.has_arc(4, 5));
    CHECK(!c2.has_arc(2, 0));
}

TEST_CASE("arc count identities") {
    const Digraph gs[] = {directed_path(3), directed_cycle(4), random_digraph(4, 0.5, 11)};
    const Digraph hs[] = {empty_digraph(2), complete_digraph(3), random_digraph(3, 0.7, 12)};
    for (const Digraph& g : gs)
        for (const Digraph& h : hs) {
            int ag = g.arc_count(), ah = h.arc_count(), ng = g.order(), nh = h.order();
            CHECK(join_oneway(g, h).arc_count() == ag + ah + ng * nh);
            CHECK(join_twoway(g, h).arc_count() == ag + ah + 2 * ng * nh);
            CHECK(corona(g, h).arc_count() == ag + ng * ah + ng * nh);
        }
}

TEST_CASE("exhaustive enumeration") {
    CHECK(DigraphEnumeration(2).size() == 4);
    CHECK(DigraphEnumeration(3).size() == 64);
    CHECK(DigraphEnumeration(4).size() == 4096);
    CHECK_THROWS_AS(DigraphEnumeration(0), guard_error);
    CHECK_THROWS_AS(DigraphEnumeration(6), guard_error);

    // pairwise distinct at n = 3
    std::set<std::vector<Arc>> seen;
    for (const Digraph& d : DigraphEnumeration(3)) seen.insert(d.arcs());
    CHECK(seen.size() == 64);
}

TEST_CASE("random digraphs") {
    CHECK(random_digraph(5, 0.0, 7) == empty_digraph(5));
    CHECK(random_digraph(5, 1.0, 7) == complete_digraph(5));
    CHECK(random_digraph(6, 0.4, 42) == random_digraph(6, 0.4, 42));
    CHECK(random_digraph(6, 0.4, 42) != random_digraph(6, 0.4, 43));
    CHECK_THROWS_AS(random_digraph(5, 1.5, 7), std::invalid_argument);
}

TEST_CASE("family spec grammar") {
    const char* samples[] = {
        "path:5", "cycle:6", "complete:4", "empty:3", "kbip:3,5",
        "random:6,0.4,42", "assoc:3,0-1,1-2,0-2",
        "corona:(empty:2),(empty:2)", "join1:(path:2),(path:2)",
        "join2:(cycle:3),(complete:2)", "corona:(join1:(path:2),(path:2)),(empty:2)",
    };
    for (const char* s : samples) {
        FamilySpec f = FamilySpec::parse(s);
        CHECK(f.text() == s);
        CHECK(f.build() == FamilySpec::parse(f.text()).build());
    }
    CHECK(FamilySpec::parse("kbip:3,5").build() == complete_bipartite_digraph(3, 5));
    CHECK(FamilySpec::parse("assoc:3,0-1,1-2,0-2").build() == complete_digraph(3));
    CHECK(FamilySpec::parse("join1:(path:2),(path:2)").build() ==
          join_oneway(directed_path(2), directed_path(2)));

    CHECK_THROWS_AS(FamilySpec::parse("path"), parse_error);
    CHECK_THROWS_AS(FamilySpec::parse("pentagon:5"), parse_error);
    CHECK_THROWS_AS(FamilySpec::parse("kbip:3"), parse_error);
    CHECK_THROWS_AS(FamilySpec::parse("path:5,"), parse_error);
    CHECK_THROWS_AS(FamilySpec::parse("corona:(path:2)"), parse_error);
}

}  // TEST_SUITE
