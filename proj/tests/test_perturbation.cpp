#include <doctest.h>

#include <bit>

#include "itdom/families.hpp"
#include "itdom/gamma.hpp"
#include "itdom/perturbation.hpp"

using namespace itdom;

namespace {

// Independent subset walk: arc-index bitmasks instead of the solver's
// lexicographic combination scan, with the brute-force gamma as the decider.
bool oracle_some_removal_raises(const Digraph& d, int k, int base) {
    auto arcs = d.arcs();
    int m = static_cast<int>(arcs.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<Arc> b;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) b.push_back(arcs[i]);
        if (brute_force_gamma_italian(d.remove_arcs(b)).value > base) return true;
    }
    return false;
}

bool oracle_some_addition_lowers(const Digraph& d, int k, int base) {
    auto comp = d.complement_arcs();
    int m = static_cast<int>(comp.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<Arc> r;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) r.push_back(comp[i]);
        if (brute_force_gamma_italian(d.add_arcs(r)).value < base) return true;
    }
    return false;
}

// Plain-loop domination check for the classical reinforcement oracle.
int oracle_domination(const Digraph& d) {
    int n = d.order();
    for (int k = 1; k <= n; ++k)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            std::vector<bool> covered(n, false);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) {
                    covered[v] = true;
                    for (int w = 0; w < n; ++w)
                        if (d.has_arc(v, w)) covered[w] = true;
                }
            if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return k;
        }
    return n;
}

int oracle_classical_reinforcement(const Digraph& d) {
    int base = oracle_domination(d);
    if (base == 1) return 0;
    auto comp = d.complement_arcs();
    int m = static_cast<int>(comp.size());
    for (int k = 1; k <= m; ++k)
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) != k) continue;
            std::vector<Arc> r;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) r.push_back(comp[i]);
            if (oracle_domination(d.add_arcs(r)) < base) return k;
        }
    return m;
}

}  // namespace

TEST_SUITE("perturbation") {

TEST_CASE("path2 bound certificate") {
    auto k3 = bondage_upper_bound_path2(complete_digraph(3));
    REQUIRE(k3.has_value());
    CHECK(k3->witness_vertices.has_value());
    CHECK(!bondage_upper_bound_path2(directed_path(3)).has_value());
}

TEST_CASE("path2 bound dominates exact bondage at order 3") {
    for (const Digraph& d : DigraphEnumeration(3)) {
        auto cert = bondage_upper_bound_path2(d);
        if (!cert || gamma_italian(d).value == d.order()) continue;
        CHECK(italian_bondage(d).value <= cert->value);
    }
}

TEST_CASE("gamma-delta bound certificate") {
    auto k4 = bondage_upper_bound_gamma_delta(complete_digraph(4));
    REQUIRE(k4.has_value());
    CHECK(k4->value == (2 - 1) * 6);
    CHECK(!bondage_upper_bound_gamma_delta(Digraph(4, {{0, 1}, {2, 3}})).has_value());
    CHECK(!bondage_upper_bound_gamma_delta(complete_digraph(2)).has_value());
}

TEST_CASE("reinforcement degree bound certificate") {
    auto c5 = reinforcement_upper_bound(directed_cycle(5));
    REQUIRE(c5.has_value());
    CHECK(c5->value == 5 - 1 - 5 + 2);
    CHECK(!reinforcement_upper_bound(complete_digraph(4)).has_value());
}

TEST_CASE("bondage golden values") {
    PerturbationResult k4 = italian_bondage(complete_digraph(4));
    CHECK(k4.value == 4);
    CHECK(k4.base_gamma == 2);
    CHECK(k4.perturbed_gamma > k4.base_gamma);
    CHECK(italian_bondage(complete_bipartite_digraph(2, 3)).value == 1);
    CHECK(italian_bondage(complete_bipartite_digraph(3, 4)).value == 2);
    CHECK_THROWS_AS(italian_bondage(directed_cycle(5)), undefined_error);
}

TEST_CASE("bondage witness is sound") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Digraph d = random_digraph(5, 0.5, 400 + seed);
        if (gamma_italian(d).value == d.order()) continue;
        PerturbationResult b = italian_bondage(d);
        CHECK(static_cast<int>(b.witness.size()) == b.value);
        CHECK(brute_force_gamma_italian(d.remove_arcs(b.witness)).value > b.base_gamma);
        CHECK(b.perturbed_gamma > b.base_gamma);
    }
}

TEST_CASE("bondage exactness against the oracle on sampled order-4 instances") {
    DigraphEnumeration e(4);
    int sampled = 0;
    for (std::uint64_t mask = 5; mask < e.size() && sampled < 50; mask += 37) {
        Digraph d = e.at(mask);
        int base = brute_force_gamma_italian(d).value;
        if (base == d.order()) continue;
        ++sampled;
        PerturbationResult b = italian_bondage(d);
        for (int k = 1; k < b.value; ++k) CHECK(!oracle_some_removal_raises(d, k, base));
        CHECK(oracle_some_removal_raises(d, b.value, base));
    }
    CHECK(sampled == 50);
}

TEST_CASE("the star on three vertices needs two arc removals") {
    // K_{1,2}^*: no single arc removal works, the 2-cycle through either
    // leaf does. The m <= 2 bondage formula misses this instance.
    Digraph star = complete_bipartite_digraph(1, 2);
    int base = brute_force_gamma_italian(star).value;
    CHECK(base == 2);
    for (const Arc& a : star.arcs())
        CHECK(brute_force_gamma_italian(star.remove_arcs({a})).value == base);
    PerturbationResult b = italian_bondage(star);
    CHECK(b.value == 2);
    CHECK(b.witness == std::vector<Arc>{{0, 1}, {1, 0}});
}

TEST_CASE("bipartite 4,5 bondage needs seven removals, by certificate scan") {
    // Independent of the search engine: every 6-subset removal is certified
    // harmless by a verify_idf-checked weight-4 labeling, and the size-7
    // witness is confirmed by the 3^9 oracle. The tabulated value m+2 = 6
    // relies on a removal set that a weight-4 relabeling survives.
    Digraph d = complete_bipartite_digraph(4, 5);
    CHECK(brute_force_gamma_italian(d).value == 4);

    std::vector<Arc> tabulated = {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 0}, {4, 1}};  // m+2 arcs around y_1
    CHECK(brute_force_gamma_italian(d.remove_arcs(tabulated)).value == 4);

    auto arcs = d.arcs();
    int m = static_cast<int>(arcs.size());
    long uncertified = 0;
    std::vector<int> idx = {0, 1, 2, 3, 4, 5};
    while (true) {
        std::vector<Arc> b;
        for (int i : idx) b.push_back(arcs[i]);
        Digraph d2 = d.remove_arcs(b);
        auto w = gamma_italian_at_most(d2, 4);
        if (!w || !verify_idf(d2, *w) || w->weight() > 4) ++uncertified;
        int i = 5;
        while (i >= 0 && idx[i] == m - 6 + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < 6; ++j) idx[j] = idx[j - 1] + 1;
    }
    CHECK(uncertified == 0);

    PerturbationResult b = italian_bondage(d);
    CHECK(b.value == 7);
    CHECK(brute_force_gamma_italian(d.remove_arcs(b.witness)).value == 5);
}

TEST_CASE("reinforcement golden values") {
    PerturbationResult c5 = italian_reinforcement(directed_cycle(5));
    CHECK(c5.value == 1);
    CHECK(c5.base_gamma == 5);
    CHECK(c5.perturbed_gamma == 4);

    PerturbationResult k2 = italian_reinforcement(complete_digraph(2));
    CHECK(k2.value == 0);
    CHECK(k2.witness.empty());

    CHECK(italian_reinforcement(corona(empty_digraph(2), empty_digraph(2))).value == 2);
    CHECK(italian_reinforcement(corona(directed_path(2), empty_digraph(3))).value == 2);
    CHECK(italian_reinforcement(corona(empty_digraph(1), empty_digraph(2))).value == 0);
}

TEST_CASE("reinforcement witness is sound and drops gamma by exactly one") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Digraph d = random_digraph(6, 0.15, 600 + seed);
        PerturbationResult r = italian_reinforcement(d);
        if (r.value == 0) {
            CHECK(r.base_gamma <= 2);
            continue;
        }
        CHECK(static_cast<int>(r.witness.size()) == r.value);
        for (const Arc& a : r.witness) CHECK(!d.has_arc(a.tail, a.head));
        CHECK(brute_force_gamma_italian(d.add_arcs(r.witness)).value == r.base_gamma - 1);
        CHECK(r.perturbed_gamma == r.base_gamma - 1);
    }
}

TEST_CASE("reinforcement exactness against the oracle, exhaustive order 3") {
    for (const Digraph& d : DigraphEnumeration(3)) {
        int base = brute_force_gamma_italian(d).value;
        if (base < 3) continue;
        PerturbationResult r = italian_reinforcement(d);
        for (int k = 1; k < r.value; ++k) CHECK(!oracle_some_addition_lowers(d, k, base));
        CHECK(oracle_some_addition_lowers(d, r.value, base));
    }
}

TEST_CASE("budgeted searches match the unbudgeted ones or bow out") {
    Digraph d = complete_bipartite_digraph(2, 3);
    auto full = italian_bondage(d);
    auto budgeted = italian_bondage_within(d, 1'000'000);
    REQUIRE(budgeted.has_value());
    CHECK(budgeted->value == full.value);
    CHECK(budgeted->witness == full.witness);
    CHECK(!italian_bondage_within(complete_digraph(5), 3).has_value());
    CHECK(!italian_reinforcement_within(directed_path(5), 0).has_value());
}

TEST_CASE("r_I = 1 characterization") {
    CHECK(check_ri_one_characterization(directed_cycle(4)));
    CHECK(!check_ri_one_characterization(empty_digraph(4)));
    CHECK_THROWS_AS(check_ri_one_characterization(complete_digraph(3)), std::invalid_argument);
    // iff against the computed value, exhaustive at order 3
    for (const Digraph& d : DigraphEnumeration(3)) {
        if (brute_force_gamma_italian(d).value < 3) continue;
        CHECK(check_ri_one_characterization(d) == (italian_reinforcement(d).value == 1));
    }
}

TEST_CASE("IRS witness validation") {
    Digraph c4 = directed_cycle(4);
    IrsWitnessVerdict v = validate_irs_witness(c4, italian_reinforcement(c4).witness);
    CHECK(v.ok());
    CHECK(v.base_gamma == 4);
    CHECK(v.perturbed_gamma == 3);

    Digraph cor = corona(directed_path(2), empty_digraph(3));
    CHECK(validate_irs_witness(cor, italian_reinforcement(cor).witness).ok());

    // a non-minimum arc set fails the label test
    IrsWitnessVerdict bad = validate_irs_witness(empty_digraph(4), {{0, 1}, {0, 2}, {0, 3}});
    CHECK(!bad.ok());
}

TEST_CASE("classical reinforcement") {
    CHECK(classical_reinforcement(complete_digraph(4)).value == 0);

    // frozen from the oracle below: a directed 4-cycle needs two chords
    // before one vertex can out-dominate everything, the empty triple needs
    // a single arc to reach gamma = 2
    Digraph c4 = directed_cycle(4);
    CHECK(oracle_classical_reinforcement(c4) == 2);
    CHECK(classical_reinforcement(c4).value == 2);

    Digraph e3 = empty_digraph(3);
    CHECK(oracle_classical_reinforcement(e3) == 1);
    PerturbationResult r = classical_reinforcement(e3);
    CHECK(r.value == 1);
    CHECK(r.base_gamma == 3);
    CHECK(r.perturbed_gamma == 2);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Digraph d = random_digraph(4, 0.4, 700 + seed);
        CHECK(classical_reinforcement(d).value == oracle_classical_reinforcement(d));
    }
}

TEST_CASE("degree bound dominates reinforcement, exhaustive order 3 plus samples") {
    auto check_bound = [](const Digraph& d) {
        if (gamma_italian(d).value < 3) return;
        auto cert = reinforcement_upper_bound(d);
        REQUIRE(cert.has_value());
        CHECK(italian_reinforcement(d).value <= cert->value);
    };
    for (const Digraph& d : DigraphEnumeration(3)) check_bound(d);
    for (std::uint64_t seed = 0; seed < 10; ++seed) check_bound(random_digraph(6, 0.2, 800 + seed));
}

}  // TEST_SUITE
