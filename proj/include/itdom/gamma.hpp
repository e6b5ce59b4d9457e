#ifndef ITDOM_GAMMA_HPP
#define ITDOM_GAMMA_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itdom/digraph.hpp"

namespace itdom {

/// A vertex labeling f : V -> {0, 1, 2}. An Italian dominating function is a
/// labeling whose 0-vertices each collect in-neighbor weight >= 2, which for
/// labels in {0, 1, 2} is the same as "two in-neighbors labeled 1 or one
/// labeled 2".
struct Labeling {
    std::vector<std::uint8_t> values;

    Labeling() = default;
    explicit Labeling(std::vector<std::uint8_t> v);

    int size() const { return static_cast<int>(values.size()); }
    int weight() const;
    std::string digits() const;  // vertex order, e.g. "20110"

    friend auto operator<=>(const Labeling&, const Labeling&) = default;
};

bool verify_idf(const Digraph& d, const Labeling& f);

struct GammaResult {
    int value = 0;
    Labeling witness;
    int lower_bound_used = 0;   // ceil(2n / (2 + max out-degree))
    int upper_bound_used = 0;   // min(n, n - max out-degree + 1)
    long nodes_explored = 0;
};

int gamma_italian_lower_bound(const Digraph& d);
int gamma_italian_upper_bound(const Digraph& d);

/// Exact gamma_I by branch and bound: vertices in descending underlying
/// degree, labels tried 0, 2, 1, incumbent seeded from the degree-based
/// upper-bound witness, pruned by the degree lower bound and by zero-vertex
/// coverage deficits. Answers 2 straight away when the order-n >= 3
/// two-vertex-cover characterization holds.
GammaResult gamma_italian(const Digraph& d);

/// Decision form: some IDF of weight <= cap, if one exists. Shares the
/// search engine with gamma_italian but stops at the first hit.
std::optional<Labeling> gamma_italian_at_most(const Digraph& d, int cap);

/// Independent oracle: scans all 3^n labelings (order <= 12). The witness is
/// the lexicographically smallest minimum-weight IDF.
GammaResult brute_force_gamma_italian(const Digraph& d);

/// Every minimum-weight IDF in lexicographic order (order <= 8).
std::vector<Labeling> enumerate_min_idfs(const Digraph& d);

struct DominationResult {
    int value = 0;
    std::vector<int> witness;  // lexicographically first minimum dominating set
};

/// Classical domination number by ascending-cardinality subset search
/// (order <= 20).
DominationResult gamma_domination(const Digraph& d);
bool has_dominating_set_of_size(const Digraph& d, int k);

}  // namespace itdom

#endif
