#ifndef ITDOM_FAMILIES_HPP
#define ITDOM_FAMILIES_HPP

#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "itdom/digraph.hpp"

namespace itdom {

Digraph directed_path(int n);   // arcs i -> i+1
Digraph directed_cycle(int n);  // path plus (n-1) -> 0, n >= 2
Digraph complete_digraph(int n);
// Part X = 0..m-1, part Y = m..m+n-1, both-direction arcs across.
Digraph complete_bipartite_digraph(int m, int n);
Digraph empty_digraph(int n);
// Each undirected edge {u, v} becomes the arcs (u, v) and (v, u).
Digraph associated_digraph(const std::vector<std::pair<int, int>>& edges, int n);

// Vertex set of the result is G's vertices followed by H's, shifted by n(G).
Digraph join_oneway(const Digraph& g, const Digraph& h);   // all arcs G-side -> H-side
Digraph join_twoway(const Digraph& g, const Digraph& h);   // both directions
// One copy of G, n(G) private copies of H; G's vertex v_i points at every
// vertex of its copy H_i. Copy H_i occupies the block starting at
// n(G) + i*n(H). H keeps its internal arcs.
Digraph corona(const Digraph& g, const Digraph& h);

// Each ordered pair is included independently with probability p.
// Pinned generator: SplitMix64 seeded with `seed`, one draw per ordered pair
// in ascending (tail, head) order; the pair is kept iff (x >> 11) * 2^-53 < p.
Digraph random_digraph(int n, double p, std::uint64_t seed);

/// All 2^(n(n-1)) labeled simple digraphs on n vertices, 1 <= n <= 5.
/// Digraph number `mask` contains the i-th lexicographic ordered pair iff
/// bit i of mask is set, so iteration is in ascending bitmask order.
class DigraphEnumeration {
public:
    explicit DigraphEnumeration(int n);

    int order() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }
    Digraph at(std::uint64_t mask) const;

    class iterator {
    public:
        using value_type = Digraph;
        using difference_type = std::int64_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        iterator(const DigraphEnumeration* e, std::uint64_t mask) : enumeration_(e), mask_(mask) {}
        Digraph operator*() const { return enumeration_->at(mask_); }
        iterator& operator++() { ++mask_; return *this; }
        iterator operator++(int) { iterator t = *this; ++mask_; return t; }
        friend bool operator==(const iterator&, const iterator&) = default;

    private:
        const DigraphEnumeration* enumeration_ = nullptr;
        std::uint64_t mask_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, size()}; }

private:
    int n_;
    std::vector<Arc> pairs_;
};

/// Parsed form of the CLI family grammar, e.g. "path:5", "kbip:3,5",
/// "corona:(empty:2),(empty:2)", "join1:(path:2),(path:2)",
/// "random:6,0.4,42", "assoc:3,0-1,1-2,0-2".
struct FamilySpec {
    enum class Kind {
        path,
        cycle,
        complete,
        complete_bipartite,
        empty,
        associated,
        join_oneway,
        join_twoway,
        corona,
        random,
    };

    Kind kind = Kind::empty;
    int n = 0;
    int m = 0;           // first part size for complete_bipartite
    double p = 0.0;      // random
    std::uint64_t seed = 0;
    std::vector<std::pair<int, int>> edges;          // associated
    std::shared_ptr<const FamilySpec> left, right;   // compositions

    static FamilySpec parse(const std::string& text);  // throws parse_error
    std::string text() const;
    Digraph build() const;
};

}  // namespace itdom

#endif
