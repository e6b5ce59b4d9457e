#ifndef ITDOM_DIGRAPH_HPP
#define ITDOM_DIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace itdom {

// Input (file / family spec string) could not be parsed.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A desk-scale guard was exceeded (order cap, enumeration size, solver guard).
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested quantity does not exist (b_I when gamma_I(D) = n).
struct undefined_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arc {
    int tail = 0;
    int head = 0;
    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& a);  // "tail->head"

struct DegreeSummary {
    int max_out = 0;
    int max_in = 0;
    std::vector<int> out;
    std::vector<int> in;
};

/// Simple digraph on at most 64 vertices, 0-indexed. Adjacency is one
/// out-bitset and one in-bitset per vertex, kept mirrored. Values are
/// immutable after construction; arc removal/addition return new digraphs.
class Digraph {
public:
    static constexpr int max_order = 64;

    explicit Digraph(int n);
    Digraph(int n, const std::vector<Arc>& arcs);  // duplicate arcs collapse

    int order() const { return n_; }
    int arc_count() const { return m_; }

    bool has_arc(int u, int v) const;
    std::uint64_t out_mask(int v) const { return out_[checked(v)]; }
    std::uint64_t in_mask(int v) const { return in_[checked(v)]; }
    std::uint64_t full_mask() const;

    int out_degree(int v) const;
    int in_degree(int v) const;
    int max_out_degree() const;
    int max_in_degree() const;
    DegreeSummary degrees() const;

    // Degree of v in the underlying multigraph G[D]; a 2-cycle counts twice.
    int underlying_degree(int v) const { return out_degree(v) + in_degree(v); }
    int max_underlying_degree() const;
    bool underlying_connected() const;

    std::vector<Arc> arcs() const;              // ascending (tail, head)
    std::vector<Arc> complement_arcs() const;   // ascending (tail, head)

    Digraph remove_arcs(const std::vector<Arc>& bonds) const;
    Digraph add_arcs(const std::vector<Arc>& extra) const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int checked(int v) const;

    int n_ = 1;
    int m_ = 0;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

}  // namespace itdom

#endif
