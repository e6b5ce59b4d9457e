#include "itdom/digraph.hpp"

#include <bit>

namespace itdom {

namespace {
constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
}  // namespace

std::string to_string(const Arc& a) {
    return std::to_string(a.tail) + "->" + std::to_string(a.head);
}

Digraph::Digraph(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("digraph order must be >= 1, got " + std::to_string(n));
    if (n > max_order)
        throw guard_error("digraph order " + std::to_string(n) + " exceeds the supported maximum of " +
                          std::to_string(max_order));
    out_.assign(static_cast<std::size_t>(n), 0);
    in_.assign(static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, const std::vector<Arc>& arcs) : Digraph(n) {
    for (const Arc& a : arcs) {
        if (a.tail == a.head)
            throw std::invalid_argument("self-loop rejected: " + to_string(a));
        if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
            throw std::invalid_argument("arc endpoint out of range: " + to_string(a));
        if (!(out_[a.tail] & bit(a.head))) {
            out_[a.tail] |= bit(a.head);
            in_[a.head] |= bit(a.tail);
            ++m_;
        }
    }
}

int Digraph::checked(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    return v;
}

bool Digraph::has_arc(int u, int v) const {
    return (out_[checked(u)] & bit(checked(v))) != 0;
}

std::uint64_t Digraph::full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
}

int Digraph::out_degree(int v) const { return std::popcount(out_[checked(v)]); }
int Digraph::in_degree(int v) const { return std::popcount(in_[checked(v)]); }

int Digraph::max_out_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(out_[v]));
    return best;
}

int Digraph::max_in_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(in_[v]));
    return best;
}

DegreeSummary Digraph::degrees() const {
    DegreeSummary d;
    d.out.resize(n_);
    d.in.resize(n_);
    for (int v = 0; v < n_; ++v) {
        d.out[v] = std::popcount(out_[v]);
        d.in[v] = std::popcount(in_[v]);
        d.max_out = std::max(d.max_out, d.out[v]);
        d.max_in = std::max(d.max_in, d.in[v]);
    }
    return d;
}

int Digraph::max_underlying_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, std::popcount(out_[v]) + std::popcount(in_[v]));
    return best;
}

bool Digraph::underlying_connected() const {
    std::uint64_t seen = bit(0);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t m = frontier;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            next |= out_[v] | in_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask();
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 0; v < n_; ++v) {
        std::uint64_t m = out_[v];
        while (m) {
            int h = std::countr_zero(m);
            m &= m - 1;
            out.push_back({v, h});
        }
    }
    return out;
}

std::vector<Arc> Digraph::complement_arcs() const {
    std::vector<Arc> out;
    for (int v = 0; v < n_; ++v) {
        std::uint64_t m = full_mask() & ~out_[v] & ~bit(v);
        while (m) {
            int h = std::countr_zero(m);
            m &= m - 1;
            out.push_back({v, h});
        }
    }
    return out;
}

Digraph Digraph::remove_arcs(const std::vector<Arc>& bonds) const {
    Digraph d = *this;
    for (const Arc& a : bonds) {
        if (a.tail < 0 || a.head < 0 || a.tail >= n_ || a.head >= n_ || !(d.out_[a.tail] & bit(a.head)))
            throw std::invalid_argument("cannot remove arc not present: " + to_string(a));
        d.out_[a.tail] &= ~bit(a.head);
        d.in_[a.head] &= ~bit(a.tail);
        --d.m_;
    }
    return d;
}

Digraph Digraph::add_arcs(const std::vector<Arc>& extra) const {
    Digraph d = *this;
    for (const Arc& a : extra) {
        if (a.tail == a.head)
            throw std::invalid_argument("self-loop rejected: " + to_string(a));
        if (a.tail < 0 || a.head < 0 || a.tail >= n_ || a.head >= n_)
            throw std::invalid_argument("arc endpoint out of range: " + to_string(a));
        if (d.out_[a.tail] & bit(a.head))
            throw std::invalid_argument("cannot add arc already present: " + to_string(a));
        d.out_[a.tail] |= bit(a.head);
        d.in_[a.head] |= bit(a.tail);
        ++d.m_;
    }
    return d;
}

}  // namespace itdom
