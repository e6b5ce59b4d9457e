#include "itdom/gamma.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "combinations.hpp"

namespace itdom {

namespace {
constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
}  // namespace

Labeling::Labeling(std::vector<std::uint8_t> v) : values(std::move(v)) {
    for (std::uint8_t x : values)
        if (x > 2) throw std::invalid_argument("labels must be in {0, 1, 2}");
}

int Labeling::weight() const {
    int w = 0;
    for (std::uint8_t x : values) w += x;
    return w;
}

std::string Labeling::digits() const {
    std::string s;
    s.reserve(values.size());
    for (std::uint8_t x : values) s.push_back(static_cast<char>('0' + x));
    return s;
}

bool verify_idf(const Digraph& d, const Labeling& f) {
    if (f.size() != d.order())
        throw std::invalid_argument("labeling has " + std::to_string(f.size()) + " entries for a digraph of order " +
                                    std::to_string(d.order()));
    std::uint64_t ones = 0, twos = 0;
    for (int v = 0; v < d.order(); ++v) {
        if (f.values[v] == 1) ones |= bit(v);
        if (f.values[v] == 2) twos |= bit(v);
    }
    std::uint64_t zeros = d.full_mask() & ~ones & ~twos;
    while (zeros) {
        int v = std::countr_zero(zeros);
        zeros &= zeros - 1;
        int w = std::popcount(d.in_mask(v) & ones) + 2 * std::popcount(d.in_mask(v) & twos);
        if (w < 2) return false;
    }
    return true;
}

int gamma_italian_lower_bound(const Digraph& d) {
    int n = d.order();
    int dp = d.max_out_degree();
    return (2 * n + dp + 1) / (dp + 2);  // ceil(2n / (2 + dp))
}

int gamma_italian_upper_bound(const Digraph& d) {
    int n = d.order();
    return std::min(n, n - d.max_out_degree() + 1);
}

namespace {

// Weight-2 witness when the order-(n>=3) characterization holds: one vertex
// reaching everything else, or two vertices u, v each reaching V - {u, v}.
std::optional<Labeling> gamma_two_witness(const Digraph& d) {
    int n = d.order();
    std::uint64_t full = d.full_mask();
    for (int u = 0; u < n; ++u)
        if (d.out_degree(u) == n - 1) {
            std::vector<std::uint8_t> f(n, 0);
            f[u] = 2;
            return Labeling(std::move(f));
        }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t rest = full & ~bit(u) & ~bit(v);
            if ((rest & ~d.out_mask(u)) == 0 && (rest & ~d.out_mask(v)) == 0) {
                std::vector<std::uint8_t> f(n, 0);
                f[u] = f[v] = 1;
                return Labeling(std::move(f));
            }
        }
    return std::nullopt;
}

// Cheapest pattern among: all-ones, "2 on u plus 1 on whatever u misses"
// (minimized by a max out-degree u), and the two-vertex variant with two 2s.
Labeling seeded_witness(const Digraph& d) {
    int n = d.order();
    std::uint64_t full = d.full_mask();
    std::vector<std::uint8_t> best(static_cast<std::size_t>(n), 1);
    int best_w = n;
    for (int u = 0; u < n; ++u) {
        std::uint64_t missed = full & ~d.out_mask(u) & ~bit(u);
        int w = 2 + std::popcount(missed);
        if (w < best_w) {
            best_w = w;
            for (int v = 0; v < n; ++v) best[v] = (v == u) ? 2 : ((missed >> v) & 1);
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t missed = full & ~d.out_mask(u) & ~d.out_mask(v) & ~bit(u) & ~bit(v);
            int w = 4 + std::popcount(missed);
            if (w < best_w) {
                best_w = w;
                for (int x = 0; x < n; ++x) best[x] = (x == u || x == v) ? 2 : ((missed >> x) & 1);
            }
        }
    return Labeling(std::move(best));
}

struct Engine {
    const Digraph& d;
    int n;
    int limit;      // exact: strict bound (current best weight); decision: inclusive cap
    bool decision;
    std::vector<int> order;
    std::array<std::int8_t, Digraph::max_order> label{};
    std::array<std::int16_t, Digraph::max_order> in_w{};
    std::array<std::int16_t, Digraph::max_order> un_in{};
    int weight = 0;
    long nodes = 0;
    bool found = false;
    std::vector<std::uint8_t> best;

    Engine(const Digraph& dd, int lim, bool dec) : d(dd), n(dd.order()), limit(lim), decision(dec) {
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return d.underlying_degree(a) > d.underlying_degree(b); });
        label.fill(-1);
        for (int v = 0; v < n; ++v) un_in[v] = static_cast<std::int16_t>(d.in_degree(v));
    }

    // Vertices still unassigned that can no longer afford label 0 each add
    // at least 1 to any completion.
    int future_need(int depth) const {
        int c = 0;
        for (int i = depth; i < n; ++i) {
            int v = order[i];
            if (in_w[v] + 2 * un_in[v] < 2) ++c;
        }
        return c;
    }

    bool dfs(int depth) {
        ++nodes;
        int flb = future_need(depth);
        if (decision ? (weight + flb > limit) : (weight + flb >= limit)) return false;
        if (depth == n) {
            best.assign(label.begin(), label.begin() + n);
            found = true;
            if (!decision) limit = weight;
            return decision;
        }
        int v = order[depth];
        static constexpr int try_order[3] = {0, 2, 1};
        for (int l : try_order) {
            if (l == 0 && in_w[v] + 2 * un_in[v] < 2) continue;
            label[v] = static_cast<std::int8_t>(l);
            weight += l;
            bool dead = false;
            std::uint64_t outs = d.out_mask(v);
            for (std::uint64_t m = outs; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                in_w[w] = static_cast<std::int16_t>(in_w[w] + l);
                --un_in[w];
                if (label[w] == 0 && in_w[w] + 2 * un_in[w] < 2) dead = true;
            }
            bool stop = !dead && dfs(depth + 1);
            for (std::uint64_t m = outs; m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                in_w[w] = static_cast<std::int16_t>(in_w[w] - l);
                ++un_in[w];
            }
            weight -= l;
            label[v] = -1;
            if (stop) return true;
        }
        return false;
    }
};

}  // namespace

GammaResult gamma_italian(const Digraph& d) {
    int n = d.order();
    GammaResult r;
    r.lower_bound_used = gamma_italian_lower_bound(d);
    r.upper_bound_used = gamma_italian_upper_bound(d);
    if (n == 1) {
        r.value = 1;
        r.witness = Labeling({1});
        return r;
    }
    if (n == 2) {
        r.value = 2;
        r.witness = Labeling({1, 1});
        return r;
    }
    if (auto two = gamma_two_witness(d)) {
        r.value = 2;
        r.witness = *two;
        return r;
    }
    Labeling seed = seeded_witness(d);
    if (seed.weight() <= r.lower_bound_used) {
        r.value = seed.weight();
        r.witness = seed;
        return r;
    }
    Engine e(d, seed.weight(), false);
    e.dfs(0);
    r.nodes_explored = e.nodes;
    if (e.found) {
        r.value = e.limit;
        r.witness = Labeling(e.best);
    } else {
        r.value = seed.weight();
        r.witness = seed;
    }
    return r;
}

std::optional<Labeling> gamma_italian_at_most(const Digraph& d, int cap) {
    if (cap < 1) return std::nullopt;  // no labeling of weight 0 can cover its zeros
    int n = d.order();
    if (n == 1) return Labeling({1});
    if (n == 2) return cap >= 2 ? std::optional<Labeling>(Labeling({1, 1})) : std::nullopt;
    if (gamma_italian_lower_bound(d) > cap) return std::nullopt;
    if (cap >= 2)
        if (auto two = gamma_two_witness(d)) return two;
    Labeling seed = seeded_witness(d);
    if (seed.weight() <= cap) return seed;
    Engine e(d, cap, true);
    if (e.dfs(0)) return Labeling(e.best);
    return std::nullopt;
}

namespace {

bool valid_labels(const Digraph& d, const std::uint8_t* f) {
    int n = d.order();
    std::uint64_t ones = 0, twos = 0;
    for (int v = 0; v < n; ++v) {
        if (f[v] == 1) ones |= bit(v);
        else if (f[v] == 2) twos |= bit(v);
    }
    std::uint64_t zeros = d.full_mask() & ~ones & ~twos;
    while (zeros) {
        int v = std::countr_zero(zeros);
        zeros &= zeros - 1;
        if (std::popcount(d.in_mask(v) & ones) + 2 * std::popcount(d.in_mask(v) & twos) < 2) return false;
    }
    return true;
}

// Calls fn for each of the 3^n labelings in lexicographic order
// (vertex 0 is the most significant digit).
template <typename Fn>
void for_each_labeling(int n, Fn&& fn) {
    std::vector<std::uint8_t> f(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(static_cast<const std::vector<std::uint8_t>&>(f));
        int i = n - 1;
        while (i >= 0 && f[i] == 2) f[i--] = 0;
        if (i < 0) return;
        ++f[i];
    }
}

}  // namespace

GammaResult brute_force_gamma_italian(const Digraph& d) {
    int n = d.order();
    if (n > 12) throw guard_error("brute-force gamma_I is limited to order <= 12, got " + std::to_string(n));
    GammaResult r;
    r.lower_bound_used = gamma_italian_lower_bound(d);
    r.upper_bound_used = gamma_italian_upper_bound(d);
    r.value = 2 * n + 1;  // above any labeling weight
    for_each_labeling(n, [&](const std::vector<std::uint8_t>& f) {
        ++r.nodes_explored;
        int w = 0;
        for (std::uint8_t x : f) w += x;
        if (w >= r.value) return;
        if (valid_labels(d, f.data())) {
            r.value = w;
            r.witness = Labeling(f);
        }
    });
    return r;
}

std::vector<Labeling> enumerate_min_idfs(const Digraph& d) {
    int n = d.order();
    if (n > 8) throw guard_error("min-IDF enumeration is limited to order <= 8, got " + std::to_string(n));
    int target = brute_force_gamma_italian(d).value;
    std::vector<Labeling> out;
    for_each_labeling(n, [&](const std::vector<std::uint8_t>& f) {
        int w = 0;
        for (std::uint8_t x : f) w += x;
        if (w == target && valid_labels(d, f.data())) out.push_back(Labeling(f));
    });
    return out;
}

bool has_dominating_set_of_size(const Digraph& d, int k) {
    int n = d.order();
    if (k <= 0) return false;
    if (k >= n) return true;  // S = V closed-out-dominates everything
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) closed[v] = d.out_mask(v) | bit(v);
    std::uint64_t full = d.full_mask();
    return detail::for_each_combination(n, k, [&](const std::vector<int>& idx) {
        std::uint64_t covered = 0;
        for (int v : idx) covered |= closed[v];
        return covered == full;
    });
}

DominationResult gamma_domination(const Digraph& d) {
    int n = d.order();
    if (n > 20) throw guard_error("domination search is limited to order <= 20, got " + std::to_string(n));
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) closed[v] = d.out_mask(v) | bit(v);
    std::uint64_t full = d.full_mask();
    DominationResult r;
    for (int k = 1; k <= n; ++k) {
        bool hit = detail::for_each_combination(n, k, [&](const std::vector<int>& idx) {
            std::uint64_t covered = 0;
            for (int v : idx) covered |= closed[v];
            if (covered != full) return false;
            r.witness = idx;
            return true;
        });
        if (hit) {
            r.value = k;
            return r;
        }
    }
    throw std::logic_error("domination search exhausted");  // S = V always dominates
}

}  // namespace itdom
