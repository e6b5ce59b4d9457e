#include "itdom/families.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace itdom {

Digraph directed_path(int n) {
    if (n < 1) throw std::invalid_argument("directed_path needs n >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
    return Digraph(n, arcs);
}

Digraph directed_cycle(int n) {
    if (n < 2) throw std::invalid_argument("directed_cycle needs n >= 2");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
    arcs.push_back({n - 1, 0});
    return Digraph(n, arcs);
}

Digraph complete_digraph(int n) {
    if (n < 1) throw std::invalid_argument("complete_digraph needs n >= 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.push_back({u, v});
    return Digraph(n, arcs);
}

Digraph complete_bipartite_digraph(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite_digraph needs m, n >= 1");
    std::vector<Arc> arcs;
    for (int x = 0; x < m; ++x)
        for (int y = m; y < m + n; ++y) {
            arcs.push_back({x, y});
            arcs.push_back({y, x});
        }
    return Digraph(m + n, arcs);
}

Digraph empty_digraph(int n) {
    if (n < 1) throw std::invalid_argument("empty_digraph needs n >= 1");
    return Digraph(n);
}

Digraph associated_digraph(const std::vector<std::pair<int, int>>& edges, int n) {
    std::vector<Arc> arcs;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("associated_digraph rejects loops");
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    return Digraph(n, arcs);
}

namespace {

std::vector<Arc> shifted_arcs(const Digraph& d, int offset) {
    std::vector<Arc> out;
    for (const Arc& a : d.arcs()) out.push_back({a.tail + offset, a.head + offset});
    return out;
}

}  // namespace

Digraph join_oneway(const Digraph& g, const Digraph& h) {
    int ng = g.order(), nh = h.order();
    std::vector<Arc> arcs = g.arcs();
    for (const Arc& a : shifted_arcs(h, ng)) arcs.push_back(a);
    for (int u = 0; u < ng; ++u)
        for (int v = ng; v < ng + nh; ++v) arcs.push_back({u, v});
    return Digraph(ng + nh, arcs);
}

Digraph join_twoway(const Digraph& g, const Digraph& h) {
    int ng = g.order(), nh = h.order();
    std::vector<Arc> arcs = join_oneway(g, h).arcs();
    for (int v = ng; v < ng + nh; ++v)
        for (int u = 0; u < ng; ++u) arcs.push_back({v, u});
    return Digraph(ng + nh, arcs);
}

Digraph corona(const Digraph& g, const Digraph& h) {
    int ng = g.order(), nh = h.order();
    std::vector<Arc> arcs = g.arcs();
    for (int i = 0; i < ng; ++i) {
        int base = ng + i * nh;
        for (const Arc& a : shifted_arcs(h, base)) arcs.push_back(a);
        for (int v = base; v < base + nh; ++v) arcs.push_back({i, v});
    }
    return Digraph(ng * (1 + nh), arcs);
}

namespace {

// SplitMix64; the random_digraph contract pins this exact generator.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("arc probability must be in [0, 1]");
    if (n < 1) throw std::invalid_argument("random_digraph needs n >= 1");
    std::uint64_t state = seed;
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            double x = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
            if (x < p) arcs.push_back({u, v});
        }
    return Digraph(n, arcs);
}

DigraphEnumeration::DigraphEnumeration(int n) : n_(n) {
    if (n < 1 || n > 5)
        throw guard_error("exhaustive enumeration is limited to 1 <= n <= 5, got " + std::to_string(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs_.push_back({u, v});
}

Digraph DigraphEnumeration::at(std::uint64_t mask) const {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) arcs.push_back(pairs_[i]);
    return Digraph(n_, arcs);
}

// ---------------------------------------------------------------------------
// FamilySpec grammar
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void expect(char c) {
        if (peek() != c)
            throw parse_error("bad family spec '" + s + "': expected '" + std::string(1, c) + "' at position " +
                              std::to_string(pos));
        ++pos;
    }
    bool accept(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }

    std::string ident() {
        std::size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (start == pos) throw parse_error("bad family spec '" + s + "': expected a family name");
        return s.substr(start, pos - start);
    }

    long long integer() {
        std::size_t start = pos;
        if (accept('-')) {}
        while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || (s[start] == '-' && pos == start + 1))
            throw parse_error("bad family spec '" + s + "': expected an integer at position " + std::to_string(start));
        return std::stoll(s.substr(start, pos - start));
    }

    double real() {
        std::size_t start = pos;
        while (!done() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == '-' ||
                           s[pos] == '+' || s[pos] == 'e' || s[pos] == 'E'))
            ++pos;
        if (start == pos) throw parse_error("bad family spec '" + s + "': expected a number");
        return std::stod(s.substr(start, pos - start));
    }
};

FamilySpec parse_spec(Cursor& c);

std::shared_ptr<const FamilySpec> parse_operand(Cursor& c) {
    c.expect('(');
    auto spec = std::make_shared<FamilySpec>(parse_spec(c));
    c.expect(')');
    return spec;
}

FamilySpec parse_spec(Cursor& c) {
    using Kind = FamilySpec::Kind;
    FamilySpec f;
    std::string name = c.ident();
    c.expect(':');
    if (name == "path" || name == "cycle" || name == "complete" || name == "empty") {
        f.kind = name == "path" ? Kind::path
               : name == "cycle" ? Kind::cycle
               : name == "complete" ? Kind::complete
               : Kind::empty;
        f.n = static_cast<int>(c.integer());
    } else if (name == "kbip") {
        f.kind = Kind::complete_bipartite;
        f.m = static_cast<int>(c.integer());
        c.expect(',');
        f.n = static_cast<int>(c.integer());
    } else if (name == "random") {
        f.kind = Kind::random;
        f.n = static_cast<int>(c.integer());
        c.expect(',');
        f.p = c.real();
        c.expect(',');
        long long seed = c.integer();
        if (seed < 0) throw parse_error("random seed must be nonnegative");
        f.seed = static_cast<std::uint64_t>(seed);
    } else if (name == "assoc") {
        f.kind = Kind::associated;
        f.n = static_cast<int>(c.integer());
        while (c.accept(',')) {
            int u = static_cast<int>(c.integer());
            c.expect('-');
            int v = static_cast<int>(c.integer());
            f.edges.emplace_back(u, v);
        }
    } else if (name == "join1" || name == "join2" || name == "corona") {
        f.kind = name == "join1" ? Kind::join_oneway : name == "join2" ? Kind::join_twoway : Kind::corona;
        f.left = parse_operand(c);
        c.expect(',');
        f.right = parse_operand(c);
    } else {
        throw parse_error("unknown family '" + name + "'");
    }
    return f;
}

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    Cursor c{text};
    FamilySpec f = parse_spec(c);
    if (!c.done())
        throw parse_error("bad family spec '" + text + "': trailing input at position " + std::to_string(c.pos));
    return f;
}

std::string FamilySpec::text() const {
    switch (kind) {
        case Kind::path: return "path:" + std::to_string(n);
        case Kind::cycle: return "cycle:" + std::to_string(n);
        case Kind::complete: return "complete:" + std::to_string(n);
        case Kind::empty: return "empty:" + std::to_string(n);
        case Kind::complete_bipartite: return "kbip:" + std::to_string(m) + "," + std::to_string(n);
        case Kind::random:
            return "random:" + std::to_string(n) + "," + format_probability(p) + "," + std::to_string(seed);
        case Kind::associated: {
            std::string out = "assoc:" + std::to_string(n);
            for (auto [u, v] : edges) out += "," + std::to_string(u) + "-" + std::to_string(v);
            return out;
        }
        case Kind::join_oneway: return "join1:(" + left->text() + "),(" + right->text() + ")";
        case Kind::join_twoway: return "join2:(" + left->text() + "),(" + right->text() + ")";
        case Kind::corona: return "corona:(" + left->text() + "),(" + right->text() + ")";
    }
    throw std::logic_error("unreachable family kind");
}

Digraph FamilySpec::build() const {
    switch (kind) {
        case Kind::path: return directed_path(n);
        case Kind::cycle: return directed_cycle(n);
        case Kind::complete: return complete_digraph(n);
        case Kind::empty: return empty_digraph(n);
        case Kind::complete_bipartite: return complete_bipartite_digraph(m, n);
        case Kind::random: return random_digraph(n, p, seed);
        case Kind::associated: return associated_digraph(edges, n);
        case Kind::join_oneway: return join_oneway(left->build(), right->build());
        case Kind::join_twoway: return join_twoway(left->build(), right->build());
        case Kind::corona: return corona(left->build(), right->build());
    }
    throw std::logic_error("unreachable family kind");
}

}  // namespace itdom
