#include "itdom/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace itdom {

namespace {

// Strips comments and blank lines, yielding whitespace-separated tokens.
std::vector<std::string> data_tokens(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

int parse_int(const std::string& tok, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw parse_error(std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw parse_error(std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
    std::vector<std::string> tokens = data_tokens(in);
    if (tokens.size() < 2) throw parse_error("missing 'n m' header");
    int n = parse_int(tokens[0], "vertex count");
    int m = parse_int(tokens[1], "arc count");
    if (n < 1) throw parse_error("vertex count must be >= 1");
    if (m < 0) throw parse_error("arc count must be >= 0");
    if (tokens.size() != 2 + 2 * static_cast<std::size_t>(m))
        throw parse_error("expected " + std::to_string(2 * m) + " arc endpoints after the header, got " +
                          std::to_string(tokens.size() - 2));
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = parse_int(tokens[2 + 2 * i], "arc tail");
        int v = parse_int(tokens[3 + 2 * i], "arc head");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw parse_error("self-loop rejected: " + std::to_string(u) + " " + std::to_string(v));
        for (const Arc& a : arcs)
            if (a.tail == u && a.head == v)
                throw parse_error("duplicate arc line: " + std::to_string(u) + " " + std::to_string(v));
        arcs.push_back({u, v});
    }
    return Digraph(n, arcs);
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

std::string write_digraph_string(const Digraph& d) {
    std::ostringstream out;
    write_digraph(out, d);
    return out.str();
}

}  // namespace itdom
