#ifndef ITDOM_IO_HPP
#define ITDOM_IO_HPP

#include <iosfwd>
#include <string>

#include "itdom/digraph.hpp"

namespace itdom {

/// Plain-text digraph format: first data line "n m", then m lines "u v"
/// (arc u -> v, 0-indexed). Lines starting with '#' are comments; blank
/// lines are skipped. Duplicate arc lines are rejected.
Digraph read_digraph(std::istream& in);
Digraph read_digraph_file(const std::string& path);

void write_digraph(std::ostream& out, const Digraph& d);
std::string write_digraph_string(const Digraph& d);

}  // namespace itdom

#endif
