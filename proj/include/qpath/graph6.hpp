#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qpath/graph.hpp"

namespace qpath {

// graph6: printable encoding of an undirected graph.  Header encodes n
// (one byte for n <= 62, '~' + 3 bytes up to 258047, '~~' + 6 bytes beyond);
// the upper triangle follows column by column, packed 6 bits per byte, MSB
// first, offset by 63, zero-padded to a byte boundary.

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_graph6(const Graph& g);

// Decodes one complete record (no trailing newline).  Throws Graph6Error on
// malformed input: bad header, out-of-range byte, wrong length, or nonzero
// padding bits.
Graph from_graph6(std::string_view record);

} // namespace qpath
