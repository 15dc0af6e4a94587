#pragma once

#include <string>
#include <string_view>

#include "symfix/graph.hpp"

namespace symfix {

/// Decode one graph6 line. Accepts an optional ">>graph6<<" prefix and only
/// the single-byte size form (n <= 62); the multi-byte size markers raise
/// CapError, any other malformation raises ParseError.
Graph parse_graph6(std::string_view line);

/// Encode to canonical graph6: size byte n+63, then the upper triangle in
/// column order (0,1),(0,2),(1,2),(0,3),... packed big-endian six bits per
/// byte, zero-padded, each value offset by 63.
std::string encode_graph6(const Graph& g);

}  // namespace symfix
