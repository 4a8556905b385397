#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperquad/bitset.hpp"

namespace hyperquad {

/// Header-free graph6 encoding of a simple undirected graph given as a
/// symmetric, irreflexive adjacency matrix. Supports up to 258047 vertices.
std::string graph6_encode(const std::vector<Bitset>& adjacency);

/// Inverse of graph6_encode; validates length and character range.
std::vector<Bitset> graph6_decode(std::string_view text);

} // namespace hyperquad
