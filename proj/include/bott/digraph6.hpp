#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bott/matrix.hpp"

namespace bott {

// digraph6 line format: '&', the graph6 size encoding of n, then the n*n
// adjacency bits row-major, packed big-endian into 6-bit groups offset by 63.

// Decodes without any acyclicity requirement (for raw checks).
std::pair<int, std::vector<std::uint64_t>> decode_digraph6_raw(std::string_view line);

// Decodes and validates; throws MalformedD6 on encoding problems and
// NotAcyclic when the digraph has a directed cycle or self-loop.
BottMatrix parse_digraph6(std::string_view line);

std::string encode_digraph6(const BottMatrix& a);

}  // namespace bott
