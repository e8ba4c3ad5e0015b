#pragma once

#include <cstdint>
#include <string>

#include "relana/relation.hpp"

namespace relana::io {

// Matrix format, bit-exact:
//   line 1: "m n"
//   m lines of n characters from {0,1}
//   optional trailer lines "#row <label>" then "#col <label>", one per label
std::string emit_matrix(const BitRelation& rel);

// Edge-list format:
//   line 1: "edges m n"
//   one line "i j" (1-based) per 1-entry
//   same optional label trailers
std::string emit_edges(const BitRelation& rel);

// accepts either format, chosen by the first line
BitRelation parse(const std::string& text);

// 64-bit FNV-1a over the canonical matrix-format bytes
std::uint64_t content_hash(const BitRelation& rel);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace relana::io
