#pragma once

#include <string>
#include <string_view>

#include "pturan/graph.hpp"

namespace pturan {

// graph6 short form (n <= 62): one byte n+63, then the upper adjacency
// triangle column-major at 6 bits per byte, offset 63.
std::string g6_encode(const Graph& g);

// Accepts graph6 (short and long n-form) and sparse6 (":" prefix); optional
// ">>graph6<<" / ">>sparse6<<" headers are skipped. Throws ParseError with a
// byte offset on malformed input, SizeError above the vertex cap.
Graph g6_decode(std::string_view text);

}  // namespace pturan
