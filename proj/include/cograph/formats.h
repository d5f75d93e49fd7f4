// Graph interchange formats: graph6 (single-byte size form) and edge lists.

#ifndef COGRAPH_FORMATS_H_
#define COGRAPH_FORMATS_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "cograph/graph.h"

namespace cograph {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxGraph6Order = 62;

// Decodes canonical graph6 with n <= 62. Throws FormatError on a bad size
// byte, a truncated bit stream, trailing bytes, or nonzero padding bits.
Graph ParseGraph6(std::string_view text);

// Throws FormatError when n > 62.
std::string ToGraph6(const Graph& g);

// One "u v" pair per line; blank lines and '#' comments are ignored, n is
// the largest label seen. A line holding a single label declares a vertex.
// Throws FormatError on self-loops, labels < 1, or malformed tokens.
Graph ParseEdgeList(std::string_view text);

// Isolated vertices above the largest edge endpoint are declared on their
// own line so the order survives a round trip.
std::string ToEdgeList(const Graph& g);

}  // namespace cograph

#endif  // COGRAPH_FORMATS_H_
