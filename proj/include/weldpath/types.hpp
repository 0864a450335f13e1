#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weldpath {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = ~Vertex{0};

enum class Color : std::uint8_t { Black, White };

constexpr Color opposite(Color c) noexcept {
  return c == Color::Black ? Color::White : Color::Black;
}

const char* to_string(Color c) noexcept;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One endpoint pair of a paired disjoint path cover: the path must run s -> t.
struct Pair {
  Vertex s;
  Vertex t;
  friend bool operator==(const Pair&, const Pair&) = default;
};

using PairSpec = std::vector<Pair>;
using Path = std::vector<Vertex>;
using PathCover = std::vector<Path>;

// Error hierarchy. Everything the library throws derives from Error.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: out-of-range ids, duplicate endpoints, bad params.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A weld tree or generated graph violates a structural invariant.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Schema violation while reading a weld-spec, pairs, or cover document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The oracle was asked to search a graph above its configured size bound.
class OracleRefusal : public Error {
 public:
  using Error::Error;
};

}  // namespace weldpath
