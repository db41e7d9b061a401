// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace survnet {

// Node identifiers are plain integers chosen by the caller (or the file
// being loaded). They are never reassigned by the library.
using NodeId = std::uint32_t;

// Stable arc identity. An arc is addressed as (source, index) where index is
// the 1-based position of the arc in its source's out-arc list, in insertion
// (file) order. Relocating an arc changes its destination but never its
// ArcRef, so step logs remain meaningful across restructuring.
struct ArcRef {
  NodeId source = 0;
  std::uint32_t index = 0;  // 1..deg_out(source)

  friend auto operator<=>(const ArcRef&, const ArcRef&) = default;
};

inline std::string to_string(const ArcRef& a) {
  return "(" + std::to_string(a.source) + "," + std::to_string(a.index) + ")";
}

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnknownNode : public Error {
 public:
  explicit UnknownNode(NodeId node)
      : Error("unknown node " + std::to_string(node)), node_(node) {}
  NodeId node() const { return node_; }

 private:
  NodeId node_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// Thrown by operations that require a structurally valid network when handed
// one that is not; the message lists the violations found.
class InvalidNetwork : public Error {
 public:
  explicit InvalidNetwork(const std::string& what) : Error(what) {}
};

}  // namespace survnet
