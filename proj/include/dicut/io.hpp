#pragma once

// Text formats.
//
// Edge list: one edge per line as `TAIL HEAD`. Tokens are any non-whitespace
// strings not starting with '#' or '@'. A token starting with '#' begins a
// comment. Repeated lines give parallel edges. `@vertex NAME` declares a
// vertex; vertices get ids in order of first appearance, edges in line order.
// The serializer writes every vertex as `@vertex` first, so parsing its
// output reproduces ids exactly.
//
// Class file: one in-shore per line, as vertex names.
// Hypergraph file: one hyperedge per line, as vertex tokens.
// Menger file: undirected edges `U V`, plus `@A names...` and `@B names...`.

#include "dicut/families.hpp"
#include "dicut/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dicut {

/// Throws ParseError(line, reason).
Digraph parse_digraph(std::string_view text);
/// Throws std::invalid_argument for names the format cannot carry.
std::string serialize_digraph(const Digraph& d);

/// In-shores naming vertices of D. Lines that are not dicuts are errors.
std::vector<Dicut> parse_class(const Digraph& d, std::string_view text);
std::string serialize_class(const Digraph& d, const std::vector<Dicut>& members);

Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

struct MengerInput {
  UndirectedGraph graph;
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
};
MengerInput parse_menger(std::string_view text);

/// Sidecar of an exported window: `class <window-vertex> <symbolic names...>`.
std::string serialize_class_map(const FamilyWindow& w);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string digest(std::string_view text);

}  // namespace dicut
