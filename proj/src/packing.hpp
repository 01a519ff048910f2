#pragma once

// Exact set packing and hitting set over bitset-encoded set systems.

#include "dicut/types.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace dicut::detail {

using Bits = boost::dynamic_bitset<>;

struct PackingProblem {
  std::size_t num_elements = 0;
  std::vector<Bits> members;  // subsets of the elements, all nonempty
  // Optional extra conflicts between members (symmetric, indexed by member).
  // Members sharing an element always conflict.
  std::vector<Bits> extra_conflict;
};

/// A largest conflict-free subfamily, as sorted member indices. Among optima
/// the first one met in the search order is returned.
std::vector<std::size_t> max_packing(const PackingProblem& p);

/// Every largest conflict-free subfamily. Throws CapExceeded past `cap`.
std::vector<std::vector<std::size_t>> all_max_packings(const PackingProblem& p, std::size_t cap);

/// A smallest element set meeting every member. Throws std::invalid_argument
/// if some member is empty.
Bits min_hitting_set(std::size_t num_elements, const std::vector<Bits>& members);

}  // namespace dicut::detail
