#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "supertrop/scalar.hpp"

namespace supertrop::detail {

/// Square weight grid; nullopt marks a forbidden edge.
using WeightGrid = std::vector<std::vector<std::optional<GroupValue>>>;

struct Assignment {
  std::vector<std::size_t> perm;
  GroupValue total;
};

/// Maximum-weight perfect matching over the allowed edges, or nullopt when
/// none exists. Kuhn-Munkres with potentials, exact rationals.
std::optional<Assignment> max_weight_assignment(const WeightGrid& weights);

}  // namespace supertrop::detail
