// Copyright 2026 The discsep Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DISCSEP_SRC_TILING_INTERNAL_HPP_
#define DISCSEP_SRC_TILING_INTERNAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "discsep/tiling.hpp"

namespace discsep::internal {

// Pairwise gap required between discs of an accepted packing.
inline constexpr double kMinClearance = 1e-7;

inline std::string overlap_message(std::size_t i, std::size_t j) {
  return "not a packing: discs " + std::to_string(i) + " and " + std::to_string(j) +
         " overlap or are closer than 1e-7";
}

inline VerifyReport fail(int cell, std::string message) {
  return VerifyReport{false, std::move(message), cell};
}

inline VerifyReport count_failure(int owner, int count) {
  return fail(owner, "cell " + std::to_string(owner) + " contains " +
                         std::to_string(count) + " discs");
}

template <class Cell>
VerifyReport check_owners(const std::vector<Cell>& cells, std::size_t disc_count) {
  if (cells.size() != disc_count) {
    return fail(-1, "tiling has " + std::to_string(cells.size()) + " cells for " +
                        std::to_string(disc_count) + " discs");
  }
  std::vector<bool> seen(disc_count, false);
  for (const auto& c : cells) {
    if (c.owner < 0 || c.owner >= static_cast<int>(disc_count) || seen[c.owner]) {
      return fail(c.owner, "cell owners are not a bijection onto the discs");
    }
    seen[c.owner] = true;
  }
  return {};
}

// index[cell][j] = position of the first constraint induced by disc j, or -1.
template <class Cell>
std::vector<std::vector<int>> index_by_other(const std::vector<Cell>& cells,
                                             std::size_t disc_count) {
  std::vector<std::vector<int>> index(cells.size(), std::vector<int>(disc_count, -1));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cons = cells[c].constraints;
    for (std::size_t k = 0; k < cons.size(); ++k) {
      const int other = cons[k].other;
      if (other >= 0 && other < static_cast<int>(disc_count) && index[c][other] < 0) {
        index[c][other] = static_cast<int>(k);
      }
    }
  }
  return index;
}

}  // namespace discsep::internal

#endif  // DISCSEP_SRC_TILING_INTERNAL_HPP_
