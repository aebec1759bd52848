#pragma once

// Named generating-function pipelines built from the truncated series calculus.

#include "meshpat/series.hpp"

#include <string>
#include <vector>

namespace meshpat {

struct SeriesInfo {
  std::string id;
  std::string description;
  bool uses_k = false;
  int min_k = 0;
};

const std::vector<SeriesInfo>& series_catalog();

/// Builds the series with terms 0..order. For shifted series (ids starting
/// with "P_" or "B_", and the block series) term m corresponds to n = m +
/// series_offset(id, k).
EgfSeries build_series(const std::string& id, std::size_t order, int k = 0);
int series_offset(const std::string& id, int k = 0);

}  // namespace meshpat
