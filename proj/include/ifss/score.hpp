#pragma once

#include <vector>

#include "ifss/softset.hpp"

namespace ifss {

struct ScoreEntry {
  ElementId element;
  double score;
};

/// Demo ranking: each element scores the sum over all parameters of
/// (mu - nu). Highest first; scores equal to 1e-9 fall back to element order.
std::vector<ScoreEntry> rank_by_score(const IFSoftSet& s);

}  // namespace ifss
