#include "ifss/score.hpp"

#include <algorithm>
#include <cmath>

namespace ifss {

std::vector<ScoreEntry> rank_by_score(const IFSoftSet& s) {
  const auto elements = s.universe().elements();
  std::vector<ScoreEntry> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    double total = 0.0;
    for (const auto& [param, set] : s.assignment()) total += set[i].mu() - set[i].nu();
    out.push_back({elements[i], total});
  }
  // Quantized key: a strict weak order that still treats round-off as a tie.
  auto key = [](double v) { return std::llround(v * 1e9); };
  std::stable_sort(out.begin(), out.end(), [&](const ScoreEntry& a, const ScoreEntry& b) {
    return key(a.score) > key(b.score);
  });
  return out;
}

}  // namespace ifss
