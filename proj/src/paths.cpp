#include "starhess/paths.hpp"

namespace starhess {
namespace paths {

std::vector<std::vector<std::string>> list_dyck_paths(int r, Point start, Point end) {
  if (r < 1) throw UsageError("need r >= 1");
  if (start.x < 0 || start.y < 0 || end.y < 0) throw UsageError("lattice points live in N x N");
  std::vector<std::vector<std::string>> out;
  if (end.x < start.x) return out;
  std::vector<std::string> steps;
  auto dfs = [&](auto&& self, long x, long y) -> void {
    if (x == end.x) {
      if (y == end.y) out.push_back(steps);
      return;
    }
    long remaining = end.x - x;
    long deficit = remaining - (end.y - y);
    if (deficit < 0 || deficit % (r + 1) != 0) return;
    if (y - static_cast<long>(r) * remaining > end.y) return;
    steps.push_back("R");
    self(self, x + 1, y + 1);
    steps.pop_back();
    if (y >= r) {
      steps.push_back("F");
      self(self, x + 1, y - r);
      steps.pop_back();
    }
  };
  dfs(dfs, start.x, start.y);
  return out;
}

}  // namespace paths
}  // namespace starhess
