#pragma once

#include <optional>
#include <string>
#include <vector>

namespace starhess {
namespace verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Suite identifiers, in order:
///   1 factorisation   product vs closed-form entries
///   2 production      output matrix vs path enumeration
///   3 components      decomposition recurrence vs characteristic polynomials
///   4 dual-moments    triangular inverses vs path enumeration
///   5 golden          Catalan / Fuss-Catalan specialisations
///   6 genetic         nested sums vs modified polynomials
///   7 tp              total positivity, symbolic and rational
///   8 zeros           root isolation and interlacing
///   9 oscillation     oscillation criterion on leading blocks
///  10 appell          hypergeometric example
///  11 orthogonality   vanishing and nonvanishing conditions
const std::vector<std::pair<int, std::string>>& catalogue();

int id_for_name(const std::string& name);  // throws UsageError on unknown names

/// Runs one criterion.  r_only restricts the swept r values; max_override
/// replaces the main size bound of the suite where one exists.  Defaults are
/// the pinned bounds.
CriterionResult run_criterion(int id, std::optional<int> r_only = std::nullopt,
                              std::optional<int> max_override = std::nullopt);

std::vector<CriterionResult> run_all();

}  // namespace verify
}  // namespace starhess
