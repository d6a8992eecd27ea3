#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mw {

enum class Rel { Le, Eq, Ge };

struct LinCon {
  std::vector<long long> coeff;  // length p
  Rel rel = Rel::Le;
  long long rhs = 0;
};

// Bounded integer feasibility problem with an optional lazy cut family.
// The callback receives a candidate satisfying everything seen so far and
// returns the constraints it violates (empty = accept). The family must be
// finite or the search may not terminate.
struct IlpInstance {
  int p = 0;
  std::vector<long long> lower, upper;
  std::vector<LinCon> cons;
  std::function<std::vector<LinCon>(const std::vector<long long>&)> lazy_cuts;
  long long node_budget = 200'000'000;

  static constexpr long long kNoBound = (1ll << 62);

  int add_var(long long lo, long long hi) {
    lower.push_back(lo);
    upper.push_back(hi);
    return p++;
  }
};

// Depth-first search over variables in index order, values low to high, with
// interval propagation at every node. Exhaustive: returns an assignment or
// proves there is none. Throws resource_error past the node budget.
std::optional<std::vector<long long>> feasible(const IlpInstance& inst);

// Plain-text listing for debugging.
std::string dump(const IlpInstance& inst);

}  // namespace mw
