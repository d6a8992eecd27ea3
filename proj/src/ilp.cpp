#include "mw/ilp.hpp"

#include <algorithm>
#include <stdexcept>

#include "mw/errors.hpp"

namespace mw {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

struct Solver {
  const IlpInstance& inst;
  std::vector<LinCon> cuts;
  long long nodes = 0;
  bool restart = false;  // raised when a leaf grew the cut pool

  explicit Solver(const IlpInstance& i) : inst(i) {}

  void bump() {
    if (++nodes > inst.node_budget)
      throw resource_error("ilp: search-node budget exceeded");
  }

  // Tighten [lo,hi] from one inequality sum(a*x) <= rhs. Returns false on
  // a detected conflict.
  bool tighten_le(const std::vector<long long>& a, long long rhs,
                  std::vector<long long>& lo, std::vector<long long>& hi,
                  bool& changed) {
    long long min_act = 0;
    for (int j = 0; j < inst.p; ++j) {
      if (a[j] > 0)
        min_act += a[j] * lo[j];
      else if (a[j] < 0)
        min_act += a[j] * hi[j];
    }
    if (min_act > rhs) return false;
    for (int j = 0; j < inst.p; ++j) {
      if (a[j] == 0) continue;
      long long others = min_act - (a[j] > 0 ? a[j] * lo[j] : a[j] * hi[j]);
      long long room = rhs - others;  // a[j]*x <= room
      if (a[j] > 0) {
        long long nb = floor_div(room, a[j]);
        if (nb < hi[j]) {
          hi[j] = nb;
          changed = true;
          if (lo[j] > hi[j]) return false;
        }
      } else {
        long long nb = ceil_div(room, a[j]);
        if (nb > lo[j]) {
          lo[j] = nb;
          changed = true;
          if (lo[j] > hi[j]) return false;
        }
      }
    }
    return true;
  }

  bool apply(const LinCon& c, std::vector<long long>& lo,
             std::vector<long long>& hi, bool& changed) {
    static thread_local std::vector<long long> neg;
    if (c.rel == Rel::Le || c.rel == Rel::Eq)
      if (!tighten_le(c.coeff, c.rhs, lo, hi, changed)) return false;
    if (c.rel == Rel::Ge || c.rel == Rel::Eq) {
      neg.assign(c.coeff.size(), 0);
      for (std::size_t j = 0; j < c.coeff.size(); ++j) neg[j] = -c.coeff[j];
      if (!tighten_le(neg, -c.rhs, lo, hi, changed)) return false;
    }
    return true;
  }

  bool propagate(std::vector<long long>& lo, std::vector<long long>& hi) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : inst.cons)
        if (!apply(c, lo, hi, changed)) return false;
      for (const auto& c : cuts)
        if (!apply(c, lo, hi, changed)) return false;
    }
    return true;
  }

  bool satisfies(const LinCon& c, const std::vector<long long>& x) const {
    long long act = 0;
    for (int j = 0; j < inst.p; ++j) act += c.coeff[j] * x[j];
    switch (c.rel) {
      case Rel::Le: return act <= c.rhs;
      case Rel::Eq: return act == c.rhs;
      case Rel::Ge: return act >= c.rhs;
    }
    return false;
  }

  std::optional<std::vector<long long>> dfs(std::vector<long long> lo,
                                            std::vector<long long> hi) {
    bump();
    if (!propagate(lo, hi)) return std::nullopt;
    int branch = -1;
    for (int j = 0; j < inst.p; ++j)
      if (lo[j] < hi[j]) {
        branch = j;
        break;
      }
    if (branch < 0) {
      // fully fixed; re-verify and run cut separation
      for (const auto& c : inst.cons)
        if (!satisfies(c, lo)) return std::nullopt;
      for (const auto& c : cuts)
        if (!satisfies(c, lo)) return std::nullopt;
      if (inst.lazy_cuts) {
        auto extra = inst.lazy_cuts(lo);
        if (!extra.empty()) {
          for (auto& c : extra) {
            if ((int)c.coeff.size() != inst.p)
              throw std::invalid_argument("ilp: cut has wrong arity");
            cuts.push_back(std::move(c));
          }
          // candidate rejected; rewind so propagation sees the new cuts
          // from the top of the tree
          restart = true;
          return std::nullopt;
        }
      }
      return lo;
    }
    // bisect the domain, lower half first; the branch variable keeps being
    // picked until it is fixed, so assignments come out lexicographically
    // smallest over the variable order
    long long mid = lo[branch] + (hi[branch] - lo[branch]) / 2;
    {
      auto nlo = lo, nhi = hi;
      nhi[branch] = mid;
      if (auto r = dfs(std::move(nlo), std::move(nhi))) return r;
      if (restart) return std::nullopt;
    }
    {
      auto nlo = std::move(lo), nhi = std::move(hi);
      nlo[branch] = mid + 1;
      if (auto r = dfs(std::move(nlo), std::move(nhi))) return r;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<long long>> feasible(const IlpInstance& inst) {
  if ((int)inst.lower.size() != inst.p || (int)inst.upper.size() != inst.p)
    throw std::invalid_argument("ilp: bounds size mismatch");
  for (int j = 0; j < inst.p; ++j) {
    if (inst.lower[j] <= -IlpInstance::kNoBound ||
        inst.upper[j] >= IlpInstance::kNoBound)
      throw std::invalid_argument("ilp: unbounded variable " + std::to_string(j));
    if (inst.lower[j] > inst.upper[j]) return std::nullopt;
  }
  for (const auto& c : inst.cons)
    if ((int)c.coeff.size() != inst.p)
      throw std::invalid_argument("ilp: constraint has wrong arity");
  Solver s(inst);
  // each pass either finishes or grows the (finite) cut pool
  while (true) {
    s.restart = false;
    auto r = s.dfs(inst.lower, inst.upper);
    if (r || !s.restart) return r;
  }
}

std::string dump(const IlpInstance& inst) {
  std::string out = "vars " + std::to_string(inst.p) + "\n";
  for (int j = 0; j < inst.p; ++j)
    out += "  x" + std::to_string(j) + " in [" + std::to_string(inst.lower[j]) +
           ", " + std::to_string(inst.upper[j]) + "]\n";
  auto line = [&](const LinCon& c) {
    std::string s = "  ";
    bool first = true;
    for (int j = 0; j < inst.p; ++j) {
      if (c.coeff[j] == 0) continue;
      if (!first) s += " + ";
      first = false;
      s += std::to_string(c.coeff[j]) + " x" + std::to_string(j);
    }
    if (first) s += "0";
    s += c.rel == Rel::Le ? " <= " : (c.rel == Rel::Eq ? " = " : " >= ");
    s += std::to_string(c.rhs) + "\n";
    return s;
  };
  out += "subject to\n";
  for (const auto& c : inst.cons) out += line(c);
  return out;
}

}  // namespace mw
