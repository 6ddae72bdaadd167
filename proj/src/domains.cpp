#include "kmboard/domains.hpp"

#include <algorithm>

#include "kmboard/canonical.hpp"
#include "kmboard/duhamel.hpp"
#include "kmboard/trees.hpp"

namespace kmboard {

TimePoset::TimePoset(int k, const std::vector<std::pair<int, int>>& relations) : k_(k) {
  const int n = k + 1;
  if (n > 63) throw OutOfRange("posets are limited to 63 variables");
  above_.assign(n, 0);
  for (auto [a, b] : relations) {
    if (a < 1 || b < 1 || a > 2 * k + 1 || b > 2 * k + 1 || a % 2 == 0 || b % 2 == 0)
      throw OutOfRange("relation t_" + std::to_string(a) + ">=t_" + std::to_string(b));
    if (a == b) continue;
    above_[(a - 1) / 2] |= std::uint64_t{1} << ((b - 1) / 2);
  }
  // Warshall on bit rows
  for (int m = 0; m < n; ++m)
    for (int v = 0; v < n; ++v)
      if (above_[v] >> m & 1) above_[v] |= above_[m];
  for (int v = 0; v < n; ++v)
    if (above_[v] >> v & 1) throw Error("time relations contain a cycle through t_" + std::to_string(2 * v + 1));
  for (int v = 0; v < n; ++v) {
    std::uint64_t covered = 0;
    for (int w = 0; w < n; ++w)
      if (above_[v] >> w & 1) covered |= above_[w];
    for (int w = 0; w < n; ++w)
      if ((above_[v] >> w & 1) && !(covered >> w & 1)) reduction_.emplace_back(2 * v + 1, 2 * w + 1);
  }
}

bool TimePoset::implies(int a, int b) const { return above_[(a - 1) / 2] >> ((b - 1) / 2) & 1; }

TimePoset td_domain(const CollapsingPair& pair) {
  SignedTree t = tree_from_pair(pair);
  std::vector<std::pair<int, int>> rel;
  for (int j = 1; j <= pair.k; ++j) rel.emplace_back(2 * t.parent[j] + 1, 2 * j + 1);
  return TimePoset(pair.k, rel);
}

TimePoset tc_domain(const CollapsingPair& pair) {
  DTree t = build_dtree(pair);
  std::vector<std::pair<int, int>> rel;
  for (int j = 1; j <= pair.k; ++j) rel.emplace_back(2 * t.parent[j] + 1, 2 * j + 1);
  return TimePoset(pair.k, rel);
}

TimePoset tr_formula(const CollapsingPair& p) {
  std::vector<std::pair<int, int>> rel;
  for (int l = 1; l <= p.k; ++l) {
    for (int j = 1; j < l; ++j)
      if (p.mu_j(j) == p.mu_j(l) && p.sgn_j(j) == p.sgn_j(l)) rel.emplace_back(2 * j + 1, 2 * l + 1);
    int j = p.mu_j(l) / 2;  // mu(2l) in {2j, 2j+1}; j = 0 for mu(2l) = 1
    rel.emplace_back(2 * j + 1, 2 * l + 1);
  }
  return TimePoset(p.k, rel);
}

TimePoset tr_domain(const CollapsingPair& reference) {
  if (!is_reference(reference)) throw NotReference("not a reference pair: " + to_string(reference));
  return tr_formula(reference);
}

TimePoset relabel_domain(const TimePoset& poset, const TimePermutation& sigma) {
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : poset.reduction()) rel.emplace_back(sigma.apply(a), sigma.apply(b));
  return TimePoset(poset.k(), rel);
}

std::uint64_t count_linear_extensions(const TimePoset& poset) {
  const int n = poset.variables();
  if (n > 26) throw CapExceeded("linear extension counting is limited to 26 variables");
  // below[v]: variables that must be placed before v (those above it in time)
  std::vector<std::uint64_t> before(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (poset.closure()[v] >> w & 1) before[w] |= std::uint64_t{1} << v;
  const std::size_t full = (std::size_t{1} << n);
  std::vector<std::uint64_t> ways(full, 0);
  ways[0] = 1;
  for (std::size_t s = 0; s < full; ++s) {
    if (!ways[s]) continue;
    for (int v = 0; v < n; ++v)
      if (!(s >> v & 1) && (before[v] & ~s) == 0) ways[s | (std::size_t{1} << v)] += ways[s];
  }
  return ways[full - 1];
}

std::vector<TotalOrder> linear_extensions(const TimePoset& poset, std::size_t cap) {
  const int n = poset.variables();
  std::vector<std::uint64_t> before(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (poset.closure()[v] >> w & 1) before[w] |= std::uint64_t{1} << v;
  std::vector<TotalOrder> out;
  TotalOrder cur;
  auto rec = [&](auto&& self, std::uint64_t placed) -> void {
    if (static_cast<int>(cur.size()) == n) {
      if (out.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " linear extensions");
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((placed >> v & 1) || (before[v] & ~placed)) continue;
      cur.push_back(2 * v + 1);
      self(self, placed | (std::uint64_t{1} << v));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool is_linear_extension(const TimePoset& poset, const TotalOrder& order) {
  if (static_cast<int>(order.size()) != poset.variables()) return false;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (poset.implies(order[j], order[i])) return false;
  return true;
}

std::vector<TimePermutation> sigma_set(const CollapsingPair& pair, std::size_t cap) {
  const int k = pair.k;
  SignedTree t = tree_from_pair(pair);
  std::vector<TimePermutation> out;
  TimePermutation rho = TimePermutation::identity(k);
  std::vector<char> used(k + 1, 0);
  // assign rho(2j) for j = 1..k; a parent always has a smaller index than its child
  auto rec = [&](auto&& self, int j) -> void {
    if (j > k) {
      if (out.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " relabelings");
      out.push_back(rho);
      return;
    }
    int floor = t.parent[j] > 0 ? rho.image[t.parent[j] - 1] / 2 : 0;
    for (int v = floor + 1; v <= k; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      rho.image[j - 1] = 2 * v;
      self(self, j + 1);
      used[v] = 0;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

TotalOrder order_of(const TimePermutation& rho) {
  TimePermutation inv = inverse(rho);
  TotalOrder o{1};
  for (int j = 1; j <= rho.k; ++j) o.push_back(inv.image[j - 1] + 1);
  return o;
}

TimePermutation permutation_of(const TotalOrder& order) {
  const int k = static_cast<int>(order.size()) - 1;
  if (k < 1 || order[0] != 1) throw OutOfRange("order must start with t_1");
  TimePermutation rho;
  rho.k = k;
  rho.image.assign(k, 0);
  for (int i = 1; i <= k; ++i) rho.image[(order[i] - 1) / 2 - 1] = 2 * i;
  return TimePermutation::from_images(rho.image);
}

std::string relations_text(const TimePoset& poset) {
  std::string s;
  for (auto [a, b] : poset.reduction()) s += "t_" + std::to_string(a) + ">=t_" + std::to_string(b) + "\n";
  return s;
}

std::string relations_json(const TimePoset& poset) {
  std::string s = "[";
  bool first = true;
  for (auto [a, b] : poset.reduction()) {
    if (!first) s += ',';
    first = false;
    s += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  }
  return s + "]";
}

}  // namespace kmboard
