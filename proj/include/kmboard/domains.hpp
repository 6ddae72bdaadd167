#ifndef KMBOARD_DOMAINS_HPP_
#define KMBOARD_DOMAINS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kmboard/pairs.hpp"

namespace kmboard {

inline constexpr std::size_t kExtensionCap = 1000000;

/// Partial order on t_1, t_3, ..., t_{2k+1}. A relation (a, b) over odd
/// labels reads t_a >= t_b. Variable index of label a is (a-1)/2.
class TimePoset {
 public:
  TimePoset() = default;
  /// Throws Error on a cycle or on labels outside 1..2k+1.
  TimePoset(int k, const std::vector<std::pair<int, int>>& relations);

  int k() const { return k_; }
  int variables() const { return k_ + 1; }
  /// t_a >= t_b is implied (a != b).
  bool implies(int a, int b) const;
  /// Transitive reduction, sorted.
  const std::vector<std::pair<int, int>>& reduction() const { return reduction_; }
  /// closure()[v] has bit w set when variable v lies above variable w.
  const std::vector<std::uint64_t>& closure() const { return above_; }

  bool operator==(const TimePoset& o) const { return k_ == o.k_ && above_ == o.above_; }

 private:
  int k_ = 0;
  std::vector<std::uint64_t> above_;
  std::vector<std::pair<int, int>> reduction_;
};

/// Odd labels from largest time to smallest.
using TotalOrder = std::vector<int>;

TimePoset td_domain(const CollapsingPair& pair);
TimePoset tc_domain(const CollapsingPair& pair);
/// Requires a reference pair (NotReference otherwise).
TimePoset tr_domain(const CollapsingPair& reference);
/// The closed formula without the precondition.
TimePoset tr_formula(const CollapsingPair& pair);

/// t_a >= t_b becomes t_{sigma(a)} >= t_{sigma(b)}.
TimePoset relabel_domain(const TimePoset& poset, const TimePermutation& sigma);

std::uint64_t count_linear_extensions(const TimePoset& poset);
std::vector<TotalOrder> linear_extensions(const TimePoset& poset, std::size_t cap = kExtensionCap);
bool is_linear_extension(const TimePoset& poset, const TotalOrder& order);

/// rho with rho(2j) < rho(2l) for every tree edge 2l -> 2j.
std::vector<TimePermutation> sigma_set(const CollapsingPair& pair, std::size_t cap = kExtensionCap);
/// t_1 >= t_{rho^-1(2)+1} >= ... >= t_{rho^-1(2k)+1}.
TotalOrder order_of(const TimePermutation& rho);
TimePermutation permutation_of(const TotalOrder& order);

std::string relations_text(const TimePoset& poset);
std::string relations_json(const TimePoset& poset);

}  // namespace kmboard

#endif  // KMBOARD_DOMAINS_HPP_
