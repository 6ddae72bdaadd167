#ifndef KMBOARD_MOVES_HPP_
#define KMBOARD_MOVES_HPP_

#include <cstddef>
#include <vector>

#include "kmboard/pairs.hpp"

namespace kmboard {

struct MoveState {
  CollapsingPair pair;
  TimePermutation sigma;

  static MoveState start(const CollapsingPair& pair) {
    return MoveState{pair, TimePermutation::identity(pair.k)};
  }
  bool operator==(const MoveState&) const = default;
};

inline constexpr std::size_t kDefaultClassCap = 1u << 22;

/// Relabels a pair by rho: mu' = rho o mu o rho^-1, sgn' = sgn o rho^-1.
CollapsingPair conjugate(const CollapsingPair& pair, const TimePermutation& rho);

/// rho = (2j, 2j+2)(2j+1, 2j+3).
TimePermutation adjacent_swap(int k, int j);

bool is_km_admissible(const CollapsingPair& pair, int j);
std::vector<int> km_admissible_indices(const CollapsingPair& pair);

/// One adjacent move on the pair alone; throws NotAcceptable.
CollapsingPair apply_km(const CollapsingPair& pair, int j);
MoveState apply_signed_km(const MoveState& state, int j);
/// Applies the moves in order.
MoveState apply_km_sequence(const MoveState& state, const std::vector<int>& moves);

/// Closure under adjacent moves, sorted. Unsigned mode drops the signs first.
std::vector<CollapsingPair> km_class(const CollapsingPair& pair, bool is_signed,
                                     std::size_t cap = kDefaultClassCap);
/// All pairs of the same order whose (signed) skeleton matches, by exhaustive scan.
std::vector<CollapsingPair> skeleton_fiber(const CollapsingPair& pair, bool is_signed);
/// Shortest adjacent-move sequence from `from` to `to`; false if they are not related.
bool km_path(const CollapsingPair& from, const CollapsingPair& to, bool is_signed, std::vector<int>& moves,
             std::size_t cap = kDefaultClassCap);

/// rho fixes every group {2j : mu(2j) = i} and keeps same-group same-sign order.
bool is_allowable(const CollapsingPair& pair, const TimePermutation& rho);
/// Constructive generation; requires a tamed pair (NotTamed otherwise).
std::vector<TimePermutation> allowable_permutations(const CollapsingPair& pair);
/// Same generation without the tamed precondition.
std::vector<TimePermutation> allowable_permutations_any(const CollapsingPair& pair);
/// Filters all k! permutations; test oracle.
std::vector<TimePermutation> allowable_permutations_brute(const CollapsingPair& pair);

CollapsingPair apply_wild(const CollapsingPair& pair, const TimePermutation& rho);
MoveState apply_wild(const MoveState& state, const TimePermutation& rho);

/// Closure of a tamed pair under wild moves, sorted.
std::vector<CollapsingPair> wild_class(const CollapsingPair& pair, std::size_t cap = kDefaultClassCap);

}  // namespace kmboard

#endif  // KMBOARD_MOVES_HPP_
