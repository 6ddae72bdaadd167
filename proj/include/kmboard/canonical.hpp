#ifndef KMBOARD_CANONICAL_HPP_
#define KMBOARD_CANONICAL_HPP_

#include <vector>

#include "kmboard/pairs.hpp"

namespace kmboard {

/// Minimal q with mu^q(label) = 1, using the odd extension at every step.
int tier(const CollapsingPair& pair, int label);
/// Tiers of all even labels; entry j-1 holds t(2j).
std::vector<int> tiers(const CollapsingPair& pair);

bool is_upper_echelon(const CollapsingPair& pair);
bool is_tamed(const CollapsingPair& pair);
bool is_reference(const CollapsingPair& pair);

struct Reduction {
  CollapsingPair pair;
  std::vector<int> moves;  // adjacent KM moves (2j, 2j+2) by j, in application order
};

/// Tamed form of the signed KM class, with the moves that reach it.
Reduction to_tamed(const CollapsingPair& pair);
/// Upper echelon form of the unsigned KM class; signs are carried along.
Reduction to_echelon(const CollapsingPair& pair);

struct ReferenceResult {
  CollapsingPair reference;
  TimePermutation rho;  // tamed = W(rho)(reference)
};

ReferenceResult to_reference(const CollapsingPair& tamed);

}  // namespace kmboard

#endif  // KMBOARD_CANONICAL_HPP_
