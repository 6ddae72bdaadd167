#ifndef KMBOARD_VERIFY_HPP_
#define KMBOARD_VERIFY_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kmboard/pairs.hpp"

namespace kmboard {

/// Uniform over legal pairs of order k.
CollapsingPair random_pair(int k, std::mt19937_64& rng, bool is_signed = true);

struct CheckResult {
  std::string name;
  bool ok = true;
  std::vector<std::string> lines;  // human-readable report
  std::string json;                // machine-readable summary
};

/// catalan, tamed-unique, reference-unique, domain-bijection, compat, mass, duhamel
const std::vector<std::string>& check_names();
/// Throws OutOfRange for an unknown name.
CheckResult run_check(const std::string& name, int k, std::uint64_t seed);

}  // namespace kmboard

#endif  // KMBOARD_VERIFY_HPP_
