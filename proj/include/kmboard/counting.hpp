#ifndef KMBOARD_COUNTING_HPP_
#define KMBOARD_COUNTING_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kmboard/pairs.hpp"

namespace kmboard {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kCensusCap = 6;

BigInt binomial(int n, int r);
/// C(3k, k-1) / k.
BigInt catalan_ternary(int k);
/// (2k-1)!! * 2^k.
BigInt signed_pair_total(int k);

struct CensusReport {
  int k = 0;
  BigInt total_signed_pairs;
  std::uint64_t unsigned_classes = 0;
  std::uint64_t signed_classes = 0;
  std::uint64_t echelon_count = 0;
  std::uint64_t tamed_count = 0;
  std::uint64_t reference_count = 0;  // one per wild class
  std::map<std::uint64_t, std::uint64_t> signed_class_sizes;  // size -> number of classes
  std::map<std::uint64_t, std::uint64_t> wild_class_sizes;
  BigInt extension_mass;  // sum over reference pairs of |LE(T_C)|
  std::uint64_t min_unclogged = 0;  // over all pairs, couplings l < k with an F child
  double elapsed_seconds = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Streams every signed pair of order k and checks the global invariants.
/// `deep` adds the per-pair reductions (to_tamed, to_reference) on every member.
CensusReport census(int k, bool deep = true, int cap = kCensusCap);

std::string census_json(const CensusReport& r);

}  // namespace kmboard

#endif  // KMBOARD_COUNTING_HPP_
