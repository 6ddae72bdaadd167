#include "kmboard/verify.hpp"

#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "kmboard/canonical.hpp"
#include "kmboard/counting.hpp"
#include "kmboard/domains.hpp"
#include "kmboard/duhamel.hpp"
#include "kmboard/errors.hpp"
#include "kmboard/moves.hpp"
#include "kmboard/symexpr.hpp"
#include "kmboard/trees.hpp"

namespace kmboard {

CollapsingPair random_pair(int k, std::mt19937_64& rng, bool is_signed) {
  if (k < 1) throw OutOfRange("k must be >= 1");
  std::vector<int> mu(k);
  std::vector<Sign> sgn(k, Sign::Plus);
  for (int j = 1; j <= k; ++j) {
    mu[j - 1] = std::uniform_int_distribution<int>(1, 2 * j - 1)(rng);
    if (is_signed && (rng() & 1)) sgn[j - 1] = Sign::Minus;
  }
  return validate_pair(k, std::move(mu), std::move(sgn));
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"catalan", "tamed-unique", "reference-unique", "domain-bijection",
                                                 "compat", "mass", "duhamel"};
  return names;
}

namespace {

constexpr int kRandomSamples = 200;
constexpr int kExhaustiveDomainK = 6;
constexpr int kExhaustiveDuhamelK = 4;

std::string str(const BigInt& b) { return b.str(); }

void line(CheckResult& r, const std::string& label, const std::string& got, const std::string& want,
          const std::string& want_label = "") {
  bool ok = got == want;
  r.ok = r.ok && ok;
  std::string rhs = want_label.empty() ? want : want_label + ": " + want;
  r.lines.push_back(label + ": " + got + " == " + rhs + (ok ? " OK" : " FAIL"));
}

void require_census_range(int k) {
  if (k < 1) throw OutOfRange("k must be >= 1");
  if (k > kCensusCap) throw CapExceeded("exhaustive checks are capped at k=" + std::to_string(kCensusCap));
}

std::vector<CollapsingPair> tamed_pairs(int k) {
  std::vector<CollapsingPair> out;
  PairStream(k, true).for_each([&](const CollapsingPair& p) {
    if (is_tamed(p)) out.push_back(p);
  });
  return out;
}

CheckResult check_catalan(int k) {
  require_census_range(k);
  CheckResult r;
  std::unordered_map<std::string, int> echelon;
  PairStream(k, false).for_each([&](const CollapsingPair& p) {
    int& n = echelon[skeleton_key(p, false)];
    if (is_upper_echelon(p)) ++n;
  });
  int bad = 0;
  for (auto& [key, n] : echelon) bad += n != 1;
  line(r, "unsigned classes", std::to_string(echelon.size()), str(catalan_ternary(k)),
       "catalan(" + std::to_string(k) + ")");
  line(r, "classes without a unique echelon map", std::to_string(bad), "0");
  r.json = "{\"unsigned_classes\":" + std::to_string(echelon.size()) + ",\"catalan\":" + str(catalan_ternary(k)) + "}";
  return r;
}

CheckResult check_tamed_unique(int k) {
  require_census_range(k);
  CheckResult r;
  std::unordered_map<std::string, int> tamed;
  std::uint64_t count = 0;
  PairStream(k, true).for_each([&](const CollapsingPair& p) {
    int& n = tamed[skeleton_key(p, true)];
    if (is_tamed(p)) {
      ++n;
      ++count;
    }
  });
  int bad = 0;
  for (auto& [key, n] : tamed) bad += n != 1;
  BigInt want = catalan_ternary(k) * (BigInt(1) << k);
  std::string label = "catalan(" + std::to_string(k) + ")*2^" + std::to_string(k);
  line(r, "signed classes", std::to_string(tamed.size()), str(want), label);
  line(r, "tamed pairs", std::to_string(count), str(want), label);
  line(r, "classes without a unique tamed pair", std::to_string(bad), "0");
  r.json = "{\"signed_classes\":" + std::to_string(tamed.size()) + ",\"tamed\":" + std::to_string(count) + "}";
  return r;
}

CheckResult check_reference_unique(int k) {
  require_census_range(k);
  CheckResult r;
  std::vector<CollapsingPair> tamed = tamed_pairs(k);
  std::set<CollapsingPair> tamed_set(tamed.begin(), tamed.end());
  std::map<CollapsingPair, int> hits;
  int references = 0, second_refs = 0, escaped = 0;
  for (const auto& p : tamed) {
    if (!is_reference(p)) continue;
    ++references;
    for (const auto& rho : allowable_permutations(p)) {
      CollapsingPair q = apply_wild(p, rho);
      if (!tamed_set.count(q)) ++escaped;
      if (q != p && is_reference(q)) ++second_refs;
      ++hits[q];
    }
  }
  int multiply = 0;
  for (auto& [q, n] : hits) multiply += n != 1;
  line(r, "tamed pairs covered by reference orbits", std::to_string(hits.size()), std::to_string(tamed.size()));
  line(r, "tamed pairs in two orbits", std::to_string(multiply), "0");
  line(r, "orbits with a second reference", std::to_string(second_refs), "0");
  line(r, "wild images outside the tamed set", std::to_string(escaped), "0");
  r.json = "{\"reference_pairs\":" + std::to_string(references) + ",\"tamed\":" + std::to_string(tamed.size()) + "}";
  return r;
}

bool bijection_holds(const CollapsingPair& p) {
  std::vector<TimePermutation> sigmas = sigma_set(p);
  TimePoset td = td_domain(p);
  std::set<TotalOrder> orders;
  for (const auto& rho : sigmas) {
    TotalOrder o = order_of(rho);
    if (!is_linear_extension(td, o) || permutation_of(o) != rho) return false;
    orders.insert(o);
  }
  return orders.size() == sigmas.size() && sigmas.size() == count_linear_extensions(td);
}

CheckResult check_domain_bijection(int k, std::uint64_t seed) {
  if (k < 1) throw OutOfRange("k must be >= 1");
  CheckResult r;
  int tested = 0, bad = 0;
  if (k <= kExhaustiveDomainK) {
    PairStream(k, false).for_each([&](const CollapsingPair& p) {
      ++tested;
      bad += !bijection_holds(p);
    });
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < kRandomSamples; ++i) {
      ++tested;
      bad += !bijection_holds(random_pair(k, rng, false));
    }
  }
  line(r, "trees where sigma set and T_D orders disagree (of " + std::to_string(tested) + ")", std::to_string(bad), "0");
  r.json = "{\"trees\":" + std::to_string(tested) + ",\"failures\":" + std::to_string(bad) + "}";
  return r;
}

CheckResult check_compat(int k) {
  require_census_range(k);
  CheckResult r;
  int references = 0, bad = 0;
  PairStream(k, true).for_each([&](const CollapsingPair& p) {
    if (!is_reference(p)) return;
    ++references;
    bad += !(tr_formula(p) == tc_domain(p));
  });
  line(r, "reference pairs with T_R != T_C (of " + std::to_string(references) + ")", std::to_string(bad), "0");
  r.json = "{\"reference_pairs\":" + std::to_string(references) + ",\"failures\":" + std::to_string(bad) + "}";
  return r;
}

CheckResult check_mass(int k) {
  require_census_range(k);
  CheckResult r;
  BigInt mass = 0;
  int overlaps = 0, outside = 0, unfilled = 0;
  PairStream(k, true).for_each([&](const CollapsingPair& p) {
    if (!is_reference(p)) return;
    TimePoset tc = tc_domain(p);
    std::uint64_t n = count_linear_extensions(tc);
    mass += n;
    std::set<TotalOrder> seen;
    for (const auto& rho : allowable_permutations(p)) {
      CollapsingPair q = apply_wild(p, rho);
      for (auto& o : linear_extensions(relabel_domain(td_domain(q), inverse(rho)))) {
        if (!is_linear_extension(tc, o)) ++outside;
        if (!seen.insert(o).second) ++overlaps;
      }
    }
    unfilled += seen.size() != n;
  });
  line(r, "sum of |T_C| over reference pairs", str(mass), str(signed_pair_total(k)),
       "(2k-1)!!*2^k");
  line(r, "overlapping simplex pieces", std::to_string(overlaps), "0");
  line(r, "piece orders outside T_C", std::to_string(outside), "0");
  line(r, "reference pairs whose pieces do not fill T_C", std::to_string(unfilled), "0");
  r.json = "{\"mass\":" + str(mass) + ",\"expected\":" + str(signed_pair_total(k)) + "}";
  return r;
}

CheckResult check_duhamel(int k, std::uint64_t seed) {
  if (k < 1) throw OutOfRange("k must be >= 1");
  CheckResult r;
  int tested = 0, bad = 0;
  auto one = [&](const CollapsingPair& p) {
    ++tested;
    Expansion a = expand(p), b = expand_oracle(p);
    bad += !(equivalent(a.x1, b.x1) && equivalent(a.x1_prime, b.x1_prime));
  };
  if (k <= kExhaustiveDuhamelK) {
    PairStream(k, true).for_each(one);
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < kRandomSamples; ++i) one(random_pair(k, rng));
  }
  line(r, "pairs where the tree expansion differs from iterated Duhamel (of " + std::to_string(tested) + ")",
       std::to_string(bad), "0");
  r.json = "{\"pairs\":" + std::to_string(tested) + ",\"failures\":" + std::to_string(bad) + "}";
  return r;
}

}  // namespace

CheckResult run_check(const std::string& name, int k, std::uint64_t seed) {
  CheckResult r;
  if (name == "catalan") r = check_catalan(k);
  else if (name == "tamed-unique") r = check_tamed_unique(k);
  else if (name == "reference-unique") r = check_reference_unique(k);
  else if (name == "domain-bijection") r = check_domain_bijection(k, seed);
  else if (name == "compat") r = check_compat(k);
  else if (name == "mass") r = check_mass(k);
  else if (name == "duhamel") r = check_duhamel(k, seed);
  else throw OutOfRange("unknown check '" + name + "'");
  r.name = name;
  return r;
}

}  // namespace kmboard
