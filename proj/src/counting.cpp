#include "kmboard/counting.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "kmboard/canonical.hpp"
#include "kmboard/domains.hpp"
#include "kmboard/duhamel.hpp"
#include "kmboard/moves.hpp"
#include "kmboard/trees.hpp"

namespace kmboard {

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

BigInt catalan_ternary(int k) {
  if (k < 1) throw OutOfRange("catalan_ternary needs k >= 1");
  return binomial(3 * k, k - 1) / k;
}

BigInt signed_pair_total(int k) {
  BigInt t = 1;
  for (int j = 1; j <= k; ++j) t *= 2 * j - 1;
  return t << k;
}

namespace {

struct SignedBucket {
  std::uint64_t size = 0;
  std::uint64_t tamed = 0;
  CollapsingPair tamed_form;  // from to_tamed of the first member
  bool have_form = false;
};

struct UnsignedBucket {
  std::uint64_t echelon = 0;
};

}  // namespace

CensusReport census(int k, bool deep, int cap) {
  if (k > cap) throw CapExceeded("census is capped at k=" + std::to_string(cap));
  auto t0 = std::chrono::steady_clock::now();
  CensusReport r;
  r.k = k;
  auto fail = [&](const std::string& what) {
    if (r.violations.size() < 20) r.violations.push_back(what);
  };

  std::unordered_map<std::string, SignedBucket> signed_buckets;
  std::unordered_map<std::string, UnsignedBucket> unsigned_buckets;
  std::vector<CollapsingPair> tamed_pairs;
  std::uint64_t total = 0;
  r.min_unclogged = static_cast<std::uint64_t>(k);

  PairStream(k, true).for_each([&](const CollapsingPair& p) {
    ++total;
    bool all_plus = true;
    for (Sign s : p.sgn) all_plus = all_plus && s == Sign::Plus;
    if (all_plus) {
      auto& ub = unsigned_buckets[skeleton_key(p, false)];
      if (is_upper_echelon(p)) ++ub.echelon;
    }
    auto& b = signed_buckets[skeleton_key(p, true)];
    ++b.size;
    bool tamed = is_tamed(p);
    if (tamed) {
      ++b.tamed;
      tamed_pairs.push_back(p);
    }
    if (deep) {
      Reduction red = to_tamed(p);
      if (!is_tamed(red.pair)) fail("to_tamed gave an untamed pair for " + to_string(p));
      if (apply_km_sequence(MoveState::start(p), red.moves).pair != red.pair)
        fail("to_tamed moves do not replay for " + to_string(p));
      if (!b.have_form) {
        b.tamed_form = red.pair;
        b.have_form = true;
      } else if (b.tamed_form != red.pair) {
        fail("two tamed forms in the class of " + to_string(p));
      }
      if (tamed && red.pair != p) fail("to_tamed moved the tamed pair " + to_string(p));
      std::uint64_t u = static_cast<std::uint64_t>(unclogged_count(build_dtree(p)));
      if (u < r.min_unclogged) r.min_unclogged = u;
    }
  });

  r.total_signed_pairs = total;
  r.signed_classes = signed_buckets.size();
  r.unsigned_classes = unsigned_buckets.size();
  r.tamed_count = tamed_pairs.size();
  if (BigInt(total) != signed_pair_total(k)) fail("pair total differs from (2k-1)!!2^k");

  std::uint64_t size_sum = 0;
  for (const auto& [key, b] : signed_buckets) {
    size_sum += b.size;
    ++r.signed_class_sizes[b.size];
    if (b.tamed != 1) fail("signed class " + key + " has " + std::to_string(b.tamed) + " tamed pairs");
  }
  if (size_sum != total) fail("signed class sizes do not sum to the total");
  for (const auto& [key, b] : unsigned_buckets) {
    r.echelon_count += b.echelon;
    if (b.echelon != 1) fail("unsigned class " + key + " has " + std::to_string(b.echelon) + " echelon maps");
  }
  if (BigInt(r.unsigned_classes) != catalan_ternary(k)) fail("unsigned class count differs from catalan");
  if (BigInt(r.tamed_count) != catalan_ternary(k) * (BigInt(1) << k)) fail("tamed count differs from catalan*2^k");

  // wild classes: orbits of the reference pairs must partition the tamed pairs
  std::set<CollapsingPair> tamed_set(tamed_pairs.begin(), tamed_pairs.end());
  std::set<CollapsingPair> covered;
  for (const auto& p : tamed_pairs) {
    if (!is_reference(p)) continue;
    ++r.reference_count;
    std::vector<TimePermutation> rhos = allowable_permutations(p);
    TimePoset tc = tc_domain(p);
    std::set<TotalOrder> union_orders;
    std::uint64_t part_sum = 0;
    for (const auto& rho : rhos) {
      CollapsingPair q = apply_wild(p, rho);
      if (!tamed_set.count(q)) fail("wild move left the tamed set: " + to_string(q));
      if (q != p && is_reference(q)) fail("second reference " + to_string(q) + " in the class of " + to_string(p));
      if (!covered.insert(q).second) fail("tamed pair " + to_string(q) + " reached from two references");
      if (deep) {
        ReferenceResult rr = to_reference(q);
        if (rr.reference != p || conjugate(p, rr.rho) != q) fail("to_reference mismatch for " + to_string(q));
        TimePoset piece = relabel_domain(td_domain(q), inverse(rho));
        for (auto& o : linear_extensions(piece)) {
          if (!union_orders.insert(o).second) fail("overlapping simplex pieces for " + to_string(p));
          if (!is_linear_extension(tc, o)) fail("simplex piece leaves T_C for " + to_string(p));
          ++part_sum;
        }
      }
    }
    ++r.wild_class_sizes[rhos.size()];
    std::uint64_t n = count_linear_extensions(tc);
    r.extension_mass += n;
    if (!(tr_formula(p) == tc)) fail("T_R differs from T_C for " + to_string(p));
    if (deep && part_sum != n) fail("simplex pieces do not fill T_C for " + to_string(p));
  }
  if (covered.size() != tamed_pairs.size()) fail("wild orbits miss some tamed pairs");
  if (r.extension_mass != signed_pair_total(k)) fail("extension mass differs from (2k-1)!!2^k");
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string census_json(const CensusReport& r) {
  std::ostringstream os;
  auto hist = [&](const std::map<std::uint64_t, std::uint64_t>& h) {
    os << "{";
    bool first = true;
    for (auto [size, n] : h) {
      os << (first ? "" : ",") << "\"" << size << "\":" << n;
      first = false;
    }
    os << "}";
  };
  os << "{\"k\":" << r.k << ",\"total_signed_pairs\":" << r.total_signed_pairs
     << ",\"unsigned_classes\":" << r.unsigned_classes << ",\"signed_classes\":" << r.signed_classes
     << ",\"echelon\":" << r.echelon_count << ",\"tamed\":" << r.tamed_count
     << ",\"reference_pairs\":" << r.reference_count << ",\"extension_mass\":" << r.extension_mass
     << ",\"min_unclogged\":" << r.min_unclogged << ",\"signed_class_sizes\":";
  hist(r.signed_class_sizes);
  os << ",\"wild_class_sizes\":";
  hist(r.wild_class_sizes);
  os << ",\"elapsed_seconds\":" << r.elapsed_seconds << ",\"violations\":[";
  for (std::size_t i = 0; i < r.violations.size(); ++i) os << (i ? "," : "") << "\"" << r.violations[i] << "\"";
  os << "]}";
  return os.str();
}

}  // namespace kmboard
