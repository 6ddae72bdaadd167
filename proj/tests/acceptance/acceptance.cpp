// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "kmboard/canonical.hpp"
#include "kmboard/counting.hpp"
#include "kmboard/domains.hpp"
#include "kmboard/duhamel.hpp"
#include "kmboard/moves.hpp"
#include "kmboard/symexpr.hpp"
#include "kmboard/trees.hpp"
#include "kmboard/verify.hpp"

using namespace kmboard;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CollapsingPair sp(std::vector<int> mu, const std::string& sgn) {
  int k = static_cast<int>(mu.size());
  return validate_pair(k, std::move(mu), parse_sign_list(sgn));
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

const CollapsingPair kSeven = sp({1, 1, 1, 2, 3, 6, 6}, "+,+,-,-,+,+,-");

Outcome catalan_census() {
  const std::uint64_t want[] = {0, 1, 3, 12, 55, 273, 1428};
  Outcome o;
  std::ostringstream note;
  for (int k = 1; k <= 6; ++k) {
    auto t0 = Clock::now();
    std::unordered_map<std::string, int> classes;
    PairStream(k, false).for_each([&](const CollapsingPair& p) { ++classes[skeleton_key(p, false)]; });
    double dt = seconds_since(t0);
    o.require(classes.size() == want[k], "k=" + std::to_string(k) + " gave " + std::to_string(classes.size()));
    if (k == 6) {
      o.require(dt < 60, "k=6 took " + std::to_string(dt) + " s");
      note << "k=6 in " << dt << " s";
    }
  }
  if (o.ok) o.detail = note.str();
  return o;
}

Outcome tamed_uniqueness() {
  Outcome o;
  for (int k = 1; k <= 5; ++k) {
    std::unordered_map<std::string, int> tamed;
    std::uint64_t total = 0;
    PairStream(k, true).for_each([&](const CollapsingPair& p) {
      int& n = tamed[skeleton_key(p, true)];
      if (is_tamed(p)) {
        ++n;
        ++total;
      }
    });
    for (const auto& [key, n] : tamed) o.require(n == 1, "class " + key + " has " + std::to_string(n) + " tamed");
    o.require(total == catalan_ternary(k) * (BigInt(1) << k), "tamed total at k=" + std::to_string(k));
    if (k == 5) o.require(total == 8736, "tamed total at k=5 is " + std::to_string(total));
  }
  return o;
}

Outcome reference_uniqueness() {
  Outcome o;
  for (int k = 1; k <= 5; ++k) {
    std::vector<CollapsingPair> tamed;
    PairStream(k, true).for_each([&](const CollapsingPair& p) {
      if (is_tamed(p)) tamed.push_back(p);
    });
    // orbit id of every tamed pair, by BFS closure independent of the reference notion
    std::map<CollapsingPair, int> orbit;
    int orbits = 0;
    for (const auto& p : tamed) {
      if (orbit.count(p)) continue;
      for (const auto& q : wild_class(p)) orbit[q] = orbits;
      ++orbits;
    }
    std::vector<int> refs(orbits, 0);
    for (const auto& p : tamed)
      if (is_reference(p)) ++refs[orbit.at(p)];
    for (int i = 0; i < orbits; ++i) o.require(refs[i] == 1, "orbit with " + std::to_string(refs[i]) + " references");
    for (const auto& q : tamed) {
      ReferenceResult rr = to_reference(q);
      o.require(is_reference(rr.reference), "to_reference returned a non-reference");
      o.require(orbit.at(rr.reference) == orbit.at(q), "to_reference left the orbit");
      o.require(is_allowable(rr.reference, rr.rho), "witness is not allowable");
      o.require(apply_wild(rr.reference, rr.rho) == q, "witness does not map back to " + to_string(q));
    }
  }
  return o;
}

Outcome table_golden() {
  Outcome o;
  const std::vector<std::vector<int>> rho = {
      {2, 4, 6, 8, 10}, {2, 4, 6, 10, 8}, {2, 4, 8, 6, 10}, {2, 4, 8, 10, 6}, {2, 4, 10, 6, 8}, {2, 4, 10, 8, 6},
      {2, 6, 8, 4, 10}, {2, 6, 8, 10, 4}, {2, 6, 10, 4, 8}, {2, 6, 10, 8, 4}, {2, 8, 10, 4, 6}, {2, 8, 10, 6, 4}};
  const std::vector<std::vector<int>> inv = {
      {2, 4, 6, 8, 10}, {2, 4, 6, 10, 8}, {2, 4, 8, 6, 10}, {2, 4, 10, 6, 8}, {2, 4, 8, 10, 6}, {2, 4, 10, 8, 6},
      {2, 8, 4, 6, 10}, {2, 10, 4, 6, 8}, {2, 8, 4, 10, 6}, {2, 10, 4, 8, 6}, {2, 8, 10, 4, 6}, {2, 10, 8, 4, 6}};
  CollapsingPair m = unsigned_pair({1, 1, 1, 2, 3});
  std::vector<TimePermutation> s = sigma_set(m);
  o.require(s.size() == 12, "|Sigma| = " + std::to_string(s.size()));
  for (std::size_t i = 0; i < s.size() && i < 12; ++i) {
    o.require(s[i].image == rho[i], "rho row " + std::to_string(i + 1));
    o.require(inverse(s[i]).image == inv[i], "rho^-1 row " + std::to_string(i + 1));
  }
  // {t1>=t3, t3>=t5>=t7, t3>=t9, t3>=t11}
  TimePoset printed(5, {{1, 3}, {3, 5}, {5, 7}, {3, 9}, {3, 11}});
  o.require(td_domain(m) == printed, "T_D differs from the printed poset");
  o.require(td_domain(m).reduction() == printed.reduction(), "T_D reduction differs");
  return o;
}

bool bijection(const CollapsingPair& p) {
  std::vector<TimePermutation> sigmas = sigma_set(p);
  TimePoset td = td_domain(p);
  std::vector<TotalOrder> ext = linear_extensions(td);
  std::set<TotalOrder> ext_set(ext.begin(), ext.end());
  std::set<TotalOrder> image;
  for (const auto& r : sigmas) {
    TotalOrder ord = order_of(r);
    if (!ext_set.count(ord)) return false;
    image.insert(ord);
  }
  return image.size() == sigmas.size() && image == ext_set;
}

Outcome domain_bijection() {
  Outcome o;
  for (int k = 1; k <= 5; ++k)
    PairStream(k, false).for_each([&](const CollapsingPair& p) { o.require(bijection(p), "fails at " + to_string(p)); });
  std::mt19937_64 rng(20240601);
  for (int k = 6; k <= 7; ++k)
    for (int i = 0; i < 200; ++i) {
      CollapsingPair p = random_pair(k, rng, false);
      o.require(bijection(p), "fails at " + to_string(p));
    }
  return o;
}

Outcome compatibility() {
  Outcome o;
  int refs = 0;
  for (int k = 1; k <= 5; ++k)
    PairStream(k, true).for_each([&](const CollapsingPair& p) {
      if (!is_reference(p)) return;
      ++refs;
      o.require(tr_domain(p) == tc_domain(p), "T_R != T_C at " + to_string(p));
    });
  std::set<std::pair<int, int>> want{{1, 3}, {1, 7}, {3, 5}, {3, 9}, {3, 11}, {7, 13}, {7, 15}};
  std::vector<std::pair<int, int>> red = tc_domain(kSeven).reduction();
  o.require(std::set<std::pair<int, int>>(red.begin(), red.end()) == want && red.size() == 7,
            "seven-relation example differs: " + relations_text(tc_domain(kSeven)));
  if (o.ok) o.detail = std::to_string(refs) + " reference pairs";
  return o;
}

Outcome mass_identity() {
  Outcome o;
  for (int k = 1; k <= 5; ++k) {
    BigInt mass = 0;
    PairStream(k, true).for_each([&](const CollapsingPair& p) {
      if (!is_reference(p)) return;
      TimePoset tc = tc_domain(p);
      std::uint64_t n = count_linear_extensions(tc);
      mass += n;
      std::set<TotalOrder> seen;
      for (const auto& rho : allowable_permutations(p)) {
        TimePoset piece = relabel_domain(td_domain(apply_wild(p, rho)), inverse(rho));
        for (const auto& ord : linear_extensions(piece)) {
          o.require(seen.insert(ord).second, "pieces overlap for " + to_string(p));
          o.require(is_linear_extension(tc, ord), "piece outside T_C for " + to_string(p));
        }
      }
      o.require(seen.size() == n, "pieces do not fill T_C for " + to_string(p));
    });
    o.require(mass == signed_pair_total(k), "mass at k=" + std::to_string(k) + " is " + mass.str());
    if (k == 5) o.require(mass == 30240, "mass at k=5 is " + mass.str());
  }
  return o;
}

Outcome duhamel_equivalence() {
  Outcome o;
  auto t0 = Clock::now();
  int n4 = 0;
  auto check = [&](const CollapsingPair& p) {
    Expansion a = expand(p), b = expand_oracle(p);
    o.require(equivalent(a.x1, b.x1) && equivalent(a.x1_prime, b.x1_prime), "differs at " + to_string(p));
  };
  for (int k = 1; k <= 4; ++k)
    PairStream(k, true).for_each([&](const CollapsingPair& p) {
      n4 += k == 4;
      check(p);
    });
  o.require(n4 == 1680, "k=4 pair count " + std::to_string(n4));
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) check(random_pair(6, rng));
  Expansion e = expand(kSeven);
  o.require(render_text(e.x1) ==
                "U_{1,3}{(U_{3,5}(|U_{5,15}phi|^4U_{5,15}phi))(|U_{3,15}phi|^2)(conj(U_{3,9}(|U_{9,15}phi|^4U_{9,15}phi)))"
                "(U_{3,11}(|U_{11,15}phi|^4U_{11,15}phi))}",
            "x1 rendering: " + render_text(e.x1));
  o.require(render_text(e.x1_prime) ==
                "conj(U_{1,7}{(|U_{7,15}phi|^2U_{7,15}phi)(conj(U_{7,13}(|U_{13,15}phi|^4U_{13,15}phi)))"
                "(U_{7,15}(|phi|^4phi))})",
            "x1' rendering: " + render_text(e.x1_prime));
  double dt = seconds_since(t0);
  o.require(dt < 30, "took " + std::to_string(dt) + " s");
  if (o.ok) o.detail = std::to_string(dt) + " s";
  return o;
}

// expand(p) equals expand(W(rho)p) with times pulled back through the new relabeling.
bool wild_kernel(const CollapsingPair& p, const TimePermutation& rho) {
  MoveState s = apply_wild(MoveState::start(p), rho);
  Expansion a = expand(p), b = expand(s.pair);
  TimePermutation back = inverse(s.sigma);
  return equivalent(substitute_times(b.x1, back), a.x1) && equivalent(substitute_times(b.x1_prime, back), a.x1_prime);
}

Outcome wild_kernel_identity() {
  Outcome o;
  CollapsingPair ref = sp({1, 1, 1, 2, 3, 7, 7}, "+,+,-,-,+,+,-");
  std::vector<TimePermutation> rhos = allowable_permutations(ref);
  o.require(rhos.size() == 6, "example class has " + std::to_string(rhos.size()) + " members");
  for (const auto& r : rhos)
    for (const auto& r2 : rhos) {
      // every ordered pair of class members: go to the reference and back out
      CollapsingPair a = apply_wild(ref, r);
      TimePermutation step = compose(r2, inverse(r));
      o.require(is_allowable(a, step), "composite move not allowable from " + to_string(a));
      if (is_allowable(a, step)) o.require(wild_kernel(a, step), "identity fails from " + to_string(a));
    }
  int checked = 0;
  for (int k = 1; k <= 4; ++k)
    PairStream(k, true).for_each([&](const CollapsingPair& p) {
      if (!is_reference(p)) return;
      for (const auto& rho : allowable_permutations(p)) {
        ++checked;
        o.require(wild_kernel(p, rho), "identity fails at " + to_string(p) + " rho " + format_int_list(rho.image));
      }
    });
  if (o.ok) o.detail = std::to_string(checked) + " moves at k<=4";
  return o;
}

Outcome marking_golden() {
  Outcome o;
  DTree t = mark_dtree(build_dtree(kSeven));
  for (int l : {1, 2, 4, 5, 6}) o.require(t.mark_phi[l] && !t.mark_r[l], "marks of " + std::to_string(2 * l));
  o.require(t.mark_phi[3] && t.mark_r[3], "marks of 6");
  o.require(!t.mark_phi[7] && t.mark_r[7], "marks of 14");
  o.require(unclogged_count(t) == 6, "unclogged count " + std::to_string(unclogged_count(t)));
  EstimateSchedule s = estimate_schedule(t);
  o.require(s.small_factor_power == 6, "small factor power " + std::to_string(s.small_factor_power));
  o.require(s.h_norm_power == 24, "H norm power " + std::to_string(s.h_norm_power));
  return o;
}

Outcome tamed_reduction_golden() {
  Outcome o;
  CollapsingPair mu = sp({1, 1, 1, 6, 1, 6, 7, 1, 2, 16, 9, 18, 3}, "-,-,+,-,+,+,+,-,-,+,-,+,+");
  CollapsingPair mu1 = sp({1, 1, 1, 1, 6, 6, 7, 1, 2, 16, 11, 18, 3}, "-,-,+,+,-,+,+,-,-,+,-,+,+");
  CollapsingPair mu2 = sp({1, 1, 1, 1, 1, 6, 6, 7, 2, 10, 13, 18, 3}, "-,-,+,+,-,-,+,+,-,+,-,+,+");
  CollapsingPair star = sp({1, 1, 1, 1, 1, 6, 6, 7, 2, 3, 10, 13, 18}, "-,-,+,+,-,-,+,+,-,+,+,-,+");
  Reduction r = to_tamed(mu);
  o.require(r.moves == std::vector<int>{4, 7, 6, 5, 12, 11, 10}, "moves " + format_int_list(r.moves));
  o.require(r.pair == star, "tamed form " + to_string(r.pair));
  MoveState s = MoveState::start(mu);
  s = apply_signed_km(s, 4);
  o.require(s.pair == mu1, "after KM(8,10): " + to_string(s.pair));
  s = apply_km_sequence(s, {7, 6, 5});
  o.require(s.pair == mu2, "after the second block: " + to_string(s.pair));
  s = apply_km_sequence(s, {12, 11, 10});
  o.require(s.pair == star, "after the third block: " + to_string(s.pair));
  o.require(tiers(star) == std::vector<int>{1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3}, "tier row");
  o.require(is_tamed(star), "final pair is not tamed");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"catalan census k=1..6", catalan_census},
      {"tamed uniqueness k<=5", tamed_uniqueness},
      {"reference uniqueness k<=5", reference_uniqueness},
      {"relabeling table and tree domain of the order-5 star", table_golden},
      {"relabelings biject onto tree-domain orders", domain_bijection},
      {"T_R = T_C for reference pairs k<=5", compatibility},
      {"extension mass and disjoint pieces k<=5", mass_identity},
      {"tree expansion equals operator oracle", duhamel_equivalence},
      {"wild kernel identity", wild_kernel_identity},
      {"marks and estimate schedule golden", marking_golden},
      {"tamed reduction golden", tamed_reduction_golden},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
