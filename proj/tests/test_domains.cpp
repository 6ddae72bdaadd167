#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "kmboard/canonical.hpp"
#include "kmboard/domains.hpp"
#include "kmboard/errors.hpp"
#include "kmboard/moves.hpp"

using namespace kmboard;

namespace {

using Rel = std::vector<std::pair<int, int>>;

CollapsingPair sp(std::vector<int> mu, const std::string& sgn) {
  int k = static_cast<int>(mu.size());
  return validate_pair(k, std::move(mu), parse_sign_list(sgn));
}

// Counts total orders of t_3..t_{2k+1} below t_1 by trying every permutation.
std::uint64_t brute_extensions(const TimePoset& d) {
  std::vector<int> rest(d.k());
  std::iota(rest.begin(), rest.end(), 1);
  std::uint64_t n = 0;
  do {
    TotalOrder o{1};
    for (int v : rest) o.push_back(2 * v + 1);
    n += is_linear_extension(d, o);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return n;
}

// Rows of the twelve relabelings of the order-5 star map: rho, rho^{-1}, and the simplex order.
struct Row {
  std::vector<int> rho, inv, order;
};
const Row kTable[12] = {
    {{2, 4, 6, 8, 10}, {2, 4, 6, 8, 10}, {1, 3, 5, 7, 9, 11}},
    {{2, 4, 6, 10, 8}, {2, 4, 6, 10, 8}, {1, 3, 5, 7, 11, 9}},
    {{2, 4, 8, 6, 10}, {2, 4, 8, 6, 10}, {1, 3, 5, 9, 7, 11}},
    {{2, 4, 8, 10, 6}, {2, 4, 10, 6, 8}, {1, 3, 5, 11, 7, 9}},
    {{2, 4, 10, 6, 8}, {2, 4, 8, 10, 6}, {1, 3, 5, 9, 11, 7}},
    {{2, 4, 10, 8, 6}, {2, 4, 10, 8, 6}, {1, 3, 5, 11, 9, 7}},
    {{2, 6, 8, 4, 10}, {2, 8, 4, 6, 10}, {1, 3, 9, 5, 7, 11}},
    {{2, 6, 8, 10, 4}, {2, 10, 4, 6, 8}, {1, 3, 11, 5, 7, 9}},
    {{2, 6, 10, 4, 8}, {2, 8, 4, 10, 6}, {1, 3, 9, 5, 11, 7}},
    {{2, 6, 10, 8, 4}, {2, 10, 4, 8, 6}, {1, 3, 11, 5, 9, 7}},
    {{2, 8, 10, 4, 6}, {2, 8, 10, 4, 6}, {1, 3, 9, 11, 5, 7}},
    {{2, 8, 10, 6, 4}, {2, 10, 8, 4, 6}, {1, 3, 11, 9, 5, 7}},
};

}  // namespace

TEST_CASE("poset basics") {
  TimePoset d(3, {{1, 3}, {3, 5}, {1, 5}, {3, 7}});
  CHECK(d.reduction() == Rel{{1, 3}, {3, 5}, {3, 7}});
  CHECK(d.implies(1, 7));
  CHECK_FALSE(d.implies(5, 7));
  CHECK_THROWS_AS(TimePoset(2, {{3, 5}, {5, 3}}), Error);
  CHECK_THROWS_AS(TimePoset(2, {{3, 4}}), OutOfRange);
  CHECK_THROWS_AS(TimePoset(2, {{3, 7}}), OutOfRange);
}

TEST_CASE("tree domain of the star map") {
  TimePoset d = td_domain(unsigned_pair({1, 1, 1, 2, 3}));
  CHECK(d.reduction() == Rel{{1, 3}, {3, 5}, {3, 9}, {3, 11}, {5, 7}});
  CHECK(relations_text(d) == "t_1>=t_3\nt_3>=t_5\nt_3>=t_9\nt_3>=t_11\nt_5>=t_7\n");
  CHECK(relations_json(d) == "[[1,3],[3,5],[3,9],[3,11],[5,7]]");
  CHECK(count_linear_extensions(d) == 12);
}

TEST_CASE("relabeling set of the star map matches the table") {
  CollapsingPair m = unsigned_pair({1, 1, 1, 2, 3});
  std::vector<TimePermutation> s = sigma_set(m);
  REQUIRE(s.size() == 12);
  TimePoset d = td_domain(m);
  for (int i = 0; i < 12; ++i) {
    CHECK(s[i].image == kTable[i].rho);
    CHECK(inverse(s[i]).image == kTable[i].inv);
    CHECK(order_of(s[i]) == kTable[i].order);
    CHECK(permutation_of(kTable[i].order) == s[i]);
    CHECK(is_linear_extension(d, kTable[i].order));
  }
  std::vector<TotalOrder> ext = linear_extensions(d);
  std::sort(ext.begin(), ext.end());
  std::vector<TotalOrder> want;
  for (const auto& r : kTable) want.push_back(r.order);
  std::sort(want.begin(), want.end());
  CHECK(ext == want);
}

TEST_CASE("extension counts agree with brute force") {
  for (int k = 1; k <= 5; ++k)
    PairStream(k, true).for_each([&](const CollapsingPair& p) {
      if (p.sgn[0] == Sign::Minus) return;  // halve the work; signs on node 2 are symmetric
      for (const TimePoset& d : {td_domain(p), tc_domain(p)}) {
        std::uint64_t n = count_linear_extensions(d);
        CHECK(n == brute_extensions(d));
        CHECK(linear_extensions(d).size() == n);
      }
    });
}

TEST_CASE("compatible domain of the seven-coupling example") {
  CollapsingPair p = sp({1, 1, 1, 2, 3, 6, 6}, "+,+,-,-,+,+,-");
  CHECK(tc_domain(p).reduction() == Rel{{1, 3}, {1, 7}, {3, 5}, {3, 9}, {3, 11}, {7, 13}, {7, 15}});
}

TEST_CASE("compatible domain read from a reference pair") {
  CollapsingPair p = sp({1, 1, 1, 3, 6}, "+,+,-,-,+");
  REQUIRE(is_reference(p));
  TimePoset printed(5, {{1, 3}, {3, 5}, {7, 11}, {3, 9}, {1, 7}});
  CHECK(tc_domain(p) == printed);
  CHECK(tr_domain(p) == printed);
}

TEST_CASE("T_R needs a reference pair") {
  CHECK_THROWS_AS(tr_domain(sp({1, 1, 1, 4, 5, 3, 3}, "-,+,+,-,+,-,+")), NotReference);
}

TEST_CASE("relabeled tree domains of the worked wild class") {
  CollapsingPair ref = sp({1, 1, 1, 2, 3, 7, 7}, "+,+,-,-,+,+,-");
  struct Case {
    std::vector<int> rho;
    Rel printed;
  };
  const Rel common{{3, 9}, {3, 11}};
  std::vector<Case> cases = {
      {{2, 4, 6, 8, 10, 12, 14}, {{3, 5}, {5, 7}, {7, 13}, {13, 15}}},
      {{2, 6, 4, 8, 10, 12, 14}, {{3, 7}, {7, 5}, {7, 13}, {13, 15}}},
      {{4, 6, 2, 8, 10, 12, 14}, {{7, 3}, {3, 5}, {7, 13}, {13, 15}}},
      {{2, 4, 6, 8, 10, 14, 12}, {{3, 5}, {5, 7}, {7, 15}, {15, 13}}},
      {{2, 6, 4, 8, 10, 14, 12}, {{3, 7}, {7, 5}, {7, 15}, {15, 13}}},
      {{4, 6, 2, 8, 10, 14, 12}, {{7, 3}, {3, 5}, {7, 15}, {15, 13}}},
  };
  std::set<TotalOrder> pieces;
  std::size_t total = 0;
  for (const auto& c : cases) {
    TimePermutation rho = TimePermutation::from_images(c.rho);
    Rel rel = c.printed;
    rel.insert(rel.end(), common.begin(), common.end());
    for (int a = 3; a <= 15; a += 2) rel.emplace_back(1, a);
    TimePoset piece = relabel_domain(td_domain(apply_wild(ref, rho)), inverse(rho));
    CHECK(piece == TimePoset(7, rel));
    for (auto& o : linear_extensions(piece)) {
      pieces.insert(o);
      ++total;
    }
  }
  TimePoset tc = tc_domain(ref);
  CHECK(total == pieces.size());
  CHECK(pieces.size() == count_linear_extensions(tc));
  for (const auto& o : pieces) CHECK(is_linear_extension(tc, o));
}

TEST_CASE("relabeling caps") {
  CHECK_THROWS_AS(sigma_set(unsigned_pair({1, 2, 3, 4, 5, 6, 7, 8}), 100), CapExceeded);
  CHECK_THROWS_AS(linear_extensions(td_domain(unsigned_pair({1, 2, 3, 4, 5, 6, 7, 8})), 100), CapExceeded);
  CHECK_THROWS_AS(permutation_of({3, 1, 5}), OutOfRange);
}
