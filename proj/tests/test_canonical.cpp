#include <doctest.h>

#include "kmboard/canonical.hpp"
#include "kmboard/errors.hpp"
#include "kmboard/moves.hpp"
#include "kmboard/trees.hpp"

using namespace kmboard;

namespace {

CollapsingPair sp(std::vector<int> mu, const std::string& sgn) {
  int k = static_cast<int>(mu.size());
  return validate_pair(k, std::move(mu), parse_sign_list(sgn));
}

const CollapsingPair kTamed = sp({1, 1, 1, 1, 1, 6, 6, 7, 2, 3, 10, 13, 18}, "-,-,+,+,-,-,+,+,-,+,+,-,+");
const CollapsingPair kStart = sp({1, 1, 1, 6, 1, 6, 7, 1, 2, 16, 9, 18, 3}, "-,-,+,-,+,+,+,-,-,+,-,+,+");

}  // namespace

TEST_CASE("tier row of the worked tamed pair") {
  CHECK(tiers(kTamed) == std::vector<int>{1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3});
  CHECK(tier(kTamed, 26) == 3);
  CHECK_THROWS_AS(tier(kTamed, 27), OutOfRange);
}

TEST_CASE("tamed predicate on the worked chain") {
  CHECK(is_tamed(kTamed));
  CHECK_FALSE(is_tamed(kStart));
  CHECK_FALSE(is_tamed(apply_km(kStart, 4)));
}

TEST_CASE("to_tamed reproduces the worked move sequence") {
  Reduction r = to_tamed(kStart);
  CHECK(r.pair == kTamed);
  CHECK(r.moves == std::vector<int>{4, 7, 6, 5, 12, 11, 10});
  CHECK(to_tamed(kTamed).moves.empty());
}

TEST_CASE("upper echelon predicate") {
  CHECK(is_upper_echelon(unsigned_pair({1, 1, 1, 2, 3})));
  CHECK_FALSE(is_upper_echelon(unsigned_pair({1, 1, 1, 3, 2})));
  Reduction r = to_echelon(unsigned_pair({1, 3, 2, 1, 1}));
  CHECK(r.pair == unsigned_pair({1, 1, 1, 2, 3}));
  CHECK(apply_km_sequence(MoveState::start(unsigned_pair({1, 3, 2, 1, 1})), r.moves).pair == r.pair);
}

TEST_CASE("reductions agree with the direct labelings") {
  for (int k = 1; k <= 5; ++k)
    PairStream(k, true).for_each([&](const CollapsingPair& p) {
      Reduction t = to_tamed(p);
      CHECK(t.pair == pair_from_tree(tamed_labeling(skeleton_of(tree_from_pair(p), true))));
      CHECK(apply_km_sequence(MoveState::start(p), t.moves).pair == t.pair);
      CHECK(is_tamed(t.pair) == true);
      CHECK(is_tamed(p) == (t.pair == p));
    });
  for (int k = 1; k <= 5; ++k)
    PairStream(k, false).for_each([&](const CollapsingPair& p) {
      Reduction e = to_echelon(p);
      CHECK(e.pair == pair_from_tree(echelon_labeling(skeleton_of(tree_from_pair(p), false))));
      CHECK(is_upper_echelon(e.pair));
    });
}

TEST_CASE("reference pair of the worked wild class") {
  CollapsingPair ref = sp({1, 1, 1, 2, 3, 7, 7}, "+,+,-,-,+,+,-");
  CollapsingPair other = sp({1, 1, 1, 4, 5, 3, 3}, "-,+,+,-,+,-,+");
  CHECK(is_reference(ref));
  CHECK(is_tamed(other));
  CHECK_FALSE(is_reference(other));
  ReferenceResult rr = to_reference(other);
  CHECK(rr.reference == ref);
  CHECK(rr.rho.image == std::vector<int>{4, 6, 2, 8, 10, 14, 12});
  CHECK(apply_wild(ref, rr.rho) == other);
  CHECK(to_reference(ref).rho.is_identity());
  CHECK_THROWS_AS(to_reference(kStart), NotTamed);
}
