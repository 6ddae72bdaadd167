#include "kmboard/canonical.hpp"

#include <map>

#include "kmboard/moves.hpp"
#include "kmboard/trees.hpp"

namespace kmboard {

namespace {

// mu on 1..2k+1 with mu(1) := 0; only used where the value cannot matter.
int mu_ext(const CollapsingPair& p, int label) { return label == 1 ? 0 : p.mu_at(label); }
Sign sgn_ext(const CollapsingPair& p, int label) { return label == 1 ? Sign::Plus : p.sign_at(label); }

// Moves `pair` onto the labeling `target` of the same skeleton by chains of adjacent moves.
Reduction reduce_to(const CollapsingPair& pair, const SignedTree& target) {
  const int k = pair.k;
  SignedTree current = tree_from_pair(pair);
  std::vector<int> cur_order = preorder_nodes(current);
  std::vector<int> tgt_order = preorder_nodes(target);
  // where[j] = skeleton position of index j in the current labeling
  std::vector<int> where(k + 1), at(k);
  for (int n = 0; n < k; ++n) where[cur_order[n]] = n;
  std::vector<int> tgt_pos(k + 1);
  for (int n = 0; n < k; ++n) tgt_pos[tgt_order[n]] = n;

  Reduction r{pair, {}};
  for (int j = 1; j <= k; ++j) {
    int pos = tgt_pos[j];
    int l = 0;
    for (int i = 1; i <= k; ++i)
      if (where[i] == pos) l = i;
    for (int m = l - 1; m >= j; --m) {
      r.pair = apply_km(r.pair, m);
      r.moves.push_back(m);
      std::swap(where[m], where[m + 1]);
    }
  }
  return r;
}

}  // namespace

int tier(const CollapsingPair& pair, int label) {
  if (label < 2 || label > 2 * pair.k || label % 2) throw OutOfRange("tier of label " + std::to_string(label));
  int q = 0;
  for (int x = label; x != 1; x = pair.mu_at(x)) ++q;
  return q;
}

std::vector<int> tiers(const CollapsingPair& pair) {
  std::vector<int> t(pair.k);
  for (int j = 1; j <= pair.k; ++j) t[j - 1] = tier(pair, 2 * j);
  return t;
}

bool is_upper_echelon(const CollapsingPair& pair) {
  for (int j = 1; j < pair.k; ++j)
    if (pair.mu_j(j) > pair.mu_j(j + 1)) return false;
  return true;
}

bool is_tamed(const CollapsingPair& p) {
  const int k = p.k;
  std::vector<int> t = tiers(p);
  std::vector<int> m1(k), m2(k);
  std::vector<Sign> s1(k);
  for (int j = 1; j <= k; ++j) {
    m1[j - 1] = p.mu_j(j);
    m2[j - 1] = mu_ext(p, m1[j - 1]);
    s1[j - 1] = sgn_ext(p, m1[j - 1]);
  }
  for (int l = 0; l < k; ++l) {
    for (int r = 0; r < k; ++r) {
      if (l == r || l < r) continue;  // only pairs with 2l > 2r can break a clause
      if (t[l] < t[r]) return false;
      if (t[l] != t[r]) continue;
      if (m2[l] == m2[r]) {
        if (s1[l] == s1[r] && m1[l] < m1[r]) return false;
        if (s1[l] == Sign::Plus && s1[r] == Sign::Minus) return false;
      } else if (m1[l] < m1[r]) {
        return false;
      }
    }
  }
  return true;
}

bool is_reference(const CollapsingPair& p) {
  if (!is_tamed(p)) return false;
  std::map<int, Sign> last;
  for (int j = 1; j <= p.k; ++j) {
    auto [it, fresh] = last.emplace(p.mu_j(j), p.sgn_j(j));
    if (!fresh) {
      if (it->second == Sign::Minus && p.sgn_j(j) == Sign::Plus) return false;
      it->second = p.sgn_j(j);
    }
  }
  return true;
}

Reduction to_tamed(const CollapsingPair& pair) {
  SignedTree target = tamed_labeling(skeleton_of(tree_from_pair(pair), true));
  return reduce_to(pair, target);
}

Reduction to_echelon(const CollapsingPair& pair) {
  SignedTree target = echelon_labeling(skeleton_of(tree_from_pair(pair), false));
  return reduce_to(pair, target);
}

ReferenceResult to_reference(const CollapsingPair& tamed) {
  if (!is_tamed(tamed)) throw NotTamed("not a tamed pair: " + to_string(tamed));
  const int k = tamed.k;
  std::map<int, std::vector<int>> groups;
  for (int j = 1; j <= k; ++j) groups[tamed.mu_j(j)].push_back(j);
  TimePermutation tau;
  tau.k = k;
  tau.image.assign(k, 0);
  for (const auto& [value, members] : groups) {
    std::size_t slot = 0;
    for (int j : members)
      if (tamed.sgn_j(j) == Sign::Plus) tau.image[j - 1] = 2 * members[slot++];
    for (int j : members)
      if (tamed.sgn_j(j) == Sign::Minus) tau.image[j - 1] = 2 * members[slot++];
  }
  ReferenceResult r{apply_wild(tamed, tau), inverse(tau)};
  if (!is_allowable(r.reference, r.rho) || conjugate(r.reference, r.rho) != tamed)
    throw NotAllowable("reference witness failed for " + to_string(tamed));
  return r;
}

}  // namespace kmboard
