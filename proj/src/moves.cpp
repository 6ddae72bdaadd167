#include "kmboard/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "kmboard/canonical.hpp"
#include "kmboard/trees.hpp"

namespace kmboard {

CollapsingPair conjugate(const CollapsingPair& pair, const TimePermutation& rho) {
  if (pair.k != rho.k) throw KMismatch("permutation order differs from pair order");
  TimePermutation inv = inverse(rho);
  CollapsingPair out;
  out.k = pair.k;
  out.mu.resize(pair.k);
  out.sgn.resize(pair.k);
  for (int j = 1; j <= pair.k; ++j) {
    int src = inv.image[j - 1];
    out.mu[j - 1] = rho.apply(pair.mu_at(src));
    out.sgn[j - 1] = pair.sign_at(src);
  }
  return out;
}

TimePermutation adjacent_swap(int k, int j) {
  if (j < 1 || j >= k) throw OutOfRange("swap index " + std::to_string(j));
  TimePermutation p = TimePermutation::identity(k);
  std::swap(p.image[j - 1], p.image[j]);
  return p;
}

bool is_km_admissible(const CollapsingPair& pair, int j) {
  if (j < 2 || j > pair.k - 1) return false;
  int a = pair.mu_j(j), b = pair.mu_j(j + 1);
  return a != b && b < 2 * j;
}

std::vector<int> km_admissible_indices(const CollapsingPair& pair) {
  std::vector<int> out;
  for (int j = 2; j <= pair.k - 1; ++j)
    if (is_km_admissible(pair, j)) out.push_back(j);
  return out;
}

CollapsingPair apply_km(const CollapsingPair& pair, int j) {
  if (!is_km_admissible(pair, j)) throw NotAcceptable(j);
  // Only labels 2j..2j+3 move; mu values equal to 2j..2j+3 are relabeled.
  CollapsingPair out = pair;
  std::swap(out.mu[j - 1], out.mu[j]);
  std::swap(out.sgn[j - 1], out.sgn[j]);
  for (int& v : out.mu) {
    if (v == 2 * j || v == 2 * j + 1)
      v += 2;
    else if (v == 2 * j + 2 || v == 2 * j + 3)
      v -= 2;
  }
  return out;
}

MoveState apply_signed_km(const MoveState& state, int j) {
  MoveState out;
  out.pair = apply_km(state.pair, j);
  out.sigma = compose(adjacent_swap(state.pair.k, j), state.sigma);
  return out;
}

MoveState apply_km_sequence(const MoveState& state, const std::vector<int>& moves) {
  MoveState s = state;
  for (int j : moves) s = apply_signed_km(s, j);
  return s;
}

namespace {

CollapsingPair strip_signs(CollapsingPair p) {
  std::fill(p.sgn.begin(), p.sgn.end(), Sign::Plus);
  return p;
}

}  // namespace

std::vector<CollapsingPair> km_class(const CollapsingPair& pair, bool is_signed, std::size_t cap) {
  CollapsingPair start = is_signed ? pair : strip_signs(pair);
  std::set<CollapsingPair> seen{start};
  std::deque<CollapsingPair> todo{start};
  while (!todo.empty()) {
    CollapsingPair p = std::move(todo.front());
    todo.pop_front();
    for (int j : km_admissible_indices(p)) {
      CollapsingPair q = apply_km(p, j);
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw CapExceeded("KM class exceeds " + std::to_string(cap));
        todo.push_back(std::move(q));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<CollapsingPair> skeleton_fiber(const CollapsingPair& pair, bool is_signed) {
  std::string key = skeleton_key(pair, is_signed);
  std::vector<CollapsingPair> out;
  PairStream(pair.k, is_signed).for_each([&](const CollapsingPair& p) {
    if (skeleton_key(p, is_signed) == key) out.push_back(p);
  });
  if (!is_signed)
    for (auto& p : out) p = strip_signs(p);
  std::sort(out.begin(), out.end());
  return out;
}

bool km_path(const CollapsingPair& from, const CollapsingPair& to, bool is_signed, std::vector<int>& moves,
             std::size_t cap) {
  CollapsingPair a = is_signed ? from : strip_signs(from);
  CollapsingPair b = is_signed ? to : strip_signs(to);
  std::map<CollapsingPair, std::pair<CollapsingPair, int>> back;
  back.emplace(a, std::make_pair(a, 0));
  std::deque<CollapsingPair> todo{a};
  while (!todo.empty()) {
    CollapsingPair p = std::move(todo.front());
    todo.pop_front();
    if (p == b) {
      moves.clear();
      for (CollapsingPair cur = b; cur != a;) {
        auto& e = back.at(cur);
        moves.push_back(e.second);
        cur = e.first;
      }
      std::reverse(moves.begin(), moves.end());
      return true;
    }
    for (int j : km_admissible_indices(p)) {
      CollapsingPair q = apply_km(p, j);
      if (back.emplace(q, std::make_pair(p, j)).second) {
        if (back.size() > cap) throw CapExceeded("KM class exceeds " + std::to_string(cap));
        todo.push_back(std::move(q));
      }
    }
  }
  return false;
}

bool is_allowable(const CollapsingPair& pair, const TimePermutation& rho) {
  if (pair.k != rho.k) return false;
  const int k = pair.k;
  for (int j = 1; j <= k; ++j)
    if (pair.mu_at(rho.image[j - 1]) != pair.mu_j(j)) return false;
  for (int q = 1; q <= k; ++q)
    for (int s = q + 1; s <= k; ++s)
      if (pair.mu_j(q) == pair.mu_j(s) && pair.sgn_j(q) == pair.sgn_j(s) && rho.image[q - 1] > rho.image[s - 1])
        return false;
  return true;
}

std::vector<TimePermutation> allowable_permutations_any(const CollapsingPair& pair) {
  const int k = pair.k;
  // groups in order of first appearance
  std::vector<std::vector<int>> groups;
  std::map<int, int> group_of;
  for (int j = 1; j <= k; ++j) {
    auto [it, fresh] = group_of.emplace(pair.mu_j(j), static_cast<int>(groups.size()));
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(j);
  }
  // per group: all choices of which member positions receive the + members
  std::vector<std::vector<std::vector<int>>> options(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto& members = groups[g];
    std::vector<int> plus, minus;
    for (int j : members) (pair.sgn_j(j) == Sign::Plus ? plus : minus).push_back(j);
    const int n = static_cast<int>(members.size());
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + plus.size(), 1);
    // prev_permutation over a descending-sorted mask walks combinations lexicographically
    do {
      std::vector<int> img(n);
      std::size_t pi = 0, mi = 0;
      for (int t = 0; t < n; ++t) {
        int dest = members[t];
        int src = pick[t] ? plus[pi++] : minus[mi++];
        img[std::find(members.begin(), members.end(), src) - members.begin()] = dest;
      }
      options[g].push_back(std::move(img));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::vector<TimePermutation> out;
  std::vector<std::size_t> choice(groups.size(), 0);
  for (;;) {
    TimePermutation rho;
    rho.k = k;
    rho.image.assign(k, 0);
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (std::size_t t = 0; t < groups[g].size(); ++t) rho.image[groups[g][t] - 1] = 2 * options[g][choice[g]][t];
    out.push_back(std::move(rho));
    std::size_t g = groups.size();
    while (g > 0 && choice[g - 1] + 1 == options[g - 1].size()) choice[--g] = 0;
    if (g == 0) break;
    ++choice[g - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TimePermutation> allowable_permutations(const CollapsingPair& pair) {
  if (!is_tamed(pair)) throw NotTamed("allowable permutations need a tamed pair: " + to_string(pair));
  return allowable_permutations_any(pair);
}

std::vector<TimePermutation> allowable_permutations_brute(const CollapsingPair& pair) {
  TimePermutation rho = TimePermutation::identity(pair.k);
  std::vector<TimePermutation> out;
  do {
    if (is_allowable(pair, rho)) out.push_back(rho);
  } while (std::next_permutation(rho.image.begin(), rho.image.end()));
  return out;
}

CollapsingPair apply_wild(const CollapsingPair& pair, const TimePermutation& rho) {
  if (!is_allowable(pair, rho)) throw NotAllowable("permutation is not allowable for " + to_string(pair));
  return conjugate(pair, rho);
}

MoveState apply_wild(const MoveState& state, const TimePermutation& rho) {
  return MoveState{apply_wild(state.pair, rho), compose(rho, state.sigma)};
}

std::vector<CollapsingPair> wild_class(const CollapsingPair& pair, std::size_t cap) {
  std::set<CollapsingPair> seen{pair};
  std::deque<CollapsingPair> todo{pair};
  while (!todo.empty()) {
    CollapsingPair p = std::move(todo.front());
    todo.pop_front();
    for (const auto& rho : allowable_permutations(p)) {
      CollapsingPair q = conjugate(p, rho);
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw CapExceeded("wild class exceeds " + std::to_string(cap));
        todo.push_back(std::move(q));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace kmboard
