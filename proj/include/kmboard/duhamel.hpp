#ifndef KMBOARD_DUHAMEL_HPP_
#define KMBOARD_DUHAMEL_HPP_

#include <array>
#include <string>
#include <vector>

#include "kmboard/pairs.hpp"
#include "kmboard/symexpr.hpp"

namespace kmboard {

/// A child slot of a D-tree node: an internal node D^{(2j)} or a leaf F_{i,s}.
struct DChild {
  int node = 0;  // j >= 1 for D^{(2j)}, 0 for a leaf
  int f_index = 0;
  Sign f_sign = Sign::Plus;

  bool is_leaf() const { return node == 0; }
  bool operator==(const DChild&) const = default;
};

struct DTree {
  int k = 0;
  std::array<DChild, 2> root;                // left (+) and right (-) child of D^{(0)}
  std::vector<std::array<DChild, 5>> child;  // child[j], j = 1..k; child[0] unused
  std::vector<int> parent;                   // parent[j]; 0 is D^{(0)}
  std::vector<Sign> sign;                    // sign[j]
  bool marked = false;
  std::vector<char> mark_phi, mark_r;

  /// D^{(2k)} lies below D^{(2l)}.
  bool is_offspring_of_top(int l) const;
  bool has_leaf_child(int l) const;
};

DTree build_dtree(const CollapsingPair& pair);
DTree mark_dtree(const DTree& tree);
/// Couplings l < k whose node has an F child.
int unclogged_count(const DTree& marked);

std::string dtree_to_dot(const DTree& tree);
std::string dtree_to_json(const DTree& tree);

struct Expansion {
  Expr x1;        // unprimed side
  Expr x1_prime;  // primed side
};

/// Leaf-to-root recursion over the D-tree.
Expansion expand(const CollapsingPair& pair);
/// Direct operator evolution on a product kernel, slot by slot.
Expansion expand_oracle(const CollapsingPair& pair);
/// Semi-normal expression of D^{(2l)} itself.
Expr dtree_node_expr(const CollapsingPair& pair, int l);

struct IntegralBound {
  int node = 0;   // l, the integral runs over t_{2l+1}
  int lower = 0;  // odd label, or 0 for the constant 0
  int upper = 1;  // odd label
};

struct IntegratedExpansion {
  int k = 0;
  IntegralBound outer;               // over t_{2k+1}, from 0 to t_1
  std::vector<IntegralBound> nodes;  // l = 1..k-1
  Expansion integrand;
};

IntegratedExpansion integrated_expand(const CollapsingPair& pair);
std::string render_integrated(const IntegratedExpansion& ie, const CollapsingPair& pair);

enum class EstimateCase { PhiR, Phi, R, Plain };
const char* case_tag(EstimateCase c);
/// The multilinear estimate each case selects.
const char* case_estimate(EstimateCase c);

struct EstimateSchedule {
  int k = 0;
  std::vector<EstimateCase> cases;  // coupling l = 1..k-1 at index l-1
  int small_factor_power = 0;
  int h_norm_power = 0;
  int constant_power = 0;
};

EstimateSchedule estimate_schedule(const DTree& marked);

}  // namespace kmboard

#endif  // KMBOARD_DUHAMEL_HPP_
