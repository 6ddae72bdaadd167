#include "kmboard/duhamel.hpp"

#include <sstream>

namespace kmboard {

bool DTree::is_offspring_of_top(int l) const {
  for (int j = parent[k]; j > 0; j = parent[j])
    if (j == l) return true;
  return false;
}

bool DTree::has_leaf_child(int l) const {
  for (const auto& c : child[l])
    if (c.is_leaf()) return true;
  return false;
}

DTree build_dtree(const CollapsingPair& pair) {
  const int k = pair.k;
  DTree t;
  t.k = k;
  t.child.assign(k + 1, {});
  t.parent.assign(k + 1, -1);
  t.sign.assign(k + 1, Sign::Plus);
  for (int j = 1; j <= k; ++j) t.sign[j] = pair.sgn_j(j);

  auto find = [&](int after, int mu_value, Sign s) {
    for (int l = after + 1; l <= k; ++l)
      if (pair.mu_j(l) == mu_value && pair.sgn_j(l) == s) return l;
    return 0;
  };
  auto place = [&](DChild& slot, int owner, int found, int f_index, Sign f_sign) {
    if (found) {
      slot = DChild{found, 0, Sign::Plus};
      t.parent[found] = owner;
    } else {
      slot = DChild{0, f_index, f_sign};
    }
  };
  place(t.root[0], 0, find(0, 1, Sign::Plus), 1, Sign::Plus);
  place(t.root[1], 0, find(0, 1, Sign::Minus), 1, Sign::Minus);
  for (int j = 1; j <= k; ++j) {
    int m = pair.mu_j(j);
    Sign s = pair.sgn_j(j);
    place(t.child[j][0], j, find(j, m, s), m, s);
    place(t.child[j][1], j, find(j, 2 * j, Sign::Plus), 2 * j, Sign::Plus);
    place(t.child[j][2], j, find(j, 2 * j, Sign::Minus), 2 * j, Sign::Minus);
    place(t.child[j][3], j, find(j, 2 * j + 1, Sign::Plus), 2 * j + 1, Sign::Plus);
    place(t.child[j][4], j, find(j, 2 * j + 1, Sign::Minus), 2 * j + 1, Sign::Minus);
  }
  return t;
}

DTree mark_dtree(const DTree& tree) {
  DTree t = tree;
  t.marked = true;
  t.mark_phi.assign(t.k + 1, 0);
  t.mark_r.assign(t.k + 1, 0);
  t.mark_r[t.k] = 1;
  for (int l = t.k - 1; l >= 1; --l) {
    if (t.is_offspring_of_top(l)) t.mark_r[l] = 1;
    if (t.has_leaf_child(l)) t.mark_phi[l] = 1;
  }
  return t;
}

int unclogged_count(const DTree& t) {
  int n = 0;
  for (int l = 1; l < t.k; ++l)
    if (t.has_leaf_child(l)) ++n;
  return n;
}

namespace {

std::string node_name(int j) { return "D^(" + std::to_string(2 * j) + ")"; }

std::string marks_of(const DTree& t, int j) {
  if (!t.marked) return "";
  std::string m;
  if (t.mark_phi[j]) m += "phi";
  if (t.mark_r[j]) m += m.empty() ? "R" : ",R";
  return m;
}

std::string leaf_name(const DChild& c) {
  return "F_{" + std::to_string(c.f_index) + "," + sign_char(c.f_sign) + "}";
}

Expr leaf_expr(const DChild& c, int k) {
  Expr base = make_evolve(Exponent{{2 * k + 1, -1}}, phi());
  return c.f_sign == Sign::Plus ? base : make_conj(base);
}

Expr up(int n, Expr x) { return make_evolve(Exponent{{n, 1}}, std::move(x)); }
Expr down(int n, Expr x) { return make_evolve(Exponent{{n, -1}}, std::move(x)); }

Expr node_expr(const DTree& t, int l, std::vector<Expr>& memo) {
  if (memo[l]) return memo[l];
  std::array<Expr, 5> c;
  for (int i = 0; i < 5; ++i) {
    const DChild& ch = t.child[l][i];
    c[i] = ch.is_leaf() ? leaf_expr(ch, t.k) : node_expr(t, ch.node, memo);
  }
  const int n = 2 * l + 1;
  Expr e;
  if (t.sign[l] == Sign::Plus) {
    e = down(n, make_product({up(n, c[0]), up(n, c[1]), make_conj(up(n, make_conj(c[2]))), up(n, c[3]),
                              make_conj(up(n, make_conj(c[4])))}));
  } else {
    e = make_conj(down(n, make_product({up(n, make_conj(c[0])), make_conj(up(n, c[1])), up(n, make_conj(c[2])),
                                        make_conj(up(n, c[3])), up(n, make_conj(c[4]))})));
  }
  memo[l] = normalize(e);
  return memo[l];
}

}  // namespace

std::string dtree_to_dot(const DTree& t) {
  std::ostringstream os;
  os << "digraph D {\n  node [shape=plaintext];\n  n0 [label=\"D^(0)\"];\n";
  int leaf = 0;
  auto emit = [&](const std::string& from, const DChild& c) {
    if (c.is_leaf()) {
      os << "  f" << leaf << " [label=\"" << leaf_name(c) << "\"];\n  " << from << " -> f" << leaf << ";\n";
      ++leaf;
    } else
      os << "  " << from << " -> n" << 2 * c.node << ";\n";
  };
  for (int j = 1; j <= t.k; ++j) {
    std::string m = marks_of(t, j);
    os << "  n" << 2 * j << " [label=\"" << node_name(j) << sign_char(t.sign[j]) << (m.empty() ? "" : " " + m)
       << "\"];\n";
  }
  emit("n0", t.root[0]);
  emit("n0", t.root[1]);
  for (int j = 1; j <= t.k; ++j)
    for (const auto& c : t.child[j]) emit("n" + std::to_string(2 * j), c);
  os << "}\n";
  return os.str();
}

std::string dtree_to_json(const DTree& t) {
  auto child_json = [](const DChild& c) {
    if (c.is_leaf())
      return std::string("{\"F\":[") + std::to_string(c.f_index) + ",\"" + sign_char(c.f_sign) + "\"]}";
    return std::string("{\"D\":") + std::to_string(2 * c.node) + "}";
  };
  std::string s = "{\"k\":" + std::to_string(t.k) + ",\"root\":[" + child_json(t.root[0]) + "," +
                  child_json(t.root[1]) + "],\"nodes\":[";
  for (int j = 1; j <= t.k; ++j) {
    if (j > 1) s += ',';
    s += "{\"label\":" + std::to_string(2 * j) + ",\"sign\":\"" + sign_char(t.sign[j]) + "\",\"children\":[";
    for (int i = 0; i < 5; ++i) {
      if (i) s += ',';
      s += child_json(t.child[j][i]);
    }
    s += "]";
    if (t.marked) {
      s += ",\"marks\":[";
      bool first = true;
      if (t.mark_phi[j]) s += "\"phi\"", first = false;
      if (t.mark_r[j]) s += std::string(first ? "" : ",") + "\"R\"";
      s += "]";
    }
    s += "}";
  }
  return s + "]}";
}

Expr dtree_node_expr(const CollapsingPair& pair, int l) {
  DTree t = build_dtree(pair);
  std::vector<Expr> memo(pair.k + 1);
  return node_expr(t, l, memo);
}

Expansion expand(const CollapsingPair& pair) {
  DTree t = build_dtree(pair);
  std::vector<Expr> memo(pair.k + 1);
  auto side = [&](const DChild& c) { return c.is_leaf() ? leaf_expr(c, t.k) : node_expr(t, c.node, memo); };
  Expansion out;
  out.x1 = normalize(up(1, side(t.root[0])));
  out.x1_prime = normalize(make_conj(up(1, make_conj(side(t.root[1])))));
  return out;
}

Expansion expand_oracle(const CollapsingPair& pair) {
  const int k = pair.k;
  std::vector<Expr> u(2 * k + 2), p(2 * k + 2);
  for (int i = 1; i <= 2 * k + 1; ++i) {
    u[i] = phi();
    p[i] = phi_bar();
  }
  for (int j = k; j >= 1; --j) {
    const int a = 2 * j, b = 2 * j + 1, m = pair.mu_j(j);
    std::vector<Expr> removed{u[a], p[a], u[b], p[b]};
    Expr& target = pair.sgn_j(j) == Sign::Plus ? u[m] : p[m];
    removed.insert(removed.begin(), target);
    target = normalize(make_product(std::move(removed)));
    for (int i = 1; i <= 2 * j - 1; ++i) {
      u[i] = normalize(make_evolve(2 * j - 1, 2 * j + 1, u[i]));
      p[i] = normalize(make_evolve(2 * j + 1, 2 * j - 1, p[i]));
    }
  }
  return Expansion{u[1], p[1]};
}

IntegratedExpansion integrated_expand(const CollapsingPair& pair) {
  DTree t = build_dtree(pair);
  IntegratedExpansion ie;
  ie.k = pair.k;
  ie.outer = IntegralBound{pair.k, 0, 1};
  for (int l = 1; l < pair.k; ++l)
    ie.nodes.push_back(IntegralBound{l, t.is_offspring_of_top(l) ? 2 * pair.k + 1 : 0, 2 * t.parent[l] + 1});
  ie.integrand = expand(pair);
  return ie;
}

std::string render_integrated(const IntegratedExpansion& ie, const CollapsingPair&) {
  auto bound = [](const IntegralBound& b) {
    return "int_{t_" + std::to_string(2 * b.node + 1) + "=" + (b.lower ? "t_" + std::to_string(b.lower) : "0") +
           "}^{t_" + std::to_string(b.upper) + "}";
  };
  std::ostringstream os;
  os << bound(ie.outer) << "\n";
  for (const auto& b : ie.nodes) {
    os << "Q^(" << 2 * b.node << ") = " << bound(b) << " D^(" << 2 * b.node << ") dt_" << 2 * b.node + 1 << "\n";
  }
  os << "Q^(" << 2 * ie.k << ") = D^(" << 2 * ie.k << ")\n";
  os << "x1: " << render_text(ie.integrand.x1) << "\n";
  os << "x1': " << render_text(ie.integrand.x1_prime) << "\n";
  return os.str();
}

const char* case_tag(EstimateCase c) {
  switch (c) {
    case EstimateCase::PhiR:
      return "phiR";
    case EstimateCase::Phi:
      return "phi";
    case EstimateCase::R:
      return "R";
    case EstimateCase::Plain:
      return "plain";
  }
  return "?";
}

const char* case_estimate(EstimateCase c) {
  switch (c) {
    case EstimateCase::PhiR:
      return "low-frequency low-regularity";
    case EstimateCase::Phi:
      return "low-frequency high-regularity";
    case EstimateCase::R:
      return "high-frequency low-regularity";
    case EstimateCase::Plain:
      return "high-frequency high-regularity";
  }
  return "?";
}

EstimateSchedule estimate_schedule(const DTree& tree) {
  DTree t = tree.marked ? tree : mark_dtree(tree);
  EstimateSchedule s;
  s.k = t.k;
  for (int l = 1; l < t.k; ++l) {
    bool f = t.mark_phi[l], r = t.mark_r[l];
    s.cases.push_back(f && r ? EstimateCase::PhiR : f ? EstimateCase::Phi : r ? EstimateCase::R : EstimateCase::Plain);
    if (f) ++s.small_factor_power;
  }
  s.h_norm_power = 4 * t.k + 2 - s.small_factor_power;
  s.constant_power = t.k;
  return s;
}

}  // namespace kmboard
