#include "kmboard/trees.hpp"

#include <sstream>

namespace kmboard {

namespace {

SignedTree empty_tree(int k) {
  SignedTree t;
  t.k = k;
  t.child.assign(k + 1, {0, 0, 0});
  t.parent.assign(k + 1, -1);
  t.slot.assign(k + 1, kMiddle);
  t.sign.assign(k + 1, Sign::Plus);
  return t;
}

void append_key(const std::vector<std::array<int, 3>>& child, const std::vector<Sign>& sign, bool is_signed,
                int j, std::string& out) {
  out += '(';
  if (is_signed) out += sign_char(sign[j]);
  static const char kTag[3] = {'L', 'M', 'R'};
  for (int s = 0; s < 3; ++s) {
    out += kTag[s];
    if (child[j][s])
      append_key(child, sign, is_signed, child[j][s], out);
    else
      out += '.';
  }
  out += ')';
}

void append_key(const Skeleton& sk, int n, std::string& out) {
  out += '(';
  if (sk.is_signed) out += sign_char(sk.nodes[n].sign);
  static const char kTag[3] = {'L', 'M', 'R'};
  for (int s = 0; s < 3; ++s) {
    out += kTag[s];
    int c = sk.nodes[n].child[s];
    if (c >= 0)
      append_key(sk, c, out);
    else
      out += '.';
  }
  out += ')';
}

// Node indices of the left branch starting at skeleton node n.
std::vector<int> left_branch(const Skeleton& sk, int n) {
  std::vector<int> b;
  for (; n >= 0; n = sk.nodes[n].child[kLeft]) b.push_back(n);
  return b;
}

}  // namespace

SignedTree tree_from_pair(const CollapsingPair& pair) {
  const int k = pair.k;
  SignedTree t = empty_tree(k);
  // last[v] = largest j seen so far with mu(2j) = v
  std::vector<int> last(2 * k + 2, 0);
  t.child[0][kMiddle] = 1;
  t.parent[1] = 0;
  t.slot[1] = kMiddle;
  last[1] = 1;
  for (int j = 1; j <= k; ++j) t.sign[j] = pair.sgn_j(j);
  for (int l = 2; l <= k; ++l) {
    int v = pair.mu_j(l);
    int p;
    Slot s;
    if (last[v]) {
      p = last[v];
      s = kLeft;
    } else {
      p = v / 2;
      s = (v % 2) ? kRight : kMiddle;
    }
    t.child[p][s] = l;
    t.parent[l] = p;
    t.slot[l] = s;
    last[v] = l;
  }
  return t;
}

CollapsingPair pair_from_tree(const SignedTree& tree) {
  const int k = tree.k;
  CollapsingPair p;
  p.k = k;
  p.mu.assign(k, 0);
  p.sgn.assign(k, Sign::Plus);
  for (int j = 1; j <= k; ++j) {
    int par = tree.parent[j];
    if (par < 0 || par >= j)
      throw NotAdmissible("node " + std::to_string(2 * j) + " has parent label not below it");
    if (par == 0) {
      if (j != 1 || tree.slot[j] != kMiddle) throw NotAdmissible("node 1 must have node 2 as its only child");
      p.mu[0] = 1;
    } else if (tree.slot[j] == kLeft) {
      p.mu[j - 1] = p.mu[par - 1];
    } else if (tree.slot[j] == kMiddle) {
      p.mu[j - 1] = 2 * par;
    } else {
      p.mu[j - 1] = 2 * par + 1;
    }
    p.sgn[j - 1] = tree.sign[j];
  }
  return p;
}

SignedTree make_tree(int k, const std::vector<std::array<int, 3>>& children, const std::vector<Sign>& signs) {
  if (static_cast<int>(children.size()) != k + 1 || static_cast<int>(signs.size()) != k + 1)
    throw LengthMismatch("tree description has wrong size");
  SignedTree t = empty_tree(k);
  t.child[0][kMiddle] = 1;
  t.parent[1] = 0;
  for (int j = 1; j <= k; ++j) {
    t.sign[j] = signs[j];
    for (int s = 0; s < 3; ++s) {
      int c = children[j][s];
      if (!c) continue;
      if (c <= j || c > k)
        throw NotAdmissible("child " + std::to_string(2 * c) + " of node " + std::to_string(2 * j));
      if (t.parent[c] != -1) throw NotAdmissible("node " + std::to_string(2 * c) + " has two parents");
      t.child[j][s] = c;
      t.parent[c] = j;
      t.slot[c] = static_cast<Slot>(s);
    }
  }
  for (int j = 1; j <= k; ++j)
    if (t.parent[j] == -1) throw NotAdmissible("node " + std::to_string(2 * j) + " is detached");
  return t;
}

std::string Skeleton::key() const {
  std::string out;
  out.reserve(nodes.size() * 9);
  if (!nodes.empty()) append_key(*this, 0, out);
  return out;
}

std::vector<int> preorder_nodes(const SignedTree& tree) {
  std::vector<int> order;
  order.reserve(tree.k);
  std::vector<int> stack{1};
  while (!stack.empty()) {
    int j = stack.back();
    stack.pop_back();
    order.push_back(j);
    for (int s = 2; s >= 0; --s)
      if (tree.child[j][s]) stack.push_back(tree.child[j][s]);
  }
  return order;
}

Skeleton skeleton_of(const SignedTree& tree, bool is_signed) {
  std::vector<int> order = preorder_nodes(tree);
  std::vector<int> pos(tree.k + 1, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  Skeleton sk;
  sk.is_signed = is_signed;
  sk.nodes.resize(order.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    int j = order[i];
    sk.nodes[i].sign = is_signed ? tree.sign[j] : Sign::Plus;
    for (int s = 0; s < 3; ++s) sk.nodes[i].child[s] = tree.child[j][s] ? pos[tree.child[j][s]] : -1;
  }
  return sk;
}

std::string skeleton_key(const CollapsingPair& pair, bool is_signed) {
  SignedTree t = tree_from_pair(pair);
  std::string out;
  out.reserve(pair.k * 9);
  append_key(t.child, t.sign, is_signed, 1, out);
  return out;
}

namespace {

struct SkeletonParser {
  const std::string& key;
  std::size_t i = 0;
  Skeleton sk;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad skeleton at offset " + std::to_string(i) + ": " + why);
  }
  void expect(char c) {
    if (i >= key.size() || key[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  int node() {
    expect('(');
    int id = static_cast<int>(sk.nodes.size());
    sk.nodes.emplace_back();
    if (i < key.size() && (key[i] == '+' || key[i] == '-')) {
      sk.is_signed = true;
      sk.nodes[id].sign = key[i] == '+' ? Sign::Plus : Sign::Minus;
      ++i;
    }
    static const char kTag[3] = {'L', 'M', 'R'};
    for (int s = 0; s < 3; ++s) {
      expect(kTag[s]);
      if (i < key.size() && key[i] == '.') {
        ++i;
      } else {
        int c = node();
        sk.nodes[id].child[s] = c;
      }
    }
    expect(')');
    return id;
  }
};

}  // namespace

Skeleton parse_skeleton(const std::string& key) {
  SkeletonParser p{key, 0, {}};
  p.node();
  if (p.i != key.size()) p.fail("trailing characters");
  return std::move(p.sk);
}

SignedTree label_skeleton(const Skeleton& sk, const std::vector<int>& index_of_node) {
  const int k = sk.size();
  std::vector<std::array<int, 3>> children(k + 1, {0, 0, 0});
  std::vector<Sign> signs(k + 1, Sign::Plus);
  for (int n = 0; n < k; ++n) {
    int j = index_of_node[n];
    signs[j] = sk.nodes[n].sign;
    for (int s = 0; s < 3; ++s)
      if (sk.nodes[n].child[s] >= 0) children[j][s] = index_of_node[sk.nodes[n].child[s]];
  }
  if (index_of_node[0] != 1) throw NotAdmissible("skeleton root must carry label 2");
  return make_tree(k, children, signs);
}

SignedTree echelon_labeling(const Skeleton& sk) {
  const int k = sk.size();
  std::vector<int> idx(k, 0);
  std::vector<int> by_index(k + 1, -1);  // skeleton node holding label index j
  int j = 1;
  idx[0] = 1;
  by_index[1] = 0;
  int cur = 0;
  while (j < k) {
    int next = sk.nodes[cur].child[kLeft];
    if (next < 0) {
      for (int i = 1; i <= j && next < 0; ++i) {
        const auto& n = sk.nodes[by_index[i]];
        if (n.child[kMiddle] >= 0 && !idx[n.child[kMiddle]])
          next = n.child[kMiddle];
        else if (n.child[kRight] >= 0 && !idx[n.child[kRight]])
          next = n.child[kRight];
      }
      if (next < 0) break;
    }
    idx[next] = ++j;
    by_index[j] = next;
    cur = next;
  }
  return label_skeleton(sk, idx);
}

SignedTree tamed_labeling(const Skeleton& sk) {
  const int k = sk.size();
  std::vector<int> idx(k, 0);
  std::vector<int> queue;
  int next_index = 1;
  auto take_branch = [&](int head) {
    std::vector<int> branch = left_branch(sk, head);
    for (int n : branch) idx[n] = next_index++;
    for (int n : branch)
      if (sk.nodes[n].sign == Sign::Plus) queue.push_back(n);
    for (int n : branch)
      if (sk.nodes[n].sign == Sign::Minus) queue.push_back(n);
  };
  take_branch(0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto& n = sk.nodes[queue[q]];
    if (n.child[kMiddle] >= 0) take_branch(n.child[kMiddle]);
    if (n.child[kRight] >= 0) take_branch(n.child[kRight]);
  }
  return label_skeleton(sk, idx);
}

std::string tree_to_dot(const SignedTree& tree) {
  std::ostringstream os;
  os << "digraph T {\n  node [shape=plaintext];\n  n1 [label=\"1\"];\n";
  for (int j = 1; j <= tree.k; ++j)
    os << "  n" << 2 * j << " [label=\"" << 2 * j << sign_char(tree.sign[j]) << "\"];\n";
  os << "  n2 -> n1;\n";
  for (int j = 1; j <= tree.k; ++j) {
    for (int s = 0; s < 3; ++s) {
      int c = tree.child[j][s];
      if (!c) continue;
      if (s == kLeft)
        os << "  n" << 2 * j << " -> n" << 2 * c << " [dir=none, label=\"L\"];\n";
      else
        os << "  n" << 2 * c << " -> n" << 2 * j << " [label=\"" << (s == kMiddle ? 'M' : 'R') << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace kmboard
