#include "kmboard/symexpr.hpp"

#include <algorithm>
#include <map>

namespace kmboard {

using Kind = ExprNode::Kind;

Exponent exponent_between(int a, int b) {
  Exponent e;
  if (a == b) return e;
  e.emplace_back(a, 1);
  e.emplace_back(b, -1);
  std::sort(e.begin(), e.end());
  return e;
}

Exponent negate(const Exponent& e) {
  Exponent out = e;
  for (auto& [label, c] : out) c = -c;
  return out;
}

Exponent add(const Exponent& a, const Exponent& b) {
  std::map<int, int> m;
  for (const auto& [l, c] : a) m[l] += c;
  for (const auto& [l, c] : b) m[l] += c;
  Exponent out;
  for (const auto& [l, c] : m)
    if (c) out.emplace_back(l, c);
  return out;
}

namespace {

Expr node(Kind kind, bool bar, Exponent exponent, std::vector<Expr> children) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->bar = bar;
  n->exponent = std::move(exponent);
  n->children = std::move(children);
  return n;
}

// Conjugate of an expression already in normal form.
Expr conj_normal(const Expr& e) {
  switch (e->kind) {
    case Kind::Atom:
      return e->bar ? phi() : phi_bar();
    case Kind::Evolve:
      return node(Kind::Evolve, false, negate(e->exponent), {conj_normal(e->children[0])});
    case Kind::Product: {
      std::vector<Expr> fs;
      fs.reserve(e->children.size());
      for (const auto& c : e->children) fs.push_back(conj_normal(c));
      return node(Kind::Product, false, {}, std::move(fs));
    }
    case Kind::Conj:
      break;
  }
  return conj_normal(normalize(e));
}

std::string exponent_key(const Exponent& e) {
  std::string s;
  for (const auto& [l, c] : e) {
    if (!s.empty()) s += ',';
    s += std::to_string(l) + ':' + std::to_string(c);
  }
  return s;
}

std::string key_normal(const Expr& e) {
  switch (e->kind) {
    case Kind::Atom:
      return e->bar ? "q" : "p";
    case Kind::Evolve:
      return "E[" + exponent_key(e->exponent) + "](" + key_normal(e->children[0]) + ")";
    case Kind::Product: {
      std::vector<std::string> ks;
      for (const auto& c : e->children) ks.push_back(key_normal(c));
      std::sort(ks.begin(), ks.end());
      std::string s = "P(";
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) s += ',';
        s += ks[i];
      }
      return s + ")";
    }
    case Kind::Conj:
      break;
  }
  return key_normal(normalize(e));
}

Expr relabel(const Expr& e, const TimePermutation& sigma, bool retime, int top) {
  switch (e->kind) {
    case Kind::Atom: {
      if (!retime) return e;
      int to = sigma.apply(top);
      Exponent ex = exponent_between(to, top);
      return make_evolve(e->bar ? negate(ex) : ex, e);
    }
    case Kind::Evolve: {
      Exponent ex;
      for (const auto& [l, c] : e->exponent) ex.emplace_back(sigma.apply(l), c);
      std::sort(ex.begin(), ex.end());
      return make_evolve(std::move(ex), relabel(e->children[0], sigma, retime, top));
    }
    case Kind::Conj:
      return make_conj(relabel(e->children[0], sigma, retime, top));
    case Kind::Product: {
      std::vector<Expr> fs;
      for (const auto& c : e->children) fs.push_back(relabel(c, sigma, retime, top));
      return make_product(std::move(fs));
    }
  }
  return e;
}

// ---- text rendering ----

std::string render(const Expr& e);

bool starts_with_conj(const std::string& s) { return s.rfind("conj(", 0) == 0; }

std::string power(int n) { return n < 10 ? "^" + std::to_string(n) : "^{" + std::to_string(n) + "}"; }

struct Group {
  Expr rep;
  std::string rep_key, conj_key;
  int plus = 0, minus = 0;
};

std::vector<Group> group_factors(const Expr& product) {
  std::vector<Group> groups;
  for (const auto& f : product->children) {
    std::string k = key_normal(f);
    bool placed = false;
    for (auto& g : groups) {
      if (g.rep_key == k) {
        ++g.plus;
        placed = true;
        break;
      }
      if (g.conj_key == k) {
        ++g.minus;
        placed = true;
        break;
      }
    }
    if (placed) continue;
    Expr c = conj_normal(f);
    Group g;
    if (starts_with_conj(render(f)) && !starts_with_conj(render(c))) {
      g.rep = c;
      g.minus = 1;
    } else {
      g.rep = f;
      g.plus = 1;
    }
    g.rep_key = key_normal(g.rep);
    g.conj_key = key_normal(conj_normal(g.rep));
    if (g.rep_key == g.conj_key) {
      g.plus += g.minus;
      g.minus = 0;
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

std::string render_group(const Group& g) {
  int m = std::min(g.plus, g.minus);
  std::string s;
  if (m > 0) s += "|" + render(g.rep) + "|" + power(2 * m);
  std::string rest = g.plus > g.minus ? render(g.rep) : render(conj_normal(g.rep));
  for (int i = 0; i < std::max(g.plus, g.minus) - m; ++i) s += rest;
  return s;
}

std::string render_product(const Expr& e, bool under_evolve) {
  std::vector<Group> groups = group_factors(e);
  if (groups.size() == 1) {
    std::string g = render_group(groups[0]);
    return under_evolve ? "(" + g + ")" : g;
  }
  std::string s;
  for (const auto& g : groups) s += "(" + render_group(g) + ")";
  return under_evolve ? "{" + s + "}" : s;
}

std::string render_operand(const Expr& x) {
  if (x->kind == Kind::Product) return render_product(x, true);
  std::string s = render(x);
  return x->kind == Kind::Atom && !x->bar ? s : "(" + s + ")";
}

std::string render(const Expr& e) {
  switch (e->kind) {
    case Kind::Atom:
      return e->bar ? "conj(phi)" : "phi";
    case Kind::Product:
      return render_product(e, false);
    case Kind::Conj:
      return render(normalize(e));
    case Kind::Evolve:
      break;
  }
  const Exponent& ex = e->exponent;
  const Expr& x = e->children[0];
  if (ex.size() == 2 && ex[0].second == 1 && ex[1].second == -1)
    return "U_{" + std::to_string(ex[0].first) + "," + std::to_string(ex[1].first) + "}" + render_operand(x);
  if (ex.size() == 2 && ex[0].second == -1 && ex[1].second == 1)
    return "conj(U_{" + std::to_string(ex[0].first) + "," + std::to_string(ex[1].first) + "}" +
           render_operand(conj_normal(x)) + ")";
  if (ex.size() == 1 && (ex[0].second == 1 || ex[0].second == -1))
    return "U_{" + std::string(ex[0].second < 0 ? "-" : "") + std::to_string(ex[0].first) + "}" + render_operand(x);
  std::string s = "U[";
  for (std::size_t i = 0; i < ex.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ex[i].first) + ":" + std::to_string(ex[i].second);
  }
  return s + "]" + render_operand(x);
}

void json(const Expr& e, std::string& out) {
  switch (e->kind) {
    case Kind::Atom:
      out += e->bar ? "{\"atom\":\"phibar\"}" : "{\"atom\":\"phi\"}";
      return;
    case Kind::Conj:
      out += "{\"conj\":";
      json(e->children[0], out);
      out += "}";
      return;
    case Kind::Evolve:
      out += "{\"evolve\":[";
      for (std::size_t i = 0; i < e->exponent.size(); ++i) {
        if (i) out += ',';
        out += "[" + std::to_string(e->exponent[i].first) + "," + std::to_string(e->exponent[i].second) + "]";
      }
      out += "],\"arg\":";
      json(e->children[0], out);
      out += "}";
      return;
    case Kind::Product:
      out += "{\"product\":[";
      for (std::size_t i = 0; i < e->children.size(); ++i) {
        if (i) out += ',';
        json(e->children[i], out);
      }
      out += "]}";
      return;
  }
}

}  // namespace

Expr phi() {
  static const Expr p = node(Kind::Atom, false, {}, {});
  return p;
}

Expr phi_bar() {
  static const Expr p = node(Kind::Atom, true, {}, {});
  return p;
}

Expr make_conj(Expr e) { return node(Kind::Conj, false, {}, {std::move(e)}); }

Expr make_evolve(Exponent ex, Expr x) { return node(Kind::Evolve, false, std::move(ex), {std::move(x)}); }

Expr make_evolve(int a, int b, Expr x) { return make_evolve(exponent_between(a, b), std::move(x)); }

Expr make_product(std::vector<Expr> factors) { return node(Kind::Product, false, {}, std::move(factors)); }

Expr normalize(const Expr& e) {
  switch (e->kind) {
    case Kind::Atom:
      return e;
    case Kind::Conj:
      return conj_normal(normalize(e->children[0]));
    case Kind::Evolve: {
      Expr inner = normalize(e->children[0]);
      Exponent ex = add(e->exponent, {});
      if (inner->kind == Kind::Evolve) {
        ex = add(ex, inner->exponent);
        inner = inner->children[0];
      }
      if (ex.empty()) return inner;
      return node(Kind::Evolve, false, std::move(ex), {inner});
    }
    case Kind::Product: {
      std::vector<Expr> fs;
      for (const auto& c : e->children) {
        Expr n = normalize(c);
        if (n->kind == Kind::Product)
          fs.insert(fs.end(), n->children.begin(), n->children.end());
        else
          fs.push_back(std::move(n));
      }
      if (fs.size() == 1) return fs[0];
      return node(Kind::Product, false, {}, std::move(fs));
    }
  }
  return e;
}

Expr canonical(const Expr& e) {
  Expr n = normalize(e);
  switch (n->kind) {
    case Kind::Evolve:
      return node(Kind::Evolve, false, n->exponent, {canonical(n->children[0])});
    case Kind::Product: {
      std::vector<std::pair<std::string, Expr>> fs;
      for (const auto& c : n->children) {
        Expr cc = canonical(c);
        fs.emplace_back(key_normal(cc), cc);
      }
      std::stable_sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<Expr> out;
      for (auto& f : fs) out.push_back(std::move(f.second));
      return node(Kind::Product, false, {}, std::move(out));
    }
    default:
      return n;
  }
}

std::string key(const Expr& e) { return key_normal(normalize(e)); }

bool equivalent(const Expr& a, const Expr& b) { return key(a) == key(b); }

Expr substitute_times(const Expr& e, const TimePermutation& sigma, bool retime_density) {
  return normalize(relabel(e, sigma, retime_density, 2 * sigma.k + 1));
}

std::string render_text(const Expr& e) { return render(normalize(e)); }

std::string render_json(const Expr& e) {
  std::string out;
  json(e, out);
  return out;
}

int atom_count(const Expr& e) {
  if (e->kind == Kind::Atom) return 1;
  int n = 0;
  for (const auto& c : e->children) n += atom_count(c);
  return n;
}

}  // namespace kmboard
