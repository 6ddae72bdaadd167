#ifndef KMBOARD_SYMEXPR_HPP_
#define KMBOARD_SYMEXPR_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kmboard/pairs.hpp"

namespace kmboard {

/// Propagator exponent: (label, coefficient) sorted by label, no zero
/// coefficients. {a:+1, b:-1} is U_{a,b} = e^{i(t_a - t_b) Delta}.
using Exponent = std::vector<std::pair<int, int>>;

Exponent exponent_between(int a, int b);
Exponent negate(const Exponent& e);
Exponent add(const Exponent& a, const Exponent& b);

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Atom, Conj, Evolve, Product };
  Kind kind;
  bool bar = false;             // Atom: phi-bar instead of phi
  Exponent exponent;            // Evolve
  std::vector<Expr> children;   // Conj/Evolve: one child; Product: factors in slot order
};

Expr phi();
Expr phi_bar();
/// Raw constructors; they do not simplify.
Expr make_conj(Expr e);
Expr make_evolve(Exponent e, Expr x);
Expr make_evolve(int a, int b, Expr x);
Expr make_product(std::vector<Expr> factors);

/// Conjugation pushed to atoms, Evolve layers merged, zero exponents dropped,
/// products flattened. Product factors keep their order; `key` sorts them.
Expr normalize(const Expr& e);
/// Normal form with product factors sorted canonically.
Expr canonical(const Expr& e);
/// Canonical serialization; equal keys mean equal normal forms.
std::string key(const Expr& e);
bool equivalent(const Expr& a, const Expr& b);

/// t_x -> t_{sigma(x)} on every odd label (t_1 fixed). With `retime_density`,
/// phi (at t_{2k+1}) becomes U_{sigma(2k)+1, 2k+1} phi.
Expr substitute_times(const Expr& e, const TimePermutation& sigma, bool retime_density = true);

/// U_{a,b} notation, conj(...) for overlines, |X|^{2m} for conjugate pairs.
std::string render_text(const Expr& e);
/// AST as a JSON string.
std::string render_json(const Expr& e);

/// Counts atoms; used by tests.
int atom_count(const Expr& e);

}  // namespace kmboard

#endif  // KMBOARD_SYMEXPR_HPP_
