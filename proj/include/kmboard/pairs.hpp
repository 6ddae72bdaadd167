#ifndef KMBOARD_PAIRS_HPP_
#define KMBOARD_PAIRS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kmboard/errors.hpp"

namespace kmboard {

enum class Sign : std::int8_t { Plus = 0, Minus = 1 };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

// Exhaustive enumeration refuses k above this.
inline constexpr int kEnumerationCap = 10;

/// A coupling order k with a collapsing map and a sign array.
/// Storage is dense on j = 1..k; `mu[j-1]` holds mu(2j), `sgn[j-1]` holds sgn(2j).
struct CollapsingPair {
  int k = 0;
  std::vector<int> mu;
  std::vector<Sign> sgn;

  /// mu at any label in 2..2k+1, with mu(2l+1) = mu(2l).
  int mu_at(int label) const;
  /// sgn at any label in 2..2k+1, with sgn(2l+1) = sgn(2l).
  Sign sign_at(int label) const;

  int mu_j(int j) const { return mu[j - 1]; }
  Sign sgn_j(int j) const { return sgn[j - 1]; }

  bool operator==(const CollapsingPair&) const = default;
  auto operator<=>(const CollapsingPair&) const = default;
};

CollapsingPair validate_pair(int k, std::vector<int> mu, std::vector<Sign> sgn);
/// Same as validate_pair with every sign set to +.
CollapsingPair unsigned_pair(std::vector<int> mu);

int extended_mu(const CollapsingPair& pair, int label);

/// "1,1,1,2,3/+,+,-,-,+"
std::string to_string(const CollapsingPair& pair);
std::vector<int> parse_int_list(const std::string& text);
std::vector<Sign> parse_sign_list(const std::string& text);
std::string format_int_list(const std::vector<int>& v);
std::string format_sign_list(const std::vector<Sign>& v);

/// A bijection of {2,4,...,2k}. `image[j-1]` holds rho(2j).
struct TimePermutation {
  int k = 0;
  std::vector<int> image;

  static TimePermutation identity(int k);
  static TimePermutation from_images(std::vector<int> image);

  /// rho at any label in 1..2k+1: rho(1) = 1, rho(2l+1) = rho(2l)+1.
  int apply(int label) const;
  bool is_identity() const;

  bool operator==(const TimePermutation&) const = default;
  auto operator<=>(const TimePermutation&) const = default;
};

/// (a o b)(x) = a(b(x)).
TimePermutation compose(const TimePermutation& a, const TimePermutation& b);
TimePermutation inverse(const TimePermutation& a);

/// Number of legal collapsing maps of order k, (2k-1)!!.
std::uint64_t map_count(int k);

/// Lexicographic stream over (mu, sgn) with + before -.
class PairStream {
 public:
  PairStream(int k, bool is_signed);

  int k() const { return k_; }
  bool is_signed() const { return signed_; }
  std::uint64_t size() const { return size_; }
  CollapsingPair at(std::uint64_t index) const;
  /// Position of `pair` in the stream; unsigned streams ignore signs.
  std::uint64_t index_of(const CollapsingPair& pair) const;

  template <class F>
  void for_each(F&& f) const {
    CollapsingPair p;
    p.k = k_;
    p.mu.assign(k_, 1);
    p.sgn.assign(k_, Sign::Plus);
    for (;;) {
      if (signed_) {
        for (;;) {
          f(static_cast<const CollapsingPair&>(p));
          int j = k_ - 1;
          while (j >= 0 && p.sgn[j] == Sign::Minus) p.sgn[j--] = Sign::Plus;
          if (j < 0) break;
          p.sgn[j] = Sign::Minus;
        }
      } else {
        f(static_cast<const CollapsingPair&>(p));
      }
      int j = k_ - 1;
      while (j >= 1 && p.mu[j] == 2 * (j + 1) - 1) p.mu[j--] = 1;
      if (j < 1) return;
      ++p.mu[j];
    }
  }

 private:
  int k_;
  bool signed_;
  std::uint64_t size_;
};

std::vector<CollapsingPair> enumerate_pairs(int k, bool is_signed);

}  // namespace kmboard

#endif  // KMBOARD_PAIRS_HPP_
