#include "kmboard/pairs.hpp"

#include <sstream>

namespace kmboard {

int CollapsingPair::mu_at(int label) const {
  if (label < 2 || label > 2 * k + 1)
    throw OutOfRange("label " + std::to_string(label) + " outside 2.." + std::to_string(2 * k + 1));
  return mu[label / 2 - 1];
}

Sign CollapsingPair::sign_at(int label) const {
  if (label < 2 || label > 2 * k + 1)
    throw OutOfRange("label " + std::to_string(label) + " outside 2.." + std::to_string(2 * k + 1));
  return sgn[label / 2 - 1];
}

CollapsingPair validate_pair(int k, std::vector<int> mu, std::vector<Sign> sgn) {
  if (k < 1) throw LengthMismatch("k must be positive");
  if (static_cast<int>(mu.size()) != k)
    throw LengthMismatch("mu has " + std::to_string(mu.size()) + " entries, expected " + std::to_string(k));
  if (static_cast<int>(sgn.size()) != k)
    throw LengthMismatch("sgn has " + std::to_string(sgn.size()) + " entries, expected " + std::to_string(k));
  if (mu[0] != 1) throw ConstraintViolation(1);
  for (int j = 2; j <= k; ++j)
    if (mu[j - 1] < 1 || mu[j - 1] >= 2 * j) throw ConstraintViolation(j);
  return CollapsingPair{k, std::move(mu), std::move(sgn)};
}

CollapsingPair unsigned_pair(std::vector<int> mu) {
  int k = static_cast<int>(mu.size());
  return validate_pair(k, std::move(mu), std::vector<Sign>(k, Sign::Plus));
}

int extended_mu(const CollapsingPair& pair, int label) { return pair.mu_at(label); }

std::string format_int_list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string format_sign_list(const std::vector<Sign>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += sign_char(v[i]);
  }
  return s;
}

std::string to_string(const CollapsingPair& pair) {
  return format_int_list(pair.mu) + "/" + format_sign_list(pair.sgn);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + item + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw ParseError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Sign> parse_sign_list(const std::string& text) {
  std::vector<Sign> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char c : item)
      if (c != ' ') t += c;
    if (t == "+" || t == "p")
      out.push_back(Sign::Plus);
    else if (t == "-" || t == "m" || t == "\xe2\x88\x92")
      out.push_back(Sign::Minus);
    else
      throw ParseError("not a sign: '" + item + "'");
  }
  return out;
}

TimePermutation TimePermutation::identity(int k) {
  TimePermutation p;
  p.k = k;
  p.image.resize(k);
  for (int j = 1; j <= k; ++j) p.image[j - 1] = 2 * j;
  return p;
}

TimePermutation TimePermutation::from_images(std::vector<int> image) {
  int k = static_cast<int>(image.size());
  std::vector<char> seen(k + 1, 0);
  for (int v : image) {
    if (v < 2 || v > 2 * k || v % 2 != 0 || seen[v / 2])
      throw OutOfRange("not a permutation of the even labels: " + format_int_list(image));
    seen[v / 2] = 1;
  }
  return TimePermutation{k, std::move(image)};
}

int TimePermutation::apply(int label) const {
  if (label == 1) return 1;
  if (label < 1 || label > 2 * k + 1) throw OutOfRange("label " + std::to_string(label));
  int base = image[label / 2 - 1];
  return (label % 2) ? base + 1 : base;
}

bool TimePermutation::is_identity() const {
  for (int j = 1; j <= k; ++j)
    if (image[j - 1] != 2 * j) return false;
  return true;
}

TimePermutation compose(const TimePermutation& a, const TimePermutation& b) {
  if (a.k != b.k) throw KMismatch("composing permutations of different order");
  TimePermutation c;
  c.k = a.k;
  c.image.resize(a.k);
  for (int j = 0; j < a.k; ++j) c.image[j] = a.image[b.image[j] / 2 - 1];
  return c;
}

TimePermutation inverse(const TimePermutation& a) {
  TimePermutation c;
  c.k = a.k;
  c.image.resize(a.k);
  for (int j = 0; j < a.k; ++j) c.image[a.image[j] / 2 - 1] = 2 * (j + 1);
  return c;
}

std::uint64_t map_count(int k) {
  std::uint64_t n = 1;
  for (int j = 2; j <= k; ++j) n *= static_cast<std::uint64_t>(2 * j - 1);
  return n;
}

PairStream::PairStream(int k, bool is_signed) : k_(k), signed_(is_signed) {
  if (k < 1) throw OutOfRange("k must be positive");
  if (k > kEnumerationCap)
    throw CapExceeded("exhaustive enumeration is capped at k=" + std::to_string(kEnumerationCap));
  size_ = map_count(k) << (signed_ ? k : 0);
}

CollapsingPair PairStream::at(std::uint64_t index) const {
  if (index >= size_) throw OutOfRange("stream index " + std::to_string(index));
  CollapsingPair p;
  p.k = k_;
  p.mu.assign(k_, 1);
  p.sgn.assign(k_, Sign::Plus);
  std::uint64_t rest = index;
  if (signed_) {
    for (int j = k_ - 1; j >= 0; --j) {
      p.sgn[j] = (rest & 1) ? Sign::Minus : Sign::Plus;
      rest >>= 1;
    }
  }
  for (int j = k_; j >= 2; --j) {
    std::uint64_t radix = static_cast<std::uint64_t>(2 * j - 1);
    p.mu[j - 1] = static_cast<int>(rest % radix) + 1;
    rest /= radix;
  }
  return p;
}

std::uint64_t PairStream::index_of(const CollapsingPair& pair) const {
  if (pair.k != k_) throw KMismatch("pair order differs from stream order");
  std::uint64_t idx = 0;
  for (int j = 2; j <= k_; ++j) idx = idx * static_cast<std::uint64_t>(2 * j - 1) + (pair.mu[j - 1] - 1);
  if (signed_)
    for (int j = 0; j < k_; ++j) idx = (idx << 1) | (pair.sgn[j] == Sign::Minus ? 1u : 0u);
  return idx;
}

std::vector<CollapsingPair> enumerate_pairs(int k, bool is_signed) {
  PairStream s(k, is_signed);
  std::vector<CollapsingPair> out;
  out.reserve(s.size());
  s.for_each([&](const CollapsingPair& p) { out.push_back(p); });
  return out;
}

}  // namespace kmboard
