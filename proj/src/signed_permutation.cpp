#include "bpn/signed_permutation.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace bpn {

namespace {

int magnitude(int s) { return s < 0 ? -s : s; }

std::uint64_t completions(int free_positions) {
  std::uint64_t c = 1;
  for (int k = 1; k <= free_positions; ++k) c *= 2ULL * static_cast<std::uint64_t>(k);
  return c;
}

}  // namespace

SignedPermutation::SignedPermutation(const std::vector<int>& symbols) {
  const int n = static_cast<int>(symbols.size());
  if (n < 1 || n > kMaxSymbols) throw std::invalid_argument("signed permutation: size out of range");
  std::array<bool, kMaxSymbols + 1> seen{};
  for (int s : symbols) {
    if (s == 0 || magnitude(s) > n) throw std::invalid_argument("signed permutation: symbol out of range");
    if (seen[magnitude(s)]) throw std::invalid_argument("signed permutation: repeated magnitude");
    seen[magnitude(s)] = true;
  }
  n_ = static_cast<std::uint8_t>(n);
  for (int p = 0; p < n; ++p) symbols_[p] = static_cast<std::int8_t>(symbols[p]);
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1 || n > kMaxSymbols) throw std::invalid_argument("identity: size out of range");
  SignedPermutation x;
  x.n_ = static_cast<std::uint8_t>(n);
  for (int p = 0; p < n; ++p) x.symbols_[p] = static_cast<std::int8_t>(p + 1);
  return x;
}

SignedPermutation SignedPermutation::prefix_reversal(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("prefix_reversal: index out of range");
  SignedPermutation y = *this;
  for (int p = 0; p < i; ++p) y.symbols_[p] = static_cast<std::int8_t>(-symbols_[i - 1 - p]);
  return y;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation g;
  g.n_ = n_;
  for (int p = 0; p < n_; ++p) {
    const int s = symbols_[p];
    g.symbols_[magnitude(s) - 1] = static_cast<std::int8_t>(s < 0 ? -(p + 1) : p + 1);
  }
  return g;
}

bool SignedPermutation::is_identity() const {
  for (int p = 0; p < n_; ++p)
    if (symbols_[p] != p + 1) return false;
  return true;
}

std::strong_ordering SignedPermutation::operator<=>(const SignedPermutation& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  for (int p = 0; p < n_; ++p) {
    const int a = symbol_key(symbols_[p]);
    const int b = symbol_key(other.symbols_[p]);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

bool SignedPermutation::operator==(const SignedPermutation& other) const {
  if (n_ != other.n_) return false;
  for (int p = 0; p < n_; ++p)
    if (symbols_[p] != other.symbols_[p]) return false;
  return true;
}

SignedPermutation prefix_reversal(const SignedPermutation& x, int i) { return x.prefix_reversal(i); }

SignedPermutation out_neighbour(const SignedPermutation& x) { return x.prefix_reversal(x.size()); }

ClusterId cluster_of(const SignedPermutation& x) { return x.last(); }

int position_of_magnitude(const SignedPermutation& x, int i) {
  for (int p = 1; p <= x.size(); ++p)
    if (magnitude(x[p]) == i) return p;
  throw std::invalid_argument("position_of_magnitude: magnitude not present");
}

SignedPermutation gamma_neighbour(const SignedPermutation& x, int i) {
  if (i < 1 || i > x.size()) throw std::invalid_argument("gamma_neighbour: direction out of range");
  if (i == magnitude(x.last())) throw std::invalid_argument("gamma_neighbour: direction equals the cluster magnitude");
  return x.prefix_reversal(position_of_magnitude(x, i));
}

std::vector<SignedPermutation> two_step_path(const SignedPermutation& x, int i) {
  const SignedPermutation mid = gamma_neighbour(x, i);
  return {x, mid, out_neighbour(mid)};
}

SignedPermutation left_multiply(const SignedPermutation& g, const SignedPermutation& x) {
  if (g.size() != x.size()) throw std::invalid_argument("left_multiply: size mismatch");
  SignedPermutation r;
  r.n_ = x.n_;
  for (int p = 0; p < x.n_; ++p) {
    const int s = x.symbols_[p];
    const int image = g.symbols_[magnitude(s) - 1];
    r.symbols_[p] = static_cast<std::int8_t>(s < 0 ? -image : image);
  }
  return r;
}

ClusterId map_cluster(const SignedPermutation& g, ClusterId c) {
  const int image = g[magnitude(c)];
  return c < 0 ? -image : image;
}

std::string to_string(const SignedPermutation& x) {
  std::string out;
  for (int p = 1; p <= x.size(); ++p) {
    if (p > 1) out += ',';
    out += std::to_string(x[p]);
  }
  return out;
}

SignedPermutation parse_vertex(std::string_view text) {
  std::vector<int> symbols;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("parse_vertex: malformed symbol in \"" + std::string(text) + "\"");
    symbols.push_back(value);
    pos = end + 1;
  }
  return SignedPermutation(symbols);
}

std::uint64_t rank(const SignedPermutation& x) {
  const int n = x.size();
  std::array<bool, kMaxSymbols + 1> used{};
  std::uint64_t r = 0;
  for (int p = 1; p <= n; ++p) {
    const int s = x[p];
    const int m = magnitude(s);
    int smaller = 0;
    for (int k = 1; k < m; ++k)
      if (!used[k]) ++smaller;
    used[m] = true;
    r += static_cast<std::uint64_t>(2 * smaller + (s > 0 ? 1 : 0)) * completions(n - p);
  }
  return r;
}

SignedPermutation unrank(int n, std::uint64_t r) {
  if (n < 1 || n > kMaxSymbols || r >= vertex_count(n)) throw std::invalid_argument("unrank: out of range");
  std::array<bool, kMaxSymbols + 1> used{};
  std::vector<int> symbols(n);
  for (int p = 1; p <= n; ++p) {
    const std::uint64_t block = completions(n - p);
    const int idx = static_cast<int>(r / block);
    r %= block;
    int target = idx / 2;
    int m = 1;
    for (;; ++m) {
      if (used[m]) continue;
      if (target == 0) break;
      --target;
    }
    used[m] = true;
    symbols[p - 1] = (idx % 2 == 1) ? m : -m;
  }
  return SignedPermutation(symbols);
}

std::uint64_t vertex_count(int n) { return completions(n); }

}  // namespace bpn
