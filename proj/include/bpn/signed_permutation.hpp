#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bpn {

/// Largest dimension the permutation algebra supports. Graph construction is
/// capped much lower (see BurntPancakeGraph).
inline constexpr int kMaxSymbols = 16;

/// A cluster label in [[n]]: +i or -i for i in 1..n.
using ClusterId = int;

/// Dense index of a cluster label: -1 -> 0, 1 -> 1, -2 -> 2, 2 -> 3, ...
inline int cluster_index(ClusterId c) { return 2 * ((c < 0 ? -c : c) - 1) + (c > 0 ? 1 : 0); }
inline ClusterId cluster_from_index(int idx) { return (idx % 2 == 1) ? idx / 2 + 1 : -(idx / 2 + 1); }

/// A vertex of BP_n: a sequence of n nonzero symbols whose magnitudes form a
/// permutation of 1..n. Positions are 1-based in the public interface.
class SignedPermutation {
public:
  SignedPermutation() = default;

  /// Throws std::invalid_argument unless `symbols` is a valid signed permutation.
  explicit SignedPermutation(const std::vector<int>& symbols);

  static SignedPermutation identity(int n);

  int size() const { return n_; }
  int operator[](int position) const { return symbols_[position - 1]; }
  int first() const { return symbols_[0]; }
  int last() const { return symbols_[n_ - 1]; }
  std::vector<int> symbols() const { return {symbols_.begin(), symbols_.begin() + n_}; }

  /// x(i): reverse and negate the first i symbols.
  SignedPermutation prefix_reversal(int i) const;

  /// Group inverse under left_multiply: left_multiply(inverse(), *this) is the identity.
  SignedPermutation inverse() const;

  bool is_identity() const;

  /// Lexicographic order on symbols, -k ordered directly before +k.
  std::strong_ordering operator<=>(const SignedPermutation& other) const;
  bool operator==(const SignedPermutation& other) const;

private:
  std::array<std::int8_t, kMaxSymbols> symbols_{};
  std::uint8_t n_ = 0;

  friend SignedPermutation left_multiply(const SignedPermutation&, const SignedPermutation&);
};

/// Sort key of a single symbol in the canonical order.
inline int symbol_key(int s) { return 2 * ((s < 0 ? -s : s) - 1) + (s > 0 ? 1 : 0); }

SignedPermutation prefix_reversal(const SignedPermutation& x, int i);

/// x(n), the unique neighbour outside x's cluster.
SignedPermutation out_neighbour(const SignedPermutation& x);

/// The last symbol of x.
ClusterId cluster_of(const SignedPermutation& x);

/// Position j (1-based) with |x_j| = i.
int position_of_magnitude(const SignedPermutation& x, int i);

/// Gamma_i(x): the in-cluster neighbour whose out-neighbour lies in G^i or G^-i.
/// Requires 1 <= i <= n and i != |x_n|.
SignedPermutation gamma_neighbour(const SignedPermutation& x, int i);

/// The two-edge path x, Gamma_i(x), out(Gamma_i(x)) as a vertex sequence.
std::vector<SignedPermutation> two_step_path(const SignedPermutation& x, int i);

/// Composition g after x: position p holds sign(x_p) * g_{|x_p|}.
SignedPermutation left_multiply(const SignedPermutation& g, const SignedPermutation& x);

/// Image of a cluster label under the automorphism x -> left_multiply(g, x).
ClusterId map_cluster(const SignedPermutation& g, ClusterId c);

/// Text form "s1,s2,...,sn".
std::string to_string(const SignedPermutation& x);
SignedPermutation parse_vertex(std::string_view text);

/// Lexicographic rank in the canonical order, 0 <= rank < 2^n n!.
std::uint64_t rank(const SignedPermutation& x);
SignedPermutation unrank(int n, std::uint64_t r);

/// 2^n n!
std::uint64_t vertex_count(int n);

}  // namespace bpn
