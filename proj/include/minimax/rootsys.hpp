#pragma once

// Root-system data for the simple types A_p .. G_2.
//
// Simple roots are numbered as in the Vinberg-Onishchik tables:
//
//   type   numbering                                   Bourbaki index of alpha_1..alpha_p
//   A,B,C,D  identical to Bourbaki                     1, 2, ..., p
//   E6     chain 1-2-3-4-5, node 6 on node 3           1, 3, 4, 5, 6, 2
//   E7     chain 1-..-6,    node 7 on node 4           7, 6, 5, 4, 3, 1, 2
//   E8     chain 1-..-7,    node 8 on node 5           8, 7, 6, 5, 4, 3, 1, 2
//   F4     1 - 2 <= 3 - 4 (alpha_1, alpha_2 short)     4, 3, 2, 1
//   G2     alpha_1 short, alpha_2 long                 1, 2
//
// With this numbering theta is (2,4,3,2) in F4, (1,2,3,2,1,2) in E6,
// (1,2,3,4,3,2,2) in E7 and (2,3,4,5,6,4,2,3) in E8.
//
// The invariant form is normalized so that long roots have squared length 2.
// Internally it is stored scaled by 6, which makes every Gram entry an integer
// for all types (G2 short roots have squared length 2/3).
//
// Points of V (and coroot/coweight lattice vectors) are always written in
// the basis of fundamental coweights, i.e. as the vector ((x, alpha_i))_i.
// With that convention (x, gamma) is the plain dot product of the point with
// the simple-root coordinates of gamma.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "minimax/root_set.hpp"

namespace minimax {

inline constexpr int kMaxRank = 16;

/// Integer vector of simple-root (or coweight) coordinates; entries past the
/// rank are always zero.
using IntVec = std::array<int, kMaxRank>;
using Rational = boost::rational<std::int64_t>;
using RatVec = std::array<Rational, kMaxRank>;

enum class CartanType { A, B, C, D, E, F, G };

/// "A4", "E6", "G2", ...
std::string type_label(CartanType type, int rank);
/// Parses "A", "E", "E6", "f4", ... The rank embedded in labels like "E6" is
/// returned through `rank` when present.
CartanType parse_cartan_type(std::string_view text, int* rank = nullptr);
/// Every buildable (type, rank) with rank <= max_rank, in the order A, B, C, D, E, F, G.
std::vector<std::pair<CartanType, int>> types_up_to_rank(int max_rank);

struct Root {
  IntVec coords{};
  int height = 0;
};

class RootSystem {
 public:
  /// Throws std::invalid_argument naming the valid ranges on a bad
  /// (type, rank) pair.
  static RootSystem build(CartanType type, int rank);

  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return type_label(type_, rank_); }

  const std::vector<Root>& positive_roots() const { return roots_; }
  int num_positive() const { return static_cast<int>(roots_.size()); }
  const Root& root(int idx) const { return roots_[idx]; }
  const IntVec& coords(int idx) const { return roots_[idx].coords; }
  RootSet all_roots() const { return RootSet::first_n(num_positive()); }

  /// Index of a positive root, or nullopt if `v` is not a positive root.
  std::optional<int> index_of(const IntVec& v) const;
  int index_of_simple(int i) const { return simple_index_[i]; }
  bool is_positive_root(const IntVec& v) const { return index_of(v).has_value(); }
  bool is_root(const IntVec& v) const;
  bool is_simple(int idx) const { return roots_[idx].height == 1; }

  int highest_index() const { return num_positive() - 1; }
  const Root& highest_root() const { return roots_.back(); }
  /// c_1..c_p (entries past the rank are zero).
  const IntVec& theta_coordinates() const { return roots_.back().coords; }
  /// c_0 = 1, c_1, ..., c_p.
  std::vector<int> extended_coefficients() const;

  const std::vector<int>& exponents() const { return exponents_; }
  int coxeter_number() const { return coxeter_; }
  int index_of_connection() const { return connection_index_; }

  /// Cartan integer (alpha_i, alpha_j^vee).
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }
  /// 6 * (a, b) for root-lattice vectors a, b.
  std::int64_t form6(const IntVec& a, const IntVec& b) const;
  /// (a, b) with long roots of squared length 2.
  Rational inner_product(const IntVec& a, const IntVec& b) const;
  /// (i, j) entry of the rational Gram matrix of the simple roots.
  Rational inner_product_matrix(int i, int j) const;
  /// (gamma, nu^vee); nu must be a root.
  int pairing(const IntVec& gamma, const IntVec& nu) const;
  /// Coweight coordinates ((nu^vee, alpha_i))_i of the coroot of nu.
  IntVec coroot(const IntVec& nu) const;

  bool is_long(const IntVec& root) const;
  bool is_long_index(int idx) const { return long_[idx]; }
  std::vector<Root> simple_roots() const;
  std::vector<Root> long_positive_roots() const;
  std::vector<int> long_positive_indices() const;
  /// Number of long roots (positive and negative).
  int num_long_roots() const;

  /// mu <= gamma in the root order: gamma - mu has no negative coordinate.
  bool root_order_leq(const IntVec& mu, const IntVec& gamma) const;
  bool leq(int mu, int gamma) const { return up_sets_[mu].test(gamma); }
  /// All positive roots >= idx (including idx).
  const RootSet& up_set(int idx) const { return up_sets_[idx]; }
  /// All positive roots <= idx (including idx).
  const RootSet& down_set(int idx) const { return down_sets_[idx]; }

  /// Index of root(i) + root(j) if that is a positive root, else -1.
  int sum_index(int i, int j) const { return sums_[i * num_positive() + j]; }
  /// Unordered pairs (i, j), i <= j, of positive roots with root(i) + root(j) = root(idx).
  const std::vector<std::pair<int, int>>& decompositions(int idx) const { return decomps_[idx]; }

  /// (rho, nu^vee) for a root nu.
  Rational rho_pairing(const IntVec& nu) const;

  /// Membership of a coweight-lattice point (coweight coordinates) in the
  /// coroot lattice, decided by solving against the Cartan matrix.
  bool in_coroot_lattice(const IntVec& y) const;

  /// Rendering of a root as "[n1,n2,...]".
  std::string format_root(const IntVec& v) const;
  /// Debug dump of the positive roots: index, coordinates, height, length.
  std::string dump() const;

 private:
  RootSystem(CartanType type, int rank);

  CartanType type_;
  int rank_;
  std::vector<int> gram6_;      // 6 * (alpha_i, alpha_j), row-major
  std::vector<int> cartan_;     // (alpha_i, alpha_j^vee), row-major
  std::vector<std::int64_t> adjugate_;  // adj(C) with C_ij = cartan(i, j)
  std::vector<Root> roots_;
  std::vector<int> simple_index_;
  std::vector<bool> long_;
  std::unordered_map<std::uint64_t, int> lookup_;
  std::vector<RootSet> up_sets_, down_sets_;
  std::vector<int> sums_;
  std::vector<std::vector<std::pair<int, int>>> decomps_;
  std::vector<int> exponents_;
  int coxeter_ = 0;
  int connection_index_ = 0;
  int long_length6_ = 0;
};

/// Dot product over the first `rank` coordinates.
inline std::int64_t dot(const IntVec& a, const IntVec& b, int rank) {
  std::int64_t s = 0;
  for (int i = 0; i < rank; ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return s;
}

inline IntVec negate(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

inline IntVec add(IntVec a, const IntVec& b) {
  for (int i = 0; i < kMaxRank; ++i) a[i] += b[i];
  return a;
}

inline IntVec subtract(IntVec a, const IntVec& b) {
  for (int i = 0; i < kMaxRank; ++i) a[i] -= b[i];
  return a;
}

IntVec make_vec(std::initializer_list<int> values);
IntVec make_vec(std::span<const int> values);
std::vector<int> to_vector(const IntVec& v, int rank);

}  // namespace minimax
