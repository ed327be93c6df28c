#pragma once

#include <functional>
#include <string>
#include <vector>

#include "minimax/rootsys.hpp"

namespace minimax {

/// Upward-closed subset of the positive roots. Holds a non-owning reference
/// to its RootSystem, which must outlive it.
class Ideal {
 public:
  /// Throws std::invalid_argument if `members` is not upward closed.
  Ideal(const RootSystem& rs, RootSet members);

  static Ideal empty(const RootSystem& rs) { return Ideal(rs, RootSet{}, Unchecked{}); }
  static Ideal all(const RootSystem& rs) { return Ideal(rs, rs.all_roots(), Unchecked{}); }

  const RootSystem& system() const { return *rs_; }
  const RootSet& members() const { return members_; }
  bool contains(int idx) const { return members_.test(idx); }
  bool contains(const IntVec& root) const;
  int size() const { return members_.count(); }
  bool is_empty() const { return members_.empty(); }
  std::vector<int> indices() const;

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.rs_ == b.rs_ && a.members_ == b.members_; }

 private:
  struct Unchecked {};
  Ideal(const RootSystem& rs, RootSet members, Unchecked) : rs_(&rs), members_(members) {}

  const RootSystem* rs_;
  RootSet members_;
};

/// Pairwise incomparable positive roots, as sorted root indices.
struct Antichain {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }
  friend bool operator==(const Antichain&, const Antichain&) = default;
};

bool is_upward_closed(const RootSystem& rs, const RootSet& s);

Antichain generators(const Ideal& ideal);
/// Throws std::invalid_argument naming a comparable pair if `gamma` is not an antichain.
Ideal ideal_of(const RootSystem& rs, const Antichain& gamma);
Ideal ideal_of(const RootSystem& rs, const std::vector<IntVec>& roots);
/// Antichain from root coordinates; throws if a vector is not a positive root.
Antichain antichain_of(const RootSystem& rs, const std::vector<IntVec>& roots);

bool is_strictly_positive(const Ideal& ideal);
bool is_abelian(const Ideal& ideal);

/// I^k, with I^1 = I and I^k = (I^{k-1} + I) intersected with the positive roots.
Ideal power(const Ideal& ideal, int k);
/// Sizes #(I^1), #(I^2), ... up to the last nonempty power.
std::vector<int> power_sizes(const Ideal& ideal);

/// Maximal elements of the complement of I.
Antichain xi(const Ideal& ideal);

/// l(gamma, I) for every positive root: the largest m such that gamma is a
/// sum of m elements of I; 0 for roots outside I.
std::vector<int> l_values(const Ideal& ideal);
int l_value(const IntVec& gamma, const Ideal& ideal);

/// k(mu, I) for every positive root: the least n such that mu is a sum of n
/// elements of the complement. Throws if I is not strictly positive.
std::vector<int> k_values(const Ideal& ideal);
int k_value(const IntVec& gamma, const Ideal& ideal);

enum class IdealFilter { All, StrictlyPositive, Abelian, Minimax, HeisenbergContained };

IdealFilter parse_ideal_filter(const std::string& text);
std::string to_string(IdealFilter filter);
bool passes(const Ideal& ideal, IdealFilter filter);

/// Streams every ideal passing `filter` exactly once, depth-first over
/// antichains in root-index order. Stop early by returning false from `visit`.
void for_each_ideal(const RootSystem& rs, IdealFilter filter, const std::function<bool(const Ideal&)>& visit);
std::vector<Ideal> enumerate_ideals(const RootSystem& rs, IdealFilter filter = IdealFilter::All);
long long count_ideals(const RootSystem& rs, IdealFilter filter = IdealFilter::All);

/// One constraint of a dominant Shi region: (x, root) > bound or (x, root) < bound.
struct ShiConstraint {
  IntVec root{};
  bool greater = true;
  int bound = 0;
};

/// (x, alpha) > 0 for simple alpha, (x, gamma) > 1 for gamma in I, (x, gamma) < 1 otherwise.
std::vector<ShiConstraint> shi_inequalities(const Ideal& ideal);
/// Point in coweight coordinates; strict inequalities.
bool satisfies(const std::vector<ShiConstraint>& constraints, const RatVec& x, int rank);

}  // namespace minimax
