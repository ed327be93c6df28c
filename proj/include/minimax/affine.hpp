#pragma once

// Finite and affine Weyl group elements.
//
// An affine element is stored as w = v . t_r with v in W and r in the coroot
// lattice (coweight coordinates). Conventions on V + R delta:
//
//   linear action   w(x) = v(x) - (x, r) delta,  w(delta) = delta
//   affine action   w * x = v(x + r),  so  w^{-1} * x = v^{-1}(x) - r
//   s_0             = s_theta . t_{-theta^vee}
//
// The affine root k delta + mu is the affine function x -> (x, mu) + k, and
// w(beta)(w * x) = beta(x).

#include <string>
#include <vector>

#include "minimax/ideals.hpp"
#include "minimax/rootsys.hpp"

namespace minimax {

/// k delta + mu with mu a root (or zero in intermediate arithmetic).
struct AffineRoot {
  int level = 0;
  IntVec finite{};

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

/// Positive affine root: level > 0, or level 0 with mu a positive root.
bool is_positive(const AffineRoot& beta, int rank);
std::string format_affine_root(const RootSystem& rs, const AffineRoot& beta);

/// Element of W as its matrix on simple-root coordinates (column j is v(alpha_j)),
/// with the inverse carried alongside.
class FiniteWeylElement {
 public:
  static FiniteWeylElement identity(int rank);
  static FiniteWeylElement simple_reflection(const RootSystem& rs, int i);
  /// x -> x - (x, nu^vee) nu.
  static FiniteWeylElement reflection(const RootSystem& rs, const IntVec& nu);

  int rank() const { return rank_; }
  /// Matrix entry (row i, column j).
  int entry(int i, int j) const { return cols_[j][i]; }
  IntVec apply(const IntVec& root) const { return mul(cols_, root); }
  IntVec apply_inverse(const IntVec& root) const { return mul(inv_cols_, root); }
  /// Action on a point given in coweight coordinates.
  IntVec apply_to_coweight(const IntVec& y) const { return tmul(inv_cols_, y); }
  IntVec apply_inverse_to_coweight(const IntVec& y) const { return tmul(cols_, y); }
  RatVec apply_to_point(const RatVec& y) const { return tmul(inv_cols_, y); }
  RatVec apply_inverse_to_point(const RatVec& y) const { return tmul(cols_, y); }

  FiniteWeylElement inverse() const { return FiniteWeylElement(rank_, inv_cols_, cols_); }
  bool is_identity() const { return *this == identity(rank_); }

  friend FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b);
  friend bool operator==(const FiniteWeylElement& a, const FiniteWeylElement& b) {
    return a.rank_ == b.rank_ && a.cols_ == b.cols_;
  }
  friend auto operator<=>(const FiniteWeylElement& a, const FiniteWeylElement& b) { return a.cols_ <=> b.cols_; }

 private:
  using Columns = std::array<IntVec, kMaxRank>;
  FiniteWeylElement(int rank, const Columns& cols, const Columns& inv) : rank_(rank), cols_(cols), inv_cols_(inv) {}
  IntVec mul(const Columns& m, const IntVec& x) const;
  IntVec tmul(const Columns& m, const IntVec& y) const;
  RatVec tmul(const Columns& m, const RatVec& y) const;

  int rank_ = 0;
  Columns cols_{};
  Columns inv_cols_{};
};

/// Positive roots sent to negative roots.
std::vector<IntVec> inversion_set(const RootSystem& rs, const FiniteWeylElement& v);
int length(const RootSystem& rs, const FiniteWeylElement& v);
/// Whole finite Weyl group, breadth first from the identity.
std::vector<FiniteWeylElement> weyl_group_elements(const RootSystem& rs);

class AffineWeylElement {
 public:
  AffineWeylElement(FiniteWeylElement v, IntVec r) : v_(std::move(v)), r_(r) {}

  static AffineWeylElement identity(int rank) { return {FiniteWeylElement::identity(rank), IntVec{}}; }
  /// s_i for i in 0..p.
  static AffineWeylElement simple_reflection(const RootSystem& rs, int i);
  static AffineWeylElement translation(int rank, const IntVec& r) { return {FiniteWeylElement::identity(rank), r}; }
  static AffineWeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

  const FiniteWeylElement& finite_part() const { return v_; }
  /// Translation part r in coweight coordinates.
  const IntVec& translation_part() const { return r_; }
  int rank() const { return v_.rank(); }

  AffineWeylElement inverse() const;
  AffineRoot apply(const AffineRoot& beta) const;
  /// w * x.
  RatVec act_point(const RatVec& x) const;
  /// w^{-1} * x.
  RatVec act_point_inverse(const RatVec& x) const;

  friend AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b);
  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;

 private:
  FiniteWeylElement v_;
  IntVec r_;
};

/// alpha_i as an affine root, i in 0..p (alpha_0 = delta - theta).
AffineRoot affine_simple_root(const RootSystem& rs, int i);
AffineRoot act_affine_root(const AffineWeylElement& w, const AffineRoot& beta);
RatVec act_point(const AffineWeylElement& w, const RatVec& x);

/// N(w): positive affine roots sent to negative ones, sorted.
std::vector<AffineRoot> inversion_set(const RootSystem& rs, const AffineWeylElement& w);
int length(const RootSystem& rs, const AffineWeylElement& w);
/// A reduced word (indices 0..p) with w = s_{word[0]} s_{word[1]} ...
std::vector<int> reduced_word(const RootSystem& rs, const AffineWeylElement& w);

struct PeeledElement {
  AffineWeylElement element;
  std::vector<int> word;
};

/// Recovers w from a finite bi-convex set N = N(w) by peeling affine simple
/// reflections. Throws std::invalid_argument if N is not an inversion set.
PeeledElement element_from_inversion_set(const RootSystem& rs, const std::vector<AffineRoot>& n);

bool is_dominant(const RootSystem& rs, const AffineWeylElement& w);
/// delta-coefficients of w^{-1}(alpha_i), i = 0..p.
std::vector<int> inverse_delta_levels(const RootSystem& rs, const AffineWeylElement& w);
bool is_minimal(const RootSystem& rs, const AffineWeylElement& w);
bool is_maximal(const RootSystem& rs, const AffineWeylElement& w);
bool is_minimax_element(const RootSystem& rs, const AffineWeylElement& w);

/// Minimal element with first layer ideal I.
AffineWeylElement w_min(const Ideal& ideal);
/// Maximal element with first layer ideal I; I must be strictly positive.
AffineWeylElement w_max(const Ideal& ideal);
std::vector<AffineRoot> w_min_inversion_set(const Ideal& ideal);
std::vector<AffineRoot> w_max_inversion_set(const Ideal& ideal);

/// Strictly positive and k(gamma, I) - 1 = l(gamma, I) for every gamma in I.
bool is_minimax(const Ideal& ideal);

/// w(alpha_0) = -level delta + nu.
struct Rootlet {
  IntVec nu{};
  int level = 0;

  friend bool operator==(const Rootlet&, const Rootlet&) = default;
};
Rootlet rootlet(const RootSystem& rs, const AffineWeylElement& w);
/// Rendering in the form "-delta-[0,2,1,0]" with the delta written as UTF-8.
std::string format_rootlet(const RootSystem& rs, const Rootlet& rt);

/// {mu > 0 | delta - mu in N(w)}; w must be dominant.
Ideal first_layer_ideal(const RootSystem& rs, const AffineWeylElement& w);
/// {gamma > 0 | w(delta - gamma) in -Pi^}; w must be minimal.
Antichain generators_via_w(const RootSystem& rs, const AffineWeylElement& w);
/// {gamma > 0 | w(delta - gamma) in Pi^}; w must be maximal.
Antichain xi_via_w(const RootSystem& rs, const AffineWeylElement& w);

/// v(r) in coweight coordinates; w must be dominant.
IntVec lattice_image(const RootSystem& rs, const AffineWeylElement& w);
/// Barycenter of the fundamental alcove in coweight coordinates.
RatVec alcove_barycenter(const RootSystem& rs);
/// w^{-1} * (barycenter of the fundamental alcove).
RatVec alcove_image_barycenter(const RootSystem& rs, const AffineWeylElement& w);

}  // namespace minimax
