#pragma once

#include <vector>

#include "minimax/affine.hpp"
#include "minimax/ideals.hpp"
#include "minimax/rootsys.hpp"

namespace minimax {

/// {gamma > 0 | (gamma, theta) > 0}.
Ideal heisenberg_ideal(const RootSystem& rs);

/// Shortest element of W taking theta to the long positive root nu.
FiniteWeylElement w_nu(const RootSystem& rs, const IntVec& nu);
/// Simple reflections a_1..a_k with w_nu = s_{a_k} ... s_{a_1}.
std::vector<int> w_nu_path(const RootSystem& rs, const IntVec& nu);
/// The reflection in the positive root nu.
FiniteWeylElement s_nu(const RootSystem& rs, const IntVec& nu);
/// N(s_nu) minus nu itself.
std::vector<IntVec> reduced_reflection_inversions(const RootSystem& rs, const IntVec& nu);

/// sign +1 describes w_nu s_0, sign -1 describes s_nu w_nu s_0.
struct HeisenbergDescriptor {
  IntVec nu{};
  int sign = 1;

  friend bool operator==(const HeisenbergDescriptor&, const HeisenbergDescriptor&) = default;
};

/// Throws std::invalid_argument unless nu is a long positive root and sign is +1 or -1.
void validate(const RootSystem& rs, const HeisenbergDescriptor& d);
AffineWeylElement heisenberg_element(const RootSystem& rs, const HeisenbergDescriptor& d);

/// Closed-form first layer ideal:
///   sign +: {theta} + {theta - N(w_nu)}
///   sign -: the above + {theta - w_nu^{-1}(N(s_nu) minus nu)}, nu not simple.
Ideal heisenberg_ideal_formula(const RootSystem& rs, const HeisenbergDescriptor& d);

struct HeisenbergFlags {
  bool minimal = false;
  bool maximal = false;
};
/// Minimal/maximal status predicted from nu and the sign alone.
HeisenbergFlags predicted_flags(const RootSystem& rs, const HeisenbergDescriptor& d);

/// w = v s_0 with v in W and l(v) = l(w) - 1.
bool is_heisenberg_type(const RootSystem& rs, const AffineWeylElement& w);

/// #(long roots minus simple roots) = number of nontrivial ideals inside the Heisenberg ideal.
int heisenberg_nontrivial_count(const RootSystem& rs);

}  // namespace minimax
