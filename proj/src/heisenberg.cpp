#include "minimax/heisenberg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace minimax {

Ideal heisenberg_ideal(const RootSystem& rs) {
  RootSet members;
  const IntVec& theta = rs.theta_coordinates();
  for (int idx = 0; idx < rs.num_positive(); ++idx)
    if (rs.form6(rs.coords(idx), theta) > 0) members.set(idx);
  return Ideal(rs, members);
}

namespace {

void require_long_positive(const RootSystem& rs, const IntVec& nu) {
  auto idx = rs.index_of(nu);
  if (!idx) throw std::invalid_argument(rs.format_root(nu) + " is not a positive root");
  if (!rs.is_long_index(*idx)) throw std::invalid_argument(rs.format_root(nu) + " is not a long root");
}

IntVec reflect(const RootSystem& rs, const IntVec& x, int i) {
  IntVec a{};
  a[i] = 1;
  int m = rs.pairing(x, a);
  IntVec out = x;
  out[i] -= m;
  return out;
}

}  // namespace

std::vector<int> w_nu_path(const RootSystem& rs, const IntVec& nu) {
  require_long_positive(rs, nu);
  const IntVec& theta = rs.theta_coordinates();
  std::map<IntVec, std::pair<IntVec, int>> parent;
  std::deque<IntVec> queue{theta};
  parent[theta] = {theta, -1};
  while (!queue.empty()) {
    IntVec cur = queue.front();
    queue.pop_front();
    if (cur == nu) break;
    for (int i = 0; i < rs.rank(); ++i) {
      IntVec next = reflect(rs, cur, i);
      if (parent.emplace(next, std::make_pair(cur, i)).second) queue.push_back(next);
    }
  }
  std::vector<int> path;
  for (IntVec cur = nu; cur != theta;) {
    auto [prev, i] = parent.at(cur);
    path.push_back(i);
    cur = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

FiniteWeylElement w_nu(const RootSystem& rs, const IntVec& nu) {
  auto v = FiniteWeylElement::identity(rs.rank());
  for (int i : w_nu_path(rs, nu)) v = FiniteWeylElement::simple_reflection(rs, i) * v;
  return v;
}

FiniteWeylElement s_nu(const RootSystem& rs, const IntVec& nu) {
  if (!rs.is_positive_root(nu)) throw std::invalid_argument(rs.format_root(nu) + " is not a positive root");
  return FiniteWeylElement::reflection(rs, nu);
}

std::vector<IntVec> reduced_reflection_inversions(const RootSystem& rs, const IntVec& nu) {
  std::vector<IntVec> out;
  for (const auto& gamma : inversion_set(rs, s_nu(rs, nu)))
    if (gamma != nu) out.push_back(gamma);
  return out;
}

void validate(const RootSystem& rs, const HeisenbergDescriptor& d) {
  require_long_positive(rs, d.nu);
  if (d.sign != 1 && d.sign != -1) throw std::invalid_argument("descriptor sign must be +1 or -1");
}

AffineWeylElement heisenberg_element(const RootSystem& rs, const HeisenbergDescriptor& d) {
  validate(rs, d);
  FiniteWeylElement v = w_nu(rs, d.nu);
  if (d.sign < 0) v = s_nu(rs, d.nu) * v;
  return AffineWeylElement(v, IntVec{}) * AffineWeylElement::simple_reflection(rs, 0);
}

Ideal heisenberg_ideal_formula(const RootSystem& rs, const HeisenbergDescriptor& d) {
  validate(rs, d);
  auto nu_idx = *rs.index_of(d.nu);
  if (d.sign < 0 && rs.is_simple(nu_idx))
    throw std::invalid_argument("the sign - formula requires a non-simple root; use sign + for simple roots");
  const IntVec& theta = rs.theta_coordinates();
  auto wn = w_nu(rs, d.nu);
  RootSet members;
  members.set(rs.highest_index());
  auto add = [&](const IntVec& gamma) {
    auto idx = rs.index_of(subtract(theta, gamma));
    if (!idx) throw std::logic_error("theta - " + rs.format_root(gamma) + " is not a positive root");
    members.set(*idx);
  };
  for (const auto& gamma : inversion_set(rs, wn)) add(gamma);
  if (d.sign < 0)
    for (const auto& mu : reduced_reflection_inversions(rs, d.nu)) add(wn.apply_inverse(mu));
  return Ideal(rs, members);
}

HeisenbergFlags predicted_flags(const RootSystem& rs, const HeisenbergDescriptor& d) {
  validate(rs, d);
  bool simple = rs.is_simple(*rs.index_of(d.nu));
  if (d.sign > 0) return {true, !simple};
  return {!simple, rs.form6(rs.theta_coordinates(), d.nu) == 0};
}

bool is_heisenberg_type(const RootSystem& rs, const AffineWeylElement& w) {
  auto ws0 = w * AffineWeylElement::simple_reflection(rs, 0);
  if (ws0.translation_part() != IntVec{}) return false;
  return length(rs, ws0) == length(rs, w) - 1;
}

int heisenberg_nontrivial_count(const RootSystem& rs) {
  int long_simple = 0;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.is_long_index(rs.index_of_simple(i))) ++long_simple;
  return rs.num_long_roots() - long_simple;
}

}  // namespace minimax
