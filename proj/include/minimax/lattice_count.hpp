#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minimax/rootsys.hpp"

namespace minimax {

std::int64_t binomial(int n, int k);
std::int64_t catalan(int k);

/// Solution of the extended system: y_0 plus y_1..y_p, all in {-1, 0, 1}.
struct YVector {
  int y0 = 0;
  IntVec y{};

  friend bool operator==(const YVector&, const YVector&) = default;
};

bool d_min_contains(const RootSystem& rs, const RatVec& x);
bool d_max_contains(const RootSystem& rs, const RatVec& x);
bool d_mm_contains(const RootSystem& rs, const RatVec& x);

/// All y in {-1,0,1}^p with 0 <= c_1 y_1 + ... + c_p y_p <= 2.
std::vector<IntVec> solve_base_system(const RootSystem& rs);
/// All y in {-1,0,1}^{p+1} with c_0 y_0 + ... + c_p y_p = 1.
std::vector<YVector> solve_extended_system(const RootSystem& rs);

/// Coefficient of x^k in prod_i (x^{-c_i} + 1 + x^{c_i}).
std::int64_t laurent_coefficient(const std::vector<int>& c, int k);

/// X_k(n), the coefficient of x^k in (x^{-1} + 1 + x)^n; closed form.
std::int64_t trinomial(int k, int n);
/// Same, by the recurrence X_k(n+1) = X_{k-1}(n) + X_k(n) + X_{k+1}(n).
std::int64_t trinomial_recurrence(int k, int n);

/// Per-type congruence deciding whether the coweight point y lies in the coroot lattice.
bool congruence_filter(const RootSystem& rs, const YVector& y);

enum class CountMethod { Enumeration, Lattice, ClosedForm };
std::string to_string(CountMethod m);

struct CountReport {
  std::string type_label;
  int rank = 0;
  std::string quantity;
  std::int64_t value = 0;
  CountMethod method = CountMethod::Lattice;
  bool congruence_applied = false;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

std::string csv_header();
std::string to_csv_row(const CountReport& r);

/// Minimax count by the lattice route. Both the quotient #ext / f and the
/// congruence-filtered count are computed; a disagreement throws std::logic_error.
CountReport count_minimax(const RootSystem& rs);
/// The two lattice reports (quotient, then congruence-filtered).
std::vector<CountReport> count_minimax_reports(const RootSystem& rs);
CountReport count_AD(const RootSystem& rs);
CountReport count_AD0(const RootSystem& rs);
/// prod (t + e_i) / (1 + e_i), the number of coroot points in t times the closed
/// fundamental alcove; t must be coprime to every c_i and to f.
std::int64_t haiman_count(const RootSystem& rs, int t);

std::int64_t motzkin(int n);
std::int64_t dir(int n);
/// 2 dir(n-2) + dir(n-1), n >= 4.
std::int64_t minimax_D(int n);
/// (4 X_{-1}(n-3) + 16 X_0(n-3) + 16 X_1(n-3) + 4 X_2(n-3)) / 4, n >= 4.
std::int64_t minimax_D_quarter_sum(int n);

}  // namespace minimax
