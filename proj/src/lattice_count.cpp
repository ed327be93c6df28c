#include "minimax/lattice_count.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minimax {

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan index must be nonnegative");
  return binomial(2 * k, k) / (k + 1);
}

namespace {

Rational theta_pairing(const RootSystem& rs, const RatVec& x) {
  Rational s = 0;
  const auto& c = rs.theta_coordinates();
  for (int i = 0; i < rs.rank(); ++i) s += x[i] * c[i];
  return s;
}

}  // namespace

bool d_min_contains(const RootSystem& rs, const RatVec& x) {
  for (int i = 0; i < rs.rank(); ++i)
    if (x[i] < -1) return false;
  return theta_pairing(rs, x) <= 2;
}

bool d_max_contains(const RootSystem& rs, const RatVec& x) {
  for (int i = 0; i < rs.rank(); ++i)
    if (x[i] > 1) return false;
  return theta_pairing(rs, x) >= 0;
}

bool d_mm_contains(const RootSystem& rs, const RatVec& x) { return d_min_contains(rs, x) && d_max_contains(rs, x); }

namespace {

template <class F>
void sweep_cube(int p, F&& visit) {
  IntVec y{};
  for (int i = 0; i < p; ++i) y[i] = -1;
  while (true) {
    visit(y);
    int i = p - 1;
    while (i >= 0 && y[i] == 1) y[i--] = -1;
    if (i < 0) return;
    ++y[i];
  }
}

}  // namespace

std::vector<IntVec> solve_base_system(const RootSystem& rs) {
  std::vector<IntVec> out;
  const auto& c = rs.theta_coordinates();
  sweep_cube(rs.rank(), [&](const IntVec& y) {
    auto s = dot(c, y, rs.rank());
    if (s >= 0 && s <= 2) out.push_back(y);
  });
  return out;
}

std::vector<YVector> solve_extended_system(const RootSystem& rs) {
  std::vector<YVector> out;
  const auto& c = rs.theta_coordinates();
  for (int y0 : {-1, 0, 1})
    sweep_cube(rs.rank(), [&](const IntVec& y) {
      if (y0 + dot(c, y, rs.rank()) == 1) out.push_back({y0, y});
    });
  return out;
}

std::int64_t laurent_coefficient(const std::vector<int>& c, int k) {
  int span = 0;
  for (int ci : c) {
    if (ci <= 0) throw std::invalid_argument("laurent exponents must be positive");
    span += ci;
  }
  if (k < -span || k > span) return 0;
  std::vector<std::int64_t> poly(2 * span + 1, 0);
  poly[span] = 1;
  for (int ci : c) {
    std::vector<std::int64_t> next(poly.size(), 0);
    for (std::size_t e = 0; e < poly.size(); ++e) {
      if (!poly[e]) continue;
      next[e] += poly[e];
      if (e >= static_cast<std::size_t>(ci)) next[e - ci] += poly[e];
      if (e + ci < poly.size()) next[e + ci] += poly[e];
    }
    poly.swap(next);
  }
  return poly[span + k];
}

std::int64_t trinomial(int k, int n) {
  if (n < 0) throw std::invalid_argument("trinomial requires n >= 0");
  k = std::abs(k);
  if (k > n) return 0;
  std::int64_t s = 0;
  // n! / (l! (k+l)! (n-2l-k)!) = C(n, l) C(n-l, k+l)
  for (int l = 0; 2 * l + k <= n; ++l) s += binomial(n, l) * binomial(n - l, k + l);
  return s;
}

std::int64_t trinomial_recurrence(int k, int n) {
  if (n < 0) throw std::invalid_argument("trinomial requires n >= 0");
  if (std::abs(k) > n) return 0;
  std::vector<std::int64_t> row{1};  // row[j] = X_{j-m}(m)
  for (int m = 0; m < n; ++m) {
    std::vector<std::int64_t> next(row.size() + 2, 0);
    auto at = [&](int j) -> std::int64_t { return j >= 0 && j < static_cast<int>(row.size()) ? row[j] : 0; };
    for (int j = 0; j < static_cast<int>(next.size()); ++j) next[j] = at(j - 2) + at(j - 1) + at(j);
    row.swap(next);
  }
  return row[k + n];
}

bool congruence_filter(const RootSystem& rs, const YVector& yv) {
  const int n = rs.rank();
  auto y = [&](int i) { return yv.y[i - 1]; };
  auto mod = [](long long a, long long m) { return ((a % m) + m) % m; };
  switch (rs.type()) {
    case CartanType::A: {
      long long s = 0;
      for (int i = 1; i <= n; ++i) s += static_cast<long long>(n + 1 - i) * y(i);
      return mod(s, n + 1) == 0;
    }
    case CartanType::B: {
      long long s = 0;
      for (int i = 1; i <= n; i += 2) s += y(i);
      return mod(s, 2) == 0;
    }
    case CartanType::C: return mod(y(n), 2) == 0;
    case CartanType::D: {
      long long odd = 0;
      if (n % 2 == 0) {
        for (int i = 1; i <= n - 1; i += 2) odd += y(i);
        return mod(y(n - 1) + y(n), 2) == 0 && mod(odd, 2) == 0;
      }
      for (int i = 1; i <= n - 2; i += 2) odd += y(i);
      return mod(2 * odd + y(n - 1) - y(n), 4) == 0;
    }
    case CartanType::E:
      if (n == 6) return mod(y(1) - y(2) + y(4) - y(5), 3) == 0;
      if (n == 7) return mod(y(1) + y(3) + y(7), 2) == 0;
      return true;
    case CartanType::F:
    case CartanType::G: return true;
  }
  return false;
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Enumeration: return "enumeration";
    case CountMethod::Lattice: return "lattice";
    case CountMethod::ClosedForm: return "closed_form";
  }
  return "?";
}

std::string csv_header() { return "type,rank,quantity,value,method,congruence_applied"; }

std::string to_csv_row(const CountReport& r) {
  std::ostringstream os;
  os << r.type_label << ',' << r.rank << ',' << r.quantity << ',' << r.value << ',' << to_string(r.method) << ','
     << (r.congruence_applied ? "true" : "false");
  return os.str();
}

std::vector<CountReport> count_minimax_reports(const RootSystem& rs) {
  auto ext = solve_extended_system(rs);
  const std::int64_t total = static_cast<std::int64_t>(ext.size());
  const int f = rs.index_of_connection();
  if (total % f != 0)
    throw std::logic_error(rs.label() + ": index of connection " + std::to_string(f) + " does not divide " +
                           std::to_string(total) + " extended solutions");
  std::int64_t filtered = 0;
  for (const auto& y : ext)
    if (congruence_filter(rs, y)) ++filtered;
  if (filtered != total / f)
    throw std::logic_error(rs.label() + ": congruence count " + std::to_string(filtered) + " != " +
                           std::to_string(total) + "/" + std::to_string(f));
  return {{rs.label(), rs.rank(), "minimax", total / f, CountMethod::Lattice, false},
          {rs.label(), rs.rank(), "minimax", filtered, CountMethod::Lattice, true}};
}

CountReport count_minimax(const RootSystem& rs) { return count_minimax_reports(rs).back(); }

namespace {

std::int64_t exponent_product(const RootSystem& rs, int shift) {
  Rational prod = 1;
  for (int e : rs.exponents()) prod *= Rational(shift + e, e + 1);
  if (prod.denominator() != 1) throw std::logic_error(rs.label() + ": exponent product is not an integer");
  return prod.numerator();
}

}  // namespace

CountReport count_AD(const RootSystem& rs) {
  return {rs.label(), rs.rank(), "AD", exponent_product(rs, rs.coxeter_number() + 1), CountMethod::ClosedForm, false};
}

CountReport count_AD0(const RootSystem& rs) {
  return {rs.label(), rs.rank(), "AD0", exponent_product(rs, rs.coxeter_number() - 1), CountMethod::ClosedForm, false};
}

std::int64_t haiman_count(const RootSystem& rs, int t) {
  if (t < 1) throw std::invalid_argument("dilation factor must be positive");
  const auto& c = rs.theta_coordinates();
  for (int i = 0; i < rs.rank(); ++i)
    if (std::gcd(t, c[i]) != 1)
      throw std::invalid_argument("t = " + std::to_string(t) + " is not coprime to the coefficient " +
                                  std::to_string(c[i]) + " of the highest root");
  // Vacuous in type A, where the product goes wrong (A1, t = 2 gives 3/2)
  // unless t is also coprime to f = n + 1.
  if (std::gcd(t, rs.index_of_connection()) != 1)
    throw std::invalid_argument("t = " + std::to_string(t) + " is not coprime to the index of connection " +
                                std::to_string(rs.index_of_connection()) + " of " + rs.label());
  return exponent_product(rs, t);
}

std::int64_t motzkin(int n) {
  if (n < 0) throw std::invalid_argument("motzkin index must be nonnegative");
  std::int64_t s = 0;
  for (int k = 0; 2 * k <= n; ++k) s += binomial(n, 2 * k) * catalan(k);
  return s;
}

std::int64_t dir(int n) {
  if (n < 1) throw std::invalid_argument("dir index must be at least 1");
  std::int64_t s = 0;
  for (int q = 0; q <= n - 1; ++q) s += binomial(q, q / 2) * binomial(n - 1, q);
  return s;
}

std::int64_t minimax_D(int n) {
  if (n < 4) throw std::invalid_argument("type D requires rank at least 4");
  return 2 * dir(n - 2) + dir(n - 1);
}

std::int64_t minimax_D_quarter_sum(int n) {
  if (n < 4) throw std::invalid_argument("type D requires rank at least 4");
  int m = n - 3;
  std::int64_t s = 4 * trinomial(-1, m) + 16 * trinomial(0, m) + 16 * trinomial(1, m) + 4 * trinomial(2, m);
  if (s % 4 != 0) throw std::logic_error("quarter sum not divisible by 4");
  return s / 4;
}

}  // namespace minimax
