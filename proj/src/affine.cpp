#include "minimax/affine.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace minimax {

bool is_positive(const AffineRoot& beta, int rank) {
  if (beta.level != 0) return beta.level > 0;
  bool nonzero = false;
  for (int i = 0; i < rank; ++i) {
    if (beta.finite[i] < 0) return false;
    if (beta.finite[i] > 0) nonzero = true;
  }
  return nonzero;
}

namespace {

bool is_negative_vec(const IntVec& v, int rank) {
  bool nonzero = false;
  for (int i = 0; i < rank; ++i) {
    if (v[i] > 0) return false;
    if (v[i] < 0) nonzero = true;
  }
  return nonzero;
}

std::string coefficient_delta(int coef) {
  if (coef == 1) return "δ";
  if (coef == -1) return "-δ";
  return std::to_string(coef) + "δ";
}

}  // namespace

std::string format_affine_root(const RootSystem& rs, const AffineRoot& beta) {
  std::string out;
  if (beta.level != 0) out = coefficient_delta(beta.level);
  bool neg = is_negative_vec(beta.finite, rs.rank());
  IntVec mag = neg ? negate(beta.finite) : beta.finite;
  bool zero = std::all_of(mag.begin(), mag.end(), [](int x) { return x == 0; });
  if (zero) return out.empty() ? "0" : out;
  if (neg)
    out += "-";
  else if (!out.empty())
    out += "+";
  return out + rs.format_root(mag);
}

// ---------------------------------------------------------------------------
// Finite Weyl group

FiniteWeylElement FiniteWeylElement::identity(int rank) {
  Columns c{};
  for (int j = 0; j < rank; ++j) c[j][j] = 1;
  return FiniteWeylElement(rank, c, c);
}

FiniteWeylElement FiniteWeylElement::simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple reflection index out of range");
  Columns c{};
  for (int j = 0; j < rs.rank(); ++j) {
    c[j][j] = 1;
    c[j][i] -= rs.cartan(j, i);
  }
  return FiniteWeylElement(rs.rank(), c, c);
}

FiniteWeylElement FiniteWeylElement::reflection(const RootSystem& rs, const IntVec& nu) {
  if (!rs.is_root(nu)) throw std::invalid_argument(rs.format_root(nu) + " is not a root");
  Columns c{};
  for (int j = 0; j < rs.rank(); ++j) {
    IntVec a{};
    a[j] = 1;
    int m = rs.pairing(a, nu);
    c[j] = a;
    for (int k = 0; k < rs.rank(); ++k) c[j][k] -= m * nu[k];
  }
  return FiniteWeylElement(rs.rank(), c, c);
}

IntVec FiniteWeylElement::mul(const Columns& m, const IntVec& x) const {
  IntVec out{};
  for (int j = 0; j < rank_; ++j) {
    if (!x[j]) continue;
    for (int i = 0; i < rank_; ++i) out[i] += m[j][i] * x[j];
  }
  return out;
}

IntVec FiniteWeylElement::tmul(const Columns& m, const IntVec& y) const {
  IntVec out{};
  for (int i = 0; i < rank_; ++i) out[i] = static_cast<int>(dot(m[i], y, rank_));
  return out;
}

RatVec FiniteWeylElement::tmul(const Columns& m, const RatVec& y) const {
  RatVec out{};
  for (int i = 0; i < rank_; ++i) {
    Rational s = 0;
    for (int k = 0; k < rank_; ++k)
      if (m[i][k]) s += y[k] * m[i][k];
    out[i] = s;
  }
  return out;
}

FiniteWeylElement operator*(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  FiniteWeylElement::Columns c{}, inv{};
  for (int j = 0; j < a.rank_; ++j) {
    c[j] = a.apply(b.cols_[j]);
    inv[j] = b.apply_inverse(a.inv_cols_[j]);
  }
  return FiniteWeylElement(a.rank_, c, inv);
}

std::vector<IntVec> inversion_set(const RootSystem& rs, const FiniteWeylElement& v) {
  std::vector<IntVec> out;
  for (const auto& r : rs.positive_roots())
    if (is_negative_vec(v.apply(r.coords), rs.rank())) out.push_back(r.coords);
  return out;
}

int length(const RootSystem& rs, const FiniteWeylElement& v) { return static_cast<int>(inversion_set(rs, v).size()); }

std::vector<FiniteWeylElement> weyl_group_elements(const RootSystem& rs) {
  std::vector<FiniteWeylElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(FiniteWeylElement::simple_reflection(rs, i));
  std::set<FiniteWeylElement> seen;
  std::vector<FiniteWeylElement> out;
  std::deque<FiniteWeylElement> queue{FiniteWeylElement::identity(rs.rank())};
  seen.insert(queue.front());
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (const auto& g : gens) {
      auto next = cur * g;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Affine Weyl group

AffineWeylElement AffineWeylElement::simple_reflection(const RootSystem& rs, int i) {
  if (i == 0) {
    const IntVec& theta = rs.theta_coordinates();
    return {FiniteWeylElement::reflection(rs, theta), negate(rs.coroot(theta))};
  }
  return {FiniteWeylElement::simple_reflection(rs, i - 1), IntVec{}};
}

AffineWeylElement AffineWeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  auto w = identity(rs.rank());
  for (int i : word) {
    if (i < 0 || i > rs.rank()) throw std::invalid_argument("affine reflection index out of range");
    w = w * simple_reflection(rs, i);
  }
  return w;
}

AffineWeylElement AffineWeylElement::inverse() const {
  return {v_.inverse(), negate(v_.apply_to_coweight(r_))};
}

AffineRoot AffineWeylElement::apply(const AffineRoot& beta) const {
  return {beta.level - static_cast<int>(dot(beta.finite, r_, rank())), v_.apply(beta.finite)};
}

RatVec AffineWeylElement::act_point(const RatVec& x) const {
  RatVec shifted = x;
  for (int i = 0; i < rank(); ++i) shifted[i] += r_[i];
  return v_.apply_to_point(shifted);
}

RatVec AffineWeylElement::act_point_inverse(const RatVec& x) const {
  RatVec out = v_.apply_inverse_to_point(x);
  for (int i = 0; i < rank(); ++i) out[i] -= r_[i];
  return out;
}

AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
  IntVec r = add(b.v_.apply_inverse_to_coweight(a.r_), b.r_);
  return {a.v_ * b.v_, r};
}

AffineRoot affine_simple_root(const RootSystem& rs, int i) {
  if (i == 0) return {1, negate(rs.theta_coordinates())};
  IntVec a{};
  a[i - 1] = 1;
  return {0, a};
}

AffineRoot act_affine_root(const AffineWeylElement& w, const AffineRoot& beta) { return w.apply(beta); }

RatVec act_point(const AffineWeylElement& w, const RatVec& x) { return w.act_point(x); }

std::vector<AffineRoot> inversion_set(const RootSystem& rs, const AffineWeylElement& w) {
  const int p = rs.rank();
  // w(k delta + mu) has level k - (mu, r), so no inversion sits above level max|(mu, r)|.
  int bound = 0;
  for (const auto& root : rs.positive_roots())
    bound = std::max(bound, std::abs(static_cast<int>(dot(root.coords, w.translation_part(), p))));
  std::vector<AffineRoot> out;
  for (const auto& root : rs.positive_roots()) {
    for (int k = 0; k <= bound + 1; ++k) {
      for (int sign : {1, -1}) {
        AffineRoot beta{k, sign > 0 ? root.coords : negate(root.coords)};
        if (!is_positive(beta, p)) continue;
        if (!is_positive(w.apply(beta), p)) out.push_back(beta);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int length(const RootSystem& rs, const AffineWeylElement& w) {
  // Count per positive root mu from c = (mu, r) and the sign of v(mu).
  const int p = rs.rank();
  int total = 0;
  for (const auto& root : rs.positive_roots()) {
    int c = static_cast<int>(dot(root.coords, w.translation_part(), p));
    bool vneg = is_negative_vec(w.finite_part().apply(root.coords), p);
    if (c >= 0)
      total += c + (vneg ? 1 : 0);
    else
      total += -c - (vneg ? 1 : 0);
  }
  return total;
}

std::vector<int> reduced_word(const RootSystem& rs, const AffineWeylElement& w) {
  std::vector<int> word;
  auto cur = w;
  const auto id = AffineWeylElement::identity(rs.rank());
  while (!(cur == id)) {
    int descent = -1;
    for (int i = 0; i <= rs.rank() && descent < 0; ++i)
      if (!is_positive(cur.apply(affine_simple_root(rs, i)), rs.rank())) descent = i;
    if (descent < 0) throw std::logic_error("non-identity element without a descent");
    word.push_back(descent);
    cur = cur * AffineWeylElement::simple_reflection(rs, descent);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

namespace {

std::int64_t affine_key(const RootSystem& rs, const AffineRoot& beta) {
  int signed_idx;
  if (auto idx = rs.index_of(beta.finite))
    signed_idx = *idx + 1;
  else if (auto nidx = rs.index_of(negate(beta.finite)))
    signed_idx = -(*nidx + 1);
  else
    return -1;
  return static_cast<std::int64_t>(beta.level) * (2 * kMaxRoots + 3) + signed_idx + kMaxRoots + 1;
}

FiniteWeylElement finite_from_columns(const RootSystem& rs, const std::array<IntVec, kMaxRank>& cols) {
  // Rebuild through a reduced word so the inverse comes for free.
  FiniteWeylElement v = FiniteWeylElement::identity(rs.rank());
  std::array<IntVec, kMaxRank> cur = cols;
  std::vector<int> word;
  const int p = rs.rank();
  while (true) {
    int descent = -1;
    for (int i = 0; i < p && descent < 0; ++i)
      if (is_negative_vec(cur[i], p)) descent = i;
    if (descent < 0) break;
    word.push_back(descent);
    // cur <- cur * s_descent
    IntVec ci = cur[descent];
    for (int j = 0; j < p; ++j) {
      int a = rs.cartan(j, descent);
      if (a)
        for (int k = 0; k < p; ++k) cur[j][k] -= a * ci[k];
    }
    if (word.size() > static_cast<std::size_t>(rs.num_positive()))
      throw std::invalid_argument("matrix is not a Weyl group element");
  }
  for (int j = 0; j < p; ++j) {
    IntVec e{};
    e[j] = 1;
    if (cur[j] != e) throw std::invalid_argument("matrix is not a Weyl group element");
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = v * FiniteWeylElement::simple_reflection(rs, *it);
  return v;
}

}  // namespace

PeeledElement element_from_inversion_set(const RootSystem& rs, const std::vector<AffineRoot>& n) {
  const int p = rs.rank();
  std::unordered_set<std::int64_t> members;
  for (const auto& beta : n) {
    if (!is_positive(beta, p)) throw std::invalid_argument("inversion set contains a non-positive affine root");
    auto key = affine_key(rs, beta);
    if (key < 0) throw std::invalid_argument("inversion set contains a non-root");
    members.insert(key);
  }
  // Affine Cartan integers (alpha_j, alpha_i^vee), i, j = 0..p.
  std::vector<IntVec> fin(p + 1);
  for (int i = 0; i <= p; ++i) fin[i] = affine_simple_root(rs, i).finite;
  std::vector<std::vector<int>> acartan(p + 1, std::vector<int>(p + 1));
  for (int j = 0; j <= p; ++j)
    for (int i = 0; i <= p; ++i) acartan[j][i] = rs.pairing(fin[j], fin[i]);

  // u = s_{i1} s_{i2} ... accumulates the peeled reflections; img[j] = u(alpha_j).
  // alpha_i is an inversion of w u iff u(alpha_i) > 0 lies in N, or u(alpha_i) < 0
  // and -u(alpha_i) does not.
  std::vector<AffineRoot> img(p + 1);
  for (int i = 0; i <= p; ++i) img[i] = affine_simple_root(rs, i);
  auto in_n = [&](const AffineRoot& beta) { return members.count(affine_key(rs, beta)) > 0; };
  std::vector<int> peeled;
  while (true) {
    int descent = -1;
    for (int i = 0; i <= p && descent < 0; ++i) {
      const auto& b = img[i];
      bool hit = is_positive(b, p) ? in_n(b) : !in_n(AffineRoot{-b.level, negate(b.finite)});
      if (hit) descent = i;
    }
    if (descent < 0) break;
    if (peeled.size() >= n.size()) throw std::invalid_argument("set is not the inversion set of an affine Weyl element");
    peeled.push_back(descent);
    AffineRoot pivot = img[descent];
    for (int j = 0; j <= p; ++j) {
      int a = acartan[j][descent];
      if (!a) continue;
      img[j].level -= a * pivot.level;
      for (int k = 0; k < p; ++k) img[j].finite[k] -= a * pivot.finite[k];
    }
  }
  // u = v . t_r reads off as u(alpha_j) = v(alpha_j) - r_j delta.
  std::array<IntVec, kMaxRank> cols{};
  IntVec r{};
  for (int j = 1; j <= p; ++j) {
    cols[j - 1] = img[j].finite;
    r[j - 1] = -img[j].level;
  }
  AffineWeylElement u(finite_from_columns(rs, cols), r);
  AffineWeylElement w = u.inverse();
  std::vector<AffineRoot> sorted = n;
  std::sort(sorted.begin(), sorted.end());
  if (inversion_set(rs, w) != sorted)
    throw std::invalid_argument("set is not the inversion set of an affine Weyl element");
  std::reverse(peeled.begin(), peeled.end());
  return {w, peeled};
}

bool is_dominant(const RootSystem& rs, const AffineWeylElement& w) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (!is_positive(w.apply(affine_simple_root(rs, i)), rs.rank())) return false;
  return true;
}

std::vector<int> inverse_delta_levels(const RootSystem& rs, const AffineWeylElement& w) {
  auto inv = w.inverse();
  std::vector<int> out;
  for (int i = 0; i <= rs.rank(); ++i) out.push_back(inv.apply(affine_simple_root(rs, i)).level);
  return out;
}

bool is_minimal(const RootSystem& rs, const AffineWeylElement& w) {
  if (!is_dominant(rs, w)) return false;
  for (int k : inverse_delta_levels(rs, w))
    if (k < -1) return false;
  return true;
}

bool is_maximal(const RootSystem& rs, const AffineWeylElement& w) {
  if (!is_dominant(rs, w)) return false;
  for (int k : inverse_delta_levels(rs, w))
    if (k > 1) return false;
  return true;
}

bool is_minimax_element(const RootSystem& rs, const AffineWeylElement& w) {
  return is_minimal(rs, w) && is_maximal(rs, w);
}

std::vector<AffineRoot> w_min_inversion_set(const Ideal& ideal) {
  auto l = l_values(ideal);
  const auto& rs = ideal.system();
  std::vector<AffineRoot> out;
  ideal.members().for_each([&](int idx) {
    for (int m = 1; m <= l[idx]; ++m) out.push_back({m, negate(rs.coords(idx))});
  });
  return out;
}

std::vector<AffineRoot> w_max_inversion_set(const Ideal& ideal) {
  auto k = k_values(ideal);
  const auto& rs = ideal.system();
  std::vector<AffineRoot> out;
  ideal.members().for_each([&](int idx) {
    for (int m = 1; m <= k[idx] - 1; ++m) out.push_back({m, negate(rs.coords(idx))});
  });
  return out;
}

AffineWeylElement w_min(const Ideal& ideal) {
  return element_from_inversion_set(ideal.system(), w_min_inversion_set(ideal)).element;
}

AffineWeylElement w_max(const Ideal& ideal) {
  if (!is_strictly_positive(ideal)) throw std::invalid_argument("w_max requires a strictly positive ideal");
  return element_from_inversion_set(ideal.system(), w_max_inversion_set(ideal)).element;
}

bool is_minimax(const Ideal& ideal) {
  if (!is_strictly_positive(ideal)) return false;
  auto l = l_values(ideal);
  auto k = k_values(ideal);
  bool ok = true;
  ideal.members().for_each([&](int idx) {
    if (k[idx] - 1 != l[idx]) ok = false;
  });
  return ok;
}

Rootlet rootlet(const RootSystem& rs, const AffineWeylElement& w) {
  AffineRoot img = w.apply(affine_simple_root(rs, 0));
  return {img.finite, -img.level};
}

std::string format_rootlet(const RootSystem& rs, const Rootlet& rt) {
  return format_affine_root(rs, AffineRoot{-rt.level, rt.nu});
}

Ideal first_layer_ideal(const RootSystem& rs, const AffineWeylElement& w) {
  if (!is_dominant(rs, w)) throw std::invalid_argument("first layer ideal requires a dominant element");
  RootSet members;
  for (int idx = 0; idx < rs.num_positive(); ++idx)
    if (!is_positive(w.apply(AffineRoot{1, negate(rs.coords(idx))}), rs.rank())) members.set(idx);
  return Ideal(rs, members);
}

namespace {

Antichain roots_hitting(const RootSystem& rs, const AffineWeylElement& w, int sign) {
  Antichain out;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    AffineRoot img = w.apply(AffineRoot{1, negate(rs.coords(idx))});
    for (int i = 0; i <= rs.rank(); ++i) {
      AffineRoot a = affine_simple_root(rs, i);
      if (sign < 0) a = {-a.level, negate(a.finite)};
      if (img == a) {
        out.indices.push_back(idx);
        break;
      }
    }
  }
  return out;
}

}  // namespace

Antichain generators_via_w(const RootSystem& rs, const AffineWeylElement& w) { return roots_hitting(rs, w, -1); }

Antichain xi_via_w(const RootSystem& rs, const AffineWeylElement& w) { return roots_hitting(rs, w, 1); }

IntVec lattice_image(const RootSystem& rs, const AffineWeylElement& w) {
  if (!is_dominant(rs, w)) throw std::invalid_argument("lattice image requires a dominant element");
  return w.finite_part().apply_to_coweight(w.translation_part());
}

RatVec alcove_barycenter(const RootSystem& rs) {
  RatVec b{};
  const auto& c = rs.theta_coordinates();
  for (int i = 0; i < rs.rank(); ++i) b[i] = Rational(1, (rs.rank() + 1) * c[i]);
  return b;
}

RatVec alcove_image_barycenter(const RootSystem& rs, const AffineWeylElement& w) {
  return w.act_point_inverse(alcove_barycenter(rs));
}

}  // namespace minimax
