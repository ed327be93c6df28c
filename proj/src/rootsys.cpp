#include "minimax/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minimax {

namespace {

// Squared lengths scaled by 6.
constexpr int kLong = 12;
constexpr int kShort = 6;
constexpr int kShortG2 = 4;

struct Dynkin {
  std::vector<int> lengths;
  std::vector<std::pair<int, int>> edges;
};

Dynkin chain(int rank, int length) {
  Dynkin d;
  d.lengths.assign(rank, length);
  for (int i = 0; i + 1 < rank; ++i) d.edges.emplace_back(i, i + 1);
  return d;
}

Dynkin dynkin_data(CartanType type, int rank) {
  switch (type) {
    case CartanType::A:
      return chain(rank, kLong);
    case CartanType::B: {
      auto d = chain(rank, kLong);
      d.lengths[rank - 1] = kShort;
      return d;
    }
    case CartanType::C: {
      auto d = chain(rank, kShort);
      d.lengths[rank - 1] = kLong;
      return d;
    }
    case CartanType::D: {
      auto d = chain(rank - 1, kLong);
      d.lengths.push_back(kLong);
      d.edges.emplace_back(rank - 3, rank - 1);
      return d;
    }
    case CartanType::E: {
      auto d = chain(rank - 1, kLong);
      d.lengths.push_back(kLong);
      d.edges.emplace_back(rank - 4, rank - 1);
      return d;
    }
    case CartanType::F:
      return {{kShort, kShort, kLong, kLong}, {{0, 1}, {1, 2}, {2, 3}}};
    case CartanType::G:
      return {{kShortG2, kLong}, {{0, 1}}};
  }
  throw std::logic_error("unreachable");
}

void validate(CartanType type, int rank) {
  auto fail = [&](const char* ranges) {
    throw std::invalid_argument("invalid root system " + type_label(type, rank) +
                                ": valid ranges are " + ranges);
  };
  switch (type) {
    case CartanType::A:
      if (rank < 1 || rank > kMaxRank) fail("A1..A16");
      break;
    case CartanType::B:
    case CartanType::C:
      if (rank < 2 || rank > kMaxRank) fail("B2..B16 and C2..C16");
      break;
    case CartanType::D:
      if (rank < 4 || rank > kMaxRank) fail("D4..D16");
      break;
    case CartanType::E:
      if (rank < 6 || rank > 8) fail("E6, E7, E8");
      break;
    case CartanType::F:
      if (rank != 4) fail("F4 only");
      break;
    case CartanType::G:
      if (rank != 2) fail("G2 only");
      break;
  }
}

std::uint64_t pack(const IntVec& v) {
  // Coordinates of roots lie in [-6, 6]; 4 bits per coordinate suffice.
  std::uint64_t key = 0;
  for (int i = 0; i < kMaxRank; ++i) key = (key << 4) | static_cast<std::uint64_t>(v[i] + 8);
  return key;
}

}  // namespace

std::string type_label(CartanType type, int rank) {
  static constexpr const char* kLetters = "ABCDEFG";
  return std::string(1, kLetters[static_cast<int>(type)]) + std::to_string(rank);
}

CartanType parse_cartan_type(std::string_view text, int* rank) {
  if (text.empty()) throw std::invalid_argument("empty root system type");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  static constexpr std::string_view kLetters = "ABCDEFG";
  auto pos = kLetters.find(letter);
  if (pos == std::string_view::npos)
    throw std::invalid_argument("unknown root system type '" + std::string(text) +
                                "': expected one of A,B,C,D,E6,E7,E8,F4,G2");
  auto rest = text.substr(1);
  if (!rest.empty()) {
    int value = 0;
    for (char ch : rest) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("malformed root system type '" + std::string(text) + "'");
      value = value * 10 + (ch - '0');
    }
    if (rank) *rank = value;
  }
  return static_cast<CartanType>(pos);
}

IntVec make_vec(std::initializer_list<int> values) {
  return make_vec(std::span<const int>(values.begin(), values.size()));
}

IntVec make_vec(std::span<const int> values) {
  if (values.size() > static_cast<std::size_t>(kMaxRank))
    throw std::invalid_argument("vector longer than the maximal rank");
  IntVec v{};
  std::copy(values.begin(), values.end(), v.begin());
  return v;
}

std::vector<int> to_vector(const IntVec& v, int rank) { return {v.begin(), v.begin() + rank}; }

std::vector<std::pair<CartanType, int>> types_up_to_rank(int max_rank) {
  std::vector<std::pair<CartanType, int>> out;
  for (int t = 0; t < 7; ++t)
    for (int n = 1; n <= std::min(max_rank, kMaxRank); ++n) {
      try {
        validate(static_cast<CartanType>(t), n);
      } catch (const std::invalid_argument&) {
        continue;
      }
      out.emplace_back(static_cast<CartanType>(t), n);
    }
  return out;
}

RootSystem RootSystem::build(CartanType type, int rank) {
  validate(type, rank);
  return RootSystem(type, rank);
}

RootSystem::RootSystem(CartanType type, int rank) : type_(type), rank_(rank) {
  const Dynkin dyn = dynkin_data(type, rank);
  gram6_.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i) gram6_[i * rank + i] = dyn.lengths[i];
  for (auto [i, j] : dyn.edges) {
    int off = -std::max(dyn.lengths[i], dyn.lengths[j]) / 2;
    gram6_[i * rank + j] = gram6_[j * rank + i] = off;
  }
  cartan_.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_[i * rank + j] = 2 * gram6_[i * rank + j] / gram6_[j * rank + j];
  long_length6_ = *std::max_element(dyn.lengths.begin(), dyn.lengths.end());

  // Positive roots by height: gamma + alpha_i is a root iff q > 0, where the
  // alpha_i-string through gamma runs from gamma - p alpha_i to gamma + q alpha_i
  // and p - q = (gamma, alpha_i^vee).
  std::vector<std::vector<IntVec>> by_height(1);
  std::unordered_map<std::uint64_t, bool> seen;
  for (int i = 0; i < rank; ++i) {
    IntVec v{};
    v[i] = 1;
    by_height[0].push_back(v);
    seen[pack(v)] = true;
  }
  auto cartan_pair = [&](const IntVec& v, int i) {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += v[j] * cartan_[j * rank + i];
    return s;
  };
  for (std::size_t h = 0; !by_height[h].empty(); ++h) {
    std::vector<IntVec> next;
    for (const auto& v : by_height[h]) {
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        IntVec down = v;
        while (true) {
          down[i] -= 1;
          if (!seen.count(pack(down))) break;
          ++p;
        }
        int q = p - cartan_pair(v, i);
        if (q <= 0) continue;
        IntVec up = v;
        up[i] += 1;
        if (seen.emplace(pack(up), true).second) next.push_back(up);
      }
    }
    by_height.push_back(std::move(next));
  }
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end());
    for (auto& v : level) {
      int height = std::accumulate(v.begin(), v.end(), 0);
      roots_.push_back({v, height});
    }
  }
  const int n = num_positive();
  for (int idx = 0; idx < n; ++idx) lookup_[pack(roots_[idx].coords)] = idx;
  simple_index_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    IntVec v{};
    v[i] = 1;
    simple_index_[i] = lookup_.at(pack(v));
  }
  long_.resize(n);
  for (int idx = 0; idx < n; ++idx) long_[idx] = form6(roots_[idx].coords, roots_[idx].coords) == long_length6_;

  up_sets_.assign(n, RootSet{});
  down_sets_.assign(n, RootSet{});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (root_order_leq(roots_[a].coords, roots_[b].coords)) {
        up_sets_[a].set(b);
        down_sets_[b].set(a);
      }

  sums_.assign(n * n, -1);
  decomps_.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto s = index_of(add(roots_[a].coords, roots_[b].coords));
      if (!s) continue;
      sums_[a * n + b] = *s;
      if (a <= b) decomps_[*s].emplace_back(a, b);
    }

  // Exponents: the multiplicity of m equals (#roots of height m) - (#roots of height m + 1).
  std::vector<int> per_height(roots_.back().height + 2, 0);
  for (const auto& r : roots_) ++per_height[r.height];
  for (int m = 1; m + 1 < static_cast<int>(per_height.size()); ++m)
    for (int k = 0; k < per_height[m] - per_height[m + 1]; ++k) exponents_.push_back(m);
  coxeter_ = roots_.back().height + 1;

  // Adjugate and determinant of C via exact rational elimination.
  std::vector<Rational> a(rank * rank), inv(rank * rank, Rational(0));
  for (int i = 0; i < rank * rank; ++i) a[i] = cartan_[i];
  for (int i = 0; i < rank; ++i) inv[i * rank + i] = 1;
  Rational det = 1;
  for (int col = 0; col < rank; ++col) {
    int piv = col;
    while (a[piv * rank + col].numerator() == 0) ++piv;
    if (piv != col) {
      for (int k = 0; k < rank; ++k) {
        std::swap(a[piv * rank + k], a[col * rank + k]);
        std::swap(inv[piv * rank + k], inv[col * rank + k]);
      }
      det = -det;
    }
    Rational d = a[col * rank + col];
    det *= d;
    for (int k = 0; k < rank; ++k) {
      a[col * rank + k] /= d;
      inv[col * rank + k] /= d;
    }
    for (int row = 0; row < rank; ++row) {
      if (row == col || a[row * rank + col].numerator() == 0) continue;
      Rational f = a[row * rank + col];
      for (int k = 0; k < rank; ++k) {
        a[row * rank + k] -= f * a[col * rank + k];
        inv[row * rank + k] -= f * inv[col * rank + k];
      }
    }
  }
  if (det.denominator() != 1) throw std::logic_error("non-integral Cartan determinant");
  connection_index_ = static_cast<int>(det.numerator());
  adjugate_.resize(rank * rank);
  for (int i = 0; i < rank * rank; ++i) {
    Rational v = inv[i] * det;
    if (v.denominator() != 1) throw std::logic_error("non-integral adjugate");
    adjugate_[i] = v.numerator();
  }
}

std::optional<int> RootSystem::index_of(const IntVec& v) const {
  for (int i = 0; i < kMaxRank; ++i)
    if (v[i] < -7 || v[i] > 7) return std::nullopt;
  auto it = lookup_.find(pack(v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const IntVec& v) const { return index_of(v) || index_of(negate(v)); }

std::vector<int> RootSystem::extended_coefficients() const {
  std::vector<int> c{1};
  for (int i = 0; i < rank_; ++i) c.push_back(theta_coordinates()[i]);
  return c;
}

std::int64_t RootSystem::form6(const IntVec& a, const IntVec& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(a[i]) * gram6_[i * rank_ + j] * b[j];
  }
  return s;
}

Rational RootSystem::inner_product(const IntVec& a, const IntVec& b) const { return Rational(form6(a, b), 6); }

Rational RootSystem::inner_product_matrix(int i, int j) const { return Rational(gram6_[i * rank_ + j], 6); }

int RootSystem::pairing(const IntVec& gamma, const IntVec& nu) const {
  std::int64_t num = 2 * form6(gamma, nu);
  std::int64_t den = form6(nu, nu);
  if (den == 0) throw std::invalid_argument("pairing with the zero vector");
  if (num % den != 0) throw std::logic_error("non-integral root pairing");
  return static_cast<int>(num / den);
}

IntVec RootSystem::coroot(const IntVec& nu) const {
  IntVec y{};
  for (int i = 0; i < rank_; ++i) {
    IntVec a{};
    a[i] = 1;
    y[i] = pairing(a, nu);
  }
  return y;
}

bool RootSystem::is_long(const IntVec& root) const { return form6(root, root) == long_length6_; }

std::vector<Root> RootSystem::simple_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < rank_; ++i) out.push_back(roots_[simple_index_[i]]);
  return out;
}

std::vector<Root> RootSystem::long_positive_roots() const {
  std::vector<Root> out;
  for (int idx : long_positive_indices()) out.push_back(roots_[idx]);
  return out;
}

std::vector<int> RootSystem::long_positive_indices() const {
  std::vector<int> out;
  for (int idx = 0; idx < num_positive(); ++idx)
    if (long_[idx]) out.push_back(idx);
  return out;
}

int RootSystem::num_long_roots() const { return 2 * static_cast<int>(long_positive_indices().size()); }

bool RootSystem::root_order_leq(const IntVec& mu, const IntVec& gamma) const {
  for (int i = 0; i < rank_; ++i)
    if (gamma[i] < mu[i]) return false;
  return true;
}

Rational RootSystem::rho_pairing(const IntVec& nu) const {
  std::int64_t s = 0;
  for (const auto& r : roots_) s += pairing(r.coords, nu);
  return Rational(s, 2);
}

bool RootSystem::in_coroot_lattice(const IntVec& y) const {
  for (int i = 0; i < rank_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < rank_; ++j) s += adjugate_[i * rank_ + j] * y[j];
    if (s % connection_index_ != 0) return false;
  }
  return true;
}

std::string RootSystem::format_root(const IntVec& v) const {
  std::string out = "[";
  for (int i = 0; i < rank_; ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string RootSystem::dump() const {
  std::ostringstream os;
  os << "# " << label() << "  positive_roots=" << num_positive() << " h=" << coxeter_
     << " f=" << connection_index_ << "\n";
  os << "# index coords height length\n";
  for (int idx = 0; idx < num_positive(); ++idx)
    os << idx << ' ' << format_root(roots_[idx].coords) << ' ' << roots_[idx].height << ' '
       << (long_[idx] ? "long" : "short") << '\n';
  return os.str();
}

}  // namespace minimax
