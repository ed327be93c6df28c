#include <random>
#include <set>

#include "doctest.h"
#include "minimax/affine.hpp"
#include "minimax/lattice_count.hpp"

using namespace minimax;

namespace {

AffineWeylElement random_element(const RootSystem& rs, std::mt19937& rng, int steps) {
  std::uniform_int_distribution<int> pick(0, rs.rank());
  std::vector<int> word;
  for (int i = 0; i < steps; ++i) word.push_back(pick(rng));
  return AffineWeylElement::from_word(rs, word);
}

/// N(s_{j1} ... s_{jt}) = {alpha_{jt}, s_{jt} alpha_{j(t-1)}, ...} for a reduced word.
std::vector<AffineRoot> inversions_from_word(const RootSystem& rs, const std::vector<int>& word) {
  std::vector<AffineRoot> out;
  auto prefix = AffineWeylElement::identity(rs.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int j = *it;
    out.push_back(prefix.apply(affine_simple_root(rs, j)));
    prefix = prefix * AffineWeylElement::simple_reflection(rs, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("finite Weyl group orders") {
  auto order = [](CartanType t, int n) { return weyl_group_elements(RootSystem::build(t, n)).size(); };
  CHECK(order(CartanType::A, 2) == 6);
  CHECK(order(CartanType::B, 2) == 8);
  CHECK(order(CartanType::G, 2) == 12);
  CHECK(order(CartanType::A, 3) == 24);
  CHECK(order(CartanType::B, 3) == 48);
  CHECK(order(CartanType::C, 3) == 48);
}

TEST_CASE("finite elements: inverse, length, longest element") {
  for (auto [t, n] : types_up_to_rank(3)) {
    auto rs = RootSystem::build(t, n);
    int longest = 0;
    for (const auto& v : weyl_group_elements(rs)) {
      CHECK((v * v.inverse()).is_identity());
      CHECK(length(rs, v) == length(rs, v.inverse()));
      longest = std::max(longest, length(rs, v));
      for (const auto& r : rs.positive_roots()) {
        CHECK(rs.is_root(v.apply(r.coords)));
        CHECK(rs.form6(v.apply(r.coords), v.apply(r.coords)) == rs.form6(r.coords, r.coords));
      }
    }
    CHECK(longest == rs.num_positive());
  }
}

TEST_CASE("affine Coxeter relations") {
  for (auto [t, n] : types_up_to_rank(3)) {
    auto rs = RootSystem::build(t, n);
    auto id = AffineWeylElement::identity(n);
    for (int i = 0; i <= n; ++i) {
      auto si = AffineWeylElement::simple_reflection(rs, i);
      CHECK(si * si == id);
      CHECK(length(rs, si) == 1);
      for (int j = i + 1; j <= n; ++j) {
        auto sj = AffineWeylElement::simple_reflection(rs, j);
        int aij = rs.pairing(affine_simple_root(rs, i).finite, affine_simple_root(rs, j).finite);
        int aji = rs.pairing(affine_simple_root(rs, j).finite, affine_simple_root(rs, i).finite);
        int prod = aij * aji;
        if (prod >= 4) continue;  // A1 affine: infinite order
        int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
        auto p = id;
        for (int k = 0; k < m; ++k) p = p * si * sj;
        CAPTURE(rs.label());
        CHECK(p == id);
      }
    }
  }
}

TEST_CASE("inversion sets, lengths and peeling on random elements") {
  std::mt19937 rng(20240611);
  for (auto [t, n] : types_up_to_rank(4)) {
    auto rs = RootSystem::build(t, n);
    for (int trial = 0; trial < 25; ++trial) {
      auto w = random_element(rs, rng, 14);
      auto n_w = inversion_set(rs, w);
      CHECK(static_cast<int>(n_w.size()) == length(rs, w));
      auto word = reduced_word(rs, w);
      CHECK(static_cast<int>(word.size()) == length(rs, w));
      CHECK(AffineWeylElement::from_word(rs, word) == w);
      CHECK(inversions_from_word(rs, word) == n_w);
      auto peeled = element_from_inversion_set(rs, n_w);
      CHECK(peeled.element == w);
      CHECK(AffineWeylElement::from_word(rs, peeled.word) == w);
      CHECK((w * w.inverse()) == AffineWeylElement::identity(n));
    }
  }
}

TEST_CASE("peeling rejects sets that are not inversion sets") {
  auto rs = RootSystem::build(CartanType::A, 2);
  // delta - alpha_1 alone is not biconvex
  std::vector<AffineRoot> bad{{1, negate(make_vec({1, 0}))}};
  CHECK_THROWS_AS(element_from_inversion_set(rs, bad), std::invalid_argument);
  std::vector<AffineRoot> negative{{0, negate(make_vec({1, 0}))}};
  CHECK_THROWS_AS(element_from_inversion_set(rs, negative), std::invalid_argument);
  CHECK(element_from_inversion_set(rs, {}).element == AffineWeylElement::identity(2));
}

TEST_CASE("affine action is compatible with the linear action") {
  std::mt19937 rng(7);
  auto rs = RootSystem::build(CartanType::C, 3);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    auto w = random_element(rs, rng, 10);
    RatVec x{};
    for (int i = 0; i < 3; ++i) x[i] = Rational(num(rng), 7);
    for (const auto& r : rs.positive_roots()) {
      AffineRoot beta{num(rng), r.coords};
      auto value = [&](const AffineRoot& b, const RatVec& p) {
        Rational s = b.level;
        for (int i = 0; i < 3; ++i) s += p[i] * b.finite[i];
        return s;
      };
      CHECK(value(w.apply(beta), w.act_point(x)) == value(beta, x));
    }
    auto back = w.act_point_inverse(w.act_point(x));
    for (int i = 0; i < 3; ++i) CHECK(back[i] == x[i]);
  }
}

TEST_CASE("minimal and maximal elements of ideals") {
  for (auto [t, n] : types_up_to_rank(4)) {
    auto rs = RootSystem::build(t, n);
    for (const auto& ideal : enumerate_ideals(rs)) {
      CAPTURE(rs.label());
      auto wmin = w_min(ideal);
      CHECK(is_minimal(rs, wmin));
      CHECK(first_layer_ideal(rs, wmin) == ideal);
      CHECK(generators_via_w(rs, wmin) == generators(ideal));
      CHECK(d_min_contains(rs, [&] {
        RatVec y{};
        auto img = lattice_image(rs, wmin);
        for (int i = 0; i < n; ++i) y[i] = img[i];
        return y;
      }()));
      if (!is_strictly_positive(ideal)) continue;
      auto wmax = w_max(ideal);
      CHECK(is_maximal(rs, wmax));
      CHECK(first_layer_ideal(rs, wmax) == ideal);
      CHECK(xi_via_w(rs, wmax) == xi(ideal));
      CHECK(length(rs, wmin) <= length(rs, wmax));
    }
  }
}

TEST_CASE("w_max needs a strictly positive ideal") {
  auto rs = RootSystem::build(CartanType::A, 2);
  CHECK_THROWS_AS(w_max(Ideal::all(rs)), std::invalid_argument);
  CHECK_THROWS_AS(first_layer_ideal(rs, AffineWeylElement::simple_reflection(rs, 1)), std::invalid_argument);
}

TEST_CASE("rootlet and lattice image are tied by (y, nu) = 1 + m") {
  for (auto t : std::vector<std::pair<CartanType, int>>{{CartanType::F, 4}, {CartanType::B, 4}, {CartanType::E, 6}}) {
    auto rs = RootSystem::build(t.first, t.second);
    for_each_ideal(rs, IdealFilter::Minimax, [&](const Ideal& ideal) {
      auto w = w_min(ideal);
      auto rt = rootlet(rs, w);
      auto y = lattice_image(rs, w);
      CHECK(dot(y, rt.nu, rs.rank()) == 1 + rt.level);
      CHECK(rs.is_long(rt.nu));
      return true;
    });
  }
}

TEST_CASE("F4 rootlet rendering") {
  auto rs = RootSystem::build(CartanType::F, 4);
  CHECK(format_rootlet(rs, {negate(make_vec({0, 2, 1, 0})), 1}) == "-δ-[0,2,1,0]");
  CHECK(format_rootlet(rs, {make_vec({2, 4, 2, 1}), 2}) == "-2δ+[2,4,2,1]");
  CHECK(format_affine_root(rs, {1, negate(rs.theta_coordinates())}) == "δ-[2,4,3,2]");
  auto ideal = ideal_of(rs, {make_vec({1, 2, 1, 1})});
  CHECK(format_rootlet(rs, rootlet(rs, w_min(ideal))) == "-δ-[0,2,1,0]");
}

TEST_CASE("alcove barycenter") {
  auto rs = RootSystem::build(CartanType::G, 2);
  auto b = alcove_barycenter(rs);
  CHECK(b[0] == Rational(1, 9));
  CHECK(b[1] == Rational(1, 6));
  auto empty = Ideal::empty(rs);
  CHECK(satisfies(shi_inequalities(empty), alcove_image_barycenter(rs, w_min(empty)), 2));
}

TEST_CASE("rootlet examples") {
  auto a2 = RootSystem::build(CartanType::A, 2);
  auto top = ideal_of(a2, {make_vec({1, 1})});
  CHECK(w_min(top) == AffineWeylElement::simple_reflection(a2, 0));
  CHECK(is_minimax(top));
  CHECK(rootlet(a2, w_min(top)).nu == make_vec({1, 1}));

  auto a5 = RootSystem::build(CartanType::A, 5);
  auto ideal = ideal_of(a5, {make_vec({1, 1, 0, 0, 0}), make_vec({0, 0, 1, 1, 0})});
  CHECK(is_minimax(ideal));
  auto rt = rootlet(a5, w_min(ideal));
  CHECK(rt.nu == negate(make_vec({1, 1, 1, 0, 0})));
  CHECK(a5.form6(rt.nu, a5.theta_coordinates()) != 0);
}
