#include <set>

#include "doctest.h"
#include "minimax/heisenberg.hpp"

using namespace minimax;

namespace {

std::vector<HeisenbergDescriptor> descriptors(const RootSystem& rs, bool with_simple_minus) {
  std::vector<HeisenbergDescriptor> out;
  for (const auto& r : rs.long_positive_roots()) {
    out.push_back({r.coords, 1});
    if (r.height > 1 || with_simple_minus) out.push_back({r.coords, -1});
  }
  return out;
}

int unique_theta_neighbour(const RootSystem& rs) {
  int found = -1;
  for (int i = 0; i < rs.rank(); ++i) {
    if (rs.form6(rs.theta_coordinates(), rs.coords(rs.index_of_simple(i))) > 0) {
      if (found >= 0) return -1;
      found = i;
    }
  }
  if (found >= 0 && rs.pairing(rs.theta_coordinates(), rs.coords(rs.index_of_simple(found))) != 1) return -1;
  return found;
}

}  // namespace

TEST_CASE("Heisenberg ideal in small ranks") {
  auto a1 = RootSystem::build(CartanType::A, 1);
  CHECK(heisenberg_ideal(a1).size() == 1);
  auto a2 = RootSystem::build(CartanType::A, 2);
  CHECK(heisenberg_ideal(a2) == Ideal::all(a2));
  for (auto [t, n] : types_up_to_rank(6)) {
    auto rs = RootSystem::build(t, n);
    auto h = heisenberg_ideal(rs);
    CAPTURE(rs.label());
    if (n > 1 || t != CartanType::A) {
      CHECK(power(h, 2).size() == 1);
      CHECK(power(h, 2).contains(rs.highest_index()));
      CHECK(power(h, 3).is_empty());
    }
    // #h = 2 (rho, theta^vee) - 1
    CHECK(Rational(h.size()) == 2 * rs.rho_pairing(rs.theta_coordinates()) - 1);
  }
}

TEST_CASE("w_nu and s_nu") {
  for (auto [t, n] : types_up_to_rank(5)) {
    auto rs = RootSystem::build(t, n);
    const auto& theta = rs.theta_coordinates();
    for (const auto& r : rs.long_positive_roots()) {
      const auto& nu = r.coords;
      CAPTURE(rs.label());
      CAPTURE(rs.format_root(nu));
      auto w = w_nu(rs, nu);
      CHECK(w.apply(theta) == nu);
      CHECK(Rational(length(rs, w)) == rs.rho_pairing(theta) - rs.rho_pairing(nu));
      CHECK(static_cast<int>(w_nu_path(rs, nu).size()) == length(rs, w));

      std::vector<IntVec> expected;
      for (const auto& g : rs.positive_roots())
        if (rs.pairing(g.coords, nu) == -1) expected.push_back(g.coords);
      auto got = inversion_set(rs, w.inverse());
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      CHECK(got == expected);

      auto s = s_nu(rs, nu);
      CHECK(s.apply(nu) == negate(nu));
      CHECK(Rational(length(rs, s)) == 2 * rs.rho_pairing(nu) - 1);

      std::vector<IntVec> below;
      for (const auto& g : rs.positive_roots())
        if (rs.pairing(g.coords, nu) == 1 && g.coords != nu && rs.root_order_leq(g.coords, nu))
          below.push_back(g.coords);
      auto reduced = reduced_reflection_inversions(rs, nu);
      std::sort(below.begin(), below.end());
      std::sort(reduced.begin(), reduced.end());
      CHECK(reduced == below);
      CHECK(reduced.empty() == (r.height == 1));
    }
  }
}

TEST_CASE("closed-form first layer ideals and predicted flags") {
  for (auto [t, n] : types_up_to_rank(5)) {
    auto rs = RootSystem::build(t, n);
    std::set<std::vector<int>> seen;
    for (const auto& d : descriptors(rs, false)) {
      CAPTURE(rs.label());
      CAPTURE(rs.format_root(d.nu));
      CAPTURE(d.sign);
      auto w = heisenberg_element(rs, d);
      REQUIRE(is_dominant(rs, w));
      CHECK(is_heisenberg_type(rs, w));
      auto rt = rootlet(rs, w);
      CHECK(rt.nu == (d.sign > 0 ? d.nu : negate(d.nu)));
      CHECK(rt.level == 1);
      auto ideal = first_layer_ideal(rs, w);
      CHECK(heisenberg_ideal_formula(rs, d) == ideal);
      CHECK(ideal.members().subset_of(heisenberg_ideal(rs).members()));
      auto flags = predicted_flags(rs, d);
      CHECK(flags.minimal == is_minimal(rs, w));
      CHECK(flags.maximal == is_maximal(rs, w));
      CHECK(flags.minimal);
      seen.insert(ideal.indices());
    }
    CHECK(static_cast<int>(seen.size()) == heisenberg_nontrivial_count(rs));
    // those are exactly the nonempty ideals inside h
    auto inside = count_ideals(rs, IdealFilter::HeisenbergContained) - 1;
    CHECK(inside == heisenberg_nontrivial_count(rs));
  }
}

TEST_CASE("descriptor validation") {
  auto rs = RootSystem::build(CartanType::B, 3);
  CHECK_THROWS_AS(validate(rs, {make_vec({0, 0, 1}), 1}), std::invalid_argument);  // short
  CHECK_THROWS_AS(validate(rs, {make_vec({1, 1, 1}), 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(rs, {make_vec({1, 0, 1}), 1}), std::invalid_argument);  // not a root
  CHECK_NOTHROW(validate(rs, {make_vec({1, 2, 2}), -1}));
  CHECK_THROWS_AS(heisenberg_ideal_formula(rs, {make_vec({1, 0, 0}), -1}), std::invalid_argument);
}

TEST_CASE("F4 Heisenberg ideals") {
  auto rs = RootSystem::build(CartanType::F, 4);
  CHECK(heisenberg_nontrivial_count(rs) == 22);
  auto one = ideal_of(rs, {make_vec({1, 2, 1, 1})});
  auto two = ideal_of(rs, {make_vec({1, 1, 1, 1})});
  CHECK(one.size() == 9);
  CHECK(two.size() == 10);
  for (const auto& ideal : {one, two}) {
    CHECK(is_minimax(ideal));
    CHECK(is_heisenberg_type(rs, w_min(ideal)));
    CHECK(w_min(ideal) == w_max(ideal));
  }
}

TEST_CASE("Heisenberg type detection") {
  for (auto [t, n] : types_up_to_rank(4)) {
    auto rs = RootSystem::build(t, n);
    CHECK(is_heisenberg_type(rs, AffineWeylElement::simple_reflection(rs, 0)));
    CHECK_FALSE(is_heisenberg_type(rs, AffineWeylElement::identity(n)));
    CHECK_FALSE(is_heisenberg_type(rs, AffineWeylElement::simple_reflection(rs, 1)));
    // a minimal element is of Heisenberg type iff its ideal is a nonempty ideal inside h
    auto h = heisenberg_ideal(rs);
    for (const auto& ideal : enumerate_ideals(rs)) {
      bool inside = !ideal.is_empty() && ideal.members().subset_of(h.members());
      CAPTURE(rs.label());
      CHECK(is_heisenberg_type(rs, w_min(ideal)) == inside);
    }
  }
}

TEST_CASE("dominant elements v s_0") {
  for (auto [t, n] : types_up_to_rank(3)) {
    auto rs = RootSystem::build(t, n);
    std::set<FiniteWeylElement> expected;
    for (const auto& r : rs.long_positive_roots()) {
      expected.insert(w_nu(rs, r.coords));
      expected.insert(s_nu(rs, r.coords) * w_nu(rs, r.coords));
    }
    auto s0 = AffineWeylElement::simple_reflection(rs, 0);
    for (const auto& v : weyl_group_elements(rs)) {
      auto w = AffineWeylElement(v, IntVec{}) * s0;
      CAPTURE(rs.label());
      CHECK(is_dominant(rs, w) == expected.contains(v));
    }
  }
}

TEST_CASE("theta fundamental: w_max of the middle ideal is not of Heisenberg type") {
  int tested = 0;
  for (auto [t, n] : types_up_to_rank(6)) {
    auto rs = RootSystem::build(t, n);
    int j = unique_theta_neighbour(rs);
    if (j < 0) continue;
    ++tested;
    CAPTURE(rs.label());
    IntVec nu = rs.coords(rs.index_of_simple(j));
    auto w = heisenberg_element(rs, {nu, -1});
    REQUIRE(is_dominant(rs, w));
    CHECK_FALSE(is_minimal(rs, w));
    CHECK_FALSE(is_maximal(rs, w));
    auto ideal = first_layer_ideal(rs, w);
    CHECK(w_min(ideal) == heisenberg_element(rs, {nu, 1}));
    auto s0 = AffineWeylElement::simple_reflection(rs, 0);
    auto wmax = w_max(ideal);
    CHECK(wmax == s0 * w);
    CHECK_FALSE(is_heisenberg_type(rs, wmax));
    CHECK(ideal.members().subset_of(heisenberg_ideal(rs).members()));
  }
  CHECK(tested == 10);  // B3..B6, D4..D6, E6, F4, G2
}
