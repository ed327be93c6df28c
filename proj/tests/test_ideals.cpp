#include <set>

#include "doctest.h"
#include "minimax/affine.hpp"
#include "minimax/ideals.hpp"
#include "oracles.hpp"

using namespace minimax;

namespace {

std::vector<std::vector<int>> simple_successors(const RootSystem& rs) {
  std::vector<std::vector<int>> above(rs.num_positive());
  for (int i = 0; i < rs.num_positive(); ++i)
    for (int s = 0; s < rs.rank(); ++s) {
      IntVec v = add(rs.coords(i), rs.coords(rs.index_of_simple(s)));
      if (auto j = rs.index_of(v)) above[i].push_back(*j);
    }
  return above;
}

std::vector<IntVec> member_roots(const Ideal& ideal) {
  std::vector<IntVec> out;
  for (int idx : ideal.indices()) out.push_back(ideal.system().coords(idx));
  return out;
}

std::vector<IntVec> complement_roots(const Ideal& ideal) {
  std::vector<IntVec> out;
  const auto& rs = ideal.system();
  for (int idx = 0; idx < rs.num_positive(); ++idx)
    if (!ideal.contains(idx)) out.push_back(rs.coords(idx));
  return out;
}

}  // namespace

TEST_CASE("small cases") {
  auto a1 = RootSystem::build(CartanType::A, 1);
  auto ideals = enumerate_ideals(a1);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].is_empty());
  CHECK(ideals[1].size() == 1);
  CHECK(count_ideals(a1, IdealFilter::StrictlyPositive) == 1);
  CHECK(count_ideals(RootSystem::build(CartanType::A, 2)) == 5);
}

TEST_CASE("enumeration matches all upward-closed subsets") {
  for (auto [t, n] : types_up_to_rank(3)) {
    auto rs = RootSystem::build(t, n);
    auto expected = oracle::upward_closed_subsets(rs.num_positive(), simple_successors(rs));
    std::set<std::vector<int>> seen;
    std::size_t produced = 0;
    for_each_ideal(rs, IdealFilter::All, [&](const Ideal& i) {
      ++produced;
      seen.insert(i.indices());
      return true;
    });
    CAPTURE(rs.label());
    CHECK(produced == expected.size());
    CHECK(seen == expected);
  }
}

TEST_CASE("enumeration order is deterministic and can stop early") {
  auto rs = RootSystem::build(CartanType::B, 3);
  auto first = enumerate_ideals(rs);
  auto second = enumerate_ideals(rs);
  CHECK(first == second);
  int visited = 0;
  for_each_ideal(rs, IdealFilter::All, [&](const Ideal&) { return ++visited < 3; });
  CHECK(visited == 3);
}

TEST_CASE("generators and the complement's maximal elements") {
  for (auto [t, n] : types_up_to_rank(4)) {
    auto rs = RootSystem::build(t, n);
    for (const auto& ideal : enumerate_ideals(rs)) {
      auto gens = generators(ideal);
      CHECK(ideal_of(rs, gens) == ideal);
      for (int g : gens.indices)
        for (int m : ideal.indices())
          if (m != g) CHECK_FALSE(rs.leq(m, g));
      for (int x : xi(ideal).indices) {
        CHECK_FALSE(ideal.contains(x));
        for (int s = 0; s < n; ++s) {
          int up = rs.sum_index(x, rs.index_of_simple(s));
          if (up >= 0) CHECK(ideal.contains(up));
        }
      }
    }
  }
}

TEST_CASE("rejections") {
  auto rs = RootSystem::build(CartanType::A, 3);
  RootSet lower;
  lower.set(rs.index_of_simple(0));
  CHECK_THROWS_AS(Ideal(rs, lower), std::invalid_argument);
  CHECK_THROWS_WITH_AS(ideal_of(rs, {make_vec({1, 0, 0}), make_vec({1, 1, 0})}), doctest::Contains("not an antichain"),
                       std::invalid_argument);
  CHECK_THROWS_AS(ideal_of(rs, {make_vec({1, 0, 1})}), std::invalid_argument);
  auto with_simple = ideal_of(rs, {make_vec({0, 1, 0})});
  CHECK_THROWS_AS(k_values(with_simple), std::invalid_argument);
  CHECK_THROWS_AS(l_value(make_vec({1, 0, 0}), with_simple), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_filter("abelain"), std::invalid_argument);
  CHECK_THROWS_AS(power(with_simple, 0), std::invalid_argument);
}

TEST_CASE("l and k agree with a vector knapsack") {
  for (auto [t, n] : types_up_to_rank(3)) {
    auto rs = RootSystem::build(t, n);
    for (const auto& ideal : enumerate_ideals(rs)) {
      auto l = l_values(ideal);
      auto parts = member_roots(ideal);
      for (int idx : ideal.indices()) {
        auto lengths = oracle::sum_lengths(parts, rs.coords(idx), n);
        CHECK(l[idx] == *lengths.rbegin());
      }
      if (!is_strictly_positive(ideal)) continue;
      auto k = k_values(ideal);
      auto outside = complement_roots(ideal);
      for (int idx = 0; idx < rs.num_positive(); ++idx) {
        auto lengths = oracle::sum_lengths(outside, rs.coords(idx), n);
        REQUIRE_FALSE(lengths.empty());
        CHECK(k[idx] == *lengths.begin());
      }
    }
  }
}

TEST_CASE("powers") {
  auto rs = RootSystem::build(CartanType::A, 4);
  auto everything = Ideal::all(rs);
  auto sizes = power_sizes(everything);
  // I^k of the full nilradical holds the roots of height >= k
  CHECK(sizes == std::vector<int>{10, 6, 3, 1});
  CHECK(power(everything, 2).size() == 6);
  CHECK(power(everything, 5).is_empty());
  CHECK(is_abelian(ideal_of(rs, {make_vec({0, 0, 1, 1}), make_vec({1, 1, 0, 0})})) == false);
  CHECK(is_abelian(ideal_of(rs, {make_vec({0, 1, 1, 0})})));
}

TEST_CASE("filters") {
  auto rs = RootSystem::build(CartanType::C, 3);
  for (const auto& ideal : enumerate_ideals(rs, IdealFilter::Abelian)) CHECK(is_abelian(ideal));
  for (const auto& ideal : enumerate_ideals(rs, IdealFilter::Minimax)) CHECK(is_minimax(ideal));
  CHECK(count_ideals(rs, IdealFilter::Minimax) == 5);
  CHECK(to_string(parse_ideal_filter("heisenberg_contained")) == "heisenberg_contained");
}

TEST_CASE("Shi region of an ideal contains rational test points") {
  auto rs = RootSystem::build(CartanType::A, 2);
  auto h = ideal_of(rs, {make_vec({1, 0}), make_vec({0, 1})});
  auto constraints = shi_inequalities(h);
  RatVec x{};
  x[0] = Rational(3, 2);
  x[1] = Rational(3, 2);
  CHECK(satisfies(constraints, x, 2));
  x[1] = Rational(1, 2);
  CHECK_FALSE(satisfies(constraints, x, 2));
  auto empty = Ideal::empty(rs);
  RatVec small{};
  small[0] = Rational(1, 4);
  small[1] = Rational(1, 4);
  CHECK(satisfies(shi_inequalities(empty), small, 2));
}
