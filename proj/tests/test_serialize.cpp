#include <random>

#include "doctest.h"
#include "minimax/serialize.hpp"

using namespace minimax;

TEST_CASE("ideal records round trip") {
  for (auto [t, n] : types_up_to_rank(4)) {
    auto rs = RootSystem::build(t, n);
    for (const auto& ideal : enumerate_ideals(rs)) {
      auto j = ideal_to_json(ideal);
      CHECK(ideal_from_json(rs, json::parse(j.dump())) == ideal);
    }
  }
}

TEST_CASE("ideal record fields") {
  auto rs = RootSystem::build(CartanType::F, 4);
  auto ideal = ideal_of(rs, {make_vec({1, 2, 1, 1})});
  auto rec = ideal_record(ideal);
  CHECK(rec["schema"] == "minimax-ideals/1");
  CHECK(rec["type"] == "F4");
  CHECK(rec["rank"] == 4);
  CHECK(rec["generators"] == json::parse("[[1,2,1,1]]"));
  CHECK(rec["size"] == 9);
  CHECK(rec["flags"]["minimax"] == true);
  CHECK(rec["flags"]["abelian"] == false);
  CHECK(rec["flags"]["strictly_positive"] == true);
  CHECK(rec["flags"]["heisenberg_contained"] == true);
  CHECK(rec["rootlet"]["text"] == "-δ-[0,2,1,0]");
  CHECK(rec["rootlet"]["level"] == 1);
  CHECK(rec["wmin_length"] == 10);
  CHECK(rec["lattice_image"] == json::parse("[1,-1,0,1]"));
}

TEST_CASE("ideal records are rejected on mismatch") {
  auto a2 = RootSystem::build(CartanType::A, 2);
  auto a3 = RootSystem::build(CartanType::A, 3);
  auto j = ideal_to_json(Ideal::all(a2));
  CHECK_THROWS_AS(ideal_from_json(a3, j), std::invalid_argument);
  CHECK_THROWS_AS(ideal_from_json(a2, json::parse(R"({"type":"A2","rank":2,"generators":[[1,0,0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ideal_from_json(a2, json::parse(R"({"type":"A2","rank":2,"generators":[[2,0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(ideal_from_json(a2, json::parse(R"({"type":"A2","rank":2,"generators":[[1,0],[1,1]]})")),
                  std::invalid_argument);
  CHECK_THROWS(ideal_from_json(a2, json::parse(R"({"type":"A2","rank":2})")));
}

TEST_CASE("affine elements round trip") {
  std::mt19937 rng(99);
  for (auto [t, n] : types_up_to_rank(4)) {
    auto rs = RootSystem::build(t, n);
    std::uniform_int_distribution<int> pick(0, n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> word;
      for (int i = 0; i < 12; ++i) word.push_back(pick(rng));
      auto w = AffineWeylElement::from_word(rs, word);
      auto j = element_to_json(rs, w);
      CHECK(element_from_json(rs, json::parse(j.dump())) == w);
      CHECK(j["length"] == j["word"].size());
    }
  }
}

TEST_CASE("inconsistent element records are rejected") {
  auto rs = RootSystem::build(CartanType::B, 3);
  auto w = AffineWeylElement::from_word(rs, {0, 1, 2, 3});
  auto j = element_to_json(rs, w);
  auto bad_len = j;
  bad_len["length"] = 3;
  CHECK_THROWS_AS(element_from_json(rs, bad_len), std::invalid_argument);
  auto bad_r = j;
  bad_r["r_coords"] = json::parse("[0,0,0]");
  CHECK_THROWS_AS(element_from_json(rs, bad_r), std::invalid_argument);
  auto bad_m = j;
  bad_m["v_matrix"][0][0] = 5;
  CHECK_THROWS_AS(element_from_json(rs, bad_m), std::invalid_argument);
  auto bad_word = j;
  bad_word["word"] = json::parse("[4]");
  CHECK_THROWS_AS(element_from_json(rs, bad_word), std::invalid_argument);
}

TEST_CASE("descriptors and count reports") {
  auto rs = RootSystem::build(CartanType::G, 2);
  for (const auto& r : rs.long_positive_roots())
    for (int sign : {1, -1}) {
      HeisenbergDescriptor d{r.coords, sign};
      CHECK(descriptor_from_json(rs, descriptor_to_json(rs, d)) == d);
    }
  CHECK(descriptor_to_json(rs, {make_vec({3, 2}), -1}) == json::parse(R"({"nu":[3,2],"sign":"-"})"));
  CHECK_THROWS_AS(descriptor_from_json(rs, json::parse(R"({"nu":[3,2],"sign":"x"})")), std::invalid_argument);
  CHECK_THROWS_AS(descriptor_from_json(rs, json::parse(R"({"nu":[1,0],"sign":"+"})")), std::invalid_argument);

  for (const auto& report : count_minimax_reports(RootSystem::build(CartanType::E, 6)))
    CHECK(report_from_json(json::parse(report_to_json(report).dump())) == report);
  auto ad = count_AD(RootSystem::build(CartanType::E, 8));
  CHECK(report_from_json(report_to_json(ad)) == ad);
  auto j = report_to_json(ad);
  j["method"] = "guess";
  CHECK_THROWS_AS(report_from_json(j), std::invalid_argument);
}
