#include "minimax/serialize.hpp"

#include <stdexcept>

namespace minimax {

json coords_json(const IntVec& v, int rank) {
  json a = json::array();
  for (int i = 0; i < rank; ++i) a.push_back(v[i]);
  return a;
}

IntVec coords_from_json(const json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw std::invalid_argument("expected an array of " + std::to_string(rank) + " integers");
  IntVec v{};
  for (int i = 0; i < rank; ++i) v[i] = j[i].get<int>();
  return v;
}

namespace {

void check_system(const RootSystem& rs, const json& j) {
  if (j.at("type").get<std::string>() != rs.label())
    throw std::invalid_argument("record type " + j.at("type").get<std::string>() + " does not match " + rs.label());
  if (j.at("rank").get<int>() != rs.rank()) throw std::invalid_argument("record rank does not match " + rs.label());
}

json generators_json(const Ideal& ideal) {
  const auto& rs = ideal.system();
  json g = json::array();
  for (int idx : generators(ideal).indices) g.push_back(coords_json(rs.coords(idx), rs.rank()));
  return g;
}

}  // namespace

json ideal_to_json(const Ideal& ideal) {
  const auto& rs = ideal.system();
  return {{"type", rs.label()}, {"rank", rs.rank()}, {"generators", generators_json(ideal)}};
}

Ideal ideal_from_json(const RootSystem& rs, const json& j) {
  check_system(rs, j);
  std::vector<IntVec> roots;
  for (const auto& g : j.at("generators")) roots.push_back(coords_from_json(g, rs.rank()));
  return ideal_of(rs, roots);
}

json element_to_json(const RootSystem& rs, const AffineWeylElement& w) {
  const int p = rs.rank();
  json m = json::array();
  for (int i = 0; i < p; ++i) {
    json row = json::array();
    for (int c = 0; c < p; ++c) row.push_back(w.finite_part().entry(i, c));
    m.push_back(row);
  }
  return {{"word", reduced_word(rs, w)},
          {"v_matrix", m},
          {"r_coords", coords_json(w.translation_part(), p)},
          {"length", length(rs, w)}};
}

AffineWeylElement element_from_json(const RootSystem& rs, const json& j) {
  auto w = AffineWeylElement::from_word(rs, j.at("word").get<std::vector<int>>());
  const int p = rs.rank();
  const auto& m = j.at("v_matrix");
  if (!m.is_array() || static_cast<int>(m.size()) != p) throw std::invalid_argument("v_matrix has the wrong shape");
  for (int i = 0; i < p; ++i)
    if (coords_from_json(m[i], p) != coords_from_json(element_to_json(rs, w)["v_matrix"][i], p))
      throw std::invalid_argument("v_matrix disagrees with the word");
  if (coords_from_json(j.at("r_coords"), p) != w.translation_part())
    throw std::invalid_argument("r_coords disagree with the word");
  if (j.at("length").get<int>() != length(rs, w)) throw std::invalid_argument("length disagrees with the word");
  return w;
}

json descriptor_to_json(const RootSystem& rs, const HeisenbergDescriptor& d) {
  validate(rs, d);
  return {{"nu", coords_json(d.nu, rs.rank())}, {"sign", d.sign > 0 ? "+" : "-"}};
}

HeisenbergDescriptor descriptor_from_json(const RootSystem& rs, const json& j) {
  HeisenbergDescriptor d;
  d.nu = coords_from_json(j.at("nu"), rs.rank());
  auto s = j.at("sign").get<std::string>();
  if (s == "+")
    d.sign = 1;
  else if (s == "-")
    d.sign = -1;
  else
    throw std::invalid_argument("sign must be \"+\" or \"-\"");
  validate(rs, d);
  return d;
}

json report_to_json(const CountReport& r) {
  return {{"type", r.type_label},     {"rank", r.rank},
          {"quantity", r.quantity},   {"value", r.value},
          {"method", to_string(r.method)}, {"congruence_applied", r.congruence_applied}};
}

CountReport report_from_json(const json& j) {
  CountReport r;
  r.type_label = j.at("type").get<std::string>();
  r.rank = j.at("rank").get<int>();
  r.quantity = j.at("quantity").get<std::string>();
  r.value = j.at("value").get<std::int64_t>();
  auto m = j.at("method").get<std::string>();
  if (m == "enumeration")
    r.method = CountMethod::Enumeration;
  else if (m == "lattice")
    r.method = CountMethod::Lattice;
  else if (m == "closed_form")
    r.method = CountMethod::ClosedForm;
  else
    throw std::invalid_argument("unknown count method " + m);
  r.congruence_applied = j.value("congruence_applied", false);
  return r;
}

json ideal_record(const Ideal& ideal) {
  const auto& rs = ideal.system();
  auto w = w_min(ideal);
  auto rt = rootlet(rs, w);
  json rec = ideal_to_json(ideal);
  rec["schema"] = kSchemaVersion;
  rec["size"] = ideal.size();
  rec["flags"] = {{"strictly_positive", is_strictly_positive(ideal)},
                  {"abelian", is_abelian(ideal)},
                  {"minimax", is_minimax(ideal)},
                  {"heisenberg_contained", passes(ideal, IdealFilter::HeisenbergContained)}};
  rec["rootlet"] = {{"nu", coords_json(rt.nu, rs.rank())}, {"level", rt.level}, {"text", format_rootlet(rs, rt)}};
  rec["wmin_length"] = length(rs, w);
  rec["lattice_image"] = coords_json(lattice_image(rs, w), rs.rank());
  return rec;
}

}  // namespace minimax
