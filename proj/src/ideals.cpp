#include "minimax/ideals.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "minimax/affine.hpp"
#include "minimax/heisenberg.hpp"

namespace minimax {

bool is_upward_closed(const RootSystem& rs, const RootSet& s) {
  bool ok = true;
  s.for_each([&](int idx) {
    for (int i = 0; i < rs.rank() && ok; ++i) {
      int up = rs.sum_index(idx, rs.index_of_simple(i));
      if (up >= 0 && !s.test(up)) ok = false;
    }
  });
  return ok;
}

Ideal::Ideal(const RootSystem& rs, RootSet members) : rs_(&rs), members_(members) {
  if (!(members - rs.all_roots()).empty()) throw std::invalid_argument("ideal member index out of range");
  if (!is_upward_closed(rs, members)) throw std::invalid_argument("root set is not upward closed");
}

bool Ideal::contains(const IntVec& root) const {
  auto idx = rs_->index_of(root);
  return idx && members_.test(*idx);
}

std::vector<int> Ideal::indices() const {
  std::vector<int> out;
  members_.for_each([&](int idx) { out.push_back(idx); });
  return out;
}

Antichain generators(const Ideal& ideal) {
  const auto& rs = ideal.system();
  Antichain out;
  ideal.members().for_each([&](int idx) {
    // Minimal iff no member lies strictly below.
    RootSet below = rs.down_set(idx) & ideal.members();
    if (below.count() == 1) out.indices.push_back(idx);
  });
  return out;
}

Ideal ideal_of(const RootSystem& rs, const Antichain& gamma) {
  RootSet members;
  for (std::size_t a = 0; a < gamma.indices.size(); ++a) {
    int i = gamma.indices[a];
    if (i < 0 || i >= rs.num_positive()) throw std::invalid_argument("antichain index out of range");
    for (std::size_t b = 0; b < gamma.indices.size(); ++b) {
      int j = gamma.indices[b];
      if (a != b && rs.leq(i, j))
        throw std::invalid_argument("not an antichain: " + rs.format_root(rs.coords(i)) +
                                    " <= " + rs.format_root(rs.coords(j)));
    }
    members |= rs.up_set(i);
  }
  return Ideal(rs, members);
}

Antichain antichain_of(const RootSystem& rs, const std::vector<IntVec>& roots) {
  Antichain out;
  for (const auto& r : roots) {
    auto idx = rs.index_of(r);
    if (!idx) throw std::invalid_argument(rs.format_root(r) + " is not a positive root of " + rs.label());
    out.indices.push_back(*idx);
  }
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

Ideal ideal_of(const RootSystem& rs, const std::vector<IntVec>& roots) {
  return ideal_of(rs, antichain_of(rs, roots));
}

bool is_strictly_positive(const Ideal& ideal) {
  const auto& rs = ideal.system();
  for (int i = 0; i < rs.rank(); ++i)
    if (ideal.contains(rs.index_of_simple(i))) return false;
  return true;
}

namespace {

RootSet sumset(const RootSystem& rs, const RootSet& a, const RootSet& b) {
  RootSet out;
  a.for_each([&](int i) {
    b.for_each([&](int j) {
      int s = rs.sum_index(i, j);
      if (s >= 0) out.set(s);
    });
  });
  return out;
}

}  // namespace

bool is_abelian(const Ideal& ideal) {
  return sumset(ideal.system(), ideal.members(), ideal.members()).empty();
}

Ideal power(const Ideal& ideal, int k) {
  if (k < 1) throw std::invalid_argument("ideal power exponent must be positive");
  const auto& rs = ideal.system();
  RootSet cur = ideal.members();
  for (int j = 2; j <= k && !cur.empty(); ++j) cur = sumset(rs, cur, ideal.members());
  return Ideal(rs, cur);
}

std::vector<int> power_sizes(const Ideal& ideal) {
  const auto& rs = ideal.system();
  std::vector<int> out;
  RootSet cur = ideal.members();
  while (!cur.empty()) {
    out.push_back(cur.count());
    cur = sumset(rs, cur, ideal.members());
  }
  return out;
}

Antichain xi(const Ideal& ideal) {
  const auto& rs = ideal.system();
  RootSet complement = rs.all_roots() - ideal.members();
  Antichain out;
  complement.for_each([&](int idx) {
    RootSet above = rs.up_set(idx) & complement;
    if (above.count() == 1) out.indices.push_back(idx);
  });
  return out;
}

std::vector<int> l_values(const Ideal& ideal) {
  const auto& rs = ideal.system();
  std::vector<int> l(rs.num_positive(), 0);
  // Roots are stored by height, so summands precede their sums.
  ideal.members().for_each([&](int idx) {
    int best = 1;
    for (auto [a, b] : rs.decompositions(idx))
      if (ideal.contains(a) && ideal.contains(b)) best = std::max(best, l[a] + l[b]);
    l[idx] = best;
  });
  return l;
}

int l_value(const IntVec& gamma, const Ideal& ideal) {
  auto idx = ideal.system().index_of(gamma);
  if (!idx || !ideal.contains(*idx))
    throw std::invalid_argument("l(gamma, I) requires gamma in I; got " + ideal.system().format_root(gamma));
  return l_values(ideal)[*idx];
}

std::vector<int> k_values(const Ideal& ideal) {
  if (!is_strictly_positive(ideal))
    throw std::invalid_argument("k(mu, I) is defined only for strictly positive ideals");
  const auto& rs = ideal.system();
  constexpr int kUnset = std::numeric_limits<int>::max() / 4;
  std::vector<int> k(rs.num_positive(), 1);
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    if (!ideal.contains(idx)) continue;
    int best = kUnset;
    for (auto [a, b] : rs.decompositions(idx)) best = std::min(best, k[a] + k[b]);
    if (best == kUnset) throw std::logic_error("member of a strictly positive ideal has no decomposition");
    k[idx] = best;
  }
  return k;
}

int k_value(const IntVec& gamma, const Ideal& ideal) {
  auto idx = ideal.system().index_of(gamma);
  if (!idx) throw std::invalid_argument(ideal.system().format_root(gamma) + " is not a positive root");
  return k_values(ideal)[*idx];
}

IdealFilter parse_ideal_filter(const std::string& text) {
  if (text == "all") return IdealFilter::All;
  if (text == "strictly_positive") return IdealFilter::StrictlyPositive;
  if (text == "abelian") return IdealFilter::Abelian;
  if (text == "minimax") return IdealFilter::Minimax;
  if (text == "heisenberg_contained") return IdealFilter::HeisenbergContained;
  throw std::invalid_argument("unknown ideal class '" + text +
                              "': expected all, strictly_positive, abelian, minimax, heisenberg_contained");
}

std::string to_string(IdealFilter filter) {
  switch (filter) {
    case IdealFilter::All: return "all";
    case IdealFilter::StrictlyPositive: return "strictly_positive";
    case IdealFilter::Abelian: return "abelian";
    case IdealFilter::Minimax: return "minimax";
    case IdealFilter::HeisenbergContained: return "heisenberg_contained";
  }
  return "?";
}

bool passes(const Ideal& ideal, IdealFilter filter) {
  switch (filter) {
    case IdealFilter::All: return true;
    case IdealFilter::StrictlyPositive: return is_strictly_positive(ideal);
    case IdealFilter::Abelian: return is_abelian(ideal);
    case IdealFilter::Minimax: return is_minimax(ideal);
    case IdealFilter::HeisenbergContained:
      return ideal.members().subset_of(heisenberg_ideal(ideal.system()).members());
  }
  return false;
}

namespace {

struct Enumerator {
  const RootSystem& rs;
  IdealFilter filter;
  const std::function<bool(const Ideal&)>& visit;
  std::vector<RootSet> later;  // indices strictly greater than i, minus everything comparable to i

  bool run(const RootSet& allowed, const RootSet& members) {
    Ideal ideal(rs, members);
    if (passes(ideal, filter) && !visit(ideal)) return false;
    bool keep_going = true;
    allowed.for_each([&](int idx) {
      if (!keep_going) return;
      keep_going = run(allowed & later[idx], members | rs.up_set(idx));
    });
    return keep_going;
  }
};

}  // namespace

void for_each_ideal(const RootSystem& rs, IdealFilter filter, const std::function<bool(const Ideal&)>& visit) {
  const int n = rs.num_positive();
  Enumerator e{rs, filter, visit, std::vector<RootSet>(n)};
  for (int i = 0; i < n; ++i) {
    RootSet above = rs.all_roots() - RootSet::first_n(i + 1);
    e.later[i] = above - rs.up_set(i) - rs.down_set(i);
  }
  e.run(rs.all_roots(), RootSet{});
}

std::vector<Ideal> enumerate_ideals(const RootSystem& rs, IdealFilter filter) {
  std::vector<Ideal> out;
  for_each_ideal(rs, filter, [&](const Ideal& i) {
    out.push_back(i);
    return true;
  });
  return out;
}

long long count_ideals(const RootSystem& rs, IdealFilter filter) {
  long long n = 0;
  for_each_ideal(rs, filter, [&](const Ideal&) {
    ++n;
    return true;
  });
  return n;
}

std::vector<ShiConstraint> shi_inequalities(const Ideal& ideal) {
  const auto& rs = ideal.system();
  std::vector<ShiConstraint> out;
  for (int i = 0; i < rs.rank(); ++i) out.push_back({rs.coords(rs.index_of_simple(i)), true, 0});
  for (int idx = 0; idx < rs.num_positive(); ++idx) out.push_back({rs.coords(idx), ideal.contains(idx), 1});
  return out;
}

bool satisfies(const std::vector<ShiConstraint>& constraints, const RatVec& x, int rank) {
  for (const auto& c : constraints) {
    Rational v = 0;
    for (int i = 0; i < rank; ++i) v += x[i] * c.root[i];
    if (c.greater ? !(v > c.bound) : !(v < c.bound)) return false;
  }
  return true;
}

}  // namespace minimax
