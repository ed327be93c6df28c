#include "minimax/classical.hpp"

#include <algorithm>
#include <stdexcept>

#include "minimax/affine.hpp"
#include "minimax/lattice_count.hpp"

namespace minimax {

namespace {

void require_type(const RootSystem& rs, CartanType t, const char* what) {
  if (rs.type() != t) throw std::invalid_argument(std::string(what) + ": unexpected root system " + rs.label());
}

}  // namespace

IntVec a_pair_root(int a, int b) {
  if (a < 1 || b <= a || b - 1 > kMaxRank) throw std::invalid_argument("bad pair");
  IntVec v{};
  for (int i = a; i < b; ++i) v[i - 1] = 1;
  return v;
}

PairAntichain to_pairs(const RootSystem& rs, const Antichain& gamma) {
  require_type(rs, CartanType::A, "to_pairs");
  PairAntichain out;
  for (int idx : gamma.indices) {
    const IntVec& v = rs.coords(idx);
    int a = 0;
    while (v[a] == 0) ++a;
    int b = a;
    while (b < rs.rank() && v[b] == 1) ++b;
    out.emplace_back(a + 1, b + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Antichain from_pairs(const RootSystem& rs, const PairAntichain& pairs) {
  require_type(rs, CartanType::A, "from_pairs");
  std::vector<IntVec> roots;
  for (auto [a, b] : pairs) {
    if (b > rs.rank() + 1) throw std::invalid_argument("pair exceeds the rank");
    roots.push_back(a_pair_root(a, b));
  }
  Antichain g = antichain_of(rs, roots);
  ideal_of(rs, g);  // rejects comparable pairs
  return g;
}

bool has_non_meeting_generators(const PairAntichain& pairs) {
  for (const auto& pj : pairs)
    for (const auto& pi : pairs)
      if (pj.second == pi.first + 1) return false;
  return true;
}

std::int64_t count_non_meeting(int n, int k) { return binomial(n, 2 * k) * catalan(k); }

IntVec c_pair_root(int n, int i, int j) {
  if (i < 1 || j <= i || i + j > 2 * n + 1) throw std::invalid_argument("not a C_n pair");
  IntVec v{};
  if (j <= n + 1) {
    for (int t = i; t < j; ++t) v[t - 1] = 1;
    return v;
  }
  for (int t = i; t <= 2 * n - j; ++t) v[t - 1] = 1;
  for (int t = 2 * n - j + 1; t <= n - 1; ++t) v[t - 1] = 2;
  v[n - 1] = 1;
  return v;
}

Pair c_root_pair(int n, const IntVec& root) {
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i + 1; i + j <= 2 * n + 1; ++j)
      if (c_pair_root(n, i, j) == root) return {i, j};
  throw std::invalid_argument("not a positive root of C_n");
}

Pair fold_pair(int n, const Pair& p) {
  auto [i, j] = p;
  if (i + j <= 2 * n + 1) return p;
  return {2 * n + 1 - j, 2 * n + 1 - i};
}

Ideal symmetrize(const Ideal& ideal, const RootSystem& a_sys) {
  const auto& c_sys = ideal.system();
  require_type(c_sys, CartanType::C, "symmetrize");
  require_type(a_sys, CartanType::A, "symmetrize");
  const int n = c_sys.rank();
  if (a_sys.rank() != 2 * n - 1) throw std::invalid_argument("symmetrize: rank mismatch");
  RootSet members;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i + 1; j <= 2 * n; ++j) {
      auto [fi, fj] = fold_pair(n, {i, j});
      if (ideal.contains(c_pair_root(n, fi, fj))) members.set(*a_sys.index_of(a_pair_root(i, j)));
    }
  return Ideal(a_sys, members);
}

Ideal desymmetrize(const Ideal& ideal, const RootSystem& c_sys) {
  const auto& a_sys = ideal.system();
  require_type(c_sys, CartanType::C, "desymmetrize");
  require_type(a_sys, CartanType::A, "desymmetrize");
  const int n = c_sys.rank();
  if (a_sys.rank() != 2 * n - 1) throw std::invalid_argument("desymmetrize: rank mismatch");
  RootSet members;
  for (auto [a, b] : to_pairs(a_sys, Antichain{ideal.indices()})) {
    auto [i, j] = fold_pair(n, {a, b});
    members.set(*c_sys.index_of(c_pair_root(n, i, j)));
  }
  return Ideal(c_sys, members);
}

bool is_self_conjugate(const Ideal& ideal) {
  const auto& rs = ideal.system();
  require_type(rs, CartanType::A, "is_self_conjugate");
  const int m = rs.rank() + 1;
  for (auto [a, b] : to_pairs(rs, Antichain{ideal.indices()}))
    if (!ideal.contains(a_pair_root(m + 1 - b, m + 1 - a))) return false;
  return true;
}

bool sp_is_minimax(const Ideal& ideal, const RootSystem& a_sys) {
  Ideal bar = symmetrize(ideal, a_sys);
  return has_non_meeting_generators(to_pairs(a_sys, generators(bar)));
}

std::int64_t count_sp_minimax(int n, int q) {
  if (q == 0) return 1;
  return binomial(2 * q - 1, q - 1) * binomial(n - 1, 2 * q - 1) + binomial(2 * q, q) * binomial(n - 1, 2 * q);
}

std::int64_t ballot_count(int k) { return binomial(k, k / 2); }

std::vector<std::int64_t> generating_function_Fmm(CartanType type, int rank) {
  std::vector<std::int64_t> out;
  if (type == CartanType::A) {
    for (int k = 0; 2 * k <= rank; ++k) out.push_back(count_non_meeting(rank, k));
  } else if (type == CartanType::C) {
    for (int q = 0; 2 * q - 1 <= rank - 1; ++q) out.push_back(count_sp_minimax(rank, q));
  } else {
    throw std::invalid_argument("F_mm closed forms exist only for types A and C");
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::int64_t> fmm_by_enumeration(const RootSystem& rs) {
  std::vector<std::int64_t> out;
  for_each_ideal(rs, IdealFilter::Minimax, [&](const Ideal& i) {
    std::size_t k = generators(i).indices.size();
    if (out.size() <= k) out.resize(k + 1, 0);
    ++out[k];
    return true;
  });
  return out;
}

}  // namespace minimax
