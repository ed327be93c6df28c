#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minimax/ideals.hpp"
#include "minimax/rootsys.hpp"

namespace minimax {

/// Type A roots as matrix positions: (a, b) = alpha_a + ... + alpha_{b-1}, 1 <= a < b <= n+1.
using Pair = std::pair<int, int>;
/// Generators as pairs, with both coordinates strictly increasing.
using PairAntichain = std::vector<Pair>;

PairAntichain to_pairs(const RootSystem& rs, const Antichain& gamma);
Antichain from_pairs(const RootSystem& rs, const PairAntichain& pairs);
IntVec a_pair_root(int a, int b);

/// b_j != a_i + 1 for all i, j.
bool has_non_meeting_generators(const PairAntichain& pairs);
/// C(n, 2k) * Catalan(k).
std::int64_t count_non_meeting(int n, int k);

/// C_n roots as pairs (i, j), i < j, i + j <= 2n + 1.
IntVec c_pair_root(int n, int i, int j);
Pair c_root_pair(int n, const IntVec& root);
/// Fold of an A_{2n-1} pair onto a C_n pair.
Pair fold_pair(int n, const Pair& p);

/// The self-conjugate ideal of A_{2n-1} lying over I; `a_sys` must be A_{2n-1}.
Ideal symmetrize(const Ideal& ideal, const RootSystem& a_sys);
/// Image of an A_{2n-1} ideal under the fold; `c_sys` must be C_n.
Ideal desymmetrize(const Ideal& ideal, const RootSystem& c_sys);
bool is_self_conjugate(const Ideal& ideal);

/// Minimax test for a C_n ideal through its symmetrization.
bool sp_is_minimax(const Ideal& ideal, const RootSystem& a_sys);
/// C(2q-1, q-1) C(n-1, 2q-1) + C(2q, q) C(n-1, 2q).
std::int64_t count_sp_minimax(int n, int q);
/// Sequences of k signs with nonnegative partial sums: C(k, [k/2]).
std::int64_t ballot_count(int k);

/// Coefficients of F_mm(t) by the closed forms (types A and C only).
std::vector<std::int64_t> generating_function_Fmm(CartanType type, int rank);
/// Coefficients of F_mm(t) by enumeration: t^k counts minimax ideals with k generators.
std::vector<std::int64_t> fmm_by_enumeration(const RootSystem& rs);

}  // namespace minimax
