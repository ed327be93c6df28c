#pragma once

#include <string>
#include <vector>

#include "minimax/rootsys.hpp"

namespace minimax {

struct Check {
  std::string what;
  std::string expected;
  std::string computed;
  std::string method;
  bool ok = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name);

/// One row of the non-Abelian minimax table.
struct MinimaxRow {
  std::string generators;  // "[0,2,2,1], [2,2,1,0]"
  int size = 0;
  int square_size = 0;
  std::string rootlet;     // "-2δ+[2,4,2,1]"
  std::string y;           // "(1,1,-1,-1)"
};

/// Non-Abelian minimax ideals in enumeration order.
std::vector<MinimaxRow> nonabelian_minimax_rows(const RootSystem& rs);
/// Reference table for F4 with rows ordered by generator text.
const std::vector<MinimaxRow>& f4_reference_rows();
std::string format_point(const IntVec& y, int rank);

}  // namespace minimax
