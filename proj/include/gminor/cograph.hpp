#pragma once

#include <vector>

#include "gminor/graph.hpp"
#include "gminor/recognition.hpp"

namespace gminor {

/// c[r] = largest p such that the graph has a nice K_p induced-minor
/// structure with exactly r edge-bags, or 0 when no such structure exists.
struct CrTable {
  int n = 0;
  std::vector<int> c;  // size n + 1

  int max_value() const;
  friend bool operator==(const CrTable&, const CrTable&) = default;
};

/// How cr_join treats a side that has no structure with the required number
/// of edge-bags. `Literal` evaluates the closed formula as written, which
/// then counts a nonexistent structure as p = 0 and overestimates c_r (for
/// K_{1,3}, c_2 comes out as 1). `Guarded` skips such terms.
enum class JoinFormula { Guarded, Literal };

CrTable cr_leaf();
CrTable cr_union(const CrTable& a, const CrTable& b);
CrTable cr_join(const CrTable& a, const CrTable& b, JoinFormula formula = JoinFormula::Guarded);

/// Bottom-up fold; multi-child nodes are folded left to right.
CrTable cograph_table(const Cotree& t, JoinFormula formula = JoinFormula::Guarded);

struct CographResult {
  int h = 0;
  CrTable table;
  Cotree cotree;
};

/// Hadwiger number of a cograph. Throws DomainError naming an induced P4
/// when g is not a cograph.
CographResult hadwiger_cograph(const Graph& g);

}  // namespace gminor
