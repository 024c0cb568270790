#include "gminor/cograph.hpp"

#include <algorithm>

#include "gminor/errors.hpp"

namespace gminor {

int CrTable::max_value() const { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()); }

CrTable cr_leaf() { return {1, {1, 0}}; }

CrTable cr_union(const CrTable& a, const CrTable& b) {
  CrTable t{a.n + b.n, std::vector<int>(a.n + b.n + 1, 0)};
  for (int r = 0; r <= t.n; ++r) {
    int x = r <= a.n ? a.c[r] : 0;
    int y = r <= b.n ? b.c[r] : 0;
    t.c[r] = std::max(x, y);
  }
  return t;
}

CrTable cr_join(const CrTable& a, const CrTable& b, JoinFormula formula) {
  const CrTable* side[2] = {&a, &b};
  CrTable t{a.n + b.n, std::vector<int>(a.n + b.n + 1, 0)};
  for (int r = 0; r <= t.n; ++r) {
    int best = 0;
    for (int s = 0; s <= std::min({a.n, b.n, r}); ++s)
      for (int i = 0; i < 2; ++i) {
        const CrTable& gi = *side[i];
        const CrTable& go = *side[1 - i];
        if (gi.n - 2 * r + s < 0) continue;
        const int inner = r - s <= gi.n ? gi.c[r - s] : 0;
        if (formula == JoinFormula::Guarded && r - s > 0 && inner == 0) continue;
        int v = s + std::min(inner, gi.n - r) + std::min(go.n - s, go.c[0]);
        best = std::max(best, v);
      }
    t.c[r] = best;
  }
  return t;
}

CrTable cograph_table(const Cotree& t, JoinFormula formula) {
  if (t.root < 0) return {0, {0}};
  auto rec = [&](auto&& self, int x) -> CrTable {
    const auto& nd = t.nodes[x];
    if (nd.kind == Cotree::Kind::Leaf) return cr_leaf();
    CrTable acc = self(self, nd.children[0]);
    for (std::size_t k = 1; k < nd.children.size(); ++k) {
      CrTable next = self(self, nd.children[k]);
      acc = nd.kind == Cotree::Kind::Join ? cr_join(acc, next, formula) : cr_union(acc, next);
    }
    return acc;
  };
  return rec(rec, t.root);
}

CographResult hadwiger_cograph(const Graph& g) {
  auto rec = recognize_cograph(g);
  if (auto* p4 = std::get_if<InducedP4>(&rec))
    throw DomainError("not a cograph: induced P4 " + std::to_string((*p4)[0]) + "-" + std::to_string((*p4)[1]) +
                      "-" + std::to_string((*p4)[2]) + "-" + std::to_string((*p4)[3]));
  CographResult out;
  out.cotree = std::get<Cotree>(std::move(rec));
  out.table = cograph_table(out.cotree);
  out.h = out.table.max_value();
  return out;
}

}  // namespace gminor
