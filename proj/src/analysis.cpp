#include "semitop/analysis.hpp"

#include <algorithm>

#include "semitop/smith.hpp"

namespace semitop {

GroupAnalysis analyze_group(GroupPresentation const& p, size_t coset_limit) {
  GroupAnalysis a;
  a.abelian_invariants = abelian_invariants(p.generator_count(), p.relators);

  bool infinite_ab = std::any_of(a.abelian_invariants.begin(),
                                 a.abelian_invariants.end(),
                                 [](int64_t d) { return d == 0; });
  if (infinite_ab) {
    a.order_kind = OrderKind::infinite;
    return a;
  }
  auto tc = todd_coxeter(p.generator_count(), p.relators, {}, coset_limit);
  if (tc.completed) {
    a.order_kind  = OrderKind::exact;
    a.order       = tc.index;
    a.coset_table = std::move(tc);
  } else {
    a.order_kind = OrderKind::unknown;
  }
  return a;
}

std::string to_string(GroupAnalysis const& a) {
  std::string out = "abelian invariants: [";
  for (size_t i = 0; i < a.abelian_invariants.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(a.abelian_invariants[i]);
  }
  out += "]; order: ";
  switch (a.order_kind) {
    case OrderKind::exact:
      out += std::to_string(a.order);
      break;
    case OrderKind::infinite:
      out += "infinite (certified)";
      break;
    case OrderKind::unknown:
      out += "unknown (coset limit reached)";
      break;
  }
  return out;
}

}  // namespace semitop
