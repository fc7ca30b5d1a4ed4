#ifndef SEMITOP_ANALYSIS_HPP_
#define SEMITOP_ANALYSIS_HPP_

#include <optional>

#include "semitop/group_presentation.hpp"
#include "semitop/todd_coxeter.hpp"

namespace semitop {

enum class OrderKind { exact, infinite, unknown };

//! Verification data for a finitely presented group: abelian invariants via
//! Smith normal form, and the order via bounded Todd-Coxeter over the
//! trivial subgroup when the abelianization does not already certify the
//! group infinite.
struct GroupAnalysis {
  std::vector<int64_t>             abelian_invariants;
  OrderKind                        order_kind = OrderKind::unknown;
  uint64_t                         order      = 0;  // valid when exact
  std::optional<ToddCoxeterResult> coset_table;

  bool is_trivial_certified() const noexcept {
    return order_kind == OrderKind::exact && order == 1;
  }
};

GroupAnalysis analyze_group(GroupPresentation const& p, size_t coset_limit);

std::string to_string(GroupAnalysis const& a);

}  // namespace semitop
#endif  // SEMITOP_ANALYSIS_HPP_
