#ifndef SEMITOP_GROWTH_HPP_
#define SEMITOP_GROWTH_HPP_

#include "semitop/complex.hpp"
#include "semitop/pipeline.hpp"

namespace semitop {

enum class GrowthSubject { semigroup, graph_undirected, graph_directed };

//! A ball-size sequence g(0..N) with per-entry exactness.  Semigroup growth
//! counts elements of word length at most n (the identity has length 0 in
//! monoid kind, so monoid series start at 1 and semigroup series at 0).
struct GrowthSeries {
  std::vector<int64_t> values;
  std::vector<bool>    exact;
  GrowthSubject        subject = GrowthSubject::semigroup;

  bool all_exact() const {
    for (bool e : exact) {
      if (!e) {
        return false;
      }
    }
    return true;
  }
  //! Largest n with entries 0..n exact, or -1.
  int64_t exact_prefix() const {
    int64_t n = -1;
    for (size_t i = 0; i < exact.size() && exact[i]; ++i) {
      n = static_cast<int64_t>(i);
    }
    return n;
  }
};

GrowthSeries semigroup_growth(EnumerationResult const& E, size_t N);

//! A directed graph prepared for ball counting.  Boundary flags mark
//! vertices whose out- or in-neighbourhoods may be incomplete because the
//! vertex set was truncated; balls are exact while the expanded frontier
//! avoids them.
struct GrowthGraph {
  std::vector<std::vector<int32_t>> out;  // targets per vertex
  std::vector<bool>                 boundary_out;
  std::vector<bool>                 boundary_in;

  size_t size() const noexcept {
    return out.size();
  }
};

GrowthGraph growth_graph(TwoComplex const& K);
//! From an action; UNKNOWN_TARGET entries mark the source vertex as
//! out-boundary.  In-boundary flags start false (complete vertex sets) and
//! are the caller's burden on truncated ones.
GrowthGraph growth_graph(PartialAction const& A);

GrowthSeries graph_growth(GrowthGraph const& g, int32_t v, size_t N,
                          bool directed);

//! 1 + the longest of the shortest directed return paths over orbit
//! representatives of the edges under G (all edges when G is empty).
//! Requires strong connectivity.
size_t reverse_constant(TwoComplex const& K,
                        std::vector<ActionAutomorphism> const& G);

struct GrowthComparison {
  size_t                   k;
  size_t                   verified_range;
  std::vector<std::string> failures;

  bool ok() const noexcept {
    return failures.empty();
  }
};

//! Checks, with k from reverse_constant: directed balls never exceed
//! undirected ones; undirected balls of radius n embed in directed balls of
//! radius k n; and directed balls at v are bounded by the semigroup growth
//! plus one (the S^1 basepoint convention: vertex v itself is v.1).
GrowthComparison verify_growth_equivalence(
    TwoComplex const& K, int32_t v, std::vector<ActionAutomorphism> const& G,
    size_t N, GrowthSeries const* semigroup = nullptr);

struct DegreeEstimate {
  double degree;
  double residual;  // RMS of the log-log fit residuals
  size_t window_lo;
  size_t window_hi;
  //! Heuristic: the fitted slope grows along the window, as for exponential
  //! series.
  bool superpolynomial;
};

//! Log-log least-squares slope over values[lo..hi]; heuristic only, never
//! used to assert a theorem.  Requires at least 4 exact positive entries.
DegreeEstimate estimate_degree(GrowthSeries const& g, size_t lo, size_t hi);

struct GrowthHarnessReport {
  GrowthSeries                  g_s;
  std::vector<int32_t>          idempotent_reps;  // element index per R-class
  std::vector<GrowthSeries>     g_graphs;          // undirected, at each rep
  std::vector<GrowthSeries>     g_graphs_directed;
  std::vector<int64_t>          rhs;              // sum over the reps
  size_t                        verified_range;
  bool                          bound_holds;
  std::vector<size_t>           violations;
  std::optional<DegreeEstimate> lhs_degree;  // advisory
  std::optional<DegreeEstimate> rhs_degree;  // advisory
};

//! The growth-theorem harness: pick idempotent representatives of the
//! R-classes, build their Schutzenberger graphs and check
//! g_S(n) <= sum_i g_(Gamma_i, e_i)(n) over the exactly-known range.
//! Regularity of every enumerated element is verified first (refused with a
//! witness otherwise).  Works on complete enumerations of any backend and on
//! truncated enumerations of Rees backends, where row structure identifies
//! the R-classes and in-neighbourhoods are certified elementwise.
GrowthHarnessReport regular_growth_theorem_harness(ConcreteSemigroup const& S,
                                                   EnumerationResult const& E,
                                                   size_t                   N);

}  // namespace semitop
#endif  // SEMITOP_GROWTH_HPP_
