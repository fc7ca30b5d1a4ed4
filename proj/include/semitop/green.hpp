#ifndef SEMITOP_GREEN_HPP_
#define SEMITOP_GREEN_HPP_

#include "semitop/analysis.hpp"
#include "semitop/semigroup.hpp"

namespace semitop {

//! Green's relations on an enumerated (portion of a) semigroup, computed as
//! strong components of the right and left Cayley graphs.  For a complete
//! enumeration the partitions are exact; on truncated data the computed
//! classes are refinements of the true ones and the flag says so.
struct GreenData {
  std::vector<std::vector<int32_t>> r_classes;
  std::vector<std::vector<int32_t>> l_classes;
  std::vector<std::vector<int32_t>> h_classes;
  std::vector<std::vector<int32_t>> d_classes;
  std::vector<int32_t>              r_of, l_of, h_of, d_of;  // element -> class
  std::vector<int32_t>              idempotents;
  Completeness                      completeness = Completeness::complete;
};

GreenData green_relations(ConcreteSemigroup const& S,
                          EnumerationResult const& E);

//! Convenience: enumerate to max_len first.
GreenData green_relations(ConcreteSemigroup const& S, size_t max_len);

//! The Schutzenberger group of a complete R-class: the faithful permutation
//! action on the class induced by the left multipliers t in S^1 with
//! tR included in R.  permutations[0] is the identity (from the formal 1).
struct SchutzenbergerGroup {
  std::vector<int32_t> r_class;  // element indices, ascending
  //! permutations of positions 0..|R|-1, deduplicated, identity first
  std::vector<std::vector<int32_t>> permutations;
  //! an enumerated element inducing each permutation; -1 for the formal 1
  std::vector<int32_t> generators_from;
  //! orbit partition of the positions (these are the H-classes)
  std::vector<std::vector<int32_t>> h_class_orbits;
};

SchutzenbergerGroup schutzenberger_group(ConcreteSemigroup const& S,
                                         EnumerationResult const& E,
                                         GreenData const&         G,
                                         size_t                   r_class);

struct RightStabilizer {
  int32_t              base;     // element index
  std::vector<int32_t> members;  // enumerated t with st = s
  bool                 complete;
};

RightStabilizer right_stabilizer(ConcreteSemigroup const& S,
                                 EnumerationResult const& E, int32_t s);

enum class Tristate { yes, no, unknown };

struct LstarResult {
  Tristate verdict;
  //! For "no": a pair (x, y) over S^1 (-1 meaning the formal identity) with
  //! sx = sy not matching tx = ty.
  std::optional<std::pair<int32_t, int32_t>> witness;
};

//! s L* t iff sx = sy exactly when tx = ty, for all x, y in S^1.
LstarResult lstar_related(ConcreteSemigroup const& S,
                          EnumerationResult const& E, int32_t s, int32_t t);

struct RightAbundance {
  Tristate                          verdict;
  std::vector<std::vector<int32_t>> lstar_classes;
  int32_t witness_class = -1;  // for "no": an L*-class with no idempotent
};

//! Every L*-class contains an idempotent?  Certified only for complete
//! enumerations.
RightAbundance is_right_abundant(ConcreteSemigroup const& S,
                                 EnumerationResult const& E);

enum class GroupImageVerdict { trivial, nontrivial, unknown };

struct GroupImageResult {
  GroupImageVerdict verdict;
  std::string       method;  // "empty" | "left-zero" | "abelianization" |
                             // "tietze-empty" | "todd-coxeter"
};

//! Does the finite subsemigroup T (given by canonical elements, closed under
//! multiplication) admit a non-trivial homomorphism into a group?  Fast path:
//! a left zero forces every image to collapse.  General path: the universal
//! group <T | xy = (xy)>, simplified and analyzed.  Throws if T is not closed.
GroupImageResult no_nontrivial_group_image(ConcreteSemigroup const&    S,
                                           std::vector<Element> const& T,
                                           size_t coset_limit);

}  // namespace semitop
#endif  // SEMITOP_GREEN_HPP_
