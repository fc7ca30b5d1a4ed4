#ifndef SEMITOP_PIPELINE_HPP_
#define SEMITOP_PIPELINE_HPP_

#include "semitop/pi1.hpp"

namespace semitop {

//! A refused hypothesis (as opposed to invalid input); the CLI maps this to
//! exit code 1.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Present a completely enumerated semigroup by its multiplication table:
//! one generator x_i per element, relations x_i x_j = x_(ij).
struct TablePresentation {
  ConcreteSemigroup semigroup;
  EnumerationResult enumeration;  // same element order as the input
  GreenData         green;
};

TablePresentation
multiplication_table_presentation(ConcreteSemigroup const& S,
                                  EnumerationResult const& E);

//! Verdict for the stabilizer condition on an action.  holds means some
//! vertex's right stabilizer admits no non-trivial homomorphism into a
//! group; certified is false when only the enumerated portion was checked
//! ("holds up to the bound").
struct StabCheckResult {
  enum class Verdict { holds, fails_at_bound, unknown } verdict;
  bool        certified      = false;
  int32_t     witness_vertex = -1;
  std::string method;  // certification method at the witness vertex
  std::vector<size_t> stabilizer_sizes;  // enumerated |stab v| per vertex
};

StabCheckResult check_stabilizer_condition(ConcreteSemigroup const& S,
                                           EnumerationResult const& E,
                                           PartialAction const&     A,
                                           size_t coset_limit);

struct SchutzPresentationOptions {
  bool   assert_stabilizer = false;
  size_t coset_limit       = 100000;
  size_t tietze_steps      = 100000;
};

struct SchutzPresentationResult {
  GroupPresentation presentation;  // Tietze-simplified
  GroupAnalysis     analysis;
  size_t            raw_generator_count;  // before simplification
  std::vector<ActionAutomorphism> automorphisms;  // = G(R) when R is regular
  bool              stabilizer_asserted;  // false: certified
  int32_t           stabilizer_witness = -1;
  TwoComplex        quotient_complex;
};

//! The end-to-end pipeline: action on the R-class, automorphism group,
//! quotient action, action complex of the quotient, pi1, simplification,
//! analysis.  Refuses unless the stabilizer condition is certified or
//! asserted.  Semigroups without a presentation are presented by their
//! multiplication table first.
SchutzPresentationResult
schutzenberger_presentation(ConcreteSemigroup const& S,
                            EnumerationResult const& E, GreenData const& G,
                            size_t r_class, SchutzPresentationOptions opts);

struct ReidemeisterOptions {
  size_t coset_limit  = 100000;
  size_t tietze_steps = 100000;
  size_t max_len      = 24;  // enumeration depth for realizing the group
};

struct ReidemeisterResult {
  GroupPresentation presentation;
  GroupAnalysis     analysis;
  size_t            group_order;
  size_t            subgroup_order;  // independent: closure in the regular action
  TwoComplex        quotient_complex;
};

//! Present a finite-index subgroup H of a finite group G (given by a monoid
//! presentation) via the action of H on G by left translations.  Refuses if
//! the presented monoid cannot be certified to be a finite group within the
//! bounds.
ReidemeisterResult
reidemeister_subgroup_presentation(Presentation const&      g_pres,
                                   std::vector<Word> const& subgroup_gens,
                                   ReidemeisterOptions      opts);

//! One rewriting step u -> u' replacing one relation side by the other at a
//! position.
struct DerivationStep {
  size_t pos;
  size_t relation;
  bool   forward;  // true: lhs -> rhs
};

//! A product-of-conjugates certificate that the u- and v-paths from p are
//! homotopic: one face per derivation step, with its conjugating prefix.
struct HomotopyCertificate {
  std::vector<int32_t> faces;        // face indices into K
  std::vector<Word>    conjugators;  // prefix word x per step
  std::vector<Word>    words;        // w_0 = u, ..., w_m = v
};

//! Certificate from an explicit derivation; nullopt when some required face
//! is missing from K (truncated complexes).  Throws if the derivation is
//! inconsistent with u, v.
std::optional<HomotopyCertificate>
homotopy_witness(TwoComplex const& K, Presentation const& P, int32_t p,
                 Word const& u, Word const& v,
                 std::vector<DerivationStep> const& derivation);

//! Certificate derived from the rewriting backend's traces (u and v must
//! share a normal form and every rule used must carry relation provenance);
//! nullopt otherwise.
std::optional<HomotopyCertificate>
homotopy_witness(TwoComplex const& K, Presentation const& P,
                 RewritingBackend const& backend, int32_t p, Word const& u,
                 Word const& v);

//! The image of the loop (u-path)(v-path)^-1 at p in the pi1 generators.
//! Both paths must be defined in K.
GroupWord loop_word_in_pi1(TwoComplex const& K, Pi1Chart const& chart,
                           int32_t p, Word const& u, Word const& v);

}  // namespace semitop
#endif  // SEMITOP_PIPELINE_HPP_
