#ifndef SEMITOP_ACTION_HPP_
#define SEMITOP_ACTION_HPP_

#include "semitop/green.hpp"
#include "semitop/semigroup.hpp"

namespace semitop {

//! Target marker on truncated vertex sets: the product leaves the enumerated
//! portion, so the true graph may or may not have this edge.
inline constexpr int32_t UNKNOWN_TARGET = -2;

//! A finite set with one partial self-map per alphabet symbol.
struct PartialAction {
  enum class Source { user, r_class, right_regular, quotient };

  int32_t vertex_count = 0;
  //! maps[symbol][vertex]: a vertex, UNDEFINED_POINT, or UNKNOWN_TARGET.
  std::vector<std::vector<int32_t>> maps;
  Source                            source = Source::user;
  //! When built from an R-class: the enumerated element index per vertex.
  std::vector<int32_t> vertex_elements;
  bool                 vertex_set_complete = true;

  size_t alphabet_size() const noexcept {
    return maps.size();
  }
  bool fully_known() const;
};

//! Follow a word from a vertex; UNDEFINED_POINT and UNKNOWN_TARGET are
//! sticky.
int32_t trace_vertex(PartialAction const& A, int32_t v, Word const& w);

struct ActionViolation {
  enum class Kind { relation, transitivity } kind;
  int32_t     relation = -1;  // relation index for Kind::relation
  int32_t     vertex   = -1;  // offending vertex / unreachable vertex
  int32_t     from     = -1;  // a vertex that cannot reach `vertex`
  std::string message;
};

//! Check that the relations act compatibly (same domain, same values on both
//! sides of every relation) and that the action graph is strongly connected.
//! Returns the first violation found, or nullopt when the action is valid.
std::optional<ActionViolation> validate_action(Presentation const& P,
                                               PartialAction const& A);

//! Strong connectivity of the action graph (equivalent to transitivity).
//! If not, reports an unreachable pair (from, to).
bool is_strongly_connected(PartialAction const& A,
                           std::pair<int32_t, int32_t>* witness = nullptr);

//! The action of S on a complete R-class by right multiplication, undefined
//! where the product leaves the class.
PartialAction action_on_r_class(EnumerationResult const& E,
                                GreenData const& G, size_t r_class);

//! The right-regular action of a completely enumerated semigroup on itself
//! (total maps; the right Cayley graph).
PartialAction right_regular_action(EnumerationResult const& E);

struct ActionAutomorphism {
  std::vector<int32_t> bijection;  // permutation of the vertex set
};

//! Is g an automorphism: bijective with (gv)x = g(vx), where equality means
//! both sides defined and equal or both undefined.
bool is_action_automorphism(PartialAction const& A,
                            std::vector<int32_t> const& g);

//! All automorphisms of a transitive, fully known action.  An automorphism
//! is determined by the image of vertex 0, so each candidate image is
//! extended along the action graph; results are ordered by that image.
std::vector<ActionAutomorphism> automorphism_group(PartialAction const& A);

struct QuotientAction {
  std::vector<int32_t> orbit_map;  // vertex -> orbit index
  PartialAction        action;     // induced action on orbits
};

//! Quotient by a group of automorphisms (validated; must contain the
//! identity and be closed under composition).  Orbit indices are
//! canonicalized by minimum vertex.
QuotientAction quotient_action(PartialAction const& A,
                               std::vector<ActionAutomorphism> const& G);

//! Parse the action file format:
//!   vertices: m
//!   <symbol>: [j1,...,jm]    (1-based, "-" for undefined)
//! Returns the action together with the symbol names in file order.
std::pair<PartialAction, Alphabet> parse_action_file(std::string const& text);

//! Reorder the per-symbol maps of a parsed action to match an alphabet
//! (names must coincide as sets).
PartialAction rebind_action(PartialAction action, Alphabet const& from,
                            Alphabet const& to);

std::string to_text(PartialAction const& A, Alphabet const& alphabet);

//! Cycle notation for a permutation, e.g. "(1 2 3)(4 5)" (1-based); "()" for
//! the identity.
std::string cycle_notation(std::vector<int32_t> const& perm);

}  // namespace semitop
#endif  // SEMITOP_ACTION_HPP_
