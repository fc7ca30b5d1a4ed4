#ifndef SEMITOP_SEMIGROUP_HPP_
#define SEMITOP_SEMIGROUP_HPP_

#include <memory>
#include <unordered_map>

#include "semitop/backend.hpp"
#include "semitop/presentation.hpp"
#include "semitop/rewriting.hpp"

namespace semitop {

//! A backend paired (optionally) with a presentation whose alphabet indexes
//! the backend generators.  Immutable after construction.
class ConcreteSemigroup {
 public:
  explicit ConcreteSemigroup(std::shared_ptr<SemigroupBackend const> backend,
                             std::optional<Presentation> presentation = {});

  SemigroupBackend const& backend() const noexcept {
    return *backend_;
  }
  std::shared_ptr<SemigroupBackend const> backend_ptr() const noexcept {
    return backend_;
  }
  std::optional<Presentation> const& presentation() const noexcept {
    return presentation_;
  }
  //! Alphabet: the presentation's if present, else built from backend names.
  Alphabet const& alphabet() const noexcept {
    return alphabet_;
  }
  PresentationKind kind() const noexcept;
  size_t generator_count() const noexcept {
    return backend_->generator_count();
  }

  //! Canonical element of [w]_S; nullopt when a backend bound is exceeded.
  //! Throws on the empty word in semigroup kind or out-of-range letters.
  std::optional<Element> evaluate(Word const& w) const;
  std::optional<Element> multiply(Element const& a, Element const& b) const;

  //! Check that every presentation relation holds in the backend by
  //! evaluation; returns the first failing relation index, if any.
  std::optional<size_t> check_relations() const;

 private:
  std::shared_ptr<SemigroupBackend const> backend_;
  std::optional<Presentation>             presentation_;
  Alphabet                                alphabet_;
};

//! Build a ConcreteSemigroup from a presentation alone via bounded
//! Knuth-Bendix.
ConcreteSemigroup semigroup_from_presentation(Presentation const& p,
                                              size_t max_rules = 512,
                                              size_t max_len   = 64);

enum class Completeness {
  complete,          // closure reached a fixpoint; the whole semigroup
  truncated,         // length bound hit with elements still appearing
  unknown_equality   // a backend product exceeded its bound
};

//! Right/left Cayley entries: a known element index, or one of these.
inline constexpr int32_t CAYLEY_OUTSIDE = -2;  // product exists, not enumerated
inline constexpr int32_t CAYLEY_UNKNOWN = -3;  // backend bound exceeded

//! Breadth-first closure of the generators under right multiplication with
//! canonical-form deduplication.  Elements are indexed in shortlex order of
//! their (minimal) witness words; the right and left Cayley graphs restricted
//! to the enumerated set are recorded.
struct EnumerationResult {
  std::vector<Element> elements;
  std::vector<Word>    witnesses;   // shortest representing word per element
  //! Discovery provenance: element i (at level > first) was first seen as
  //! elements[parent_element[i]] * generator(parent_letter[i]).
  std::vector<int32_t> parent_element;
  std::vector<int32_t> parent_letter;
  std::vector<std::vector<int32_t>> right_cayley;  // [elem][gen]
  std::vector<std::vector<int32_t>> left_cayley;   // [elem][gen]
  Completeness completeness = Completeness::complete;
  size_t       max_len      = 0;
  bool         monoid       = false;  // identity enumerated at length 0
  //! level_end[l] = number of elements with witness length <= l.
  std::vector<size_t> level_end;

  std::unordered_map<Element, int32_t, ElementHash> index;

  size_t size() const noexcept {
    return elements.size();
  }
  int32_t index_of(Element const& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
  }
  //! |S_n| for n <= max_len.
  size_t count_up_to(size_t n) const {
    return n >= level_end.size() ? elements.size() : level_end[n];
  }
};

EnumerationResult enumerate(ConcreteSemigroup const& S, size_t max_len);

//! Indices of enumerated idempotents (exact when enumeration is complete;
//! otherwise exact on the enumerated portion).
std::vector<int32_t> idempotents(ConcreteSemigroup const& S,
                                 EnumerationResult const& E);

}  // namespace semitop
#endif  // SEMITOP_SEMIGROUP_HPP_
