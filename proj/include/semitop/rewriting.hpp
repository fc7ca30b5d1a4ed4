#ifndef SEMITOP_REWRITING_HPP_
#define SEMITOP_REWRITING_HPP_

#include <memory>

#include "semitop/backend.hpp"
#include "semitop/presentation.hpp"

namespace semitop {

enum class ConfluenceStatus {
  verified,   // all critical pairs of the rule set resolve
  assumed,    // declared confluent by the caller
  bounded_incomplete  // bounded completion gave up; equality is "up to bound"
};

struct RewriteRule {
  Word lhs;
  Word rhs;
  //! Index of the originating presentation relation, or -1 for rules derived
  //! during completion.  swapped records that lhs is the relation's rhs.
  int32_t relation = -1;
  bool    swapped  = false;
};

//! Shortlex rewriting system used as a word-problem engine.  Elements are
//! shortlex-minimal normal forms; all rules satisfy lhs > rhs in shortlex,
//! so rewriting terminates and never lengthens a word.
class RewritingBackend final : public SemigroupBackend {
 public:
  RewritingBackend(Alphabet alphabet, std::vector<RewriteRule> rules,
                   PresentationKind kind, size_t length_bound,
                   ConfluenceStatus status);

  Word rewrite(Word w) const;

  struct TraceStep {
    size_t pos;
    size_t rule;
  };
  struct Trace {
    Word                   normal_form;
    std::vector<TraceStep> steps;
  };
  //! Normalize recording every single-step application (position, rule).
  Trace rewrite_with_trace(Word w) const;

  std::vector<RewriteRule> const& rules() const noexcept {
    return rules_;
  }
  ConfluenceStatus confluence_status() const noexcept {
    return status_;
  }
  //! True when every rule carries original-relation provenance, so rewriting
  //! traces are derivations by single relation applications.
  bool rules_trace_relations() const;
  size_t length_bound() const noexcept {
    return length_bound_;
  }
  Alphabet const& alphabet() const noexcept {
    return alphabet_;
  }
  PresentationKind kind() const noexcept {
    return kind_;
  }

  size_t generator_count() const override {
    return alphabet_.size();
  }
  Element generator(size_t i) const override;
  std::optional<Element> product(Element const& a,
                                 Element const& b) const override;
  std::optional<Element> identity_element() const override;
  std::vector<std::string> generator_names() const override {
    return alphabet_.symbols();
  }
  std::string format(Element const& e) const override;
  std::string backend_name() const override {
    return "rewriting";
  }

 private:
  Alphabet                 alphabet_;
  std::vector<RewriteRule> rules_;
  PresentationKind         kind_;
  size_t                   length_bound_;
  ConfluenceStatus         status_;
};

struct KnuthBendixResult {
  std::shared_ptr<RewritingBackend> backend;
  bool                              complete;
};

//! Bounded Knuth-Bendix completion under shortlex.  Succeeds with
//! confluence_status verified, or returns the partial rule set flagged
//! bounded_incomplete once max_rules is exceeded or a rule side would
//! exceed max_len.
KnuthBendixResult bounded_knuth_bendix(Presentation const& p,
                                       size_t max_rules    = 512,
                                       size_t max_len      = 64,
                                       size_t length_bound = 4096);

}  // namespace semitop
#endif  // SEMITOP_REWRITING_HPP_
