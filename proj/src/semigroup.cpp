#include "semitop/semigroup.hpp"

#include <algorithm>

namespace semitop {

ConcreteSemigroup::ConcreteSemigroup(
    std::shared_ptr<SemigroupBackend const> backend,
    std::optional<Presentation>             presentation)
    : backend_(std::move(backend)), presentation_(std::move(presentation)) {
  if (!backend_) {
    throw std::invalid_argument("null backend");
  }
  if (presentation_) {
    if (presentation_->alphabet().size() != backend_->generator_count()) {
      throw std::invalid_argument(
          "presentation alphabet size does not match generator count");
    }
    alphabet_ = presentation_->alphabet();
  } else {
    alphabet_ = Alphabet(backend_->generator_names());
  }
}

PresentationKind ConcreteSemigroup::kind() const noexcept {
  if (presentation_) {
    return presentation_->kind();
  }
  if (auto const* rw = dynamic_cast<RewritingBackend const*>(backend_.get())) {
    return rw->kind();
  }
  return PresentationKind::semigroup;
}

std::optional<Element> ConcreteSemigroup::evaluate(Word const& w) const {
  if (w.empty()) {
    if (kind() != PresentationKind::monoid) {
      throw std::invalid_argument("empty word in semigroup kind");
    }
    auto id = backend_->identity_element();
    if (!id) {
      throw std::invalid_argument("backend has no identity element");
    }
    return id;
  }
  auto const n = static_cast<letter_type>(backend_->generator_count());
  for (letter_type x : w) {
    if (x < 0 || x >= n) {
      throw std::invalid_argument("letter out of range");
    }
  }
  std::optional<Element> acc = backend_->generator(static_cast<size_t>(w[0]));
  for (size_t i = 1; i < w.size() && acc; ++i) {
    acc = backend_->product(*acc,
                            backend_->generator(static_cast<size_t>(w[i])));
  }
  return acc;
}

std::optional<Element> ConcreteSemigroup::multiply(Element const& a,
                                                   Element const& b) const {
  return backend_->product(a, b);
}

std::optional<size_t> ConcreteSemigroup::check_relations() const {
  if (!presentation_) {
    return std::nullopt;
  }
  for (size_t i = 0; i < presentation_->relations().size(); ++i) {
    auto const& rel = presentation_->relations()[i];
    auto        u   = evaluate(rel.lhs);
    auto        v   = evaluate(rel.rhs);
    if (!u || !v || *u != *v) {
      return i;
    }
  }
  return std::nullopt;
}

ConcreteSemigroup semigroup_from_presentation(Presentation const& p,
                                              size_t max_rules,
                                              size_t max_len) {
  auto kb = bounded_knuth_bendix(p, max_rules, max_len);
  return ConcreteSemigroup(kb.backend, p);
}

std::vector<int32_t> idempotents(ConcreteSemigroup const& S,
                                 EnumerationResult const& E) {
  std::vector<int32_t> out;
  for (size_t i = 0; i < E.elements.size(); ++i) {
    auto sq = S.multiply(E.elements[i], E.elements[i]);
    if (sq && *sq == E.elements[i]) {
      out.push_back(static_cast<int32_t>(i));
    }
  }
  return out;
}

EnumerationResult enumerate(ConcreteSemigroup const& S, size_t max_len) {
  if (max_len < 1) {
    throw std::invalid_argument("max_len must be >= 1");
  }
  auto const&       backend = S.backend();
  size_t const      ngens   = backend.generator_count();
  EnumerationResult res;
  res.max_len = max_len;
  res.monoid  = S.kind() == PresentationKind::monoid;

  bool product_bound_hit = false;

  auto intern = [&res](Element e, Word w, int32_t parent, int32_t letter)
      -> std::pair<int32_t, bool> {
    auto it = res.index.find(e);
    if (it != res.index.end()) {
      return {it->second, false};
    }
    auto ix = static_cast<int32_t>(res.elements.size());
    res.index.emplace(e, ix);
    res.elements.push_back(std::move(e));
    res.witnesses.push_back(std::move(w));
    res.parent_element.push_back(parent);
    res.parent_letter.push_back(letter);
    return {ix, true};
  };

  if (res.monoid) {
    auto id = backend.identity_element();
    if (!id) {
      throw std::invalid_argument("monoid kind but backend has no identity");
    }
    intern(*id, {}, -1, -1);
  }
  res.level_end.push_back(res.elements.size());  // |S_0|

  // level 1: the generators in alphabet order
  for (size_t x = 0; x < ngens; ++x) {
    intern(backend.generator(x), Word{static_cast<letter_type>(x)}, -1,
           static_cast<int32_t>(x));
  }
  res.level_end.push_back(res.elements.size());  // |S_1|

  // Froidure-Pin-style closure: extend each element of the previous level by
  // every generator, recording the right Cayley row as we go.
  size_t level       = 1;
  size_t level_begin = res.monoid ? 1 : 0;
  size_t level_end   = res.elements.size();
  res.right_cayley.resize(res.elements.size(),
                          std::vector<int32_t>(ngens, CAYLEY_UNKNOWN));

  // the identity's row is the generator list itself
  if (res.monoid) {
    for (size_t x = 0; x < ngens; ++x) {
      res.right_cayley[0][x] = res.index_of(backend.generator(x));
    }
  }

  bool grew = true;
  while (grew && level < max_len) {
    grew = false;
    ++level;
    for (size_t s = level_begin; s < level_end; ++s) {
      for (size_t x = 0; x < ngens; ++x) {
        auto prod = backend.product(res.elements[s], backend.generator(x));
        if (!prod) {
          res.right_cayley[s][x] = CAYLEY_UNKNOWN;
          product_bound_hit      = true;
          continue;
        }
        auto [ix, fresh] = intern(std::move(*prod),
                                  [&] {
                                    Word w = res.witnesses[s];
                                    w.push_back(static_cast<letter_type>(x));
                                    return w;
                                  }(),
                                  static_cast<int32_t>(s),
                                  static_cast<int32_t>(x));
        res.right_cayley[s][x] = ix;
        if (fresh) {
          grew = true;
          res.right_cayley.emplace_back(ngens, CAYLEY_UNKNOWN);
        }
      }
    }
    level_begin = level_end;
    level_end   = res.elements.size();
    res.level_end.push_back(level_end);
  }

  // Fill the Cayley rows of the last level (products are looked up but not
  // added, which also detects whether the closure is in fact complete).
  bool closed = true;
  for (size_t s = level_begin; s < level_end; ++s) {
    for (size_t x = 0; x < ngens; ++x) {
      auto prod = backend.product(res.elements[s], backend.generator(x));
      if (!prod) {
        res.right_cayley[s][x] = CAYLEY_UNKNOWN;
        product_bound_hit      = true;
        closed                 = false;
        continue;
      }
      auto ix                = res.index_of(*prod);
      res.right_cayley[s][x] = ix < 0 ? CAYLEY_OUTSIDE : ix;
      if (ix < 0) {
        closed = false;
      }
    }
  }

  // left Cayley graph: x * s for each generator x
  res.left_cayley.resize(res.elements.size(),
                         std::vector<int32_t>(ngens, CAYLEY_UNKNOWN));
  for (size_t s = 0; s < res.elements.size(); ++s) {
    for (size_t x = 0; x < ngens; ++x) {
      auto prod = backend.product(backend.generator(x), res.elements[s]);
      if (!prod) {
        product_bound_hit = true;
        continue;
      }
      auto ix               = res.index_of(*prod);
      res.left_cayley[s][x] = ix < 0 ? CAYLEY_OUTSIDE : ix;
    }
  }

  auto const* rw = dynamic_cast<RewritingBackend const*>(&backend);
  bool unknown_eq =
      product_bound_hit
      || (rw && rw->confluence_status() == ConfluenceStatus::bounded_incomplete);
  if (unknown_eq) {
    res.completeness = Completeness::unknown_equality;
  } else if (closed) {
    res.completeness = Completeness::complete;
  } else {
    res.completeness = Completeness::truncated;
  }
  return res;
}

}  // namespace semitop
