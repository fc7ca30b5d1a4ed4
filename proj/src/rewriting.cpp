#include "semitop/rewriting.hpp"

#include <algorithm>
#include <deque>

namespace semitop {

RewritingBackend::RewritingBackend(Alphabet                 alphabet,
                                   std::vector<RewriteRule> rules,
                                   PresentationKind         kind,
                                   size_t                   length_bound,
                                   ConfluenceStatus         status)
    : alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      kind_(kind),
      length_bound_(length_bound),
      status_(status) {
  for (auto const& r : rules_) {
    if (!shortlex_less(r.rhs, r.lhs)) {
      throw std::invalid_argument(
          "rewrite rule is not shortlex-decreasing");
    }
    if (r.lhs.empty()) {
      throw std::invalid_argument("rewrite rule with empty lhs");
    }
  }
}

bool RewritingBackend::rules_trace_relations() const {
  return std::all_of(rules_.begin(), rules_.end(),
                     [](RewriteRule const& r) { return r.relation >= 0; });
}

namespace {

// First match of any rule at or after position from; scans positions left to
// right and rules in order, so rewriting is deterministic.
std::optional<std::pair<size_t, size_t>>
find_redex(Word const& w, std::vector<RewriteRule> const& rules, size_t from) {
  for (size_t pos = from; pos < w.size(); ++pos) {
    for (size_t ri = 0; ri < rules.size(); ++ri) {
      auto const& lhs = rules[ri].lhs;
      if (pos + lhs.size() <= w.size()
          && std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
        return std::make_pair(pos, ri);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RewritingBackend::Trace RewritingBackend::rewrite_with_trace(Word w) const {
  Trace  tr;
  size_t max_lhs = 1;
  for (auto const& r : rules_) {
    max_lhs = std::max(max_lhs, r.lhs.size());
  }
  size_t from = 0;
  while (true) {
    auto hit = find_redex(w, rules_, from);
    if (!hit && from > 0) {
      hit = find_redex(w, rules_, 0);  // a redex may span the rescan point
    }
    if (!hit) {
      break;
    }
    auto [pos, ri] = *hit;
    tr.steps.push_back({pos, ri});
    auto const& rule = rules_[ri];
    Word        next;
    next.reserve(w.size() - rule.lhs.size() + rule.rhs.size());
    next.insert(next.end(), w.begin(), w.begin() + static_cast<long>(pos));
    next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
    next.insert(next.end(), w.begin() + static_cast<long>(pos + rule.lhs.size()),
                w.end());
    w    = std::move(next);
    from = pos >= max_lhs ? pos - max_lhs + 1 : 0;
  }
  tr.normal_form = std::move(w);
  return tr;
}

Word RewritingBackend::rewrite(Word w) const {
  return rewrite_with_trace(std::move(w)).normal_form;
}

Element RewritingBackend::generator(size_t i) const {
  return rewrite(Word{static_cast<letter_type>(i)});
}

std::optional<Element> RewritingBackend::product(Element const& a,
                                                 Element const& b) const {
  if (a.size() + b.size() > length_bound_) {
    return std::nullopt;  // bound exceeded, never a wrong answer
  }
  Word w(a);
  w.insert(w.end(), b.begin(), b.end());
  return rewrite(std::move(w));
}

std::optional<Element> RewritingBackend::identity_element() const {
  if (kind_ != PresentationKind::monoid) {
    return std::nullopt;
  }
  return Element{};
}

std::string RewritingBackend::format(Element const& e) const {
  return word_to_string(alphabet_, e);
}

// ---------------------------------------------------------------------
// Bounded Knuth-Bendix
// ---------------------------------------------------------------------

namespace {

Word rewrite_all(Word w, std::vector<RewriteRule> const& rules) {
  while (true) {
    auto hit = find_redex(w, rules, 0);
    if (!hit) {
      return w;
    }
    auto [pos, ri]   = *hit;
    auto const& rule = rules[ri];
    Word        next;
    next.insert(next.end(), w.begin(), w.begin() + static_cast<long>(pos));
    next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
    next.insert(next.end(), w.begin() + static_cast<long>(pos + rule.lhs.size()),
                w.end());
    w = std::move(next);
  }
}

// Orient a pair of equivalent words into a shortlex-decreasing rule, or
// nullopt if the words are equal.
std::optional<RewriteRule> orient(Word u, Word v, int32_t relation,
                                  bool swapped_base) {
  if (u == v) {
    return std::nullopt;
  }
  RewriteRule r;
  if (shortlex_less(u, v)) {
    r.lhs     = std::move(v);
    r.rhs     = std::move(u);
    r.swapped = !swapped_base;
  } else {
    r.lhs     = std::move(u);
    r.rhs     = std::move(v);
    r.swapped = swapped_base;
  }
  r.relation = relation;
  return r;
}

}  // namespace

KnuthBendixResult bounded_knuth_bendix(Presentation const& p, size_t max_rules,
                                       size_t max_len, size_t length_bound) {
  p.validate();
  std::vector<RewriteRule> rules;
  auto add_rule = [&rules](RewriteRule r) -> bool {
    for (auto const& existing : rules) {
      if (existing.lhs == r.lhs && existing.rhs == r.rhs) {
        return false;
      }
    }
    rules.push_back(std::move(r));
    return true;
  };

  for (size_t i = 0; i < p.relations().size(); ++i) {
    auto const& rel = p.relations()[i];
    if (auto r = orient(rel.lhs, rel.rhs, static_cast<int32_t>(i), false)) {
      add_rule(std::move(*r));
    }
  }

  // Ordered pairs to superpose, processed FIFO for determinism.
  std::deque<std::pair<size_t, size_t>> queue;
  auto enqueue_with_all = [&queue](size_t k, size_t n) {
    for (size_t j = 0; j < n; ++j) {
      queue.emplace_back(k, j);
      if (j != k) {
        queue.emplace_back(j, k);
      }
    }
  };
  for (size_t i = 0; i < rules.size(); ++i) {
    for (size_t j = 0; j < rules.size(); ++j) {
      queue.emplace_back(i, j);
    }
  }

  bool complete = true;
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    // by value: adding rules below reallocates the vector
    Word const li = rules[i].lhs;
    Word const lj = rules[j].lhs;

    // Superpositions (word, position of the lj-redex): a proper suffix of li
    // equal to a prefix of lj, or lj occurring inside li at any position.
    std::vector<std::pair<Word, size_t>> superpositions;
    size_t const tmax = std::min(li.size(), lj.size());
    for (size_t t = 1; t < tmax; ++t) {
      if (std::equal(lj.begin(), lj.begin() + static_cast<long>(t),
                     li.end() - static_cast<long>(t))) {
        Word w(li);
        w.insert(w.end(), lj.begin() + static_cast<long>(t), lj.end());
        superpositions.emplace_back(std::move(w), li.size() - t);
      }
    }
    if (lj.size() < li.size()) {
      for (size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
        if (std::equal(lj.begin(), lj.end(),
                       li.begin() + static_cast<long>(pos))) {
          superpositions.emplace_back(li, pos);
        }
      }
    }

    for (auto const& [w, pos] : superpositions) {
      // Reduce w two ways: with rule i applied at the front, and with rule j
      // applied at the recorded occurrence; normalize both with the full set.
      Word a(rules[i].rhs);
      a.insert(a.end(), w.begin() + static_cast<long>(li.size()), w.end());
      a = rewrite_all(std::move(a), rules);
      Word b(w.begin(), w.begin() + static_cast<long>(pos));
      b.insert(b.end(), rules[j].rhs.begin(), rules[j].rhs.end());
      b.insert(b.end(), w.begin() + static_cast<long>(pos + lj.size()), w.end());
      b = rewrite_all(std::move(b), rules);

      if (a == b) {
        continue;
      }
      auto r = orient(std::move(a), std::move(b), -1, false);
      if (!r) {
        continue;
      }
      if (r->lhs.size() > max_len || rules.size() >= max_rules) {
        complete = false;
        queue.clear();
        break;
      }
      if (add_rule(std::move(*r))) {
        enqueue_with_all(rules.size() - 1, rules.size());
      }
    }
  }

  auto status = complete ? ConfluenceStatus::verified
                         : ConfluenceStatus::bounded_incomplete;
  auto backend = std::make_shared<RewritingBackend>(
      p.alphabet(), std::move(rules), p.kind(), length_bound, status);
  return {std::move(backend), complete};
}

}  // namespace semitop
