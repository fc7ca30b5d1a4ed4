#include "semitop/todd_coxeter.hpp"

#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace semitop {

size_t default_coset_limit() {
  if (char const* env = std::getenv("SEMITOP_COSET_LIMIT")) {
    char*              end = nullptr;
    unsigned long long v   = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) {
      return static_cast<size_t>(v);
    }
  }
  return 100000;
}

namespace {

inline size_t inv(size_t letter) {
  return letter ^ 1u;
}

std::vector<size_t> to_letters(GroupWord const& w) {
  std::vector<size_t> out;
  out.reserve(w.size());
  for (int32_t x : w) {
    if (x > 0) {
      out.push_back(2 * (static_cast<size_t>(x) - 1));
    } else if (x < 0) {
      out.push_back(2 * (static_cast<size_t>(-x) - 1) + 1);
    } else {
      throw std::invalid_argument("zero letter in relator");
    }
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(size_t nletters, size_t limit)
      : nletters_(nletters), limit_(limit) {
    new_coset_();
  }

  bool exceeded() const noexcept {
    return exceeded_;
  }
  bool alive(int32_t c) const {
    return p_[static_cast<size_t>(c)] == c;
  }
  size_t coset_count() const noexcept {
    return tab_.size();
  }
  //! Monotone counter of defines and merges; used to detect a fixpoint.
  size_t change_count() const noexcept {
    return changes_;
  }
  size_t live_count() const {
    size_t n = 0;
    for (size_t c = 0; c < p_.size(); ++c) {
      if (p_[c] == static_cast<int32_t>(c)) {
        ++n;
      }
    }
    return n;
  }
  std::vector<std::vector<int32_t>> const& table() const noexcept {
    return tab_;
  }

  int32_t rep(int32_t k) {
    int32_t l = k;
    while (p_[static_cast<size_t>(l)] != l) {
      l = p_[static_cast<size_t>(l)];
    }
    while (p_[static_cast<size_t>(k)] != l) {
      int32_t m               = p_[static_cast<size_t>(k)];
      p_[static_cast<size_t>(k)] = l;
      k                       = m;
    }
    return l;
  }

  // Scan relator w at coset alpha, defining cosets to fill gaps.
  void scan_and_fill(int32_t alpha, std::vector<size_t> const& w) {
    int32_t f = alpha;
    size_t  i = 0;
    int32_t b = alpha;
    size_t  j = w.size();
    while (!exceeded_) {
      while (i < j && tab_[static_cast<size_t>(f)][w[i]] != -1) {
        f = tab_[static_cast<size_t>(f)][w[i]];
        ++i;
      }
      while (j > i && tab_[static_cast<size_t>(b)][inv(w[j - 1])] != -1) {
        b = tab_[static_cast<size_t>(b)][inv(w[j - 1])];
        --j;
      }
      if (i == j) {
        if (f != b) {
          coincidence(f, b);
        }
        return;
      }
      if (i + 1 == j) {
        set_entry_(f, w[i], b);
        return;
      }
      define(f, w[i]);
    }
  }

  int32_t define(int32_t a, size_t l) {
    if (tab_.size() >= limit_) {
      exceeded_ = true;
      return -1;
    }
    int32_t b = new_coset_();
    set_entry_(a, l, b);
    return b;
  }

  void coincidence(int32_t a, int32_t b) {
    merge_(a, b);
    while (!queue_.empty()) {
      int32_t e = queue_.front();
      queue_.pop_front();
      for (size_t l = 0; l < nletters_; ++l) {
        int32_t f = tab_[static_cast<size_t>(e)][l];
        if (f == -1) {
          continue;
        }
        tab_[static_cast<size_t>(f)][inv(l)] = -1;
        int32_t mu = rep(e);
        int32_t nu = rep(f);
        if (tab_[static_cast<size_t>(mu)][l] != -1) {
          merge_(nu, tab_[static_cast<size_t>(mu)][l]);
        } else if (tab_[static_cast<size_t>(nu)][inv(l)] != -1) {
          merge_(mu, tab_[static_cast<size_t>(nu)][inv(l)]);
        } else {
          tab_[static_cast<size_t>(mu)][l]      = nu;
          tab_[static_cast<size_t>(nu)][inv(l)] = mu;
        }
      }
    }
  }

 private:
  int32_t new_coset_() {
    auto c = static_cast<int32_t>(tab_.size());
    tab_.emplace_back(nletters_, -1);
    p_.push_back(c);
    ++changes_;
    return c;
  }

  void set_entry_(int32_t a, size_t l, int32_t b) {
    tab_[static_cast<size_t>(a)][l]      = b;
    tab_[static_cast<size_t>(b)][inv(l)] = a;
  }

  void merge_(int32_t a, int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) {
      return;
    }
    if (a > b) {
      std::swap(a, b);
    }
    p_[static_cast<size_t>(b)] = a;
    queue_.push_back(b);
    ++changes_;
  }

  size_t                            nletters_;
  size_t                            limit_;
  std::vector<std::vector<int32_t>> tab_;
  std::vector<int32_t>              p_;
  std::deque<int32_t>               queue_;
  bool                              exceeded_ = false;
  size_t                            changes_  = 0;
};

}  // namespace

int32_t ToddCoxeterResult::trace(int32_t coset, GroupWord const& w) const {
  int32_t c = coset;
  for (int32_t x : w) {
    if (c < 0 || static_cast<size_t>(c) >= table.size()) {
      return -1;
    }
    size_t l = x > 0 ? 2 * (static_cast<size_t>(x) - 1)
                     : 2 * (static_cast<size_t>(-x) - 1) + 1;
    c = table[static_cast<size_t>(c)][l];
  }
  return c;
}

ToddCoxeterResult todd_coxeter(size_t                        ngens,
                               std::vector<GroupWord> const& relators,
                               std::vector<GroupWord> const& subgroup,
                               size_t                        coset_limit) {
  ToddCoxeterResult res;
  size_t const      nletters = 2 * ngens;

  std::vector<std::vector<size_t>> rels;
  rels.reserve(relators.size());
  for (auto const& r : relators) {
    auto w = to_letters(free_reduce(r));
    if (!w.empty()) {
      rels.push_back(std::move(w));
    }
  }

  Enumerator en(nletters, coset_limit == 0 ? 1 : coset_limit);

  for (auto const& h : subgroup) {
    en.scan_and_fill(en.rep(0), to_letters(h));
    if (en.exceeded()) {
      return res;
    }
  }

  // Sweep all live cosets, scanning every relator and then completing the
  // row.  Coincidences can detach entries of cosets already swept, so repeat
  // until a full sweep changes nothing.
  size_t last_changes = static_cast<size_t>(-1);
  while (en.change_count() != last_changes && !en.exceeded()) {
    last_changes = en.change_count();
    for (int32_t alpha = 0;
         static_cast<size_t>(alpha) < en.coset_count() && !en.exceeded();
         ++alpha) {
      if (!en.alive(alpha)) {
        continue;
      }
      for (auto const& r : rels) {
        en.scan_and_fill(alpha, r);
        if (en.exceeded() || !en.alive(alpha)) {
          break;
        }
      }
      if (en.exceeded() || !en.alive(alpha)) {
        continue;
      }
      for (size_t l = 0; l < nletters && !en.exceeded(); ++l) {
        if (en.table()[static_cast<size_t>(alpha)][l] == -1) {
          en.define(alpha, l);
        }
      }
    }
  }

  if (en.exceeded()) {
    return res;
  }

  // standardize: BFS from the subgroup coset over letters in order
  auto const&          tab = en.table();
  std::vector<int32_t> number(tab.size(), -1);
  std::vector<int32_t> order;
  {
    int32_t root = en.rep(0);
    number[static_cast<size_t>(root)] = 0;
    order.push_back(root);
    std::vector<GroupWord> words{GroupWord{}};
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int32_t c = order[qi];
      for (size_t l = 0; l < nletters; ++l) {
        int32_t d = tab[static_cast<size_t>(c)][l];
        if (d == -1) {
          throw std::logic_error("incomplete closed table");
        }
        d = en.rep(d);
        if (number[static_cast<size_t>(d)] == -1) {
          number[static_cast<size_t>(d)] = static_cast<int32_t>(order.size());
          order.push_back(d);
          GroupWord w = words[qi];
          w.push_back(l % 2 == 0 ? static_cast<int32_t>(l / 2 + 1)
                                 : -static_cast<int32_t>(l / 2 + 1));
          words.push_back(std::move(w));
        }
      }
    }
    res.coset_words = std::move(words);
  }
  res.table.assign(order.size(), std::vector<int32_t>(nletters, -1));
  for (size_t c = 0; c < order.size(); ++c) {
    for (size_t l = 0; l < nletters; ++l) {
      int32_t d = en.rep(tab[static_cast<size_t>(order[c])][l]);
      res.table[c][l] = number[static_cast<size_t>(d)];
    }
  }
  if (order.size() != en.live_count()) {
    throw std::logic_error("standardization did not reach every live coset");
  }
  res.index     = order.size();
  res.completed = true;

  // verification pass: the table must be a genuine quotient of the group
  for (size_t c = 0; c < res.index; ++c) {
    for (auto const& r : rels) {
      int32_t cur = static_cast<int32_t>(c);
      for (size_t l : r) {
        cur = res.table[static_cast<size_t>(cur)][l];
      }
      if (cur != static_cast<int32_t>(c)) {
        throw std::logic_error("coset table failed relator verification");
      }
    }
  }
  for (auto const& h : subgroup) {
    if (res.trace(0, h) != 0) {
      throw std::logic_error("coset table failed subgroup verification");
    }
  }
  return res;
}

}  // namespace semitop
