#include "semitop/group_presentation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semitop {

GroupWord free_reduce(GroupWord w) {
  GroupWord out;
  out.reserve(w.size());
  for (int32_t x : w) {
    if (x == 0) {
      throw std::invalid_argument("zero letter in group word");
    }
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

GroupWord cyclic_reduce(GroupWord w) {
  w = free_reduce(std::move(w));
  size_t b = 0, e = w.size();
  while (e - b >= 2 && w[b] == -w[e - 1]) {
    ++b;
    --e;
  }
  return GroupWord(w.begin() + static_cast<long>(b),
                   w.begin() + static_cast<long>(e));
}

GroupWord inverse_word(GroupWord const& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (auto& x : out) {
    x = -x;
  }
  return out;
}

GroupWord canonical_relator(GroupWord const& w) {
  GroupWord r = cyclic_reduce(w);
  if (r.empty()) {
    return r;
  }
  GroupWord best = r;
  for (GroupWord const& base : {r, inverse_word(r)}) {
    GroupWord rot = base;
    for (size_t i = 0; i < base.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) {
        best = rot;
      }
    }
  }
  return best;
}

GroupPresentation make_group_presentation(std::vector<std::string> generators,
                                          std::vector<GroupWord>   relators) {
  GroupPresentation p;
  p.generators = std::move(generators);
  p.relators.reserve(relators.size());
  for (auto& r : relators) {
    p.relators.push_back(free_reduce(std::move(r)));
  }
  p.generator_edges.assign(p.generators.size(), -1);
  p.relator_faces.assign(p.relators.size(), -1);
  return p;
}

std::string group_word_to_string(GroupPresentation const& p,
                                 GroupWord const&         w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    auto g = static_cast<size_t>(std::abs(w[i])) - 1;
    out += p.generators.at(g);
    if (w[i] < 0) {
      out += '\'';
    }
  }
  return out;
}

std::string to_text(GroupPresentation const& p) {
  std::string out = "group\ngenerators:";
  for (auto const& g : p.generators) {
    out += ' ';
    out += g;
  }
  out += '\n';
  for (auto const& r : p.relators) {
    out += group_word_to_string(p, r);
    out += " = 1\n";
  }
  return out;
}

namespace {

size_t occurrences(GroupWord const& w, int32_t gen1) {
  size_t n = 0;
  for (int32_t x : w) {
    if (std::abs(x) == gen1) {
      ++n;
    }
  }
  return n;
}

// Substitute generator gen1 (1-based) by expression expr in w.
GroupWord substitute(GroupWord const& w, int32_t gen1, GroupWord const& expr) {
  GroupWord out;
  GroupWord inv = inverse_word(expr);
  for (int32_t x : w) {
    if (x == gen1) {
      out.insert(out.end(), expr.begin(), expr.end());
    } else if (x == -gen1) {
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.push_back(x);
    }
  }
  return free_reduce(std::move(out));
}

// Drop generator gen1 (1-based) renumbering the letters above it.
GroupWord renumber_down(GroupWord const& w, int32_t gen1) {
  GroupWord out;
  out.reserve(w.size());
  for (int32_t x : w) {
    int32_t a = std::abs(x);
    if (a > gen1) {
      --a;
    }
    out.push_back(x > 0 ? a : -a);
  }
  return out;
}

// Try to shorten target using relator r: if more than half of r (cyclically,
// in either orientation) occurs as a subword of target, replace it by the
// inverse of the complement.  Returns true on success.
bool shorten_with(GroupWord& target, GroupWord const& r) {
  if (r.size() < 2 || target.size() < 2) {
    return false;
  }
  size_t const half = r.size() / 2 + 1;  // strictly more than half
  for (GroupWord const& base : {r, inverse_word(r)}) {
    GroupWord doubled = base;
    doubled.insert(doubled.end(), base.begin(), base.end());
    for (size_t rot = 0; rot < base.size(); ++rot) {
      for (size_t len = std::min(base.size(), target.size()); len >= half;
           --len) {
        auto first = doubled.begin() + static_cast<long>(rot);
        for (size_t pos = 0; pos + len <= target.size(); ++pos) {
          if (std::equal(first, first + static_cast<long>(len),
                         target.begin() + static_cast<long>(pos))) {
            // rotation of base = matched . rest, so matched = rest^-1
            GroupWord rest(first + static_cast<long>(len),
                           doubled.begin()
                               + static_cast<long>(rot + base.size()));
            GroupWord replacement = inverse_word(rest);
            if (replacement.size() >= len) {
              continue;
            }
            GroupWord next(target.begin(), target.begin() + static_cast<long>(pos));
            next.insert(next.end(), replacement.begin(), replacement.end());
            next.insert(next.end(),
                        target.begin() + static_cast<long>(pos + len),
                        target.end());
            next = free_reduce(std::move(next));
            if (next.size() < target.size()) {
              target = std::move(next);
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

GroupPresentation tietze_simplify(GroupPresentation p, size_t max_steps) {
  size_t steps = 0;
  auto spend = [&steps, max_steps](size_t n = 1) {
    steps += n;
    return steps <= max_steps;
  };

  bool changed = true;
  while (changed && steps <= max_steps) {
    changed = false;

    // 1. reduce, drop empties, deduplicate up to rotation and inversion
    {
      std::vector<GroupWord> relators;
      std::vector<int32_t>   faces;
      std::map<GroupWord, bool> seen;
      for (size_t i = 0; i < p.relators.size(); ++i) {
        GroupWord r = cyclic_reduce(p.relators[i]);
        if (r.empty()) {
          continue;
        }
        auto canon = canonical_relator(r);
        if (seen.emplace(std::move(canon), true).second) {
          relators.push_back(std::move(r));
          faces.push_back(p.relator_faces[i]);
        }
      }
      if (relators.size() != p.relators.size()) {
        changed = true;
      }
      p.relators      = std::move(relators);
      p.relator_faces = std::move(faces);
    }

    // 2. eliminate a generator that occurs exactly once in some relator;
    //    shortest relator first, then lowest generator index
    {
      size_t  best_rel = p.relators.size();
      int32_t best_gen = 0;
      for (size_t i = 0; i < p.relators.size(); ++i) {
        if (best_rel < p.relators.size()
            && p.relators[i].size() >= p.relators[best_rel].size()) {
          continue;
        }
        for (int32_t x : p.relators[i]) {
          if (occurrences(p.relators[i], std::abs(x)) == 1) {
            best_rel = i;
            best_gen = std::abs(x);
            break;
          }
        }
      }
      if (best_rel < p.relators.size() && spend()) {
        GroupWord r = p.relators[best_rel];
        // rotate so the single occurrence of the generator is in front
        size_t at = 0;
        while (std::abs(r[at]) != best_gen) {
          ++at;
        }
        std::rotate(r.begin(), r.begin() + static_cast<long>(at), r.end());
        // r = g . w gives g = w^-1; r = g^-1 . w gives g = w
        GroupWord rest(r.begin() + 1, r.end());
        GroupWord expr = r[0] > 0 ? inverse_word(rest) : rest;
        p.relators.erase(p.relators.begin() + static_cast<long>(best_rel));
        p.relator_faces.erase(p.relator_faces.begin()
                              + static_cast<long>(best_rel));
        for (size_t i = 0; i < p.relators.size(); ++i) {
          if (occurrences(p.relators[i], best_gen) > 0) {
            p.relators[i]      = substitute(p.relators[i], best_gen, expr);
            p.relator_faces[i] = -1;
          }
          p.relators[i] = renumber_down(p.relators[i], best_gen);
        }
        p.generators.erase(p.generators.begin() + (best_gen - 1));
        p.generator_edges.erase(p.generator_edges.begin() + (best_gen - 1));
        changed = true;
        continue;
      }
    }

    // 3. shorten relators against each other (quadratic scan, so only on
    //    presentations the eliminations have already cut down)
    if (p.relators.size() <= 400) {
      std::vector<size_t> order(p.relators.size());
      for (size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
      }
      std::stable_sort(order.begin(), order.end(), [&p](size_t a, size_t b) {
        return p.relators[a].size() < p.relators[b].size();
      });
      for (size_t oi = 0; oi < order.size() && !changed; ++oi) {
        size_t src = order[oi];
        for (size_t dst = 0; dst < p.relators.size() && !changed; ++dst) {
          if (dst == src || p.relators[src].size() > p.relators[dst].size()) {
            continue;
          }
          if (shorten_with(p.relators[dst], p.relators[src])) {
            p.relator_faces[dst] = -1;
            changed              = true;
            spend();
          }
        }
      }
    }
  }
  return p;
}

}  // namespace semitop
