#include "semitop/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace semitop {

namespace {

// Iterative Tarjan over an adjacency function; returns element -> component,
// components then relabeled so that class ids are sorted by minimum element.
template <typename Adj>
std::vector<int32_t> strong_components(size_t n, Adj adjacent) {
  std::vector<int32_t> comp(n, -1), low(n, 0), num(n, -1), stack_pos(n, 0);
  std::vector<int32_t> stack;
  int32_t              counter = 0, ncomp = 0;

  struct Frame {
    int32_t v;
    size_t  edge;
  };
  std::vector<Frame> frames;
  std::vector<bool>  on_stack(n, false);

  for (size_t root = 0; root < n; ++root) {
    if (num[root] != -1) {
      continue;
    }
    frames.push_back({static_cast<int32_t>(root), 0});
    while (!frames.empty()) {
      auto& fr = frames.back();
      auto  v  = static_cast<size_t>(fr.v);
      if (fr.edge == 0) {
        num[v] = low[v] = counter++;
        stack.push_back(fr.v);
        on_stack[v] = true;
      }
      auto const& targets  = adjacent(v);
      bool        advanced = false;
      while (fr.edge < targets.size()) {
        int32_t w = targets[fr.edge];
        ++fr.edge;
        if (w < 0) {
          continue;
        }
        if (num[static_cast<size_t>(w)] == -1) {
          frames.push_back({w, 0});
          advanced = true;
          break;
        }
        if (on_stack[static_cast<size_t>(w)]) {
          low[v] = std::min(low[v], num[static_cast<size_t>(w)]);
        }
      }
      if (advanced) {
        continue;
      }
      if (low[v] == num[v]) {
        while (true) {
          int32_t w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = false;
          comp[static_cast<size_t>(w)]     = ncomp;
          if (w == fr.v) {
            break;
          }
        }
        ++ncomp;
      }
      frames.pop_back();
      if (!frames.empty()) {
        auto& up                          = frames.back();
        low[static_cast<size_t>(up.v)] =
            std::min(low[static_cast<size_t>(up.v)], low[v]);
      }
    }
  }

  // relabel by minimum element for deterministic class ids
  std::vector<int32_t> min_elem(static_cast<size_t>(ncomp),
                                static_cast<int32_t>(n));
  for (size_t i = 0; i < n; ++i) {
    auto c = static_cast<size_t>(comp[i]);
    min_elem[c] = std::min(min_elem[c], static_cast<int32_t>(i));
  }
  std::vector<int32_t> order(static_cast<size_t>(ncomp));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&min_elem](int32_t a, int32_t b) {
    return min_elem[static_cast<size_t>(a)] < min_elem[static_cast<size_t>(b)];
  });
  std::vector<int32_t> relabel(static_cast<size_t>(ncomp));
  for (size_t i = 0; i < order.size(); ++i) {
    relabel[static_cast<size_t>(order[i])] = static_cast<int32_t>(i);
  }
  for (auto& c : comp) {
    c = relabel[static_cast<size_t>(c)];
  }
  return comp;
}

std::vector<std::vector<int32_t>> classes_of(std::vector<int32_t> const& of) {
  int32_t n = 0;
  for (int32_t c : of) {
    n = std::max(n, c + 1);
  }
  std::vector<std::vector<int32_t>> out(static_cast<size_t>(n));
  for (size_t i = 0; i < of.size(); ++i) {
    out[static_cast<size_t>(of[i])].push_back(static_cast<int32_t>(i));
  }
  return out;
}

//! Canonical class ids (sorted by min element) from an arbitrary labeling.
std::vector<int32_t> canonicalize(std::vector<int32_t> labels) {
  std::map<int32_t, int32_t> first_seen;  // label -> min element
  for (size_t i = 0; i < labels.size(); ++i) {
    first_seen.try_emplace(labels[i], static_cast<int32_t>(i));
  }
  std::vector<std::pair<int32_t, int32_t>> order(first_seen.begin(),
                                                 first_seen.end());
  std::sort(order.begin(), order.end(),
            [](auto const& a, auto const& b) { return a.second < b.second; });
  std::map<int32_t, int32_t> relabel;
  for (size_t i = 0; i < order.size(); ++i) {
    relabel[order[i].first] = static_cast<int32_t>(i);
  }
  for (auto& l : labels) {
    l = relabel[l];
  }
  return labels;
}

struct UnionFind {
  std::vector<int32_t> p;
  explicit UnionFind(size_t n) : p(n) {
    std::iota(p.begin(), p.end(), 0);
  }
  int32_t find(int32_t x) {
    while (p[static_cast<size_t>(x)] != x) {
      x = p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    }
    return x;
  }
  void unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      p[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
};

}  // namespace

GreenData green_relations(ConcreteSemigroup const& S,
                          EnumerationResult const& E) {
  GreenData    g;
  size_t const n = E.size();
  g.completeness = E.completeness;

  g.r_of = strong_components(n, [&E](size_t v) -> std::vector<int32_t> const& {
    return E.right_cayley[v];
  });
  g.l_of = strong_components(n, [&E](size_t v) -> std::vector<int32_t> const& {
    return E.left_cayley[v];
  });

  // H = R meet L
  {
    std::map<std::pair<int32_t, int32_t>, int32_t> ids;
    std::vector<int32_t>                           h(n);
    for (size_t i = 0; i < n; ++i) {
      auto key = std::make_pair(g.r_of[i], g.l_of[i]);
      auto it  = ids.find(key);
      if (it == ids.end()) {
        it = ids.emplace(key, static_cast<int32_t>(ids.size())).first;
      }
      h[i] = it->second;
    }
    g.h_of = canonicalize(std::move(h));
  }

  // D = join of R and L: link members of each R-class and each L-class
  {
    UnionFind uf(n);
    for (auto const* of : {&g.r_of, &g.l_of}) {
      std::vector<int32_t> min_of;
      for (size_t i = 0; i < n; ++i) {
        auto c = static_cast<size_t>((*of)[i]);
        if (c >= min_of.size()) {
          min_of.resize(c + 1, -1);
        }
        if (min_of[c] == -1) {
          min_of[c] = static_cast<int32_t>(i);
        } else {
          uf.unite(min_of[c], static_cast<int32_t>(i));
        }
      }
    }
    std::vector<int32_t> d(n);
    for (size_t i = 0; i < n; ++i) {
      d[i] = uf.find(static_cast<int32_t>(i));
    }
    g.d_of = canonicalize(std::move(d));
  }

  g.r_classes = classes_of(g.r_of);
  g.l_classes = classes_of(g.l_of);
  g.h_classes = classes_of(g.h_of);
  g.d_classes = classes_of(g.d_of);
  g.idempotents = idempotents(S, E);
  return g;
}

GreenData green_relations(ConcreteSemigroup const& S, size_t max_len) {
  auto E = enumerate(S, max_len);
  return green_relations(S, E);
}

SchutzenbergerGroup schutzenberger_group(ConcreteSemigroup const& S,
                                         EnumerationResult const& E,
                                         GreenData const&         G,
                                         size_t                   r_class) {
  if (E.completeness != Completeness::complete) {
    throw std::invalid_argument("R-class not complete");
  }
  if (r_class >= G.r_classes.size()) {
    throw std::invalid_argument("no such R-class");
  }
  SchutzenbergerGroup out;
  out.r_class = G.r_classes[r_class];
  auto const& cls = out.r_class;

  std::map<Element, int32_t> pos;  // element -> position within the class
  for (size_t i = 0; i < cls.size(); ++i) {
    pos.emplace(E.elements[static_cast<size_t>(cls[i])],
                static_cast<int32_t>(i));
  }

  std::map<std::vector<int32_t>, int32_t> seen;
  auto add_perm = [&](std::vector<int32_t> perm, int32_t witness) {
    if (seen.emplace(perm, static_cast<int32_t>(out.permutations.size()))
            .second) {
      out.permutations.push_back(std::move(perm));
      out.generators_from.push_back(witness);
    }
  };

  {
    std::vector<int32_t> id(cls.size());
    std::iota(id.begin(), id.end(), 0);
    add_perm(std::move(id), -1);  // the formal identity of S^1
  }

  for (size_t t = 0; t < E.size(); ++t) {
    std::vector<int32_t> perm(cls.size(), -1);
    bool                 stabilizes = true;
    for (size_t i = 0; i < cls.size() && stabilizes; ++i) {
      auto prod = S.multiply(E.elements[t],
                             E.elements[static_cast<size_t>(cls[i])]);
      if (!prod) {
        throw std::runtime_error(
            "backend bound exceeded during Schutzenberger computation");
      }
      auto it = pos.find(*prod);
      if (it == pos.end()) {
        stabilizes = false;
      } else {
        perm[i] = it->second;
      }
    }
    if (!stabilizes) {
      continue;
    }
    std::vector<bool> hit(cls.size(), false);
    for (int32_t v : perm) {
      if (hit[static_cast<size_t>(v)]) {
        throw std::logic_error(
            "left multiplier acted non-injectively on an R-class");
      }
      hit[static_cast<size_t>(v)] = true;
    }
    add_perm(std::move(perm), static_cast<int32_t>(t));
  }

  // closure under composition (inverses follow in a finite group)
  for (auto const& a : out.permutations) {
    for (auto const& b : out.permutations) {
      std::vector<int32_t> c(a.size());
      for (size_t i = 0; i < a.size(); ++i) {
        c[i] = b[static_cast<size_t>(a[i])];
      }
      if (seen.find(c) == seen.end()) {
        throw std::logic_error("Schutzenberger permutations not closed");
      }
    }
  }

  // orbits = H-classes
  UnionFind uf(cls.size());
  for (auto const& perm : out.permutations) {
    for (size_t i = 0; i < perm.size(); ++i) {
      uf.unite(static_cast<int32_t>(i), perm[i]);
    }
  }
  std::vector<int32_t> orbit_of(cls.size());
  for (size_t i = 0; i < cls.size(); ++i) {
    orbit_of[i] = uf.find(static_cast<int32_t>(i));
  }
  out.h_class_orbits = classes_of(canonicalize(std::move(orbit_of)));
  return out;
}

RightStabilizer right_stabilizer(ConcreteSemigroup const& S,
                                 EnumerationResult const& E, int32_t s) {
  RightStabilizer out;
  out.base     = s;
  out.complete = E.completeness == Completeness::complete;
  auto const& se = E.elements.at(static_cast<size_t>(s));
  for (size_t t = 0; t < E.size(); ++t) {
    auto prod = S.multiply(se, E.elements[t]);
    if (!prod) {
      out.complete = false;
      continue;
    }
    if (*prod == se) {
      out.members.push_back(static_cast<int32_t>(t));
    }
  }
  return out;
}

namespace {

// The partition of S^1 = {1} + elements induced by x ~ y iff sx = sy,
// as a canonical label vector (slot 0 is the formal identity).  nullopt if a
// product exceeded the backend bound.
std::optional<std::vector<int32_t>>
right_mult_fingerprint(ConcreteSemigroup const& S, EnumerationResult const& E,
                       int32_t s) {
  std::map<Element, int32_t> ids;
  std::vector<int32_t>       fp(E.size() + 1);
  auto const& se = E.elements.at(static_cast<size_t>(s));
  fp[0]          = ids.emplace(se, 0).first->second;  // s * 1 = s
  for (size_t x = 0; x < E.size(); ++x) {
    auto prod = S.multiply(se, E.elements[x]);
    if (!prod) {
      return std::nullopt;
    }
    auto it =
        ids.emplace(std::move(*prod), static_cast<int32_t>(ids.size())).first;
    fp[x + 1] = it->second;
  }
  return canonicalize(std::move(fp));
}

}  // namespace

LstarResult lstar_related(ConcreteSemigroup const& S,
                          EnumerationResult const& E, int32_t s, int32_t t) {
  if (s == t) {
    return {Tristate::yes, std::nullopt};
  }
  bool const sound = E.completeness != Completeness::unknown_equality;
  auto       fs    = right_mult_fingerprint(S, E, s);
  auto       ft    = right_mult_fingerprint(S, E, t);
  if (!fs || !ft || !sound) {
    return {Tristate::unknown, std::nullopt};
  }
  if (*fs == *ft) {
    return {E.completeness == Completeness::complete ? Tristate::yes
                                                     : Tristate::unknown,
            std::nullopt};
  }
  // find (x, y) with sx = sy xor tx = ty; fingerprints differ, so some pair
  // of slots is split by one and not the other
  for (size_t i = 0; i < fs->size(); ++i) {
    for (size_t j = i + 1; j < fs->size(); ++j) {
      bool es = (*fs)[i] == (*fs)[j];
      bool et = (*ft)[i] == (*ft)[j];
      if (es != et) {
        return {Tristate::no,
                std::make_pair(static_cast<int32_t>(i) - 1,
                               static_cast<int32_t>(j) - 1)};
      }
    }
  }
  return {Tristate::unknown, std::nullopt};  // unreachable
}

RightAbundance is_right_abundant(ConcreteSemigroup const& S,
                                 EnumerationResult const& E) {
  RightAbundance out;
  if (E.completeness != Completeness::complete) {
    out.verdict = Tristate::unknown;
    return out;
  }
  std::map<std::vector<int32_t>, int32_t> classes;
  std::vector<int32_t>                    label(E.size());
  for (size_t s = 0; s < E.size(); ++s) {
    auto fp = right_mult_fingerprint(S, E, static_cast<int32_t>(s));
    if (!fp) {
      out.verdict = Tristate::unknown;
      return out;
    }
    auto it = classes.emplace(std::move(*fp),
                              static_cast<int32_t>(classes.size()))
                  .first;
    label[s] = it->second;
  }
  out.lstar_classes = classes_of(canonicalize(std::move(label)));

  auto const        idem = idempotents(S, E);
  std::vector<bool> is_idem(E.size(), false);
  for (int32_t e : idem) {
    is_idem[static_cast<size_t>(e)] = true;
  }
  for (size_t c = 0; c < out.lstar_classes.size(); ++c) {
    bool has = std::any_of(out.lstar_classes[c].begin(),
                           out.lstar_classes[c].end(), [&is_idem](int32_t e) {
                             return is_idem[static_cast<size_t>(e)];
                           });
    if (!has) {
      out.verdict       = Tristate::no;
      out.witness_class = static_cast<int32_t>(c);
      return out;
    }
  }
  out.verdict = Tristate::yes;
  return out;
}

GroupImageResult no_nontrivial_group_image(ConcreteSemigroup const&    S,
                                           std::vector<Element> const& T,
                                           size_t coset_limit) {
  if (T.empty()) {
    return {GroupImageVerdict::trivial, "empty"};
  }
  std::map<Element, int32_t> pos;
  for (size_t i = 0; i < T.size(); ++i) {
    pos.emplace(T[i], static_cast<int32_t>(i));
  }
  // closure check and multiplication table
  std::vector<std::vector<int32_t>> mult(T.size(),
                                         std::vector<int32_t>(T.size()));
  for (size_t i = 0; i < T.size(); ++i) {
    for (size_t j = 0; j < T.size(); ++j) {
      auto prod = S.multiply(T[i], T[j]);
      if (!prod) {
        return {GroupImageVerdict::unknown, "bound-exceeded"};
      }
      auto it = pos.find(*prod);
      if (it == pos.end()) {
        throw std::invalid_argument("T is not closed under multiplication");
      }
      mult[i][j] = it->second;
    }
  }
  // left zero: z with zt = z for all t collapses every group image
  for (size_t z = 0; z < T.size(); ++z) {
    bool left_zero = true;
    for (size_t t = 0; t < T.size() && left_zero; ++t) {
      left_zero = mult[z][t] == static_cast<int32_t>(z);
    }
    if (left_zero) {
      return {GroupImageVerdict::trivial, "left-zero"};
    }
  }
  // universal group <T | xy = (xy)>
  std::vector<std::string> gens;
  gens.reserve(T.size());
  for (size_t i = 0; i < T.size(); ++i) {
    gens.push_back("t" + std::to_string(i));
  }
  std::vector<GroupWord> relators;
  relators.reserve(T.size() * T.size());
  for (size_t i = 0; i < T.size(); ++i) {
    for (size_t j = 0; j < T.size(); ++j) {
      relators.push_back(GroupWord{static_cast<int32_t>(i) + 1,
                                   static_cast<int32_t>(j) + 1,
                                   -(mult[i][j] + 1)});
    }
  }
  auto pres = tietze_simplify(
      make_group_presentation(std::move(gens), std::move(relators)));
  auto analysis = analyze_group(pres, coset_limit);
  if (std::any_of(analysis.abelian_invariants.begin(),
                  analysis.abelian_invariants.end(),
                  [](int64_t d) { return d != 1; })) {
    return {GroupImageVerdict::nontrivial, "abelianization"};
  }
  if (pres.generator_count() == 0) {
    return {GroupImageVerdict::trivial, "tietze-empty"};
  }
  if (analysis.order_kind == OrderKind::exact) {
    return {analysis.order == 1 ? GroupImageVerdict::trivial
                                : GroupImageVerdict::nontrivial,
            "todd-coxeter"};
  }
  return {GroupImageVerdict::unknown, "todd-coxeter"};
}

}  // namespace semitop
