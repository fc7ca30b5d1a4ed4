#include "semitop/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace semitop {

bool PartialAction::fully_known() const {
  for (auto const& m : maps) {
    for (int32_t v : m) {
      if (v == UNKNOWN_TARGET) {
        return false;
      }
    }
  }
  return true;
}

int32_t trace_vertex(PartialAction const& A, int32_t v, Word const& w) {
  int32_t cur = v;
  for (letter_type x : w) {
    if (cur < 0) {
      return cur;
    }
    cur = A.maps.at(static_cast<size_t>(x))[static_cast<size_t>(cur)];
  }
  return cur;
}

bool is_strongly_connected(PartialAction const& A,
                           std::pair<int32_t, int32_t>* witness) {
  int32_t const n = A.vertex_count;
  if (n == 0) {
    return true;
  }
  auto reach = [&A, n](int32_t root, bool reverse) {
    std::vector<bool>   seen(static_cast<size_t>(n), false);
    std::queue<int32_t> q;
    seen[static_cast<size_t>(root)] = true;
    q.push(root);
    while (!q.empty()) {
      int32_t v = q.front();
      q.pop();
      for (auto const& m : A.maps) {
        if (!reverse) {
          int32_t w = m[static_cast<size_t>(v)];
          if (w >= 0 && !seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = true;
            q.push(w);
          }
        } else {
          for (int32_t u = 0; u < n; ++u) {
            if (m[static_cast<size_t>(u)] == v && !seen[static_cast<size_t>(u)]) {
              seen[static_cast<size_t>(u)] = true;
              q.push(u);
            }
          }
        }
      }
    }
    return seen;
  };
  auto fwd = reach(0, false);
  auto bwd = reach(0, true);
  for (int32_t v = 0; v < n; ++v) {
    if (!fwd[static_cast<size_t>(v)]) {
      if (witness) {
        *witness = {0, v};
      }
      return false;
    }
    if (!bwd[static_cast<size_t>(v)]) {
      if (witness) {
        *witness = {v, 0};
      }
      return false;
    }
  }
  return true;
}

std::optional<ActionViolation> validate_action(Presentation const& P,
                                               PartialAction const& A) {
  if (P.alphabet().size() != A.alphabet_size()) {
    ActionViolation v;
    v.kind    = ActionViolation::Kind::relation;
    v.message = "alphabet size does not match the action";
    return v;
  }
  for (size_t r = 0; r < P.relations().size(); ++r) {
    auto const& rel = P.relations()[r];
    for (int32_t p = 0; p < A.vertex_count; ++p) {
      int32_t a = trace_vertex(A, p, rel.lhs);
      int32_t b = trace_vertex(A, p, rel.rhs);
      if (a == UNKNOWN_TARGET || b == UNKNOWN_TARGET) {
        continue;  // truncated data cannot witness a violation
      }
      if (a != b) {
        ActionViolation v;
        v.kind     = ActionViolation::Kind::relation;
        v.relation = static_cast<int32_t>(r);
        v.vertex   = p;
        v.message  = "relation " + std::to_string(r) + " fails at vertex "
                    + std::to_string(p + 1) + " ("
                    + (a == UNDEFINED_POINT
                           ? "lhs undefined"
                           : "lhs = " + std::to_string(a + 1))
                    + ", "
                    + (b == UNDEFINED_POINT
                           ? "rhs undefined"
                           : "rhs = " + std::to_string(b + 1))
                    + ")";
        return v;
      }
    }
  }
  std::pair<int32_t, int32_t> w;
  if (!is_strongly_connected(A, &w)) {
    ActionViolation v;
    v.kind    = ActionViolation::Kind::transitivity;
    v.from    = w.first;
    v.vertex  = w.second;
    v.message = "not transitive: vertex " + std::to_string(w.second + 1)
                + " is not reachable from vertex " + std::to_string(w.first + 1);
    return v;
  }
  return std::nullopt;
}

PartialAction action_on_r_class(EnumerationResult const& E,
                                GreenData const& G, size_t r_class) {
  if (E.completeness != Completeness::complete) {
    throw std::invalid_argument("R-class not complete");
  }
  if (r_class >= G.r_classes.size()) {
    throw std::invalid_argument("no such R-class");
  }
  auto const& cls = G.r_classes[r_class];
  std::vector<int32_t> pos(E.size(), -1);
  for (size_t i = 0; i < cls.size(); ++i) {
    pos[static_cast<size_t>(cls[i])] = static_cast<int32_t>(i);
  }
  PartialAction A;
  A.vertex_count = static_cast<int32_t>(cls.size());
  A.source       = PartialAction::Source::r_class;
  A.vertex_elements.assign(cls.begin(), cls.end());
  size_t const ngens = E.right_cayley.empty() ? 0 : E.right_cayley[0].size();
  A.maps.assign(ngens, std::vector<int32_t>(cls.size(), UNDEFINED_POINT));
  for (size_t i = 0; i < cls.size(); ++i) {
    for (size_t x = 0; x < ngens; ++x) {
      int32_t t = E.right_cayley[static_cast<size_t>(cls[i])][x];
      if (t >= 0 && pos[static_cast<size_t>(t)] >= 0) {
        A.maps[x][i] = pos[static_cast<size_t>(t)];
      }
    }
  }
  return A;
}

PartialAction right_regular_action(EnumerationResult const& E) {
  if (E.completeness != Completeness::complete) {
    throw std::invalid_argument(
        "right-regular action needs a complete enumeration");
  }
  PartialAction A;
  A.vertex_count = static_cast<int32_t>(E.size());
  A.source       = PartialAction::Source::right_regular;
  A.vertex_elements.resize(E.size());
  std::iota(A.vertex_elements.begin(), A.vertex_elements.end(), 0);
  size_t const ngens = E.right_cayley.empty() ? 0 : E.right_cayley[0].size();
  A.maps.assign(ngens, std::vector<int32_t>(E.size(), UNDEFINED_POINT));
  for (size_t v = 0; v < E.size(); ++v) {
    for (size_t x = 0; x < ngens; ++x) {
      A.maps[x][v] = E.right_cayley[v][x];  // complete: always a real index
    }
  }
  return A;
}

bool is_action_automorphism(PartialAction const& A,
                            std::vector<int32_t> const& g) {
  auto const n = static_cast<size_t>(A.vertex_count);
  if (g.size() != n) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (int32_t w : g) {
    if (w < 0 || static_cast<size_t>(w) >= n || hit[static_cast<size_t>(w)]) {
      return false;
    }
    hit[static_cast<size_t>(w)] = true;
  }
  for (auto const& m : A.maps) {
    for (size_t v = 0; v < n; ++v) {
      int32_t vx = m[v];
      int32_t gv_x = m[static_cast<size_t>(g[v])];
      if (vx == UNDEFINED_POINT) {
        if (gv_x != UNDEFINED_POINT) {
          return false;
        }
      } else {
        if (gv_x == UNDEFINED_POINT || gv_x != g[static_cast<size_t>(vx)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<ActionAutomorphism> automorphism_group(PartialAction const& A) {
  if (!A.fully_known()) {
    throw std::invalid_argument(
        "automorphism_group requires a fully known action");
  }
  if (!is_strongly_connected(A)) {
    throw std::invalid_argument("automorphism_group requires transitivity");
  }
  auto const                      n = static_cast<size_t>(A.vertex_count);
  std::vector<ActionAutomorphism> out;
  if (n == 0) {
    return out;
  }

  // BFS order from vertex 0 once; every vertex is reachable by transitivity.
  std::vector<std::pair<int32_t, int32_t>> parent(n, {-1, -1});  // (vertex, symbol)
  std::vector<int32_t>                     order;
  {
    std::vector<bool> seen(n, false);
    seen[0] = true;
    order.push_back(0);
    for (size_t qi = 0; qi < order.size(); ++qi) {
      int32_t v = order[qi];
      for (size_t x = 0; x < A.maps.size(); ++x) {
        int32_t w = A.maps[x][static_cast<size_t>(v)];
        if (w >= 0 && !seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          parent[static_cast<size_t>(w)] = {v, static_cast<int32_t>(x)};
          order.push_back(w);
        }
      }
    }
  }

  for (int32_t target = 0; target < A.vertex_count; ++target) {
    std::vector<int32_t> g(n, -1);
    g[0]      = target;
    bool fail = false;
    for (size_t oi = 1; oi < order.size() && !fail; ++oi) {
      int32_t v        = order[oi];
      auto [pv, px]    = parent[static_cast<size_t>(v)];
      int32_t image_pv = g[static_cast<size_t>(pv)];
      int32_t image    = A.maps[static_cast<size_t>(px)][static_cast<size_t>(image_pv)];
      if (image < 0) {
        fail = true;
      } else {
        g[static_cast<size_t>(v)] = image;
      }
    }
    if (fail || !is_action_automorphism(A, g)) {
      continue;
    }
    out.push_back(ActionAutomorphism{std::move(g)});
  }

  // the extensions must form a group; composition is again an automorphism
  // fixing a root image, so it must already be among the candidates
  {
    std::map<std::vector<int32_t>, bool> set;
    for (auto const& g : out) {
      set.emplace(g.bijection, true);
    }
    for (auto const& a : out) {
      for (auto const& b : out) {
        std::vector<int32_t> c(n);
        for (size_t v = 0; v < n; ++v) {
          c[v] = b.bijection[static_cast<size_t>(a.bijection[v])];
        }
        if (set.find(c) == set.end()) {
          throw std::logic_error("automorphism set not closed");
        }
      }
    }
  }
  return out;
}

QuotientAction quotient_action(PartialAction const& A,
                               std::vector<ActionAutomorphism> const& G) {
  if (!A.fully_known()) {
    throw std::invalid_argument("quotient_action requires a fully known action");
  }
  auto const n = static_cast<size_t>(A.vertex_count);
  for (auto const& g : G) {
    if (!is_action_automorphism(A, g.bijection)) {
      throw std::invalid_argument(
          "quotient_action: input is not an automorphism of the action");
    }
  }
  // group check: identity present, closed under composition
  {
    std::map<std::vector<int32_t>, bool> set;
    for (auto const& g : G) {
      set.emplace(g.bijection, true);
    }
    std::vector<int32_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    if (set.find(id) == set.end()) {
      throw std::invalid_argument("quotient_action: G lacks the identity");
    }
    for (auto const& a : G) {
      for (auto const& b : G) {
        std::vector<int32_t> c(n);
        for (size_t v = 0; v < n; ++v) {
          c[v] = b.bijection[static_cast<size_t>(a.bijection[v])];
        }
        if (set.find(c) == set.end()) {
          throw std::invalid_argument(
              "quotient_action: G not closed under composition");
        }
      }
    }
  }

  // orbits, canonicalized by minimum vertex
  std::vector<int32_t> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&uf](int32_t x) {
    while (uf[static_cast<size_t>(x)] != x) {
      x = uf[static_cast<size_t>(x)] =
          uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
    }
    return x;
  };
  for (auto const& g : G) {
    for (size_t v = 0; v < n; ++v) {
      int32_t a = find(static_cast<int32_t>(v));
      int32_t b = find(g.bijection[v]);
      if (a != b) {
        uf[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  QuotientAction out;
  out.orbit_map.resize(n);
  std::map<int32_t, int32_t> ids;  // root -> orbit id, roots ascending
  for (size_t v = 0; v < n; ++v) {
    ids.try_emplace(find(static_cast<int32_t>(v)), 0);
  }
  {
    int32_t next = 0;
    for (auto& [root, id] : ids) {
      id = next++;
    }
  }
  for (size_t v = 0; v < n; ++v) {
    out.orbit_map[v] = ids[find(static_cast<int32_t>(v))];
  }

  auto const m = ids.size();
  out.action.vertex_count = static_cast<int32_t>(m);
  out.action.source       = PartialAction::Source::quotient;
  out.action.vertex_set_complete = A.vertex_set_complete;
  out.action.maps.assign(A.maps.size(),
                         std::vector<int32_t>(m, UNDEFINED_POINT));
  std::vector<bool> fixed(m, false);
  for (size_t x = 0; x < A.maps.size(); ++x) {
    std::fill(fixed.begin(), fixed.end(), false);
    for (size_t v = 0; v < n; ++v) {
      auto    orbit = static_cast<size_t>(out.orbit_map[v]);
      int32_t vx    = A.maps[x][v];
      int32_t img = vx == UNDEFINED_POINT ? UNDEFINED_POINT
                                          : out.orbit_map[static_cast<size_t>(vx)];
      if (!fixed[orbit]) {
        out.action.maps[x][orbit] = img;
        fixed[orbit]              = true;
      } else if (out.action.maps[x][orbit] != img) {
        throw std::logic_error(
            "quotient action ill-defined: G is not an automorphism group");
      }
    }
  }
  return out;
}

std::pair<PartialAction, Alphabet> parse_action_file(std::string const& text) {
  std::istringstream in(text);
  std::string        line;
  int                lineno = 0;
  PartialAction      A;
  std::vector<std::string> names;
  bool                     have_count = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      continue;
    }
    size_t e = line.find_last_not_of(" \t\r");
    line     = line.substr(b, e - b + 1);
    if (!have_count) {
      if (line.rfind("vertices:", 0) != 0) {
        throw ParseError("expected \"vertices: m\"", lineno, 1);
      }
      try {
        A.vertex_count = std::stoi(line.substr(9));
      } catch (std::exception const&) {
        throw ParseError("bad vertex count", lineno, 10);
      }
      if (A.vertex_count <= 0) {
        throw ParseError("vertex count must be positive", lineno, 10);
      }
      have_count = true;
      continue;
    }
    size_t colon = line.find(':');
    size_t lb    = line.find('[');
    size_t rb    = line.find(']');
    if (colon == std::string::npos || lb == std::string::npos
        || rb == std::string::npos || rb < lb) {
      throw ParseError("expected \"<symbol>: [targets]\"", lineno, 1);
    }
    std::string name = line.substr(0, colon);
    name             = name.substr(0, name.find_last_not_of(" \t") + 1);
    std::vector<int32_t> map;
    std::istringstream   body(line.substr(lb + 1, rb - lb - 1));
    std::string          tok;
    while (std::getline(body, tok, ',')) {
      size_t tb = tok.find_first_not_of(" \t");
      if (tb == std::string::npos) {
        throw ParseError("empty target entry", lineno, static_cast<int>(lb));
      }
      size_t te = tok.find_last_not_of(" \t");
      tok       = tok.substr(tb, te - tb + 1);
      if (tok == "-") {
        map.push_back(UNDEFINED_POINT);
      } else {
        int v = 0;
        try {
          v = std::stoi(tok);
        } catch (std::exception const&) {
          throw ParseError("bad target: " + tok, lineno, static_cast<int>(lb));
        }
        if (v < 1 || v > A.vertex_count) {
          throw ParseError("target out of range: " + tok, lineno,
                           static_cast<int>(lb));
        }
        map.push_back(v - 1);
      }
    }
    if (static_cast<int32_t>(map.size()) != A.vertex_count) {
      throw ParseError("expected " + std::to_string(A.vertex_count)
                           + " targets",
                       lineno, static_cast<int>(lb));
    }
    names.push_back(name);
    A.maps.push_back(std::move(map));
  }
  if (!have_count || names.empty()) {
    throw ParseError("missing action data", lineno == 0 ? 1 : lineno, 1);
  }
  return {std::move(A), Alphabet(names)};
}

PartialAction rebind_action(PartialAction action, Alphabet const& from,
                            Alphabet const& to) {
  if (from.size() != to.size()) {
    throw std::invalid_argument("alphabet size mismatch");
  }
  std::vector<std::vector<int32_t>> maps(to.size());
  for (size_t i = 0; i < to.size(); ++i) {
    auto ix = from.index_of(to.symbol(i));
    if (!ix) {
      throw std::invalid_argument("action lacks symbol " + to.symbol(i));
    }
    maps[i] = std::move(action.maps[static_cast<size_t>(*ix)]);
  }
  action.maps = std::move(maps);
  return action;
}

std::string to_text(PartialAction const& A, Alphabet const& alphabet) {
  std::string out = "vertices: " + std::to_string(A.vertex_count) + "\n";
  for (size_t x = 0; x < A.maps.size(); ++x) {
    out += alphabet.symbol(x) + ": [";
    for (int32_t v = 0; v < A.vertex_count; ++v) {
      if (v > 0) {
        out += ',';
      }
      int32_t t = A.maps[x][static_cast<size_t>(v)];
      out += t < 0 ? std::string("-") : std::to_string(t + 1);
    }
    out += "]\n";
  }
  return out;
}

std::string cycle_notation(std::vector<int32_t> const& perm) {
  std::string       out;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int32_t>(i)) {
      seen[i] = true;
      continue;
    }
    out += '(';
    size_t j     = i;
    bool   first = true;
    while (!seen[j]) {
      if (!first) {
        out += ' ';
      }
      out += std::to_string(j + 1);
      seen[j] = true;
      j       = static_cast<size_t>(perm[j]);
      first   = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace semitop
