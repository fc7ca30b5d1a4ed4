#include "semitop/growth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

namespace semitop {

GrowthSeries semigroup_growth(EnumerationResult const& E, size_t N) {
  GrowthSeries g;
  g.subject = GrowthSubject::semigroup;
  g.values.resize(N + 1);
  g.exact.resize(N + 1);
  bool const merges_sound = E.completeness != Completeness::unknown_equality;
  for (size_t n = 0; n <= N; ++n) {
    g.values[n] = static_cast<int64_t>(E.count_up_to(n));
    bool in_range =
        E.completeness == Completeness::complete || n <= E.max_len;
    g.exact[n] = merges_sound && in_range;
  }
  return g;
}

GrowthGraph growth_graph(TwoComplex const& K) {
  GrowthGraph g;
  g.out.resize(static_cast<size_t>(K.vertex_count));
  g.boundary_out.assign(static_cast<size_t>(K.vertex_count), false);
  g.boundary_in.assign(static_cast<size_t>(K.vertex_count), false);
  for (auto const& e : K.edges) {
    g.out[static_cast<size_t>(e.src)].push_back(e.dst);
  }
  return g;
}

GrowthGraph growth_graph(PartialAction const& A) {
  GrowthGraph g;
  g.out.resize(static_cast<size_t>(A.vertex_count));
  g.boundary_out.assign(static_cast<size_t>(A.vertex_count), false);
  g.boundary_in.assign(static_cast<size_t>(A.vertex_count), false);
  for (auto const& m : A.maps) {
    for (int32_t v = 0; v < A.vertex_count; ++v) {
      int32_t t = m[static_cast<size_t>(v)];
      if (t >= 0) {
        g.out[static_cast<size_t>(v)].push_back(t);
      } else if (t == UNKNOWN_TARGET) {
        g.boundary_out[static_cast<size_t>(v)] = true;
      }
    }
  }
  return g;
}

GrowthSeries graph_growth(GrowthGraph const& g, int32_t v, size_t N,
                          bool directed) {
  auto const n = g.size();
  std::vector<std::vector<int32_t>> adj(n);
  if (directed) {
    adj = g.out;
  } else {
    adj = g.out;
    for (size_t u = 0; u < n; ++u) {
      for (int32_t w : g.out[u]) {
        adj[static_cast<size_t>(w)].push_back(static_cast<int32_t>(u));
      }
    }
  }
  std::vector<int64_t> dist(n, -1);
  std::queue<int32_t>  q;
  dist[static_cast<size_t>(v)] = 0;
  q.push(v);
  // first distance at which a boundary vertex is expanded
  int64_t bad = -1;
  while (!q.empty()) {
    int32_t u = q.front();
    q.pop();
    bool boundary = g.boundary_out[static_cast<size_t>(u)]
                    || (!directed && g.boundary_in[static_cast<size_t>(u)]);
    if (boundary && bad == -1) {
      bad = dist[static_cast<size_t>(u)];
    }
    for (int32_t w : adj[static_cast<size_t>(u)]) {
      if (dist[static_cast<size_t>(w)] == -1) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  GrowthSeries s;
  s.subject = directed ? GrowthSubject::graph_directed
                       : GrowthSubject::graph_undirected;
  s.values.assign(N + 1, 0);
  for (size_t u = 0; u < n; ++u) {
    if (dist[u] >= 0 && dist[u] <= static_cast<int64_t>(N)) {
      ++s.values[static_cast<size_t>(dist[u])];
    }
  }
  std::partial_sum(s.values.begin(), s.values.end(), s.values.begin());
  s.exact.resize(N + 1);
  for (size_t r = 0; r <= N; ++r) {
    // the ball of radius r only needs the neighbourhoods of vertices at
    // distance < r, so it is exact while r <= bad
    s.exact[r] = bad == -1 || static_cast<int64_t>(r) <= bad;
  }
  return s;
}

size_t reverse_constant(TwoComplex const& K,
                        std::vector<ActionAutomorphism> const& G) {
  // orbit representatives of the edges under g(v, x) = (gv, x)
  auto const edge_at = K.edge_index();
  std::vector<bool> covered(K.edges.size(), false);
  std::vector<int32_t> reps;
  for (auto const& e : K.edges) {
    if (covered[static_cast<size_t>(e.id)]) {
      continue;
    }
    reps.push_back(e.id);
    covered[static_cast<size_t>(e.id)] = true;
    for (auto const& g : G) {
      int32_t img = edge_at[static_cast<size_t>(
          g.bijection[static_cast<size_t>(e.src)])][static_cast<size_t>(e.label)];
      if (img < 0) {
        throw std::invalid_argument("G does not act on the edges");
      }
      covered[static_cast<size_t>(img)] = true;
    }
  }

  auto const out = K.out_edges();
  auto bfs_dist = [&](int32_t from, int32_t to) -> int64_t {
    if (from == to) {
      return 0;
    }
    std::vector<int64_t> dist(static_cast<size_t>(K.vertex_count), -1);
    std::queue<int32_t>  q;
    dist[static_cast<size_t>(from)] = 0;
    q.push(from);
    while (!q.empty()) {
      int32_t u = q.front();
      q.pop();
      for (int32_t eid : out[static_cast<size_t>(u)]) {
        int32_t w = K.edges[static_cast<size_t>(eid)].dst;
        if (dist[static_cast<size_t>(w)] == -1) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          if (w == to) {
            return dist[static_cast<size_t>(w)];
          }
          q.push(w);
        }
      }
    }
    return -1;
  };

  int64_t longest = 0;
  for (int32_t eid : reps) {
    auto const& e = K.edges[static_cast<size_t>(eid)];
    int64_t     d = bfs_dist(e.dst, e.src);
    if (d < 0) {
      throw std::invalid_argument(
          "no directed return path; graph is not strongly connected");
    }
    longest = std::max(longest, d);
  }
  return static_cast<size_t>(longest) + 1;
}

GrowthComparison verify_growth_equivalence(
    TwoComplex const& K, int32_t v, std::vector<ActionAutomorphism> const& G,
    size_t N, GrowthSeries const* semigroup) {
  GrowthComparison cmp;
  cmp.k            = reverse_constant(K, G);
  auto const g     = growth_graph(K);
  auto const undir = graph_growth(g, v, N, false);
  auto const dir   = graph_growth(g, v, cmp.k * N, true);

  cmp.verified_range = N;
  for (size_t n = 0; n <= N; ++n) {
    if (!undir.exact[n] || !dir.exact[n * cmp.k]) {
      cmp.verified_range = n == 0 ? 0 : n - 1;
      break;
    }
  }
  for (size_t n = 0; n <= cmp.verified_range; ++n) {
    if (dir.values[n] > undir.values[n]) {
      cmp.failures.push_back("directed ball exceeds undirected at n="
                             + std::to_string(n));
    }
    if (undir.values[n] > dir.values[n * cmp.k]) {
      cmp.failures.push_back("g(" + std::to_string(n) + ") > g_dir("
                             + std::to_string(n * cmp.k) + ")");
    }
  }
  if (semigroup != nullptr) {
    size_t lim = std::min(cmp.verified_range, semigroup->values.size() - 1);
    for (size_t n = 0; n <= lim; ++n) {
      if (!semigroup->exact[n]) {
        break;
      }
      if (dir.values[n] > semigroup->values[n] + 1) {
        cmp.failures.push_back("g_dir(" + std::to_string(n) + ") > g_S("
                               + std::to_string(n) + ") + 1");
      }
    }
  }
  return cmp;
}

DegreeEstimate estimate_degree(GrowthSeries const& g, size_t lo, size_t hi) {
  if (lo < 1 || hi >= g.values.size() || hi < lo + 3) {
    throw std::invalid_argument("estimate window too small");
  }
  for (size_t n = lo; n <= hi; ++n) {
    if (!g.exact[n] || g.values[n] < 1) {
      throw std::invalid_argument(
          "estimate window must cover exact positive entries");
    }
  }
  auto fit = [&g](size_t a, size_t b) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    auto   m = static_cast<double>(b - a + 1);
    for (size_t n = a; n <= b; ++n) {
      double x = std::log(static_cast<double>(n));
      double y = std::log(static_cast<double>(g.values[n]));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double denom = m * sxx - sx * sx;
    double slope = denom == 0 ? 0 : (m * sxy - sx * sy) / denom;
    double icept = (sy - slope * sx) / m;
    double rss   = 0;
    for (size_t n = a; n <= b; ++n) {
      double x = std::log(static_cast<double>(n));
      double y = std::log(static_cast<double>(g.values[n]));
      double r = y - (slope * x + icept);
      rss += r * r;
    }
    return std::make_pair(slope, std::sqrt(rss / m));
  };

  DegreeEstimate est{};
  auto [slope, residual] = fit(lo, hi);
  est.degree             = slope;
  est.residual           = residual;
  est.window_lo          = lo;
  est.window_hi          = hi;
  size_t mid             = (lo + hi) / 2;
  est.superpolynomial    = false;
  if (mid >= lo + 2 && hi >= mid + 3) {
    auto [s1, r1] = fit(lo, mid);
    auto [s2, r2] = fit(mid + 1, hi);
    (void) r1;
    (void) r2;
    est.superpolynomial = s2 - s1 > 0.25;
  }
  return est;
}

namespace {

// Regularity of every enumerated element: a witness x with s x s = s.  For
// Rees triples the witness is written down directly; otherwise it is
// searched among the enumerated elements.
void check_regularity(ConcreteSemigroup const& S, EnumerationResult const& E) {
  auto const* rees =
      dynamic_cast<ReesMatrixBackend const*>(&S.backend());
  for (size_t s = 0; s < E.size(); ++s) {
    auto const& se = E.elements[s];
    if (rees != nullptr) {
      int32_t              i = rees->row_of(se), l = rees->col_of(se);
      std::vector<int32_t> h(static_cast<size_t>(rees->group_rank()));
      auto const&          pli = rees->sandwich(l, i);
      for (int32_t t = 0; t < rees->group_rank(); ++t) {
        h[static_cast<size_t>(t)] = -se[static_cast<size_t>(t) + 1]
                                    - 2 * pli[static_cast<size_t>(t)];
      }
      Element x   = rees->make_element(i, h, l);
      auto    sx  = S.multiply(se, x);
      auto    sxs = sx ? S.multiply(*sx, se) : std::nullopt;
      if (!sxs || *sxs != se) {
        throw Refusal("non-regular element: " + S.backend().format(se));
      }
      continue;
    }
    bool ok = false;
    for (size_t x = 0; x < E.size() && !ok; ++x) {
      auto sx  = S.multiply(se, E.elements[x]);
      auto sxs = sx ? S.multiply(*sx, se) : std::nullopt;
      ok       = sxs && *sxs == se;
    }
    if (!ok) {
      std::string qualifier =
          E.completeness == Completeness::complete
              ? ""
              : " (enumeration truncated; a witness may exist deeper)";
      throw Refusal("non-regular element: " + S.backend().format(se)
                    + " (no witness x with sxs = s among "
                    + std::to_string(E.size()) + " elements)" + qualifier);
    }
  }
}

struct RClassGraphs {
  std::vector<int32_t>      reps;  // idempotent element index per class
  std::vector<GrowthGraph>  graphs;
  std::vector<int32_t>      rep_vertex;  // vertex of the rep in its graph
};

RClassGraphs complete_case(ConcreteSemigroup const& S,
                           EnumerationResult const& E) {
  auto         G = green_relations(S, E);
  RClassGraphs out;
  std::vector<bool> is_idem(E.size(), false);
  for (int32_t e : G.idempotents) {
    is_idem[static_cast<size_t>(e)] = true;
  }
  for (size_t r = 0; r < G.r_classes.size(); ++r) {
    int32_t rep = -1;
    for (int32_t e : G.r_classes[r]) {
      if (is_idem[static_cast<size_t>(e)]) {
        rep = e;
        break;
      }
    }
    if (rep < 0) {
      throw Refusal("R-class " + std::to_string(r)
                    + " has no idempotent; the semigroup is not regular");
    }
    auto A = action_on_r_class(E, G, r);
    out.reps.push_back(rep);
    out.graphs.push_back(growth_graph(A));
    auto const& cls = G.r_classes[r];
    out.rep_vertex.push_back(static_cast<int32_t>(
        std::find(cls.begin(), cls.end(), rep) - cls.begin()));
  }
  return out;
}

RClassGraphs rees_truncated_case(ConcreteSemigroup const& S,
                                 EnumerationResult const& E,
                                 ReesMatrixBackend const& rees) {
  RClassGraphs out;
  // R-classes are the rows; collect enumerated members per row
  std::vector<std::vector<int32_t>> rows(
      static_cast<size_t>(rees.row_count()));
  for (size_t s = 0; s < E.size(); ++s) {
    rows[static_cast<size_t>(rees.row_of(E.elements[s]))].push_back(
        static_cast<int32_t>(s));
  }
  auto idem = idempotents(S, E);
  std::vector<bool> is_idem(E.size(), false);
  for (int32_t e : idem) {
    is_idem[static_cast<size_t>(e)] = true;
  }
  size_t const ngens = E.right_cayley.empty() ? 0 : E.right_cayley[0].size();
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) {
      throw Refusal("row " + std::to_string(r)
                    + " has no enumerated elements; deepen the enumeration");
    }
    int32_t rep = -1;
    for (int32_t e : rows[r]) {
      if (is_idem[static_cast<size_t>(e)]) {
        rep = e;
        break;
      }
    }
    if (rep < 0) {
      throw Refusal("row " + std::to_string(r)
                    + " has no enumerated idempotent; deepen the enumeration");
    }
    std::vector<int32_t> pos(E.size(), -1);
    for (size_t i = 0; i < rows[r].size(); ++i) {
      pos[static_cast<size_t>(rows[r][i])] = static_cast<int32_t>(i);
    }
    GrowthGraph g;
    g.out.resize(rows[r].size());
    g.boundary_out.assign(rows[r].size(), false);
    g.boundary_in.assign(rows[r].size(), false);
    for (size_t i = 0; i < rows[r].size(); ++i) {
      auto s = static_cast<size_t>(rows[r][i]);
      for (size_t x = 0; x < ngens; ++x) {
        int32_t t = E.right_cayley[s][x];
        if (t >= 0) {
          // right multiplication preserves the row
          g.out[i].push_back(pos[static_cast<size_t>(t)]);
        } else {
          g.boundary_out[i] = true;  // product left the enumerated set
        }
      }
      // in-neighbourhood is fully known iff every candidate u with
      // u x = (this vertex) is itself enumerated
      for (auto const& u : rees.in_neighbour_candidates(E.elements[s])) {
        if (E.index_of(u) < 0) {
          g.boundary_in[i] = true;
          break;
        }
      }
    }
    out.reps.push_back(rep);
    out.rep_vertex.push_back(pos[static_cast<size_t>(rep)]);
    out.graphs.push_back(std::move(g));
  }
  return out;
}

}  // namespace

GrowthHarnessReport regular_growth_theorem_harness(ConcreteSemigroup const& S,
                                                   EnumerationResult const& E,
                                                   size_t                   N) {
  check_regularity(S, E);

  RClassGraphs rc;
  if (E.completeness == Completeness::complete) {
    rc = complete_case(S, E);
  } else if (auto const* rees =
                 dynamic_cast<ReesMatrixBackend const*>(&S.backend())) {
    rc = rees_truncated_case(S, E, *rees);
  } else {
    throw Refusal(
        "truncated enumeration of a backend without structural R-classes");
  }

  GrowthHarnessReport rep;
  rep.g_s             = semigroup_growth(E, N);
  rep.idempotent_reps = rc.reps;
  rep.rhs.assign(N + 1, 0);
  for (size_t i = 0; i < rc.graphs.size(); ++i) {
    auto g = graph_growth(rc.graphs[i], rc.rep_vertex[i], N, false);
    for (size_t n = 0; n <= N; ++n) {
      rep.rhs[n] += g.values[n];
    }
    rep.g_graphs.push_back(std::move(g));
    rep.g_graphs_directed.push_back(
        graph_growth(rc.graphs[i], rc.rep_vertex[i], N, true));
  }

  rep.verified_range = 0;
  rep.bound_holds    = true;
  for (size_t n = 0; n <= N; ++n) {
    bool exact = rep.g_s.exact[n];
    for (auto const& g : rep.g_graphs) {
      exact = exact && g.exact[n];
    }
    if (!exact) {
      break;
    }
    rep.verified_range = n;
    if (rep.g_s.values[n] > rep.rhs[n]) {
      rep.bound_holds = false;
      rep.violations.push_back(n);
    }
  }

  // advisory degree estimates over the back half of the verified range
  size_t lo = std::max<size_t>(4, rep.verified_range / 2);
  if (rep.verified_range >= lo + 3 && rep.g_s.values[lo] >= 1) {
    rep.lhs_degree = estimate_degree(rep.g_s, lo, rep.verified_range);
    GrowthSeries rhs_series;
    rhs_series.values = rep.rhs;
    rhs_series.exact.assign(rep.rhs.size(), true);
    bool positive = true;
    for (size_t n = lo; n <= rep.verified_range; ++n) {
      positive = positive && rhs_series.values[n] >= 1;
    }
    if (positive) {
      rep.rhs_degree = estimate_degree(rhs_series, lo, rep.verified_range);
    }
  }
  return rep;
}

}  // namespace semitop
