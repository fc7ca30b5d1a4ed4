#include "semitop/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include <json.hpp>

namespace semitop {

std::vector<std::vector<int32_t>> TwoComplex::edge_index() const {
  std::vector<std::vector<int32_t>> ix(
      static_cast<size_t>(vertex_count),
      std::vector<int32_t>(labels.size(), -1));
  for (auto const& e : edges) {
    auto& slot = ix[static_cast<size_t>(e.src)][static_cast<size_t>(e.label)];
    if (slot != -1) {
      throw std::logic_error("complex is not deterministic");
    }
    slot = e.id;
  }
  return ix;
}

std::vector<std::vector<int32_t>> TwoComplex::out_edges() const {
  std::vector<std::vector<int32_t>> out(static_cast<size_t>(vertex_count));
  for (auto const& e : edges) {
    out[static_cast<size_t>(e.src)].push_back(e.id);
  }
  return out;
}

std::vector<std::vector<int32_t>> TwoComplex::in_edges() const {
  std::vector<std::vector<int32_t>> in(static_cast<size_t>(vertex_count));
  for (auto const& e : edges) {
    in[static_cast<size_t>(e.dst)].push_back(e.id);
  }
  return in;
}

namespace {

// Trace the path reading w from p; returns edge ids, or nullopt if the path
// leaves the defined region.  endpoint receives the final vertex.
std::optional<std::vector<int32_t>>
trace_path(std::vector<std::vector<int32_t>> const& edge_at,
           std::vector<Edge> const& edges, int32_t p, Word const& w,
           int32_t* endpoint) {
  std::vector<int32_t> path;
  int32_t              cur = p;
  for (letter_type x : w) {
    int32_t eid = edge_at[static_cast<size_t>(cur)][static_cast<size_t>(x)];
    if (eid < 0) {
      return std::nullopt;
    }
    path.push_back(eid);
    cur = edges[static_cast<size_t>(eid)].dst;
  }
  *endpoint = cur;
  return path;
}

}  // namespace

TwoComplex build_action_complex(Presentation const& P, PartialAction const& A,
                                bool require_valid) {
  if (require_valid) {
    if (auto violation = validate_action(P, A)) {
      throw std::invalid_argument("invalid action: " + violation->message);
    }
  }
  if (P.alphabet().size() != A.alphabet_size()) {
    throw std::invalid_argument("alphabet size does not match the action");
  }
  TwoComplex K;
  K.vertex_count = A.vertex_count;
  K.labels       = P.alphabet().symbols();
  for (int32_t v = 0; v < A.vertex_count; ++v) {
    for (size_t x = 0; x < A.maps.size(); ++x) {
      int32_t t = A.maps[x][static_cast<size_t>(v)];
      if (t >= 0) {
        K.edges.push_back(Edge{static_cast<int32_t>(K.edges.size()), v, t,
                               static_cast<int32_t>(x)});
      }
    }
  }
  auto const edge_at = K.edge_index();
  for (int32_t p = 0; p < A.vertex_count; ++p) {
    for (size_t r = 0; r < P.relations().size(); ++r) {
      auto const& rel = P.relations()[r];
      int32_t     qu = -1, qv = -1;
      auto u_path = trace_path(edge_at, K.edges, p, rel.lhs, &qu);
      auto v_path = trace_path(edge_at, K.edges, p, rel.rhs, &qv);
      if (!u_path || !v_path) {
        continue;
      }
      if (qu != qv) {
        throw std::invalid_argument(
            "invalid action: relation " + std::to_string(r)
            + " boundary paths end at different vertices from vertex "
            + std::to_string(p + 1));
      }
      K.faces.push_back(Face{p, static_cast<int32_t>(r), std::move(*u_path),
                             std::move(*v_path)});
    }
  }
  return K;
}

TwoComplex schutzenberger_graph(EnumerationResult const& E, GreenData const& G,
                                size_t r_class, Alphabet const& alphabet) {
  auto       A = action_on_r_class(E, G, r_class);
  TwoComplex K;
  K.vertex_count = A.vertex_count;
  K.labels       = alphabet.symbols();
  for (int32_t v = 0; v < A.vertex_count; ++v) {
    for (size_t x = 0; x < A.maps.size(); ++x) {
      int32_t t = A.maps[x][static_cast<size_t>(v)];
      if (t >= 0) {
        K.edges.push_back(Edge{static_cast<int32_t>(K.edges.size()), v, t,
                               static_cast<int32_t>(x)});
      }
    }
  }
  return K;
}

DirectedSpanningTree directed_spanning_tree(TwoComplex const& K,
                                            int32_t root) {
  DirectedSpanningTree T;
  T.root = root;
  T.parent_edge.assign(static_cast<size_t>(K.vertex_count), -1);
  auto const          out = K.out_edges();
  std::vector<bool>   seen(static_cast<size_t>(K.vertex_count), false);
  std::queue<int32_t> q;
  seen[static_cast<size_t>(root)] = true;
  q.push(root);
  size_t reached = 1;
  while (!q.empty()) {
    int32_t v = q.front();
    q.pop();
    for (int32_t eid : out[static_cast<size_t>(v)]) {
      int32_t w = K.edges[static_cast<size_t>(eid)].dst;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)]          = true;
        T.parent_edge[static_cast<size_t>(w)] = eid;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != static_cast<size_t>(K.vertex_count)) {
    for (int32_t v = 0; v < K.vertex_count; ++v) {
      if (!seen[static_cast<size_t>(v)]) {
        throw std::invalid_argument(
            "graph is not strongly connected: vertex " + std::to_string(v + 1)
            + " is unreachable from the root");
      }
    }
  }
  return T;
}

std::vector<std::vector<int32_t>>
directed_loop_generators(TwoComplex const& K, int32_t root) {
  auto const T = directed_spanning_tree(K, root);

  // p_w: the directed tree path root -> w
  auto tree_path = [&](int32_t w) {
    std::vector<int32_t> path;
    while (w != root) {
      int32_t eid = T.parent_edge[static_cast<size_t>(w)];
      path.push_back(eid);
      w = K.edges[static_cast<size_t>(eid)].src;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  // q_w: a shortest directed path w -> root, via BFS on the reverse graph
  std::vector<int32_t> next_edge(static_cast<size_t>(K.vertex_count), -1);
  {
    auto const          in = K.in_edges();
    std::vector<bool>   seen(static_cast<size_t>(K.vertex_count), false);
    std::queue<int32_t> q;
    seen[static_cast<size_t>(root)] = true;
    q.push(root);
    while (!q.empty()) {
      int32_t v = q.front();
      q.pop();
      for (int32_t eid : in[static_cast<size_t>(v)]) {
        int32_t u = K.edges[static_cast<size_t>(eid)].src;
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)]      = true;
          next_edge[static_cast<size_t>(u)] = eid;
          q.push(u);
        }
      }
    }
    for (int32_t v = 0; v < K.vertex_count; ++v) {
      if (!seen[static_cast<size_t>(v)]) {
        throw std::invalid_argument(
            "graph is not strongly connected: the root is unreachable from "
            "vertex "
            + std::to_string(v + 1));
      }
    }
  }
  auto return_path = [&](int32_t w) {
    std::vector<int32_t> path;
    while (w != root) {
      int32_t eid = next_edge[static_cast<size_t>(w)];
      path.push_back(eid);
      w = K.edges[static_cast<size_t>(eid)].dst;
    }
    return path;
  };

  std::vector<bool> is_tree(K.edges.size(), false);
  for (int32_t eid : T.parent_edge) {
    if (eid >= 0) {
      is_tree[static_cast<size_t>(eid)] = true;
    }
  }

  std::vector<std::vector<int32_t>> loops;
  for (auto const& e : K.edges) {
    if (is_tree[static_cast<size_t>(e.id)]) {
      continue;
    }
    std::vector<int32_t> loop = tree_path(e.src);
    loop.push_back(e.id);
    auto back = return_path(e.dst);
    loop.insert(loop.end(), back.begin(), back.end());
    loops.push_back(std::move(loop));
  }
  for (int32_t w = 0; w < K.vertex_count; ++w) {
    std::vector<int32_t> loop = tree_path(w);
    auto                 back = return_path(w);
    loop.insert(loop.end(), back.begin(), back.end());
    loops.push_back(std::move(loop));
  }
  return loops;
}

QuotientComplex complex_quotient(TwoComplex const& K,
                                 std::vector<ActionAutomorphism> const& G) {
  auto const n = static_cast<size_t>(K.vertex_count);
  // group sanity: identity and closure
  {
    std::map<std::vector<int32_t>, bool> set;
    for (auto const& g : G) {
      if (g.bijection.size() != n) {
        throw std::invalid_argument("automorphism arity mismatch");
      }
      set.emplace(g.bijection, true);
    }
    std::vector<int32_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    if (set.find(id) == set.end()) {
      throw std::invalid_argument("complex_quotient: G lacks the identity");
    }
    for (auto const& a : G) {
      for (auto const& b : G) {
        std::vector<int32_t> c(n);
        for (size_t v = 0; v < n; ++v) {
          c[v] = b.bijection[static_cast<size_t>(a.bijection[v])];
        }
        if (set.find(c) == set.end()) {
          throw std::invalid_argument(
              "complex_quotient: G not closed under composition");
        }
      }
    }
  }
  auto const edge_at = K.edge_index();
  // G must act on the complex: g(v,x) = (gv,x) must be an edge, and
  // g(p, rel) = (gp, rel) must be a face
  std::map<std::pair<int32_t, int32_t>, int32_t> face_at;
  for (size_t f = 0; f < K.faces.size(); ++f) {
    face_at[{K.faces[f].basepoint, K.faces[f].relation}] =
        static_cast<int32_t>(f);
  }
  for (auto const& g : G) {
    for (auto const& e : K.edges) {
      if (edge_at[static_cast<size_t>(g.bijection[static_cast<size_t>(e.src)])]
                 [static_cast<size_t>(e.label)]
          < 0) {
        throw std::invalid_argument(
            "complex_quotient: G does not act on the edges");
      }
    }
    for (auto const& f : K.faces) {
      if (face_at.find({g.bijection[static_cast<size_t>(f.basepoint)],
                        f.relation})
          == face_at.end()) {
        throw std::invalid_argument(
            "complex_quotient: G does not act on the faces");
      }
    }
  }

  // vertex orbits, canonical index = position among sorted minimum vertices
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
  std::map<int32_t, int32_t> orbit_ids;
  for (size_t v = 0; v < n; ++v) {
    orbit_ids.try_emplace(find(static_cast<int32_t>(v)), 0);
  }
  {
    int32_t next = 0;
    for (auto& [root, id] : orbit_ids) {
      id = next++;
    }
  }
  QuotientComplex out;
  out.projection.vertex_map.resize(n);
  for (size_t v = 0; v < n; ++v) {
    out.projection.vertex_map[v] = orbit_ids[find(static_cast<int32_t>(v))];
  }
  auto const& vmap = out.projection.vertex_map;

  TwoComplex& Q   = out.complex;
  Q.vertex_count  = static_cast<int32_t>(orbit_ids.size());
  Q.labels        = K.labels;

  // quotient edges: (orbit(src), label) -> orbit(dst), consistency-checked
  std::map<std::pair<int32_t, int32_t>, int32_t> qdst;
  for (auto const& e : K.edges) {
    auto key = std::make_pair(vmap[static_cast<size_t>(e.src)], e.label);
    auto it  = qdst.find(key);
    if (it == qdst.end()) {
      qdst.emplace(key, vmap[static_cast<size_t>(e.dst)]);
    } else if (it->second != vmap[static_cast<size_t>(e.dst)]) {
      throw std::logic_error("quotient complex edges are inconsistent");
    }
  }
  std::map<std::pair<int32_t, int32_t>, int32_t> qedge_id;
  for (auto const& [key, dst] : qdst) {
    qedge_id[key] = static_cast<int32_t>(Q.edges.size());
    Q.edges.push_back(Edge{static_cast<int32_t>(Q.edges.size()), key.first,
                           dst, key.second});
  }
  out.projection.edge_map.resize(K.edges.size());
  for (auto const& e : K.edges) {
    out.projection.edge_map[static_cast<size_t>(e.id)] =
        qedge_id[{vmap[static_cast<size_t>(e.src)], e.label}];
  }

  // quotient faces: (orbit(p), rel), boundary re-traced in the quotient
  auto const qedge_at = Q.edge_index();
  std::map<std::pair<int32_t, int32_t>, int32_t> qface_id;
  out.projection.face_map.resize(K.faces.size());
  for (size_t f = 0; f < K.faces.size(); ++f) {
    auto const& face = K.faces[f];
    auto key = std::make_pair(vmap[static_cast<size_t>(face.basepoint)],
                              face.relation);
    auto it  = qface_id.find(key);
    if (it == qface_id.end()) {
      // trace the boundary in the quotient by pushing the original paths
      Face qf;
      qf.basepoint = key.first;
      qf.relation  = key.second;
      for (int32_t eid : face.u_path) {
        qf.u_path.push_back(
            out.projection.edge_map[static_cast<size_t>(eid)]);
      }
      for (int32_t eid : face.v_path) {
        qf.v_path.push_back(
            out.projection.edge_map[static_cast<size_t>(eid)]);
      }
      it = qface_id.emplace(key, static_cast<int32_t>(Q.faces.size())).first;
      Q.faces.push_back(std::move(qf));
    }
    out.projection.face_map[f] = it->second;
  }
  // canonical face order: by (basepoint, relation)
  {
    std::vector<size_t> order(Q.faces.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&Q](size_t a, size_t b) {
      return std::make_pair(Q.faces[a].basepoint, Q.faces[a].relation)
             < std::make_pair(Q.faces[b].basepoint, Q.faces[b].relation);
    });
    std::vector<int32_t> renumber(order.size());
    std::vector<Face>    faces;
    faces.reserve(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
      renumber[order[i]] = static_cast<int32_t>(i);
      faces.push_back(std::move(Q.faces[order[i]]));
    }
    Q.faces = std::move(faces);
    for (auto& fm : out.projection.face_map) {
      fm = renumber[static_cast<size_t>(fm)];
    }
  }

  // covering checks: out-stars and in-stars map bijectively
  auto const in_deg = [](TwoComplex const& C) {
    std::vector<std::map<int32_t, int32_t>> deg(
        static_cast<size_t>(C.vertex_count));
    for (auto const& e : C.edges) {
      ++deg[static_cast<size_t>(e.dst)][e.label];
    }
    return deg;
  };
  auto const kin = in_deg(K), qin = in_deg(Q);
  for (int32_t v = 0; v < K.vertex_count; ++v) {
    for (size_t x = 0; x < K.labels.size(); ++x) {
      bool up   = edge_at[static_cast<size_t>(v)][x] >= 0;
      bool down = qedge_at[static_cast<size_t>(vmap[static_cast<size_t>(v)])][x] >= 0;
      if (up != down) {
        throw std::logic_error("projection is not a covering (out-star)");
      }
    }
    auto const& a = kin[static_cast<size_t>(v)];
    auto const& b = qin[static_cast<size_t>(vmap[static_cast<size_t>(v)])];
    if (a != b) {
      throw std::logic_error("projection is not a covering (in-star)");
    }
  }
  return out;
}

IsomorphismCheck verify_quotient_isomorphism(
    Presentation const& P, PartialAction const& A,
    std::vector<ActionAutomorphism> const& G) {
  auto K  = build_action_complex(P, A);
  auto GK = complex_quotient(K, G);
  auto QA = quotient_action(A, G);
  auto KQ = build_action_complex(P, QA.action);

  auto const& L = GK.complex;
  if (L.vertex_count != KQ.vertex_count) {
    return {false, "vertex counts differ"};
  }
  if (L.edges.size() != KQ.edges.size()) {
    return {false, "edge counts differ"};
  }
  for (size_t i = 0; i < L.edges.size(); ++i) {
    auto const &a = L.edges[i], &b = KQ.edges[i];
    if (a.src != b.src || a.dst != b.dst || a.label != b.label) {
      return {false, "edge " + std::to_string(i) + " differs"};
    }
  }
  if (L.faces.size() != KQ.faces.size()) {
    return {false, "face counts differ"};
  }
  for (size_t i = 0; i < L.faces.size(); ++i) {
    auto const &a = L.faces[i], &b = KQ.faces[i];
    if (a.basepoint != b.basepoint || a.relation != b.relation
        || a.u_path != b.u_path || a.v_path != b.v_path) {
      return {false, "face " + std::to_string(i) + " differs"};
    }
  }
  return {true, ""};
}

std::string complex_to_json(TwoComplex const& K) {
  nlohmann::json j;
  j["vertices"] = K.vertex_count;
  j["edges"]    = nlohmann::json::array();
  for (auto const& e : K.edges) {
    j["edges"].push_back({{"id", e.id},
                          {"src", e.src},
                          {"dst", e.dst},
                          {"label", K.labels.at(static_cast<size_t>(e.label))}});
  }
  j["faces"] = nlohmann::json::array();
  for (auto const& f : K.faces) {
    j["faces"].push_back({{"p", f.basepoint},
                          {"rel", f.relation},
                          {"u_path", f.u_path},
                          {"v_path", f.v_path}});
  }
  return j.dump(2) + "\n";
}

TwoComplex complex_from_json(std::string const& text) {
  auto       j = nlohmann::json::parse(text);
  TwoComplex K;
  K.vertex_count = j.at("vertices").get<int32_t>();
  std::map<std::string, int32_t> label_ids;
  for (auto const& je : j.at("edges")) {
    auto const label = je.at("label").get<std::string>();
    auto       it    = label_ids.find(label);
    if (it == label_ids.end()) {
      it = label_ids.emplace(label, static_cast<int32_t>(K.labels.size()))
               .first;
      K.labels.push_back(label);
    }
    Edge e;
    e.id    = je.at("id").get<int32_t>();
    e.src   = je.at("src").get<int32_t>();
    e.dst   = je.at("dst").get<int32_t>();
    e.label = it->second;
    if (e.src < 0 || e.src >= K.vertex_count || e.dst < 0
        || e.dst >= K.vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    K.edges.push_back(e);
  }
  if (j.contains("faces")) {
    for (auto const& jf : j.at("faces")) {
      Face f;
      f.basepoint = jf.at("p").get<int32_t>();
      f.relation  = jf.at("rel").get<int32_t>();
      f.u_path    = jf.at("u_path").get<std::vector<int32_t>>();
      f.v_path    = jf.at("v_path").get<std::vector<int32_t>>();
      if (f.basepoint < 0 || f.basepoint >= K.vertex_count) {
        throw std::invalid_argument("face basepoint out of range");
      }
      // both boundary paths must chain from the basepoint to one endpoint
      int32_t end_u = f.basepoint, end_v = f.basepoint;
      for (auto const& [path, end] :
           {std::pair{&f.u_path, &end_u}, std::pair{&f.v_path, &end_v}}) {
        for (int32_t eid : *path) {
          if (eid < 0 || static_cast<size_t>(eid) >= K.edges.size()) {
            throw std::invalid_argument("face path edge out of range");
          }
          auto const& e = K.edges[static_cast<size_t>(eid)];
          if (e.src != *end) {
            throw std::invalid_argument("face path does not chain");
          }
          *end = e.dst;
        }
      }
      if (end_u != end_v) {
        throw std::invalid_argument(
            "face boundary paths end at different vertices");
      }
      K.faces.push_back(std::move(f));
    }
  }
  return K;
}

std::string complex_to_dot(TwoComplex const& K) {
  std::string out = "digraph K {\n";
  for (int32_t v = 0; v < K.vertex_count; ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v + 1)
           + "\"];\n";
  }
  for (auto const& e : K.edges) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst)
           + " [label=\"" + K.labels.at(static_cast<size_t>(e.label))
           + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace semitop
