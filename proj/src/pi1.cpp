#include "semitop/pi1.hpp"

#include <queue>

namespace semitop {

Pi1Chart pi1_chart(TwoComplex const& K, int32_t base) {
  if (base < 0 || base >= K.vertex_count) {
    throw std::invalid_argument("base vertex out of range");
  }
  Pi1Chart chart;
  chart.base = base;
  chart.tree_parent_edge.assign(static_cast<size_t>(K.vertex_count), -1);
  chart.edge_generator.assign(K.edges.size(), -1);

  // undirected BFS over edges in id order
  std::vector<std::vector<int32_t>> incident(
      static_cast<size_t>(K.vertex_count));
  for (auto const& e : K.edges) {
    incident[static_cast<size_t>(e.src)].push_back(e.id);
    if (e.dst != e.src) {
      incident[static_cast<size_t>(e.dst)].push_back(e.id);
    }
  }
  std::vector<bool>   seen(static_cast<size_t>(K.vertex_count), false);
  std::vector<bool>   in_tree(K.edges.size(), false);
  std::queue<int32_t> q;
  seen[static_cast<size_t>(base)] = true;
  q.push(base);
  size_t reached = 1;
  while (!q.empty()) {
    int32_t v = q.front();
    q.pop();
    for (int32_t eid : incident[static_cast<size_t>(v)]) {
      auto const& e = K.edges[static_cast<size_t>(eid)];
      int32_t     w = e.src == v ? e.dst : e.src;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)]                = true;
        in_tree[static_cast<size_t>(eid)]           = true;
        chart.tree_parent_edge[static_cast<size_t>(w)] = eid;
        ++reached;
        q.push(w);
      }
    }
  }
  if (reached != static_cast<size_t>(K.vertex_count)) {
    throw std::invalid_argument("complex is not connected");
  }
  int32_t next = 0;
  for (auto const& e : K.edges) {
    if (!in_tree[static_cast<size_t>(e.id)]) {
      chart.edge_generator[static_cast<size_t>(e.id)] = next++;
    }
  }
  return chart;
}

GroupWord collapse_path(TwoComplex const&, GroupPresentation const&,
                        Pi1Chart const& chart,
                        std::vector<int32_t> const& edge_path,
                        std::vector<bool> const&    reversed) {
  GroupWord w;
  for (size_t i = 0; i < edge_path.size(); ++i) {
    int32_t g = chart.edge_generator[static_cast<size_t>(edge_path[i])];
    if (g < 0) {
      continue;
    }
    w.push_back(reversed[i] ? -(g + 1) : g + 1);
  }
  return free_reduce(std::move(w));
}

GroupPresentation pi1_presentation(TwoComplex const& K, Pi1Chart const& chart) {
  GroupPresentation p;
  for (size_t eid = 0; eid < K.edges.size(); ++eid) {
    int32_t g = chart.edge_generator[eid];
    if (g >= 0) {
      p.generators.push_back("g" + std::to_string(g + 1));
      p.generator_edges.push_back(static_cast<int32_t>(eid));
    }
  }
  for (size_t f = 0; f < K.faces.size(); ++f) {
    auto const& face = K.faces[f];
    GroupWord   w;
    for (int32_t eid : face.u_path) {
      int32_t g = chart.edge_generator[static_cast<size_t>(eid)];
      if (g >= 0) {
        w.push_back(g + 1);
      }
    }
    for (auto it = face.v_path.rbegin(); it != face.v_path.rend(); ++it) {
      int32_t g = chart.edge_generator[static_cast<size_t>(*it)];
      if (g >= 0) {
        w.push_back(-(g + 1));
      }
    }
    p.relators.push_back(free_reduce(std::move(w)));
    p.relator_faces.push_back(static_cast<int32_t>(f));
  }
  return p;
}

GroupPresentation pi1_presentation(TwoComplex const& K, int32_t base) {
  return pi1_presentation(K, pi1_chart(K, base));
}

}  // namespace semitop
