#ifndef SEMITOP_COMPLEX_HPP_
#define SEMITOP_COMPLEX_HPP_

#include "semitop/action.hpp"

namespace semitop {

struct Edge {
  int32_t id;
  int32_t src;
  int32_t dst;
  int32_t label;  // alphabet index
};

//! A 2-cell (basepoint, relation) with its two traced boundary paths (edge
//! id lists) from the basepoint to the common endpoint.
struct Face {
  int32_t              basepoint;
  int32_t              relation;
  std::vector<int32_t> u_path;
  std::vector<int32_t> v_path;
};

//! A labeled directed graph with attached 2-cells.  Edges are ordered by
//! (src, label); at most one edge per (src, label) when built from an
//! action.
struct TwoComplex {
  int32_t                  vertex_count = 0;
  std::vector<std::string> labels;  // symbol names, indexed by Edge::label
  std::vector<Edge>        edges;
  std::vector<Face>        faces;

  //! edge_at[v][x] -> edge id or -1 (valid for deterministic complexes).
  std::vector<std::vector<int32_t>> edge_index() const;
  std::vector<std::vector<int32_t>> out_edges() const;  // per vertex, ids
  std::vector<std::vector<int32_t>> in_edges() const;   // per vertex, ids
};

//! The action complex K(P, V): vertices V, one edge per defined (v, x), one
//! face per (p, u = v) with p[u] defined.  When require_valid is set, the
//! action must first pass validate_action; the escape hatch exists for
//! complexes over truncated vertex sets, where faces whose boundaries leave
//! the known region are simply omitted.  A face whose two boundary paths are
//! defined but end at different vertices is always an error.
TwoComplex build_action_complex(Presentation const&  P,
                                PartialAction const& A,
                                bool                 require_valid = true);

//! The 1-skeleton of the action complex on an R-class.
TwoComplex schutzenberger_graph(EnumerationResult const& E, GreenData const& G,
                                size_t r_class, Alphabet const& alphabet);

struct DirectedSpanningTree {
  int32_t root;
  //! Incoming tree edge id per vertex (-1 at the root).
  std::vector<int32_t> parent_edge;
};

//! Breadth-first directed spanning tree; tree paths from the root are
//! shortest directed paths.  Throws naming an unreachable vertex if the
//! graph is not strongly connected from the root.
DirectedSpanningTree directed_spanning_tree(TwoComplex const& K, int32_t root);

//! Directed loops at the root generating pi1: for a directed spanning tree T
//! and directed return paths q_w, the loops p_(src e) e q_(dst e) over
//! non-tree edges e together with the loops p_w q_w over vertices w.
std::vector<std::vector<int32_t>>
directed_loop_generators(TwoComplex const& K, int32_t root);

struct ComplexMorphism {
  std::vector<int32_t> vertex_map;
  std::vector<int32_t> edge_map;
  std::vector<int32_t> face_map;
};

struct QuotientComplex {
  TwoComplex      complex;
  ComplexMorphism projection;
};

//! Quotient of a complex by a group of action automorphisms acting by
//! g(v, x) = (gv, x) on edges and g(p, u=v) = (gp, u=v) on faces.  The
//! projection is validated to be a covering (degree-preserving, locally
//! bijective on stars).
QuotientComplex complex_quotient(TwoComplex const& K,
                                 std::vector<ActionAutomorphism> const& G);

struct IsomorphismCheck {
  bool        ok;
  std::string mismatch;  // empty when ok
};

//! Structural equality of G\K(V) and K(G\V) after canonical orbit indexing.
IsomorphismCheck verify_quotient_isomorphism(
    Presentation const& P, PartialAction const& A,
    std::vector<ActionAutomorphism> const& G);

std::string complex_to_json(TwoComplex const& K);
TwoComplex  complex_from_json(std::string const& text);
std::string complex_to_dot(TwoComplex const& K);

}  // namespace semitop
#endif  // SEMITOP_COMPLEX_HPP_
