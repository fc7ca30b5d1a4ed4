#ifndef SEMITOP_PI1_HPP_
#define SEMITOP_PI1_HPP_

#include "semitop/complex.hpp"
#include "semitop/group_presentation.hpp"

namespace semitop {

//! Presentation of pi1(K, base) by the non-tree edges of an undirected
//! breadth-first spanning tree, with one relator per face (its boundary loop
//! u . v^-1 read through the tree collapse, freely reduced).  Provenance:
//! generator i names non-tree edge generator_edges[i]; relator j comes from
//! face relator_faces[j].
GroupPresentation pi1_presentation(TwoComplex const& K, int32_t base);

//! The spanning tree and edge-to-generator table behind pi1_presentation,
//! exposed so certificates can be evaluated against the same choices.
struct Pi1Chart {
  int32_t              base;
  std::vector<int32_t> tree_parent_edge;   // undirected BFS tree, -1 at base
  std::vector<int32_t> edge_generator;     // edge id -> generator index or -1
};

Pi1Chart pi1_chart(TwoComplex const& K, int32_t base);

//! pi1_presentation computed from an explicit chart.
GroupPresentation pi1_presentation(TwoComplex const& K, Pi1Chart const& chart);

//! The image of an edge path in the pi1 generators (tree edges vanish).
//! Signs follow traversal direction; the path need not be a loop.
GroupWord collapse_path(TwoComplex const& K, GroupPresentation const& pi1,
                        Pi1Chart const&             chart,
                        std::vector<int32_t> const& edge_path,
                        std::vector<bool> const&    reversed);

}  // namespace semitop
#endif  // SEMITOP_PI1_HPP_
