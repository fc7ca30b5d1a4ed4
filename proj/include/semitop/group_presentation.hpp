#ifndef SEMITOP_GROUP_PRESENTATION_HPP_
#define SEMITOP_GROUP_PRESENTATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace semitop {

//! A word over group generators and formal inverses: letter +(i+1) is
//! generator i, letter -(i+1) its inverse.
using GroupWord = std::vector<int32_t>;

GroupWord free_reduce(GroupWord w);
GroupWord cyclic_reduce(GroupWord w);
GroupWord inverse_word(GroupWord const& w);
//! Least cyclic rotation of w or of its inverse; used to deduplicate
//! relators.
GroupWord canonical_relator(GroupWord const& w);

//! A finite group presentation, with provenance for presentations extracted
//! from a 2-complex: each generator names a non-tree edge, each relator a
//! face (-1 once a Tietze move has rewritten it).
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<GroupWord>   relators;
  std::vector<int32_t>     generator_edges;  // same length as generators
  std::vector<int32_t>     relator_faces;    // same length as relators

  size_t generator_count() const noexcept {
    return generators.size();
  }
};

GroupPresentation make_group_presentation(std::vector<std::string> generators,
                                          std::vector<GroupWord>   relators);

//! Render in the presentation grammar, kind line "group", with inverses
//! written with a trailing apostrophe and relators equated to 1.
std::string to_text(GroupPresentation const& p);
std::string group_word_to_string(GroupPresentation const& p,
                                 GroupWord const&         w);

//! Generator eliminations, free/cyclic reduction, duplicate removal and
//! shortening of relators by overlapping relator subwords.  The result
//! presents an isomorphic group; terminates within max_steps rewriting
//! events.
GroupPresentation tietze_simplify(GroupPresentation p,
                                  size_t            max_steps = 100000);

}  // namespace semitop
#endif  // SEMITOP_GROUP_PRESENTATION_HPP_
