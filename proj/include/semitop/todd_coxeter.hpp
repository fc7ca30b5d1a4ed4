#ifndef SEMITOP_TODD_COXETER_HPP_
#define SEMITOP_TODD_COXETER_HPP_

#include <cstdint>
#include <vector>

#include "semitop/group_presentation.hpp"

namespace semitop {

//! Result of a bounded coset enumeration.  When completed, the table is
//! standardized (cosets numbered in BFS order from the subgroup coset 0,
//! scanning letters in order) and closed: every relator traces to a cycle at
//! every coset and every entry is defined.
struct ToddCoxeterResult {
  bool   completed = false;
  size_t index     = 0;  // number of cosets when completed

  //! table[c][l] with letters l = 2i (generator i) and 2i+1 (its inverse).
  std::vector<std::vector<int32_t>> table;
  //! A word (signed generator letters) carrying coset 0 to each coset.
  std::vector<GroupWord> coset_words;

  //! Follow a signed-letter word from a coset; -1 if the table is incomplete
  //! along the way.
  int32_t trace(int32_t coset, GroupWord const& w) const;
};

//! HLT-style coset enumeration of the subgroup generated by the given words
//! inside the group presented by ngens generators and the relators.  Stops
//! once more than coset_limit cosets would be defined; deterministic
//! scheduling throughout.
ToddCoxeterResult todd_coxeter(size_t                        ngens,
                               std::vector<GroupWord> const& relators,
                               std::vector<GroupWord> const& subgroup,
                               size_t                        coset_limit);

//! Coset limit from SEMITOP_COSET_LIMIT, or 100000.
size_t default_coset_limit();

}  // namespace semitop
#endif  // SEMITOP_TODD_COXETER_HPP_
