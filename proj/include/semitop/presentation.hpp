#ifndef SEMITOP_PRESENTATION_HPP_
#define SEMITOP_PRESENTATION_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semitop {

using letter_type = int32_t;

//! A word is a sequence of indices into an Alphabet.  The empty word is the
//! monoid identity; semigroup-kind presentations never contain it.
using Word = std::vector<letter_type>;

enum class PresentationKind { semigroup, monoid };

//! Thrown on malformed input files; carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", col "
                           + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

//! Ordered list of distinct generator names.  The order is stable and fixes
//! shortlex comparison of words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  size_t size() const noexcept {
    return symbols_.size();
  }
  std::string const& symbol(size_t i) const {
    return symbols_.at(i);
  }
  std::vector<std::string> const& symbols() const noexcept {
    return symbols_;
  }
  //! Index of a symbol name, or nullopt if unknown.
  std::optional<letter_type> index_of(std::string const& name) const;

  bool operator==(Alphabet const& other) const = default;

 private:
  std::vector<std::string> symbols_;
};

struct Relation {
  Word lhs;
  Word rhs;

  bool operator==(Relation const& other) const = default;
};

//! A semigroup or monoid presentation <X | R>.
class Presentation {
 public:
  Presentation() = default;
  Presentation(PresentationKind kind,
               Alphabet         alphabet,
               std::vector<Relation> relations);

  PresentationKind kind() const noexcept {
    return kind_;
  }
  Alphabet const& alphabet() const noexcept {
    return alphabet_;
  }
  std::vector<Relation> const& relations() const noexcept {
    return relations_;
  }
  bool is_monoid() const noexcept {
    return kind_ == PresentationKind::monoid;
  }

  //! Check that every relation word is over the alphabet and that no side is
  //! empty in semigroup kind.  Throws std::invalid_argument on violation.
  void validate() const;

 private:
  PresentationKind      kind_ = PresentationKind::semigroup;
  Alphabet              alphabet_;
  std::vector<Relation> relations_;
};

//! Parse the line-oriented presentation format:
//!   line 1: "semigroup" | "monoid"
//!   line 2: "generators:" <names...>
//!   then:   "<word> = <word>" per line, "1" denoting the empty word
//! "#" starts a comment; ";" may be used in place of a newline.  An optional
//! "relations:" marker may precede the relation list.
Presentation parse_presentation(std::string const& text);

//! Serialize in the same grammar; parse_presentation round-trips.
std::string to_text(Presentation const& p);

//! Parse a whitespace-separated word such as "b c b"; "1" denotes the empty
//! word when allow_empty is set.
Word parse_word(Alphabet const& a, std::string const& s, bool allow_empty);

//! Render a word as space-separated symbols, or "1" if empty.
std::string word_to_string(Alphabet const& a, Word const& w);

//! Shortlex order: by length first, then lexicographically by letter index.
bool shortlex_less(Word const& a, Word const& b);

}  // namespace semitop
#endif  // SEMITOP_PRESENTATION_HPP_
