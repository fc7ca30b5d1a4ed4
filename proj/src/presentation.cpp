#include "semitop/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace semitop {

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw std::invalid_argument("alphabet must be non-empty");
  }
  std::unordered_set<std::string> seen;
  for (auto const& s : symbols_) {
    if (s.empty()) {
      throw std::invalid_argument("empty generator name");
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument("duplicate generator name: " + s);
    }
  }
}

std::optional<letter_type> Alphabet::index_of(std::string const& name) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end()) {
    return std::nullopt;
  }
  return static_cast<letter_type>(it - symbols_.begin());
}

Presentation::Presentation(PresentationKind      kind,
                           Alphabet              alphabet,
                           std::vector<Relation> relations)
    : kind_(kind),
      alphabet_(std::move(alphabet)),
      relations_(std::move(relations)) {
  validate();
}

void Presentation::validate() const {
  auto const n = static_cast<letter_type>(alphabet_.size());
  for (auto const& rel : relations_) {
    for (Word const* w : {&rel.lhs, &rel.rhs}) {
      if (w->empty() && kind_ == PresentationKind::semigroup) {
        throw std::invalid_argument(
            "empty relation side in semigroup presentation");
      }
      for (letter_type x : *w) {
        if (x < 0 || x >= n) {
          throw std::invalid_argument("relation letter out of range");
        }
      }
    }
  }
}

namespace {

struct Line {
  std::string text;
  int         number;  // 1-based source line
};

// Split on newlines and ';', strip comments and surrounding blanks.
std::vector<Line> logical_lines(std::string const& text) {
  std::vector<Line> out;
  int               lineno = 1;
  std::string       cur;
  bool              in_comment = false;
  int               cur_line   = 1;
  auto flush = [&]() {
    size_t b = cur.find_first_not_of(" \t\r");
    if (b != std::string::npos) {
      size_t e = cur.find_last_not_of(" \t\r");
      out.push_back({cur.substr(b, e - b + 1), cur_line});
    }
    cur.clear();
    cur_line = lineno;
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      ++lineno;
      cur_line   = lineno;
      in_comment = false;
    } else if (in_comment) {
      continue;
    } else if (c == '#') {
      in_comment = true;
    } else if (c == ';') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::vector<std::string> split_ws(std::string const& s) {
  std::vector<std::string> out;
  std::istringstream       in(s);
  std::string              tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

bool starts_with(std::string const& s, std::string const& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

Word parse_word(Alphabet const& a, std::string const& s, bool allow_empty) {
  auto toks = split_ws(s);
  if (toks.size() == 1 && toks[0] == "1") {
    if (!allow_empty) {
      throw std::invalid_argument(
          "the empty word \"1\" is only valid in monoid presentations");
    }
    return {};
  }
  Word w;
  for (auto const& t : toks) {
    auto ix = a.index_of(t);
    if (!ix) {
      throw std::invalid_argument("unknown generator: " + t);
    }
    w.push_back(*ix);
  }
  if (w.empty() && !allow_empty) {
    throw std::invalid_argument("empty word");
  }
  return w;
}

std::string word_to_string(Alphabet const& a, Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += a.symbol(static_cast<size_t>(w[i]));
  }
  return out;
}

bool shortlex_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Presentation parse_presentation(std::string const& text) {
  auto lines = logical_lines(text);
  if (lines.empty()) {
    throw ParseError("empty presentation", 1, 1);
  }
  size_t           li = 0;
  PresentationKind kind;
  if (lines[li].text == "semigroup") {
    kind = PresentationKind::semigroup;
  } else if (lines[li].text == "monoid") {
    kind = PresentationKind::monoid;
  } else {
    throw ParseError("expected \"semigroup\" or \"monoid\"", lines[li].number,
                     1);
  }
  ++li;
  if (li >= lines.size() || !starts_with(lines[li].text, "generators:")) {
    int ln = li < lines.size() ? lines[li].number : lines.back().number + 1;
    throw ParseError("expected \"generators:\" line", ln, 1);
  }
  auto names = split_ws(lines[li].text.substr(std::string("generators:").size()));
  if (names.empty()) {
    throw ParseError("no generators listed", lines[li].number, 1);
  }
  Alphabet alphabet;
  try {
    alphabet = Alphabet(names);
  } catch (std::invalid_argument const& e) {
    throw ParseError(e.what(), lines[li].number, 1);
  }
  ++li;

  std::vector<Relation> relations;
  bool const            allow_empty = kind == PresentationKind::monoid;
  for (; li < lines.size(); ++li) {
    std::string body = lines[li].text;
    if (starts_with(body, "relations:")) {
      body = body.substr(std::string("relations:").size());
      size_t b = body.find_first_not_of(" \t");
      if (b == std::string::npos) {
        continue;  // bare "relations:" marker line
      }
      body = body.substr(b);
    }
    size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected \"<word> = <word>\"", lines[li].number, 1);
    }
    try {
      Relation rel{parse_word(alphabet, body.substr(0, eq), allow_empty),
                   parse_word(alphabet, body.substr(eq + 1), allow_empty)};
      relations.push_back(std::move(rel));
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what(), lines[li].number,
                       static_cast<int>(eq) + 1);
    }
  }
  return Presentation(kind, std::move(alphabet), std::move(relations));
}

std::string to_text(Presentation const& p) {
  std::string out = p.is_monoid() ? "monoid\n" : "semigroup\n";
  out += "generators:";
  for (auto const& s : p.alphabet().symbols()) {
    out += ' ';
    out += s;
  }
  out += '\n';
  for (auto const& rel : p.relations()) {
    out += word_to_string(p.alphabet(), rel.lhs);
    out += " = ";
    out += word_to_string(p.alphabet(), rel.rhs);
    out += '\n';
  }
  return out;
}

}  // namespace semitop
