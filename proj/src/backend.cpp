#include "semitop/backend.hpp"

#include <sstream>

namespace semitop {

namespace {

std::vector<std::pair<std::string, int>> content_lines(std::string const& text) {
  std::vector<std::pair<std::string, int>> out;
  std::istringstream                       in(text);
  std::string                              line;
  int                                      n = 0;
  while (std::getline(in, line)) {
    ++n;
    size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      continue;
    }
    size_t e = line.find_last_not_of(" \t\r");
    out.emplace_back(line.substr(b, e - b + 1), n);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------
// TransformationBackend
// ---------------------------------------------------------------------

TransformationBackend::TransformationBackend(int32_t              degree,
                                             std::vector<Element> generators,
                                             std::vector<std::string> names)
    : degree_(degree),
      generators_(std::move(generators)),
      names_(std::move(names)) {
  if (degree_ <= 0) {
    throw std::invalid_argument("degree must be positive");
  }
  if (generators_.empty()) {
    throw std::invalid_argument("no generators");
  }
  if (names_.size() != generators_.size()) {
    throw std::invalid_argument("generator/name count mismatch");
  }
  for (auto const& g : generators_) {
    if (static_cast<int32_t>(g.size()) != degree_) {
      throw std::invalid_argument("generator has wrong degree");
    }
    for (int32_t v : g) {
      if (v != UNDEFINED_POINT && (v < 0 || v >= degree_)) {
        throw std::invalid_argument("image point out of range");
      }
    }
  }
}

Element TransformationBackend::compose(Element const& a, Element const& b) {
  Element c(a.size());
  for (size_t x = 0; x < a.size(); ++x) {
    c[x] = a[x] == UNDEFINED_POINT ? UNDEFINED_POINT
                                   : b[static_cast<size_t>(a[x])];
  }
  return c;
}

std::optional<Element> TransformationBackend::product(Element const& a,
                                                      Element const& b) const {
  return compose(a, b);
}

std::optional<Element> TransformationBackend::identity_element() const {
  Element id(static_cast<size_t>(degree_));
  for (int32_t x = 0; x < degree_; ++x) {
    id[static_cast<size_t>(x)] = x;
  }
  return id;
}

std::string TransformationBackend::format(Element const& e) const {
  std::string out = "[";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += e[i] == UNDEFINED_POINT ? std::string("-")
                                   : std::to_string(e[i] + 1);
  }
  return out + "]";
}

std::shared_ptr<TransformationBackend>
parse_transformation_file(std::string const& text) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].first.rfind("degree:", 0) != 0) {
    throw ParseError("expected \"degree: n\"",
                     lines.empty() ? 1 : lines[0].second, 1);
  }
  int32_t degree = 0;
  try {
    degree = std::stoi(lines[0].first.substr(7));
  } catch (std::exception const&) {
    throw ParseError("bad degree", lines[0].second, 8);
  }
  if (degree <= 0) {
    throw ParseError("degree must be positive", lines[0].second, 8);
  }
  std::vector<Element>     gens;
  std::vector<std::string> names;
  for (size_t li = 1; li < lines.size(); ++li) {
    auto const& [line, ln] = lines[li];
    size_t colon           = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected \"<name>: [images]\"", ln, 1);
    }
    std::string name = line.substr(0, colon);
    size_t      ne   = name.find_last_not_of(" \t");
    name             = name.substr(0, ne + 1);
    size_t lb        = line.find('[', colon);
    size_t rb        = line.find(']', colon);
    if (lb == std::string::npos || rb == std::string::npos || rb < lb) {
      throw ParseError("expected bracketed image list", ln,
                       static_cast<int>(colon) + 1);
    }
    std::string        body = line.substr(lb + 1, rb - lb - 1);
    Element            img;
    std::istringstream in(body);
    std::string        tok;
    while (std::getline(in, tok, ',')) {
      size_t b = tok.find_first_not_of(" \t");
      if (b == std::string::npos) {
        throw ParseError("empty image entry", ln, static_cast<int>(lb) + 1);
      }
      size_t e2 = tok.find_last_not_of(" \t");
      tok       = tok.substr(b, e2 - b + 1);
      if (tok == "-") {
        img.push_back(UNDEFINED_POINT);
      } else {
        int v = 0;
        try {
          v = std::stoi(tok);
        } catch (std::exception const&) {
          throw ParseError("bad image point: " + tok, ln,
                           static_cast<int>(lb) + 1);
        }
        if (v < 1 || v > degree) {
          throw ParseError("image point out of range: " + tok, ln,
                           static_cast<int>(lb) + 1);
        }
        img.push_back(v - 1);  // 1-based in files
      }
    }
    if (static_cast<int32_t>(img.size()) != degree) {
      throw ParseError("expected " + std::to_string(degree) + " images", ln,
                       static_cast<int>(lb) + 1);
    }
    names.push_back(name);
    gens.push_back(std::move(img));
  }
  return std::make_shared<TransformationBackend>(degree, std::move(gens),
                                                 std::move(names));
}

std::string to_text(TransformationBackend const& b) {
  std::string out = "degree: " + std::to_string(b.degree()) + "\n";
  auto        names = b.generator_names();
  for (size_t i = 0; i < b.generator_count(); ++i) {
    out += names[i] + ": " + b.format(b.generator(i)) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------
// ElementsBackend
// ---------------------------------------------------------------------

ElementsBackend::ElementsBackend(std::shared_ptr<SemigroupBackend const> parent,
                                 std::vector<Element>     generators,
                                 std::vector<std::string> names)
    : parent_(std::move(parent)),
      generators_(std::move(generators)),
      names_(std::move(names)) {
  if (!parent_) {
    throw std::invalid_argument("null parent backend");
  }
  if (generators_.empty() || generators_.size() != names_.size()) {
    throw std::invalid_argument("generator/name count mismatch");
  }
}

// ---------------------------------------------------------------------
// ReesMatrixBackend
// ---------------------------------------------------------------------

ReesMatrixBackend::ReesMatrixBackend(
    int32_t group_rank, int32_t row_count, int32_t column_count,
    std::vector<std::vector<std::vector<int32_t>>> sandwich,
    std::vector<Element> generators, std::vector<std::string> names)
    : rank_(group_rank),
      rows_(row_count),
      cols_(column_count),
      sandwich_(std::move(sandwich)),
      generators_(std::move(generators)),
      names_(std::move(names)) {
  if (rank_ < 0 || rows_ <= 0 || cols_ <= 0) {
    throw std::invalid_argument("bad Rees parameters");
  }
  if (static_cast<int32_t>(sandwich_.size()) != cols_) {
    throw std::invalid_argument("sandwich matrix must have |L| rows");
  }
  for (auto const& row : sandwich_) {
    if (static_cast<int32_t>(row.size()) != rows_) {
      throw std::invalid_argument("sandwich row must have |I| entries");
    }
    for (auto const& v : row) {
      if (static_cast<int32_t>(v.size()) != rank_) {
        throw std::invalid_argument("sandwich entry must be a Z^k vector");
      }
    }
  }
  if (names_.size() != generators_.size()) {
    throw std::invalid_argument("generator/name count mismatch");
  }
  for (auto const& g : generators_) {
    if (static_cast<int32_t>(g.size()) != rank_ + 2) {
      throw std::invalid_argument("generator triple has wrong arity");
    }
    if (g.front() < 0 || g.front() >= rows_ || g.back() < 0
        || g.back() >= cols_) {
      throw std::invalid_argument("generator index out of range");
    }
  }
}

Element ReesMatrixBackend::make_element(int32_t row,
                                        std::vector<int32_t> const& g,
                                        int32_t col) const {
  Element e;
  e.reserve(static_cast<size_t>(rank_) + 2);
  e.push_back(row);
  e.insert(e.end(), g.begin(), g.end());
  e.push_back(col);
  return e;
}

std::optional<Element> ReesMatrixBackend::product(Element const& a,
                                                  Element const& b) const {
  Element c(a);
  auto const& p = sandwich(a.back(), b.front());
  for (int32_t t = 0; t < rank_; ++t) {
    c[static_cast<size_t>(t) + 1] += p[static_cast<size_t>(t)]
                                     + b[static_cast<size_t>(t) + 1];
  }
  c.back() = b.back();
  return c;
}

std::string ReesMatrixBackend::format(Element const& e) const {
  std::string out = "(" + std::to_string(e.front() + 1) + ",";
  for (int32_t t = 0; t < rank_; ++t) {
    out += " " + std::to_string(e[static_cast<size_t>(t) + 1]);
  }
  out += ", " + std::to_string(e.back() + 1) + ")";
  return out;
}

std::vector<Element>
ReesMatrixBackend::in_neighbour_candidates(Element const& e) const {
  // u x = e with x = (j, v, m) a generator forces m = col(e), row(u) = row(e)
  // and g(u) = g(e) - p_{col(u) j} - v, for every choice of col(u).
  std::vector<Element> out;
  for (auto const& x : generators_) {
    if (x.back() != e.back()) {
      continue;
    }
    int32_t j = x.front();
    for (int32_t l = 0; l < cols_; ++l) {
      auto const&          p = sandwich(l, j);
      std::vector<int32_t> g(static_cast<size_t>(rank_));
      for (int32_t t = 0; t < rank_; ++t) {
        g[static_cast<size_t>(t)] = e[static_cast<size_t>(t) + 1]
                                    - p[static_cast<size_t>(t)]
                                    - x[static_cast<size_t>(t) + 1];
      }
      out.push_back(make_element(e.front(), g, l));
    }
  }
  return out;
}

std::shared_ptr<ReesMatrixBackend> parse_rees_file(std::string const& text) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].first.rfind("rees:", 0) != 0) {
    throw ParseError("expected \"rees: k |I| |L|\"",
                     lines.empty() ? 1 : lines[0].second, 1);
  }
  std::istringstream head(lines[0].first.substr(5));
  int32_t            k = -1, ni = 0, nl = 0;
  if (!(head >> k >> ni >> nl) || k < 0 || ni <= 0 || nl <= 0) {
    throw ParseError("bad Rees parameters", lines[0].second, 6);
  }
  if (k > 64 || static_cast<int64_t>(ni) * nl * (k + 1) > 1000000) {
    throw ParseError("Rees parameters too large", lines[0].second, 6);
  }
  if (lines.size() < static_cast<size_t>(1 + nl)) {
    throw ParseError("missing sandwich matrix rows", lines.back().second, 1);
  }
  std::vector<std::vector<std::vector<int32_t>>> sandwich(
      static_cast<size_t>(nl));
  for (int32_t l = 0; l < nl; ++l) {
    auto const& [line, ln] = lines[static_cast<size_t>(l) + 1];
    std::istringstream in(line);
    auto&              row = sandwich[static_cast<size_t>(l)];
    row.resize(static_cast<size_t>(ni));
    for (int32_t i = 0; i < ni; ++i) {
      auto& v = row[static_cast<size_t>(i)];
      v.resize(static_cast<size_t>(k));
      for (int32_t t = 0; t < k; ++t) {
        if (!(in >> v[static_cast<size_t>(t)])) {
          throw ParseError("sandwich row needs |I|*k integers", ln, 1);
        }
      }
    }
    int32_t extra;
    if (in >> extra) {
      throw ParseError("trailing entries in sandwich row", ln, 1);
    }
  }
  std::vector<Element>     gens;
  std::vector<std::string> names;
  for (size_t li = static_cast<size_t>(1 + nl); li < lines.size(); ++li) {
    auto const& [line, ln] = lines[li];
    if (line.front() != '(' || line.back() != ')') {
      throw ParseError("expected \"(i, v1 .. vk, l)\"", ln, 1);
    }
    std::string              body = line.substr(1, line.size() - 2);
    std::vector<std::string> parts;
    {
      std::istringstream in(body);
      std::string        part;
      while (std::getline(in, part, ',')) {
        parts.push_back(part);
      }
    }
    if (parts.size() != 3) {
      throw ParseError("triple must have three comma-separated parts", ln, 1);
    }
    int32_t i = 0, l = 0;
    try {
      i = std::stoi(parts[0]);
      l = std::stoi(parts[2]);
    } catch (std::exception const&) {
      throw ParseError("bad triple index", ln, 1);
    }
    if (i < 1 || i > ni || l < 1 || l > nl) {
      throw ParseError("triple index out of range", ln, 1);
    }
    std::vector<int32_t> v;
    {
      std::istringstream in(parts[1]);
      int32_t            x;
      while (in >> x) {
        v.push_back(x);
      }
    }
    if (static_cast<int32_t>(v.size()) != k) {
      throw ParseError("group vector must have k entries", ln, 1);
    }
    Element e;
    e.push_back(i - 1);
    e.insert(e.end(), v.begin(), v.end());
    e.push_back(l - 1);
    gens.push_back(std::move(e));
    names.push_back("g" + std::to_string(gens.size()));
  }
  if (gens.empty()) {
    throw ParseError("no generators", lines.back().second, 1);
  }
  return std::make_shared<ReesMatrixBackend>(k, ni, nl, std::move(sandwich),
                                             std::move(gens),
                                             std::move(names));
}

std::string to_text(ReesMatrixBackend const& b) {
  std::string out = "rees: " + std::to_string(b.group_rank()) + " "
                    + std::to_string(b.row_count()) + " "
                    + std::to_string(b.column_count()) + "\n";
  for (int32_t l = 0; l < b.column_count(); ++l) {
    for (int32_t i = 0; i < b.row_count(); ++i) {
      auto const& v = b.sandwich(l, i);
      for (int32_t t = 0; t < b.group_rank(); ++t) {
        out += (i == 0 && t == 0 ? "" : " ") + std::to_string(v[static_cast<size_t>(t)]);
      }
    }
    out += '\n';
  }
  for (size_t i = 0; i < b.generator_count(); ++i) {
    out += b.format(b.generator(i)) + "\n";
  }
  return out;
}

}  // namespace semitop
