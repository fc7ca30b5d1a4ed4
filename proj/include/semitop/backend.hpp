#ifndef SEMITOP_BACKEND_HPP_
#define SEMITOP_BACKEND_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semitop/presentation.hpp"

namespace semitop {

//! Canonical form of a semigroup element, interpreted by its backend:
//! image array for transformations (UNDEFINED_POINT for undefined points),
//! shortlex-minimal normal form for rewriting elements, and (i, v1..vk, l)
//! for Rees triples.  Vector equality is equality in S.
using Element = std::vector<int32_t>;

inline constexpr int32_t UNDEFINED_POINT = -1;

struct ElementHash {
  size_t operator()(Element const& e) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int32_t v : e) {
      h ^= static_cast<size_t>(static_cast<uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

//! Uniform element-arithmetic interface over the three concrete backends.
//! product returns nullopt only when a backend resource bound is exceeded
//! (rewriting length bound); it never returns a wrong answer.
class SemigroupBackend {
 public:
  virtual ~SemigroupBackend() = default;

  virtual size_t  generator_count() const = 0;
  virtual Element generator(size_t i) const = 0;
  virtual std::optional<Element> product(Element const& a,
                                         Element const& b) const = 0;
  //! The identity element, for backends that can represent one.
  virtual std::optional<Element> identity_element() const {
    return std::nullopt;
  }
  //! Generator names as they appeared in the input (used to pair a backend
  //! with a presentation alphabet).
  virtual std::vector<std::string> generator_names() const = 0;
  virtual std::string format(Element const& e) const = 0;
  virtual std::string backend_name() const = 0;
};

//! Partial transformations of {0..degree-1} acting on the right; an element
//! is its image array.
class TransformationBackend final : public SemigroupBackend {
 public:
  TransformationBackend(int32_t                  degree,
                        std::vector<Element>     generators,
                        std::vector<std::string> names);

  int32_t degree() const noexcept {
    return degree_;
  }
  size_t generator_count() const override {
    return generators_.size();
  }
  Element generator(size_t i) const override {
    return generators_.at(i);
  }
  std::optional<Element> product(Element const& a,
                                 Element const& b) const override;
  std::optional<Element> identity_element() const override;
  std::vector<std::string> generator_names() const override {
    return names_;
  }
  std::string format(Element const& e) const override;
  std::string backend_name() const override {
    return "transformation";
  }

  //! Compose two image arrays: x -> (x a) b, undefined-propagating.
  static Element compose(Element const& a, Element const& b);

 private:
  int32_t                  degree_;
  std::vector<Element>     generators_;
  std::vector<std::string> names_;
};

//! Rees matrix semigroup M(Z^k; I, L; P): triples (i, g, l) with
//! (i, g, l)(j, h, m) = (i, g + p_{l j} + h, m), the group Z^k written
//! additively.  Canonical form: [i, g_1..g_k, l].
class ReesMatrixBackend final : public SemigroupBackend {
 public:
  ReesMatrixBackend(int32_t group_rank,
                    int32_t row_count,
                    int32_t column_count,
                    std::vector<std::vector<std::vector<int32_t>>> sandwich,
                    std::vector<Element>     generators,
                    std::vector<std::string> names);

  int32_t group_rank() const noexcept {
    return rank_;
  }
  int32_t row_count() const noexcept {
    return rows_;
  }
  int32_t column_count() const noexcept {
    return cols_;
  }
  //! Sandwich entry p_{l i} as a Z^k vector.
  std::vector<int32_t> const& sandwich(int32_t l, int32_t i) const {
    return sandwich_.at(l).at(i);
  }

  size_t generator_count() const override {
    return generators_.size();
  }
  Element generator(size_t i) const override {
    return generators_.at(i);
  }
  std::optional<Element> product(Element const& a,
                                 Element const& b) const override;
  std::vector<std::string> generator_names() const override {
    return names_;
  }
  std::string format(Element const& e) const override;
  std::string backend_name() const override {
    return "rees";
  }

  Element make_element(int32_t row, std::vector<int32_t> const& g,
                       int32_t col) const;
  int32_t row_of(Element const& e) const {
    return e.front();
  }
  int32_t col_of(Element const& e) const {
    return e.back();
  }
  //! All u such that u x = e for some generator x; used to certify that the
  //! in-neighbourhood of a truncated Schutzenberger-graph vertex is known.
  std::vector<Element> in_neighbour_candidates(Element const& e) const;

 private:
  int32_t rank_, rows_, cols_;
  std::vector<std::vector<std::vector<int32_t>>> sandwich_;  // [l][i] -> Z^k
  std::vector<Element>     generators_;
  std::vector<std::string> names_;
};

//! Exposes a chosen list of elements of another backend as the generating
//! set; products and identity delegate to the parent.  Used to present a
//! completely enumerated semigroup by its multiplication table.
class ElementsBackend final : public SemigroupBackend {
 public:
  ElementsBackend(std::shared_ptr<SemigroupBackend const> parent,
                  std::vector<Element>                    generators,
                  std::vector<std::string>                names);

  size_t generator_count() const override {
    return generators_.size();
  }
  Element generator(size_t i) const override {
    return generators_.at(i);
  }
  std::optional<Element> product(Element const& a,
                                 Element const& b) const override {
    return parent_->product(a, b);
  }
  std::optional<Element> identity_element() const override {
    return parent_->identity_element();
  }
  std::vector<std::string> generator_names() const override {
    return names_;
  }
  std::string format(Element const& e) const override {
    return parent_->format(e);
  }
  std::string backend_name() const override {
    return parent_->backend_name();
  }

 private:
  std::shared_ptr<SemigroupBackend const> parent_;
  std::vector<Element>                    generators_;
  std::vector<std::string>                names_;
};

//! Parse the transformation backend format:
//!   degree: n
//!   <name>: [i1,i2,...,in]      (1-based, "-" for undefined)
std::shared_ptr<TransformationBackend>
parse_transformation_file(std::string const& text);

//! Parse the Rees backend format:
//!   rees: k |I| |L|
//!   <L rows of the sandwich matrix, |I| k-vectors each, whitespace-separated>
//!   (i, v1 .. vk, l)            (1-based indices)
std::shared_ptr<ReesMatrixBackend> parse_rees_file(std::string const& text);

std::string to_text(TransformationBackend const& b);
std::string to_text(ReesMatrixBackend const& b);

}  // namespace semitop
#endif  // SEMITOP_BACKEND_HPP_
