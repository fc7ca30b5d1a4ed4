#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "semitop/semigroup.hpp"

using namespace semitop;

namespace {

ConcreteSemigroup bicyclic() {
  return semigroup_from_presentation(
      parse_presentation("monoid; generators: b c; b c = 1"));
}

ConcreteSemigroup t3() {
  auto backend = std::make_shared<TransformationBackend>(
      3,
      std::vector<Element>{{1, 0, 2}, {1, 2, 0}, {0, 0, 2}},
      std::vector<std::string>{"a", "b", "e"});
  return ConcreteSemigroup(backend);
}

}  // namespace

TEST_CASE("evaluate: bicyclic normal forms") {
  auto S = bicyclic();
  CHECK(*S.evaluate(Word{0, 1, 0}) == Element{0});  // b c b -> b
  CHECK(*S.evaluate(Word{1, 0}) == Element{1, 0});  // c b is already normal
  CHECK(*S.evaluate(Word{}) == Element{});          // monoid identity
}

TEST_CASE("evaluate: single generator is the generator") {
  auto S = t3();
  CHECK(*S.evaluate(Word{2}) == Element{0, 0, 2});
  CHECK(*S.evaluate(Word{0, 0}) == Element{0, 1, 2});  // a a = id
  CHECK_THROWS(S.evaluate(Word{}));  // semigroup kind has no empty word
}

TEST_CASE("evaluate is a homomorphism (random splits)") {
  auto                                   S = bicyclic();
  std::mt19937                           rng(55);
  std::uniform_int_distribution<int32_t> letter(0, 1);
  std::uniform_int_distribution<size_t>  len(1, 10);
  for (int trial = 0; trial < 200; ++trial) {
    Word w(len(rng));
    for (auto& x : w) {
      x = letter(rng);
    }
    std::uniform_int_distribution<size_t> cut(0, w.size());
    size_t c = cut(rng);
    Word   u(w.begin(), w.begin() + static_cast<long>(c));
    Word   v(w.begin() + static_cast<long>(c), w.end());
    auto   whole = S.evaluate(w);
    auto   parts = S.multiply(*S.evaluate(u), *S.evaluate(v));
    CHECK(*whole == *parts);
  }
}

TEST_CASE("enumerate: bicyclic level sizes match the closed form") {
  auto S = bicyclic();
  auto E = enumerate(S, 12);
  CHECK(E.completeness == Completeness::truncated);
  CHECK(E.monoid);
  for (int n = 0; n <= 12; ++n) {
    CHECK(static_cast<int64_t>(E.count_up_to(static_cast<size_t>(n)))
          == oracle::Bicyclic::count_up_to(n));
    CHECK(static_cast<int64_t>(E.count_up_to(static_cast<size_t>(n)))
          == static_cast<int64_t>((n + 1) * (n + 2) / 2));
  }
  CHECK(E.count_up_to(3) == 10);
}

TEST_CASE("enumerate: free commutative monoid has multiset counts") {
  auto S = semigroup_from_presentation(
      parse_presentation("monoid; generators: a b; a b = b a"));
  auto E = enumerate(S, 3);
  CHECK(E.count_up_to(3) == 10);
}

TEST_CASE("enumerate: T3 closes at 27 elements") {
  auto S = t3();
  auto E = enumerate(S, 24);
  CHECK(E.completeness == Completeness::complete);
  CHECK(E.size() == 27);
  CHECK(E.size() == oracle::all_transformations(3).size());
  // same elements as the brute-force universe
  auto all = oracle::all_transformations(3);
  std::set<Element> universe(all.begin(), all.end());
  for (auto const& e : E.elements) {
    CHECK(universe.count(e) == 1);
  }
}

TEST_CASE("enumerate: witnesses evaluate to their elements and are minimal") {
  auto S = bicyclic();
  auto E = enumerate(S, 5);
  for (size_t i = 0; i < E.size(); ++i) {
    CHECK(*S.evaluate(E.witnesses[i]) == E.elements[i]);
  }
  // minimality: no strictly shorter word evaluates to the same element
  for (size_t i = 0; i < E.size(); ++i) {
    size_t const target = E.witnesses[i].size();
    if (target == 0) {
      continue;
    }
    std::vector<Word> words{Word{}};
    for (size_t len = 0; len + 1 < target; ++len) {
      std::vector<Word> next;
      for (auto const& w : words) {
        for (letter_type x : {0, 1}) {
          Word w2 = w;
          w2.push_back(x);
          if (!w2.empty()) {
            CHECK(*S.evaluate(w2) != E.elements[i]);
          }
          next.push_back(std::move(w2));
        }
      }
      words = std::move(next);
    }
  }
}

TEST_CASE("enumerate: levels are monotone and Cayley rows consistent") {
  auto S = t3();
  auto E = enumerate(S, 24);
  for (size_t l = 1; l < E.level_end.size(); ++l) {
    CHECK(E.level_end[l] >= E.level_end[l - 1]);
  }
  for (size_t s = 0; s < E.size(); ++s) {
    for (size_t x = 0; x < 3; ++x) {
      auto ix = E.right_cayley[s][x];
      REQUIRE(ix >= 0);
      auto direct = S.multiply(E.elements[s], S.backend().generator(x));
      CHECK(E.elements[static_cast<size_t>(ix)] == *direct);
      auto lx = E.left_cayley[s][x];
      REQUIRE(lx >= 0);
      auto ldirect = S.multiply(S.backend().generator(x), E.elements[s]);
      CHECK(E.elements[static_cast<size_t>(lx)] == *ldirect);
    }
  }
}

TEST_CASE("enumerate: associativity over enumerated triples") {
  auto S = bicyclic();
  auto E = enumerate(S, 4);
  for (auto const& a : E.elements) {
    for (auto const& b : E.elements) {
      for (auto const& c : E.elements) {
        CHECK(*S.multiply(*S.multiply(a, b), c)
              == *S.multiply(a, *S.multiply(b, c)));
      }
    }
  }
}

TEST_CASE("presentation relations hold in their backends") {
  CHECK(!bicyclic().check_relations().has_value());
  auto S = semigroup_from_presentation(
      parse_presentation("monoid; generators: s t; s s = 1; t t = 1; "
                         "s t s = t s t"));
  CHECK(!S.check_relations().has_value());
}

TEST_CASE("rewriting bound produces unknown-equality completeness") {
  auto p  = parse_presentation("monoid; generators: b c; b c = 1");
  auto kb = bounded_knuth_bendix(p, 512, 64, /* length_bound */ 6);
  ConcreteSemigroup S(kb.backend, p);
  auto              E = enumerate(S, 8);
  CHECK(E.completeness == Completeness::unknown_equality);
}

TEST_CASE("idempotents of T3 number ten") {
  auto S = t3();
  auto E = enumerate(S, 24);
  // oracle: count maps f with f(f(x)) = f(x) for all x
  auto   all   = oracle::all_transformations(3);
  size_t count = 0;
  for (auto const& f : all) {
    if (oracle::compose(f, f) == f) {
      ++count;
    }
  }
  CHECK(idempotents(S, E).size() == count);
  CHECK(count == 10);
}
