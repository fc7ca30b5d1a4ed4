#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semitop/backend.hpp"

using namespace semitop;

namespace {

std::shared_ptr<TransformationBackend> t3_backend() {
  // the standard generators: transposition, 3-cycle, rank-2 idempotent
  return std::make_shared<TransformationBackend>(
      3,
      std::vector<Element>{{1, 0, 2}, {1, 2, 0}, {0, 0, 2}},
      std::vector<std::string>{"a", "b", "e"});
}

}  // namespace

TEST_CASE("transformation composition follows the oracle") {
  auto b = t3_backend();
  auto s = b->generator(0);  // the transposition
  auto p = b->product(s, s);
  REQUIRE(p.has_value());
  CHECK(*p == Element{0, 1, 2});  // squares to the identity
  CHECK(*p == oracle::compose(s, s));

  std::mt19937 rng(12345);
  auto         all = oracle::all_transformations(3);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    auto const& x = all[pick(rng)];
    auto const& y = all[pick(rng)];
    CHECK(*b->product(x, y) == oracle::compose(x, y));
  }
}

TEST_CASE("transformation associativity on random triples") {
  auto         b = t3_backend();
  auto         all = oracle::all_transformations(3);
  std::mt19937 rng(999);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    auto const& x = all[pick(rng)];
    auto const& y = all[pick(rng)];
    auto const& z = all[pick(rng)];
    CHECK(*b->product(*b->product(x, y), z) == *b->product(x, *b->product(y, z)));
  }
}

TEST_CASE("partial maps propagate undefined points") {
  TransformationBackend b(3, {{UNDEFINED_POINT, 0, 1}}, {"f"});
  auto                  f = b.generator(0);
  auto                  p = b.product(f, f);
  CHECK(*p == Element{UNDEFINED_POINT, UNDEFINED_POINT, 0});
}

TEST_CASE("transformation file parsing") {
  auto b = parse_transformation_file(
      "degree: 3\n"
      "a: [2,1,3]\n"
      "b: [2,3,1]\n"
      "e: [1,1,3]  # rank 2\n");
  CHECK(b->degree() == 3);
  CHECK(b->generator_count() == 3);
  CHECK(b->generator(0) == Element{1, 0, 2});
  CHECK(b->generator(2) == Element{0, 0, 2});
  CHECK(b->generator_names() == std::vector<std::string>{"a", "b", "e"});

  auto partial = parse_transformation_file("degree: 2\nf: [-,1]\n");
  CHECK(partial->generator(0) == Element{UNDEFINED_POINT, 0});

  CHECK_THROWS_AS(parse_transformation_file("degree: 2\nf: [3,1]\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_transformation_file("f: [1]\n"), ParseError);

  auto again = parse_transformation_file(to_text(*b));
  CHECK(again->generator(1) == b->generator(1));
}

TEST_CASE("Rees product formula") {
  // M(Z^1; 2, 2) with p_{1,1} = (5) (0-based indices below)
  std::vector<std::vector<std::vector<int32_t>>> sandwich{
      {{0}, {0}},
      {{0}, {5}}};
  ReesMatrixBackend b(1, 2, 2, sandwich,
                      {{0, 2, 1}, {1, 3, 0}}, {"g1", "g2"});
  auto p = b.product(Element{0, 2, 1}, Element{1, 3, 0});
  CHECK(*p == Element{0, 10, 0});  // (0, 2+5+3, 0)
}

TEST_CASE("Rees associativity on random triples") {
  std::mt19937                            rng(7);
  std::uniform_int_distribution<int32_t>  v(-4, 4), ix(0, 1);
  std::vector<std::vector<std::vector<int32_t>>> sandwich{
      {{1}, {0}},
      {{-2}, {3}}};
  ReesMatrixBackend b(1, 2, 2, sandwich, {{0, 1, 0}}, {"g"});
  for (int trial = 0; trial < 300; ++trial) {
    Element x{ix(rng), v(rng), ix(rng)};
    Element y{ix(rng), v(rng), ix(rng)};
    Element z{ix(rng), v(rng), ix(rng)};
    CHECK(*b.product(*b.product(x, y), z) == *b.product(x, *b.product(y, z)));
  }
}

TEST_CASE("Rees file parsing") {
  auto b = parse_rees_file(
      "rees: 1 2 2\n"
      "0 0\n"
      "0 5\n"
      "(1, 2, 2)\n"
      "(2, 3, 1)\n");
  CHECK(b->group_rank() == 1);
  CHECK(b->row_count() == 2);
  CHECK(b->column_count() == 2);
  CHECK(b->sandwich(1, 1) == std::vector<int32_t>{5});
  CHECK(b->generator(0) == Element{0, 2, 1});
  CHECK(b->generator(1) == Element{1, 3, 0});

  auto again = parse_rees_file(to_text(*b));
  CHECK(again->generator(0) == b->generator(0));
  CHECK(again->sandwich(1, 1) == b->sandwich(1, 1));
}

TEST_CASE("backend file parsers reject garbage with parse errors") {
  std::mt19937                       rng(4242);
  std::uniform_int_distribution<int> len(0, 60);
  std::string const chars = "degre: s[],-()1234567890 \n\tabc";
  std::uniform_int_distribution<size_t> pick(0, chars.size() - 1);
  for (int trial = 0; trial < 400; ++trial) {
    std::string text;
    for (int i = 0, n = len(rng); i < n; ++i) {
      text += chars[pick(rng)];
    }
    try {
      parse_transformation_file(text);
    } catch (ParseError const&) {
    }
    try {
      parse_rees_file("rees:" + text);
    } catch (ParseError const&) {
    }
  }
}

TEST_CASE("Rees in-neighbour candidates cover the true in-edges") {
  std::vector<std::vector<std::vector<int32_t>>> zero{
      {{0}, {0}},
      {{0}, {0}}};
  std::vector<Element> gens;
  for (int32_t i = 0; i < 2; ++i) {
    for (int32_t l = 0; l < 2; ++l) {
      for (int32_t w : {-1, 0, 1}) {
        gens.push_back(Element{i, w, l});
      }
    }
  }
  std::vector<std::string> names;
  for (size_t i = 0; i < gens.size(); ++i) {
    names.push_back("g" + std::to_string(i));
  }
  ReesMatrixBackend b(1, 2, 2, zero, gens, names);
  Element           target{0, 3, 1};
  auto              candidates = b.in_neighbour_candidates(target);
  // every (u, x) with u x = target must appear among the candidates
  std::set<Element> cand(candidates.begin(), candidates.end());
  for (int32_t g = -5; g <= 5; ++g) {
    for (int32_t i = 0; i < 2; ++i) {
      for (int32_t l = 0; l < 2; ++l) {
        Element u{i, g, l};
        for (auto const& x : gens) {
          if (*b.product(u, x) == target) {
            CHECK(cand.count(u) == 1);
          }
        }
      }
    }
  }
}
