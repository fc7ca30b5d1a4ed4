#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "semitop/pipeline.hpp"

using namespace semitop;

namespace {

ConcreteSemigroup t3() {
  auto backend = std::make_shared<TransformationBackend>(
      3,
      std::vector<Element>{{1, 0, 2}, {1, 2, 0}, {0, 0, 2}},
      std::vector<std::string>{"a", "b", "e"});
  return ConcreteSemigroup(backend);
}

size_t class_of_rank(EnumerationResult const& E, GreenData const& G,
                     size_t size, size_t rank) {
  for (size_t r = 0; r < G.r_classes.size(); ++r) {
    auto const& f = E.elements[static_cast<size_t>(G.r_classes[r][0])];
    if (G.r_classes[r].size() == size
        && std::set<int32_t>(f.begin(), f.end()).size() == rank) {
      return r;
    }
  }
  REQUIRE(false);
  return 0;
}

PartialAction ray_action(int32_t m) {
  PartialAction A;
  A.vertex_count = m;
  A.maps.assign(2, std::vector<int32_t>(static_cast<size_t>(m),
                                        UNDEFINED_POINT));
  for (int32_t j = 0; j + 1 < m; ++j) {
    A.maps[0][static_cast<size_t>(j)] = j + 1;
  }
  for (int32_t j = 1; j < m; ++j) {
    A.maps[1][static_cast<size_t>(j)] = j - 1;
  }
  A.vertex_set_complete = false;
  return A;
}

}  // namespace

TEST_CASE("stabilizer condition certification") {
  SUBCASE("right-regular group actions hold via the identity left zero") {
    for (int n : {2, 3, 4, 6}) {
      std::string text = "monoid; generators: a; ";
      for (int i = 0; i < n; ++i) {
        text += "a ";
      }
      text += "= 1";
      auto S = semigroup_from_presentation(parse_presentation(text));
      auto E = enumerate(S, 2 * static_cast<size_t>(n));
      REQUIRE(E.completeness == Completeness::complete);
      auto A   = right_regular_action(E);
      auto res = check_stabilizer_condition(S, E, A, 100000);
      CHECK(res.verdict == StabCheckResult::Verdict::holds);
      CHECK(res.certified);
    }
  }
  SUBCASE("T3 rank-2 class holds at the idempotent vertex") {
    auto S = t3();
    auto E = enumerate(S, 24);
    auto G = green_relations(S, E);
    auto A = action_on_r_class(E, G, class_of_rank(E, G, 6, 2));
    auto res = check_stabilizer_condition(S, E, A, 100000);
    CHECK(res.verdict == StabCheckResult::Verdict::holds);
    CHECK(res.certified);
    CHECK(res.method == "left-zero");
  }
  SUBCASE("truncated bicyclic ray: holds only up to the bound") {
    auto S = semigroup_from_presentation(
        parse_presentation("monoid; generators: b c; b c = 1"));
    auto E = enumerate(S, 8);
    auto A = ray_action(9);
    auto res = check_stabilizer_condition(S, E, A, 100000);
    CHECK(res.verdict == StabCheckResult::Verdict::holds);
    CHECK(!res.certified);
  }
  SUBCASE("a genuine failure: C2 acting on a point") {
    auto S = semigroup_from_presentation(
        parse_presentation("monoid; generators: g; g g = 1"));
    auto          E = enumerate(S, 4);
    PartialAction A;
    A.vertex_count = 1;
    A.maps         = {{0}};
    auto res = check_stabilizer_condition(S, E, A, 100000);
    CHECK(res.verdict == StabCheckResult::Verdict::fails_at_bound);
  }
}

TEST_CASE("schutzenberger_presentation end to end") {
  SUBCASE("T3 rank-2 R-class presents a group of order 2") {
    auto S = t3();
    auto E = enumerate(S, 24);
    auto G = green_relations(S, E);
    auto res = schutzenberger_presentation(S, E, G,
                                           class_of_rank(E, G, 6, 2), {});
    CHECK(!res.stabilizer_asserted);
    CHECK(res.automorphisms.size() == 2);
    REQUIRE(res.analysis.order_kind == OrderKind::exact);
    CHECK(res.analysis.order == 2);
  }
  SUBCASE("the unit R-class of T3 presents S3") {
    auto S = t3();
    auto E = enumerate(S, 24);
    auto G = green_relations(S, E);
    auto res = schutzenberger_presentation(S, E, G,
                                           class_of_rank(E, G, 6, 3), {});
    REQUIRE(res.analysis.order_kind == OrderKind::exact);
    CHECK(res.analysis.order == 6);
    CHECK(res.automorphisms.size() == 6);
  }
  SUBCASE("the constant R-class of T3 presents the trivial group") {
    auto S = t3();
    auto E = enumerate(S, 24);
    auto G = green_relations(S, E);
    auto res = schutzenberger_presentation(S, E, G,
                                           class_of_rank(E, G, 3, 1), {});
    REQUIRE(res.analysis.order_kind == OrderKind::exact);
    CHECK(res.analysis.order == 1);
  }
  SUBCASE("a finite group is recovered as its own R-class") {
    auto S = semigroup_from_presentation(
        parse_presentation("monoid; generators: a; a a a a = 1"));
    auto E = enumerate(S, 8);
    auto G = green_relations(S, E);
    REQUIRE(G.r_classes.size() == 1);
    auto res = schutzenberger_presentation(S, E, G, 0, {});
    REQUIRE(res.analysis.order_kind == OrderKind::exact);
    CHECK(res.analysis.order == 4);
    // finite generation: raw generator count is edges minus tree edges
    auto const& K = res.quotient_complex;
    CHECK(res.raw_generator_count
          == K.edges.size() - (static_cast<size_t>(K.vertex_count) - 1));
  }
}

TEST_CASE("pipeline refuses an uncertified stabilizer condition") {
  // C2 acting on itself has stab {1}, fine; instead feed the one-point
  // action through a semigroup whose stabilizer is all of C2 by presenting
  // C2 and quotienting the R-class action fully: the R-class of the
  // identity of C2 as a SEMIGROUP <a | a^3 = a> has stab {a^2} at each
  // vertex, which is trivial, so build the failing case directly instead:
  // the two-element group acting on one point is not exposed through
  // R-classes, so check the refusal through the stabilizer checker's
  // verdict by asserting on a constructed SchutzPresentation call with a
  // doctored action is out of scope here; the Refusal path is covered by
  // requesting an R-class of a truncated enumeration below.
  auto S = semigroup_from_presentation(
      parse_presentation("monoid; generators: b c; b c = 1"));
  auto E = enumerate(S, 6);
  auto G = green_relations(S, E);
  CHECK_THROWS_AS(schutzenberger_presentation(S, E, G, 0, {}), Refusal);
}

TEST_CASE("reidemeister subgroup presentations") {
  auto s3 = parse_presentation(
      "monoid; generators: s t; s s = 1; t t = 1; s t s = t s t");

  SUBCASE("S3 over <s>") {
    auto res = reidemeister_subgroup_presentation(s3, {Word{0}}, {});
    CHECK(res.group_order == 6);
    CHECK(res.subgroup_order == 2);
    REQUIRE(res.analysis.order_kind == OrderKind::exact);
    CHECK(res.analysis.order == 2);
    CHECK(res.quotient_complex.vertex_count == 3);  // index 3
  }
  SUBCASE("S3 over A3 = <st>") {
    auto res = reidemeister_subgroup_presentation(s3, {Word{0, 1}}, {});
    CHECK(res.subgroup_order == 3);
    REQUIRE(res.analysis.order_kind == OrderKind::exact);
    CHECK(res.analysis.order == 3);
  }
  SUBCASE("Z4 over 2Z4") {
    auto z4 = parse_presentation("monoid; generators: a; a a a a = 1");
    auto res = reidemeister_subgroup_presentation(z4, {Word{0, 0}}, {});
    CHECK(res.group_order == 4);
    CHECK(res.subgroup_order == 2);
    REQUIRE(res.analysis.order_kind == OrderKind::exact);
    CHECK(res.analysis.order == 2);
  }
  SUBCASE("trivial subgroup presents the trivial group") {
    auto res = reidemeister_subgroup_presentation(s3, {}, {});
    CHECK(res.subgroup_order == 1);
    REQUIRE(res.analysis.order_kind == OrderKind::exact);
    CHECK(res.analysis.order == 1);
    CHECK(res.quotient_complex.vertex_count == 6);
  }
  SUBCASE("the whole group presents the group") {
    auto res = reidemeister_subgroup_presentation(s3, {Word{0}, Word{1}}, {});
    CHECK(res.subgroup_order == 6);
    REQUIRE(res.analysis.order_kind == OrderKind::exact);
    CHECK(res.analysis.order == 6);
    CHECK(res.quotient_complex.vertex_count == 1);
  }
  SUBCASE("non-groups are refused") {
    auto bicyclic = parse_presentation("monoid; generators: b c; b c = 1");
    CHECK_THROWS_AS(
        reidemeister_subgroup_presentation(bicyclic, {Word{0}}, {}),
        Refusal);
  }
}

TEST_CASE("homotopy witnesses") {
  auto P = parse_presentation("monoid; generators: b c; b c = 1");
  auto A = ray_action(5);
  auto K = build_action_complex(P, A, false);
  auto kb = bounded_knuth_bendix(P);

  SUBCASE("u = v gives the empty certificate") {
    auto cert = homotopy_witness(K, P, 0, Word{0}, Word{0}, {});
    REQUIRE(cert.has_value());
    CHECK(cert->faces.empty());
  }
  SUBCASE("bcb to b uses the single face at the basepoint") {
    auto cert = homotopy_witness(K, P, *kb.backend, 0, Word{0, 1, 0},
                                 Word{0});
    REQUIRE(cert.has_value());
    REQUIRE(cert->faces.size() == 1);
    CHECK(K.faces[static_cast<size_t>(cert->faces[0])].basepoint == 0);
    CHECK(cert->conjugators[0].empty());
  }
  SUBCASE("missing faces give not-applicable") {
    // at the truncated end the face for bc=1 does not exist
    std::vector<DerivationStep> step{{0, 0, true}};
    auto cert = homotopy_witness(K, P, 4, Word{0, 1}, Word{}, step);
    CHECK(!cert.has_value());
  }
  SUBCASE("inconsistent derivations are rejected") {
    std::vector<DerivationStep> step{{1, 0, true}};  // no bc at position 1
    CHECK_THROWS_AS(homotopy_witness(K, P, 0, Word{0, 1, 0}, Word{0}, step),
                    std::invalid_argument);
  }
  SUBCASE("the certified loop is trivial in pi1 (coset table check)") {
    auto chart = pi1_chart(K, 0);
    auto pres  = pi1_presentation(K, chart);
    auto an    = analyze_group(pres, 10000);
    REQUIRE(an.order_kind == OrderKind::exact);
    REQUIRE(an.coset_table.has_value());
    auto word = loop_word_in_pi1(K, chart, 0, Word{0, 1, 0}, Word{0});
    CHECK(an.coset_table->trace(0, word) == 0);
  }
  SUBCASE("aa to a on the one-vertex complex") {
    auto P2 = parse_presentation("semigroup; generators: a; a a = a");
    PartialAction A2;
    A2.vertex_count = 1;
    A2.maps         = {{0}};
    auto K2  = build_action_complex(P2, A2);
    auto kb2 = bounded_knuth_bendix(P2);
    auto cert = homotopy_witness(K2, P2, *kb2.backend, 0, Word{0, 0},
                                 Word{0});
    REQUIRE(cert.has_value());
    CHECK(cert->faces.size() == 1);
  }
}

TEST_CASE("derived rewrite rules make traces not-applicable") {
  // completion of <a, b | ab = b, ba = a> derives aa -> a and bb -> b,
  // which carry no relation provenance
  auto P  = parse_presentation("semigroup; generators: a b; a b = b; b a = a");
  auto kb = bounded_knuth_bendix(P);
  REQUIRE(kb.complete);
  CHECK(kb.backend->rules().size() > 2);
  CHECK(!kb.backend->rules_trace_relations());

  PartialAction A;  // the one-point action satisfies both relations
  A.vertex_count = 1;
  A.maps         = {{0}, {0}};
  auto K = build_action_complex(P, A);
  CHECK(!homotopy_witness(K, P, *kb.backend, 0, Word{0, 0}, Word{0})
             .has_value());
}

TEST_CASE("a homotopy certificate against a non-trivial pi1") {
  // Z4 quotient complex: single vertex, loop a, face a^4 = 1
  auto P = parse_presentation("monoid; generators: a; a a a a = 1");
  TwoComplex K;
  K.vertex_count = 1;
  K.labels       = {"a"};
  K.edges.push_back(Edge{0, 0, 0, 0});
  K.faces.push_back(Face{0, 0, {0, 0, 0, 0}, {}});

  std::vector<DerivationStep> step{{0, 0, true}};  // a^4 -> empty
  auto cert = homotopy_witness(K, P, 0, Word{0, 0, 0, 0}, Word{}, step);
  REQUIRE(cert.has_value());

  auto chart = pi1_chart(K, 0);
  auto pres  = pi1_presentation(K, chart);
  auto an    = analyze_group(pres, 10000);
  REQUIRE(an.order_kind == OrderKind::exact);
  CHECK(an.order == 4);
  auto word = loop_word_in_pi1(K, chart, 0, Word{0, 0, 0, 0}, Word{});
  CHECK(an.coset_table->trace(0, word) == 0);   // a^4 is trivial
  auto wrong = loop_word_in_pi1(K, chart, 0, Word{0, 0, 0}, Word{});
  CHECK(an.coset_table->trace(0, wrong) != 0);  // a^3 is not
}
