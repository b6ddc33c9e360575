#include "superchar/diagrams.hpp"

#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "testutil.hpp"

using namespace superchar;
using testutil::W;

namespace {

std::map<int, Symbol> nontrivial_symbols(const WeightDiagram& d) {
  std::map<int, Symbol> out;
  for (int p = d.lo(); p <= d.hi(); ++p)
    if (d.symbol_at(p) != Symbol::Wedge) out[p] = d.symbol_at(p);
  return out;
}

bool nested(std::pair<int, int> a, std::pair<int, int> b) {  // a strictly inside b
  return b.first < a.first && a.second < b.second;
}

bool disjoint(std::pair<int, int> a, std::pair<int, int> b) {
  return a.second < b.first || b.second < a.first;
}

}  // namespace

TEST_SUITE_BEGIN("diagrams");

TEST_CASE("build_diagram symbol placement") {
  const WeightDiagram d = build_diagram(W("10,9,8,5,4|1,4,6,8,10"));
  const std::map<int, Symbol> expect = {
      {1, Symbol::Circle}, {4, Symbol::Vee},   {5, Symbol::Cross}, {6, Symbol::Circle},
      {8, Symbol::Vee},    {9, Symbol::Cross}, {10, Symbol::Vee}};
  CHECK(nontrivial_symbols(d) == expect);
  CHECK(d.label_at(4) == 1);
  CHECK(d.label_at(8) == 2);
  CHECK(d.label_at(10) == 3);

  const WeightDiagram standard = build_diagram(W("4,2,1|1,2,3"));
  const std::map<int, Symbol> expect2 = {
      {1, Symbol::Vee}, {2, Symbol::Vee}, {3, Symbol::Circle}, {4, Symbol::Cross}};
  CHECK(nontrivial_symbols(standard) == expect2);

  const WeightDiagram typical = build_diagram(W("5,3|1,2"));
  const std::map<int, Symbol> expect3 = {
      {1, Symbol::Circle}, {2, Symbol::Circle}, {3, Symbol::Cross}, {5, Symbol::Cross}};
  CHECK(nontrivial_symbols(typical) == expect3);
  CHECK(typical.vee_count() == 0);

  CHECK_THROWS_AS(build_diagram(W("1,2|1")), NotStrictlyDominant);
}

TEST_CASE("symbol counts") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const ShiftedWeight nu = testutil::random_dominant(rng, {4, 3}, -5, 9);
    const WeightDiagram d = build_diagram(nu);
    CHECK(d.vee_count() + d.cross_count() == 4);
    CHECK(d.vee_count() + d.circle_count() == 3);
  }
}

TEST_CASE("weight_from_diagram inverts build_diagram") {
  const ShiftedWeight nu = W("10,9,8,5,4|1,4,6,8,10");
  CHECK(weight_from_diagram(build_diagram(nu)) == nu);

  WeightDiagram d(0, 6);
  d.set(3, Symbol::Cross);
  d.set(5, Symbol::Cross);
  d.set(1, Symbol::Circle);
  d.set(2, Symbol::Circle);
  CHECK(weight_from_diagram(d) == W("5,3|1,2"));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const AlgebraShape shape{1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4)};
    const ShiftedWeight w = testutil::random_dominant(rng, shape, -6, 10);
    CHECK(weight_from_diagram(build_diagram(w)) == w);
  }
}

TEST_CASE("cap matching on the worked examples") {
  using Caps = std::vector<std::pair<int, int>>;
  CHECK(cap_matching(build_diagram(W("10,9,8,5,4|1,4,6,8,10"))).caps ==
        Caps{{4, 7}, {8, 12}, {10, 11}});
  CHECK(cap_matching(build_diagram(W("4,2,1|1,2,3"))).caps == Caps{{1, 6}, {2, 5}});
  CHECK(cap_matching(build_diagram(W("3,1|1,3"))).caps == Caps{{1, 2}, {3, 4}});
  CHECK(cap_matching(build_diagram(W("4,2,1|1,2,4"))).caps == Caps{{1, 6}, {2, 3}, {4, 5}});
  CHECK(cap_matching(build_diagram(W("5,2,1|1,2,5"))).caps == Caps{{1, 4}, {2, 3}, {5, 6}});

  // vee_1 at 2 marks 3, vee_2 at 7 marks 11, vee_3 at 8 marks 10
  const CapMatching marks = cap_matching(build_diagram(W("8,7,6,2,1|2,5,7,8,9")));
  CHECK(marks.partner_of(2) == 3);
  CHECK(marks.partner_of(7) == 11);
  CHECK(marks.partner_of(8) == 10);
}

TEST_CASE("caps never cross") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const ShiftedWeight& nu : enumerate_strictly_dominant({m, n}, -2, 4)) {
        const auto caps = cap_matching(build_diagram(nu)).caps;
        for (std::size_t i = 0; i < caps.size(); ++i)
          for (std::size_t j = i + 1; j < caps.size(); ++j)
            CHECK((nested(caps[i], caps[j]) || nested(caps[j], caps[i]) ||
                   disjoint(caps[i], caps[j])));
      }
}

TEST_CASE("components of the worked examples") {
  const ComponentDecomposition c1 = components(build_diagram(W("10,9,8,5,4|1,4,6,8,10")));
  REQUIRE(c1.components.size() == 2);
  CHECK(c1.components[0].lo == 4);
  CHECK(c1.components[0].hi == 6);
  CHECK(c1.components[1].lo == 8);
  CHECK(c1.components[1].hi == 10);
  CHECK(c1.t == std::vector<int>{1, 2});
  CHECK(c1.s == std::vector<int>{1});
  CHECK(c1.t_lambda == 2);
  CHECK(c1.slot_component == std::vector<int>{0, 1, 1});
  CHECK_FALSE(c1.same_component(0, 1));
  CHECK(c1.same_component(1, 2));

  const ComponentDecomposition c2 = components(build_diagram(W("3,1|1,3")));
  CHECK(c2.t == std::vector<int>{1, 1});
  CHECK(c2.s == std::vector<int>{1});
  CHECK(c2.t_lambda == 1);

  const ComponentDecomposition c3 = components(build_diagram(W("4,2,1|1,2,4")));
  REQUIRE(c3.components.size() == 2);
  CHECK(c3.components[0].vee_positions == std::vector<int>{1, 2});
  CHECK(c3.components[1].vee_positions == std::vector<int>{4});
  CHECK(c3.t == std::vector<int>{2, 1});
  CHECK(c3.s == std::vector<int>{1});
  CHECK(c3.t_lambda == 2);

  CHECK(components(build_diagram(W("5,3|1,2"))).components.empty());
  CHECK(components(build_diagram(W("5,3|1,2"))).t_lambda == 1);
}

TEST_CASE("classification of the five reference weights") {
  const ClassificationFlags f1 = classify(W("10,9,8,5,4|1,4,6,8,10"));
  CHECK(f1.pdc);
  CHECK_FALSE(f1.totally_connected);
  CHECK_FALSE(f1.totally_disconnected);

  const ClassificationFlags f2 = classify(W("4,2,1|1,2,3"));
  CHECK(f2.totally_connected);
  CHECK(f2.pdc);
  CHECK_FALSE(f2.totally_disconnected);

  const ClassificationFlags f3 = classify(W("3,1|1,3"));
  CHECK(f3.totally_disconnected);
  CHECK(f3.pdc);
  CHECK_FALSE(f3.totally_connected);

  const ClassificationFlags f4 = classify(W("4,2,1|1,2,4"));
  CHECK_FALSE(f4.pdc);

  const ClassificationFlags f5 = classify(W("5,2,1|1,2,5"));
  CHECK(f5.pdc);
  CHECK_FALSE(f5.totally_connected);
  CHECK_FALSE(f5.totally_disconnected);

  const ClassificationFlags typical = classify(W("5,3|1,2"));
  CHECK(typical.typical);
  CHECK(typical.totally_connected);
  CHECK(typical.totally_disconnected);
  CHECK(typical.pdc);
}

TEST_CASE("atypicality at most two is TC or TDC") {
  for (const ShiftedWeight& nu : enumerate_strictly_dominant({2, 2}, -2, 4)) {
    const ClassificationFlags f = classify(nu);
    CHECK((f.totally_connected || f.totally_disconnected));
    CHECK(f.pdc);
  }
}

TEST_CASE("nesting characterizations match the wedge-gap definitions") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const ShiftedWeight& nu : enumerate_strictly_dominant({m, n}, -2, 4)) {
        const auto caps = cap_matching(build_diagram(nu)).caps;
        const ClassificationFlags f = classify(nu);

        bool rainbow = true;     // every two caps nested
        bool no_nesting = true;  // every two caps disjoint
        for (std::size_t i = 0; i < caps.size(); ++i)
          for (std::size_t j = i + 1; j < caps.size(); ++j) {
            const bool n1 = nested(caps[i], caps[j]) || nested(caps[j], caps[i]);
            rainbow = rainbow && n1;
            no_nesting = no_nesting && !n1;
          }
        CHECK(f.totally_connected == rainbow);
        CHECK(f.totally_disconnected == no_nesting);

        bool chained_under_common = true;  // two caps under one cap are nested
        for (std::size_t c = 0; c < caps.size(); ++c)
          for (std::size_t i = 0; i < caps.size(); ++i)
            for (std::size_t j = i + 1; j < caps.size(); ++j)
              if (i != c && j != c && nested(caps[i], caps[c]) && nested(caps[j], caps[c]))
                chained_under_common = chained_under_common &&
                                       (nested(caps[i], caps[j]) || nested(caps[j], caps[i]));
        CHECK(f.pdc == chained_under_common);
      }
}

TEST_CASE("uparrow") {
  CHECK(uparrow(W("10,9,8,5,4|1,4,6,8,10")) == W("10,9,10,5,4|1,4,6,10,10"));
  CHECK(uparrow(W("3,1|1,3")) == W("3,1|1,3"));  // totally disconnected: unchanged
  CHECK(uparrow(W("4,2,1|1,2,3")) == W("4,2,2|2,2,3"));
  CHECK_THROWS_AS(uparrow(W("4,2,1|1,2,4")), NotPDC);

  // raised values reproduce themselves under a second max-replacement
  const ShiftedWeight lambda = W("10,9,8,5,4|1,4,6,8,10");
  const ShiftedWeight up = uparrow(lambda);
  const auto comp = components(build_diagram(lambda));
  const auto s_roots = atypical_roots(lambda);
  for (std::size_t i = 0; i < s_roots.size(); ++i) {
    const int c = comp.slot_component[i];
    const std::int64_t top = comp.components[static_cast<std::size_t>(c)].vee_positions.back();
    CHECK(up.a(s_roots[i].p).integer() == top);
  }
}

TEST_CASE("s_norm") {
  const ShiftedWeight lambda = W("10,9,8,5,4|1,4,6,8,10");
  const auto s_roots = atypical_roots(lambda);
  CHECK(s_norm(uparrow(lambda) - lambda, s_roots) == 2);
  CHECK(s_norm(ShiftedWeight::zero(lambda.shape()), s_roots) == 0);

  const ShiftedWeight combo = weight_of(s_roots[0], lambda.shape()) +
                              weight_of(s_roots[2], lambda.shape()).scaled(3);
  CHECK(s_norm(combo, s_roots) == 4);

  CHECK_THROWS_AS(s_norm(W("1,0,0,0,0|1,0,0,0,0"), s_roots), NotInSpan);
}

TEST_CASE("uparrow never lowers and stays in the span") {
  std::mt19937_64 rng(31);
  int seen = 0;
  while (seen < 25) {
    const ShiftedWeight nu = testutil::random_dominant(rng, {3, 3}, -3, 6);
    if (!classify(nu).pdc) continue;
    ++seen;
    const std::int64_t raised = s_norm(uparrow(nu) - nu, atypical_roots(nu));
    CHECK(raised >= 0);
  }
}

TEST_CASE("diagrams translate with the weight") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const ShiftedWeight nu = testutil::random_dominant(rng, {3, 2}, -4, 6);
    const WeightDiagram d = build_diagram(nu);
    const WeightDiagram moved = build_diagram(nu.shifted_by(HalfInt(5)));
    for (int p = d.lo(); p <= d.hi(); ++p) CHECK(d.symbol_at(p) == moved.symbol_at(p + 5));
    CHECK(classify(nu) == classify(nu.shifted_by(HalfInt(5))));
  }
}

TEST_CASE("ascii rendering is deterministic and labeled") {
  const std::string pic = render_ascii(build_diagram(W("10,9,8,5,4|1,4,6,8,10")));
  CHECK(pic == render_ascii(build_diagram(W("10,9,8,5,4|1,4,6,8,10"))));
  CHECK(pic.find('v') != std::string::npos);
  CHECK(pic.find('x') != std::string::npos);
  CHECK(pic.find('o') != std::string::npos);
  CHECK(pic.find("10") != std::string::npos);
  CHECK(pic.find("└") != std::string::npos);
}

TEST_SUITE_END();
