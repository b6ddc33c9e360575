#include "superchar/paths.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "testutil.hpp"

using namespace superchar;
using testutil::W;

namespace {

// the worked gl(5|5) pair; mu's weight is read off the printed diagram
const char* kLambda55 = "10,9,8,5,4|1,4,6,8,10";
const char* kMu55 = "9,8,7,5,2|1,2,6,7,8";

}  // namespace

TEST_SUITE_BEGIN("paths");

TEST_CASE("single right moves") {
  const WeightDiagram d = build_diagram(W("8,7,6,2,1|2,5,7,8,9"));

  const WeightDiagram r1 = apply_right_move(d, 1);
  CHECK(r1.position_of_label(1) == 3);
  CHECK(r1.symbol_at(2) == Symbol::Wedge);

  const WeightDiagram r2 = apply_right_move(d, 2);
  CHECK(r2.position_of_label(2) == 11);

  const WeightDiagram r3 = apply_right_move(d, 3);
  CHECK(r3.position_of_label(3) == 10);

  // after R3, vee_2 marks the freed spot at 8
  CHECK(apply_right_move(r3, 2).position_of_label(2) == 8);

  CHECK_THROWS_AS(apply_right_move(d, 4), NoSuchLabel);
}

TEST_CASE("trivial path of the worked pair") {
  const Path p = trivial_path(W(kMu55), W(kLambda55));
  CHECK(p.length() == 4);
  CHECK(p.counts == std::vector<int>{2, 1, 1});
  CHECK(p.moves_str() == "R1^2 R2 R3");
  CHECK(p.sigma.is_identity());
  CHECK(p.endpoint == build_diagram(W(kLambda55)));
}

TEST_CASE("trivial path edge cases") {
  const Path self = trivial_path(W("3,1|1,3"), W("3,1|1,3"));
  CHECK(self.length() == 0);
  CHECK(self.moves_str() == "(empty)");

  CHECK(trivial_length(W("3,2,1|1,2,3"), W("7,5,4|4,5,7")) == 10);

  CHECK_THROWS_AS(trivial_path(W("3,2|2,3"), W("3,1|1,3")), NotComparable);
}

TEST_CASE("two paths to the non-pdc adjoint-type target") {
  auto paths = enumerate_paths(W("3,2,1|1,2,3"), W("7,5,4|4,5,7"));
  REQUIRE(paths.size() == 2);
  std::sort(paths.begin(), paths.end(),
            [](const Path& x, const Path& y) { return x.length() < y.length(); });

  CHECK(paths[0].length() == 8);
  CHECK(paths[0].counts == std::vector<int>{3, 3, 2});
  CHECK(paths[0].moves_str() == "R1^3 R2^3 R3^2");
  CHECK(paths[0].sigma.cycles() == "(2 3)");

  CHECK(paths[1].length() == 10);
  CHECK(paths[1].sigma.is_identity());

  CHECK(paths[0].length() % 2 == paths[1].length() % 2);
}

TEST_CASE("unique path for the worked gl(5|5) pair") {
  const auto paths = enumerate_paths(W(kMu55), W(kLambda55));
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].length() == 4);
  CHECK(paths[0].sigma.is_identity());
}

TEST_CASE("path enumeration edge cases") {
  const auto self = enumerate_paths(W("3,1|1,3"), W("3,1|1,3"));
  REQUIRE(self.size() == 1);
  CHECK(self[0].length() == 0);

  // typical entries living on the other side: incomparable, no paths
  CHECK(enumerate_paths(W("8,7,6,2,1|2,5,7,8,9"), W(kLambda55)).empty());
  CHECK(enumerate_paths(W("3,2|2,3"), W("3,1|1,3")).empty());
}

TEST_CASE("kl polynomials") {
  CHECK(kl_polynomial(W("7,5,4|4,5,7"), W("3,2,1|1,2,3")).str() == "q^8 + q^10");
  CHECK(kl_polynomial(W("3,1|1,3"), W("3,1|1,3")).str() == "1");
  CHECK(kl_polynomial(W(kLambda55), W(kMu55)).str() == "q^4");

  const KLPolynomial kl = kl_polynomial(W("7,5,4|4,5,7"), W("3,2,1|1,2,3"));
  CHECK(kl.evaluate(1) == 2);
  CHECK(kl.evaluate(-1) == 2);  // both lengths even
}

TEST_CASE("theta images") {
  CHECK(theta(trivial_path(W(kMu55), W(kLambda55))).is_identity());

  // totally connected target: only the trivial path, for every mu below it
  const ShiftedWeight tc = W("4,2,1|1,2,3");
  for (const ShiftedWeight& mu : enumerate_p_lambda(tc, 6)) {
    const auto paths = enumerate_paths(mu, tc);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].sigma.is_identity());
  }
}

TEST_CASE("path length parity, maximality, and injectivity of theta") {
  const ShiftedWeight lambda = W("3,1|1,3");
  for (const ShiftedWeight& mu : enumerate_p_lambda(lambda, 8)) {
    const auto paths = enumerate_paths(mu, lambda);
    REQUIRE(!paths.empty());
    const long l_trivial = trivial_length(mu, lambda);
    std::set<Perm> sigmas;
    long longest = 0;
    int longest_count = 0;
    for (const Path& p : paths) {
      CHECK((p.length() - l_trivial) % 2 == 0);
      sigmas.insert(p.sigma);
      if (p.length() > longest) {
        longest = p.length();
        longest_count = 1;
      } else if (p.length() == longest) {
        ++longest_count;
      }
    }
    CHECK(sigmas.size() == paths.size());
    CHECK(longest == l_trivial);
    CHECK(longest_count == 1);
  }
}

TEST_CASE("totally disconnected targets reach the full permutation count") {
  const ShiftedWeight lambda = W("3,1|1,3");  // r = 2
  bool found_two = false;
  for (const ShiftedWeight& mu : enumerate_p_lambda(lambda, 8))
    found_two = found_two || enumerate_paths(mu, lambda).size() == 2;
  CHECK(found_two);
}

TEST_CASE("path existence matches the partial order") {
  const auto corpus = enumerate_strictly_dominant({2, 2}, -1, 3);
  for (const ShiftedWeight& lambda : corpus)
    for (const ShiftedWeight& mu : corpus) {
      const bool has_path = !enumerate_paths(mu, lambda).empty();
      CHECK(has_path == preceq(mu, lambda));
    }
}

TEST_CASE("enumerate_p_lambda") {
  const ShiftedWeight lambda = W("3,1|1,3");
  CHECK(enumerate_p_lambda(lambda, 0) == std::vector<ShiftedWeight>{lambda});

  const ShiftedWeight typical = W("5,3|1,2");
  CHECK(enumerate_p_lambda(typical, 12) == std::vector<ShiftedWeight>{typical});

  // brute-force scan of the window as an independent oracle
  const long height = 6;
  std::vector<ShiftedWeight> oracle;
  for (const ShiftedWeight& mu : enumerate_strictly_dominant({2, 2}, -6, 3)) {
    if (!preceq(mu, lambda)) continue;
    const auto h = cone_height(lambda, mu);
    REQUIRE(h.has_value());
    if (*h <= height) oracle.push_back(mu);
  }
  std::sort(oracle.begin(), oracle.end());
  CHECK(enumerate_p_lambda(lambda, height) == oracle);
}

TEST_CASE("every generated mu is reachable and within the height bound") {
  const ShiftedWeight lambda = W("5,2,1|1,2,5");
  for (const ShiftedWeight& mu : enumerate_p_lambda(lambda, 7)) {
    CHECK(preceq(mu, lambda));
    const auto h = cone_height(lambda, mu);
    REQUIRE(h.has_value());
    CHECK(*h <= 7);
    CHECK(!enumerate_paths(mu, lambda).empty());
  }
}

TEST_SUITE_END();
