#include <catch2/catch_amalgamated.hpp>

#include "fincat/finset.hpp"

using namespace fincat;

TEST_CASE("product cardinalities and degenerate cases") {
  FinSet one({"x"});
  FinSet oney({"y"});
  CHECK(product(one, oney).carrier.size() == 1);

  FinSet empty;
  FinSet any({"a", "b"});
  CHECK(product(empty, any).carrier.empty());

  FinSet two({"a", "b"});
  FinSet three({"p", "q", "r"});
  auto pr = product(two, three);
  CHECK(pr.carrier.size() == 6);

  // pairing is a bijection onto the product
  CHECK(is_bijection(pairing(pr.proj1, pr.proj2, pr)));
}

TEST_CASE("pullback basics") {
  FinSet a({"x", "y"});
  FinSet c({"c0", "c1"});
  auto f = FinFunction(a, c, {{"x", "c0"}, {"y", "c1"}});

  SECTION("along the identity the carrier mirrors dom(f)") {
    auto g = identity_function(c);
    auto pb = pullback(f, g);
    REQUIRE(pb.carrier.size() == a.size());
    // projection composed with the carrier bijection equals f
    for (const auto& e : pb.carrier.elems)
      CHECK(f(pb.proj1(e)) == pb.proj2(e));
  }

  SECTION("two constants to the same point multiply") {
    FinSet b({"u", "v", "w"});
    FinSet pt({"*"});
    auto fc = constant_function(a, pt, "*");
    auto gc = constant_function(b, pt, "*");
    CHECK(pullback(fc, gc).carrier.size() == 6);
  }

  SECTION("disjoint images give the empty pullback") {
    FinSet b({"u"});
    auto g = FinFunction(b, c, {{"u", "c1"}});
    auto f0 = FinFunction(a, c, {{"x", "c0"}, {"y", "c0"}});
    CHECK(pullback(f0, g).carrier.empty());
  }

  SECTION("codomain mismatch is an error") {
    FinSet d({"d0"});
    auto g = constant_function(a, d, "d0");
    CHECK_THROWS_AS(pullback(f, g), input_error);
  }
}

// Exhaustive universal-property oracle: every cone admits exactly one
// mediating map.
static bool product_is_universal(const FinSet& a, const FinSet& b) {
  auto pr = product(a, b);
  std::vector<std::string> apexes = {"t0", "t1"};
  for (std::size_t n = 0; n <= 2; ++n) {
    FinSet apex(std::vector<std::string>(apexes.begin(), apexes.begin() + n));
    for (const auto& f : all_functions(apex, a))
      for (const auto& g : all_functions(apex, b)) {
        std::size_t mediating = 0;
        for (const auto& m : all_functions(apex, pr.carrier))
          if (compose(m, pr.proj1) == f && compose(m, pr.proj2) == g)
            ++mediating;
        if (mediating != 1) return false;
      }
  }
  return true;
}

TEST_CASE("product universal property (exhaustive, small carriers)") {
  CHECK(product_is_universal(FinSet({"x"}), FinSet({"y", "z"})));
  CHECK(product_is_universal(FinSet({"a", "b"}), FinSet({"p", "q"})));
  CHECK(product_is_universal(FinSet(), FinSet({"p"})));
}

TEST_CASE("pullback universal property and symmetry") {
  FinSet a({"x", "y"});
  FinSet b({"u", "v", "w"});
  FinSet c({"c0", "c1"});
  auto f = FinFunction(a, c, {{"x", "c0"}, {"y", "c1"}});
  auto g = FinFunction(b, c, {{"u", "c0"}, {"v", "c0"}, {"w", "c1"}});
  auto pb = pullback(f, g);

  // cones from small apexes have unique mediating maps
  FinSet apex({"t0", "t1"});
  for (const auto& p : all_functions(apex, a))
    for (const auto& q : all_functions(apex, b)) {
      if (compose(p, f) != compose(q, g)) continue;
      std::size_t mediating = 0;
      for (const auto& m : all_functions(apex, pb.carrier))
        if (compose(m, pb.proj1) == p && compose(m, pb.proj2) == q)
          ++mediating;
      CHECK(mediating == 1);
    }

  // symmetry up to the canonical swap
  auto pb2 = pullback(g, f);
  REQUIRE(pb.carrier.size() == pb2.carrier.size());
  for (const auto& e : pb.carrier.elems) {
    std::string swapped = pair_label(pb.proj2(e), pb.proj1(e));
    CHECK(pb2.carrier.contains(swapped));
  }
}

TEST_CASE("equalizer as pullback special case") {
  FinSet a({"x", "y", "z"});
  FinSet b({"0", "1"});
  auto f = FinFunction(a, b, {{"x", "0"}, {"y", "1"}, {"z", "0"}});
  auto g = FinFunction(a, b, {{"x", "0"}, {"y", "0"}, {"z", "0"}});
  auto eq = equalizer(f, g);
  CHECK(eq.carrier == FinSet({"x", "z"}));
}

TEST_CASE("quotient by union-find") {
  FinSet s({"1", "2", "3", "4"});

  SECTION("no pairs: identity quotient") {
    auto q = quotient(s, {});
    CHECK(q.carrier == s);
    CHECK(q.witnesses.empty());
  }

  SECTION("chain collapses everything") {
    auto q = quotient(s, {{"1", "2"}, {"2", "3"}, {"3", "4"}});
    CHECK(q.carrier.size() == 1);
    CHECK(q.carrier.elems[0] == "1");
  }

  SECTION("two independent pairs give two classes") {
    auto q = quotient(s, {{"1", "2"}, {"3", "4"}});
    CHECK(q.carrier == FinSet({"1", "3"}));
    CHECK(q.class_of.at("2") == "1");
    CHECK(q.class_of.at("4") == "3");
  }

  SECTION("foreign pair member is an error") {
    CHECK_THROWS_AS(quotient(s, {{"1", "5"}}), input_error);
  }

  SECTION("class_of is idempotent onto the carrier") {
    auto q = quotient(s, {{"1", "3"}, {"2", "4"}});
    for (const auto& [x, rep] : q.class_of) {
      CHECK(q.class_of.at(rep) == rep);
      CHECK(q.carrier.contains(rep));
    }
  }

  SECTION("requotienting by induced pairs is isomorphic") {
    auto q = quotient(s, {{"1", "2"}, {"2", "3"}});
    std::vector<std::pair<std::string, std::string>> induced;
    for (const auto& [x, rep] : q.class_of)
      if (q.carrier.contains(x)) induced.emplace_back(x, rep);
    auto q2 = quotient(q.carrier, induced);
    CHECK(q2.carrier == q.carrier);
  }
}

TEST_CASE("all_functions counts") {
  CHECK(all_functions(FinSet({"a", "b"}), FinSet({"0", "1", "2"})).size() == 9);
  CHECK(all_functions(FinSet(), FinSet({"0"})).size() == 1);
  CHECK(all_functions(FinSet({"a"}), FinSet()).empty());
}
