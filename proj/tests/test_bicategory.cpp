#include <catch2/catch_amalgamated.hpp>

#include "fincat/bicategory.hpp"
#include "fincat/corpus.hpp"

using namespace fincat;

TEST_CASE("deloop of stock monoidal categories passes check_bicat") {
  CHECK(check_bicat(deloop(corpus::trivial_monoidal())).ok());
  CHECK(check_bicat(deloop(corpus::z2_monoidal())).ok());
  CHECK(check_bicat(deloop(corpus::poset_monoidal())).ok());
}

TEST_CASE("deloop rejects non-strict tables") {
  auto d = corpus::z2_monoidal();
  d.tensor_obj[{"s1", "s1"}] = "s1";  // breaks associativity/unitality
  CHECK_THROWS_AS(deloop(d), input_error);
}

TEST_CASE("locally discrete bicategories pass check_bicat") {
  for (const auto& C : {corpus::walking_arrow(), corpus::cospan_shape(),
                        corpus::z3_category()})
    CHECK(check_bicat(corpus::locally_discrete_bicat(C)).ok());
}

TEST_CASE("stock actions pass check_bicat_action") {
  CHECK(check_bicat_action(corpus::swap_bicat_action()).ok());
  CHECK(check_bicat_action(corpus::poset_bicat_action()).ok());

  Copresheaf F;
  F.dom = corpus::walking_arrow();
  F.sets["0"] = FinSet({"x1", "x2"});
  F.sets["1"] = FinSet({"y"});
  F.actions["1_0"] = identity_function(F.sets["0"]);
  F.actions["1_1"] = identity_function(F.sets["1"]);
  F.actions["a01"] = constant_function(F.sets["0"], F.sets["1"], "y");
  CHECK(check_bicat_action(corpus::discrete_bicat_action(F)).ok());
}

TEST_CASE("a broken on1 composition is caught with a witness") {
  auto X = corpus::swap_bicat_action();
  X.on1["s1"] = identity_functor(X.fibre.at("*"));  // no longer squares right
  auto r = check_bicat_action(X);
  REQUIRE_FALSE(r.ok());
}

TEST_CASE("span_hom_category over singleton feet") {
  FinSet one({"*"});
  auto sh1 = span_hom_category(one, one, 1);
  CHECK(check_category(sh1.cat).ok());
  CHECK(sh1.cat.objects.size() == 1);
  CHECK(sh1.cat.morphisms.size() == 1);

  auto sh2 = span_hom_category(one, one, 2);
  CHECK(check_category(sh2.cat).ok());
  CHECK(sh2.cat.objects.size() == 2);
  // apex maps 1->1, 1->2, 2->1, 2->2 : 1 + 2 + 1 + 4
  CHECK(sh2.cat.morphisms.size() == 8);
}

TEST_CASE("span_hom_category over larger feet passes the checker") {
  FinSet i({"a", "b"});
  FinSet j({"c"});
  auto sh = span_hom_category(i, j, 2);
  CHECK(check_category(sh.cat).ok());
  for (const auto& [lab, s] : sh.spans) {
    CHECK(span_canonical_label(s) == lab);
    CHECK(s.apex.size() >= 1);
    CHECK(s.apex.size() <= 2);
  }
}

TEST_CASE("span composition: identity, counting, associativity") {
  FinSet one({"*"});
  FinSet i({"a", "b"});

  Span m = canonical_span(i, one, {{"a", "*"}, {"a", "*"}, {"b", "*"}});
  auto li = span_compose(identity_span(i), m);
  auto iso = span_iso(li, m);
  REQUIRE(iso.has_value());
  CHECK(is_bijection(*iso));

  // apexes 2 and 3 over a singleton middle foot -> composite apex 6
  Span p = canonical_span(one, one, {{"*", "*"}, {"*", "*"}});
  Span q = canonical_span(one, one, {{"*", "*"}, {"*", "*"}, {"*", "*"}});
  CHECK(span_compose(p, q).apex.size() == 6);

  Span r = canonical_span(one, i, {{"*", "a"}, {"*", "b"}});
  auto lhs = span_compose(span_compose(p, q), r);
  auto rhs = span_compose(p, span_compose(q, r));
  auto assoc = span_iso(lhs, rhs);
  REQUIRE(assoc.has_value());
  CHECK(is_bijection(*assoc));
  for (const auto& z : lhs.apex.elems) {
    CHECK(lhs.left(z) == rhs.left((*assoc)(z)));
    CHECK(lhs.right(z) == rhs.right((*assoc)(z)));
  }
}

TEST_CASE("mat_compose with degenerate twists reduces to span_compose") {
  FinSet one({"*"});
  FinCategory tw = discrete_category(FinSet({"t"}));
  TwistedSpan a{canonical_span(one, one, {{"*", "*"}, {"*", "*"}}), tw, {}};
  TwistedSpan b{canonical_span(one, one, {{"*", "*"}, {"*", "*"},
                                          {"*", "*"}}),
                tw, {}};
  for (const auto& z : a.span.apex.elems) a.twist_of[z] = "t";
  for (const auto& z : b.span.apex.elems) b.twist_of[z] = "t";
  auto c = mat_compose(a, b);
  CHECK(c.span == span_compose(a.span, b.span));
  for (const auto& z : c.span.apex.elems) CHECK(c.twist_of.at(z) == "t");
}

TEST_CASE("mat_compose rejects non-degenerate twists") {
  FinSet one({"*"});
  FinCategory tw = discrete_category(FinSet({"t", "t2"}));
  TwistedSpan a{identity_span(one), tw, {{"*", "t"}}};
  CHECK_THROWS_AS(mat_compose(a, a), input_error);
}
