#include <catch2/catch_amalgamated.hpp>

#include "fincat/category.hpp"
#include "fincat/corpus.hpp"

using namespace fincat;

TEST_CASE("check_category accepts the stock categories") {
  CHECK(check_category(corpus::walking_arrow()).ok());
  CHECK(check_category(corpus::parallel_pair()).ok());
  CHECK(check_category(corpus::cospan_shape()).ok());
  CHECK(check_category(corpus::z2_category()).ok());
  CHECK(check_category(corpus::z3_category()).ok());
  CHECK(check_category(corpus::idem_monoid_category()).ok());
  CHECK(check_category(terminal_category()).ok());
  CHECK(check_category(discrete_category(FinSet({"a", "b", "c"}))).ok());
}

TEST_CASE("check_category reports a planted associativity defect") {
  // Z/3 with one composition entry redirected.
  FinCategory c = corpus::z3_category();
  c.comp[{"z1", "z1"}] = "z0";  // should be z2
  auto r = check_category(c);
  REQUIRE_FALSE(r.ok());
  bool assoc = false;
  for (const auto& v : r.violations)
    if (v.law == "associativity") assoc = true;
  CHECK(assoc);
}

TEST_CASE("single-entry mutations of valid tables are caught") {
  // Mutation coverage: redirect each comp/id entry in turn.  Z/2 and the
  // idempotent monoid are excluded from the comp sweep because their single
  // well-typed comp mutations land on each other (both lawful monoids).
  std::vector<FinCategory> comp_cats = {
      corpus::walking_arrow(), corpus::z3_category(), corpus::cospan_shape()};
  for (const auto& base : comp_cats) {
    for (const auto& [key, val] : base.comp) {
      for (const auto& m : base.morphisms.elems) {
        if (m == val) continue;
        // keep the mutation well-typed so only the laws can complain
        if (base.source(m) != base.source(val) ||
            base.target(m) != base.target(val))
          continue;
        FinCategory mut = base;
        mut.comp[key] = m;
        CHECK_FALSE(check_category(mut).ok());
      }
    }
  }
  std::vector<FinCategory> id_cats = {
      corpus::walking_arrow(), corpus::z2_category(), corpus::z3_category(),
      corpus::idem_monoid_category(), corpus::cospan_shape()};
  for (const auto& base : id_cats) {
    for (const auto& [o, i] : base.id) {
      for (const auto& m : base.morphisms.elems) {
        if (m == i || base.source(m) != o || base.target(m) != o) continue;
        FinCategory mut = base;
        mut.id[o] = m;
        CHECK_FALSE(check_category(mut).ok());
      }
    }
  }
}

TEST_CASE("check_functor basics") {
  auto C = corpus::walking_arrow();
  CHECK(check_functor(identity_functor(C)).ok());
  CHECK(check_functor(constant_functor(C, C, "1")).ok());

  // sending an identity to a non-identity fails with a witness
  FinFunctor F = identity_functor(C);
  F.mmap["1_0"] = "a01";
  auto r = check_functor(F);
  REQUIRE_FALSE(r.ok());
}

TEST_CASE("opposite is an involution and passes the checker") {
  for (const auto& C : {corpus::walking_arrow(), corpus::z3_category(),
                        corpus::cospan_shape()}) {
    CHECK(check_category(opposite(C)).ok());
    CHECK(opposite(opposite(C)) == C);
  }
}

TEST_CASE("product category") {
  auto C = corpus::walking_arrow();
  auto D = corpus::z2_category();
  auto P = product_category(C, D);
  CHECK(check_category(P).ok());
  CHECK(P.morphisms.size() == C.morphisms.size() * D.morphisms.size());
  CHECK(P.objects.size() == C.objects.size() * D.objects.size());

  // product with the terminal category has C's shape
  auto T = terminal_category();
  auto PT = product_category(C, T);
  CHECK(check_category(PT).ok());
  CHECK(PT.morphisms.size() == C.morphisms.size());
}

TEST_CASE("natural transformation checker") {
  auto C = corpus::walking_arrow();
  auto idF = identity_functor(C);
  CHECK(check_nat_trans(identity_nat(idF)).ok());

  // the unique transformation from id to the constant functor at 1
  NatTrans a{idF, constant_functor(C, C, "1"), {{"0", "a01"}, {"1", "1_1"}}};
  CHECK(check_nat_trans(a).ok());

  // breaking a component breaks naturality
  NatTrans bad = a;
  bad.components["1"] = "1_1";
  bad.components["0"] = "1_0";  // ill-typed endpoint
  CHECK_FALSE(check_nat_trans(bad).ok());
}

TEST_CASE("copresheaf checker matches functoriality") {
  auto C = corpus::z2_category();
  // the regular action of Z/2 on itself
  Copresheaf X;
  X.dom = C;
  FinSet two({"p", "q"});
  X.sets["*"] = two;
  X.actions["z0"] = identity_function(two);
  X.actions["z1"] = FinFunction(two, two, {{"p", "q"}, {"q", "p"}});
  CHECK(check_copresheaf(X).ok());

  // redirect the swap and composition fails
  Copresheaf Y = X;
  Y.actions["z1"] = identity_function(two);
  CHECK(check_copresheaf(Y).ok());  // the trivial action is still lawful
  Y.actions["z1"] = FinFunction(two, two, {{"p", "q"}, {"q", "q"}});
  CHECK_FALSE(check_copresheaf(Y).ok());
}

TEST_CASE("enumerate_functors on small categories") {
  auto T = terminal_category();
  auto C = corpus::walking_arrow();
  // functors T -> C pick an object
  CHECK(enumerate_functors(T, C).size() == 2);
  // functors arrow -> arrow: monotone pairs (0,0),(0,1),(1,1)
  CHECK(enumerate_functors(C, C).size() == 3);
  // monoid homs Z/2 -> Z/2: identity and trivial
  auto Z2 = corpus::z2_category();
  CHECK(enumerate_functors(Z2, Z2).size() == 2);
}
