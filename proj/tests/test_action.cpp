#include <catch2/catch_amalgamated.hpp>

#include "fincat/action.hpp"
#include "fincat/corpus.hpp"

using namespace fincat;

namespace {

// Z/2 acting on a 2-element set by swapping.
IndexedSetAction swap_action() {
  IndexedSetAction A;
  A.base = corpus::z2_category();
  A.total = FinSet({"p", "q"});
  A.proj = constant_function(A.total, A.base.objects, "*");
  A.act[{"z0", "p"}] = "p";
  A.act[{"z0", "q"}] = "q";
  A.act[{"z1", "p"}] = "q";
  A.act[{"z1", "q"}] = "p";
  return A;
}

Copresheaf arrow_copresheaf() {
  // Walking arrow, X(0) = {x1,x2}, X(1) = {y}, both sent to y.
  Copresheaf F;
  F.dom = corpus::walking_arrow();
  F.sets["0"] = FinSet({"x1", "x2"});
  F.sets["1"] = FinSet({"y"});
  F.actions["1_0"] = identity_function(F.sets["0"]);
  F.actions["1_1"] = identity_function(F.sets["1"]);
  F.actions["a01"] = constant_function(F.sets["0"], F.sets["1"], "y");
  return F;
}

}  // namespace

TEST_CASE("check_action accepts lawful actions") {
  for (const auto& M : {corpus::walking_arrow(), corpus::z3_category(),
                        corpus::cospan_shape()})
    CHECK(check_action(trivial_action(M)).ok());
  CHECK(check_action(swap_action()).ok());
}

TEST_CASE("check_action catches a broken unit law") {
  auto A = swap_action();
  A.act[{"z0", "p"}] = "q";
  auto r = check_action(A);
  REQUIRE_FALSE(r.ok());
  bool unit = false;
  for (const auto& v : r.violations)
    if (v.law == "unit") unit = true;
  CHECK(unit);
}

TEST_CASE("action/copresheaf round trips") {
  auto A = swap_action();
  CHECK(copresheaf_to_action(action_to_copresheaf(A)) == A);

  auto F = arrow_copresheaf();
  CHECK(check_copresheaf(F).ok());
  auto B = copresheaf_to_action(F);
  CHECK(check_action(B).ok());
  CHECK(B.total.size() == 3);
  CHECK(action_to_copresheaf(B) == F);
}

TEST_CASE("round trip keeps empty fibres") {
  Copresheaf F;
  F.dom = corpus::walking_arrow();
  F.sets["0"] = FinSet(std::vector<std::string>{});
  F.sets["1"] = FinSet({"y"});
  F.actions["1_0"] = identity_function(F.sets["0"]);
  F.actions["1_1"] = identity_function(F.sets["1"]);
  F.actions["a01"] = FinFunction(F.sets["0"], F.sets["1"], {});
  REQUIRE(check_copresheaf(F).ok());
  CHECK(action_to_copresheaf(copresheaf_to_action(F)) == F);
}

TEST_CASE("grothendieck on the arrow copresheaf") {
  auto E = grothendieck(arrow_copresheaf());
  CHECK(check_category(E.cat).ok());
  CHECK(check_functor(E.proj_functor).ok());
  CHECK(check_unique_lifts(E).ok());
  CHECK(E.cat.objects.size() == 3);
  // two non-identity morphisms: one lift of a01 per element of X(0)
  std::size_t nonid = 0;
  for (const auto& m : E.cat.morphisms.elems) {
    bool isid = false;
    for (const auto& [o, i] : E.cat.id)
      if (i == m) isid = true;
    if (!isid) ++nonid;
  }
  CHECK(nonid == 2);
}

TEST_CASE("grothendieck of the terminal copresheaf is the base") {
  for (const auto& M : {corpus::walking_arrow(), corpus::z3_category()}) {
    Copresheaf F;
    F.dom = M;
    for (const auto& o : M.objects.elems) F.sets[o] = FinSet({"*"});
    for (const auto& m : M.morphisms.elems)
      F.actions[m] = FinFunction(FinSet({"*"}), FinSet({"*"}), {{"*", "*"}});
    auto E = grothendieck(F);
    CHECK(check_unique_lifts(E).ok());
    CHECK(E.cat.objects.size() == M.objects.size());
    CHECK(E.cat.morphisms.size() == M.morphisms.size());
  }
}

TEST_CASE("grothendieck of all-empty fibres is the empty category") {
  Copresheaf F;
  F.dom = corpus::z2_category();
  F.sets["*"] = FinSet(std::vector<std::string>{});
  F.actions["z0"] = identity_function(F.sets["*"]);
  F.actions["z1"] = identity_function(F.sets["*"]);
  auto E = grothendieck(F);
  CHECK(E.cat.objects.size() == 0);
  CHECK(E.cat.morphisms.size() == 0);
}

TEST_CASE("the act table's domain is the src/proj pullback") {
  auto A = swap_action();
  auto dom = action_domain(A);
  CHECK(dom.size() == A.act.size());
  for (const auto& [key, val] : A.act)
    CHECK(dom.contains(pair_label(key.first, key.second)));
}
