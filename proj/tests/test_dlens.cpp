#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fincat/dlens.hpp"

using namespace fincat;

namespace {

FinFunction fn(const FinSet& d, const FinSet& c,
               std::map<std::string, std::string> t) {
  return FinFunction(d, c, std::move(t));
}

const FinSet one{{"*"}};

SliceObject over_point(const FinSet& total) {
  return SliceObject{total, constant_function(total, one, "*")};
}

Span span_over_points(const FinSet& apex) {
  return Span{one, one, apex, constant_function(apex, one, "*"),
              constant_function(apex, one, "*")};
}

}  // namespace

TEST_CASE("slice categories over small bases are lawful and sized") {
  SliceCategory s1 = slice_category(one, 1);
  CHECK(s1.cat.objects.size() == 2);  // empty and singleton totals
  CHECK(check_category(s1.cat).ok());

  FinSet two{{"i0", "i1"}};
  SliceCategory s2 = slice_category(two, 2);
  CHECK(s2.cat.objects.size() == 6);  // multisets of size <= 2 over 2
  CHECK(check_category(s2.cat).ok());
}

TEST_CASE("pull-push along the identity span preserves fibres") {
  FinSet i{{"i0", "i1"}};
  FinSet a{{"a0", "a1", "a2"}};
  SliceObject u{a, fn(a, i, {{"a0", "i0"}, {"a1", "i0"}, {"a2", "i1"}})};
  SliceObject pu = pull_push(identity_span(i), u);
  CHECK(pu.total.size() == a.size());
  for (const auto& e : pu.total.elems) {
    auto [x, z] = split_pair(e);
    CHECK(u.map(x) == z);
    CHECK(pu.map(e) == z);
  }
}

TEST_CASE("slice-hom bijection on the worked instances") {
  SECTION("singleton bases, |a|=2, |z|=3, |s|=1") {
    SliceObject u = over_point(FinSet{{"a0", "a1"}});
    SliceObject v = over_point(FinSet{{"s0"}});
    Span m = span_over_points(FinSet{{"z0", "z1", "z2"}});
    LemmaReport r = dlens_lemma_bijection(u, v, m);
    CHECK(r.ok());
    CHECK(r.lhs_count == 6);
    CHECK(r.rhs_count == 6);
  }
  SECTION("empty s gives exactly one morphism on each side") {
    SliceObject u = over_point(FinSet{{"a0", "a1"}});
    SliceObject v = over_point(FinSet(std::vector<std::string>{}));
    Span m = span_over_points(FinSet{{"z0", "z1"}});
    LemmaReport r = dlens_lemma_bijection(u, v, m);
    CHECK(r.ok());
    CHECK(r.lhs_count == 1);
    CHECK(r.rhs_count == 1);
  }
  SECTION("empty apex") {
    SliceObject u = over_point(FinSet{{"a0"}});
    SliceObject v = over_point(FinSet{{"s0"}});
    Span m = span_over_points(FinSet(std::vector<std::string>{}));
    LemmaReport r = dlens_lemma_bijection(u, v, m);
    CHECK(r.ok());
    CHECK(r.lhs_count == 0);
  }
}

TEST_CASE("slice-hom bijection sweep over carriers of size <= 2") {
  std::size_t instances = 0;
  for (std::size_t ni = 1; ni <= 2; ++ni)
    for (std::size_t nj = 1; nj <= 2; ++nj) {
      FinSet i = canonical_set("i", ni);
      FinSet j = canonical_set("j", nj);
      for (std::size_t na = 0; na <= 2; ++na)
        for (std::size_t ns = 0; ns <= 2; ++ns)
          for (std::size_t nz = 0; nz <= 2; ++nz) {
            FinSet a = canonical_set("a", na);
            FinSet s = canonical_set("s", ns);
            FinSet z = canonical_set("z", nz);
            for (const auto& u : all_functions(a, i))
              for (const auto& v : all_functions(s, j))
                for (const auto& p : all_functions(z, i))
                  for (const auto& q : all_functions(z, j)) {
                    LemmaReport r = dlens_lemma_bijection(
                        SliceObject{a, u}, SliceObject{s, v},
                        Span{i, j, z, p, q});
                    if (!r.ok()) {
                      CAPTURE(fn_label(u), fn_label(v), fn_label(p),
                              fn_label(q));
                      REQUIRE(r.ok());
                    }
                    ++instances;
                  }
          }
    }
  CHECK(instances > 1000);
}

TEST_CASE("reduced optic hom counts 64 lenses on the 2,2,2,2 instance") {
  Cospan src{over_point(FinSet{{"s0", "s1"}}),
             over_point(FinSet{{"t0", "t1"}})};
  Cospan tgt{over_point(FinSet{{"a0", "a1"}}),
             over_point(FinSet{{"b0", "b1"}})};
  ReducedOpticHom h = reduced_optic_hom(src, tgt);
  CHECK(h.size() == 64);
}

TEST_CASE("reduced optics compose with units and associativity") {
  FinSet i{{"i0", "i1"}};
  auto mk = [&](const FinSet& a, std::map<std::string, std::string> ta,
                const FinSet& b, std::map<std::string, std::string> tb) {
    return Cospan{SliceObject{a, fn(a, i, std::move(ta))},
                  SliceObject{b, fn(b, i, std::move(tb))}};
  };
  Cospan c1 = mk(FinSet{{"s0", "s1"}}, {{"s0", "i0"}, {"s1", "i1"}},
                 FinSet{{"t0", "t1"}}, {{"t0", "i0"}, {"t1", "i1"}});
  Cospan c2 = mk(FinSet{{"a0", "a1"}}, {{"a0", "i0"}, {"a1", "i1"}},
                 FinSet{{"b0", "b1"}}, {{"b0", "i0"}, {"b1", "i1"}});
  Cospan c3 = mk(FinSet{{"c0"}}, {{"c0", "i0"}}, FinSet{{"d0", "d1"}},
                 {{"d0", "i0"}, {"d1", "i1"}});
  ReducedOpticHom h12 = reduced_optic_hom(c1, c2);
  ReducedOpticHom h23 = reduced_optic_hom(c2, c3);
  REQUIRE(h12.size() > 0);
  REQUIRE(h23.size() > 0);
  for (const auto& [l1, x1] : h12.parts) {
    CHECK(reduced_optic_compose(c1, c1, c2, reduced_optic_id(c1), x1) == x1);
    CHECK(reduced_optic_compose(c1, c2, c2, x1, reduced_optic_id(c2)) == x1);
    for (const auto& [l2, x2] : h23.parts) {
      ReducedOptic comp = reduced_optic_compose(c1, c2, c3, x1, x2);
      // associativity against an endomorphism of c3
      ReducedOpticHom h33 = reduced_optic_hom(c3, c3);
      for (const auto& [l3, x3] : h33.parts) {
        CHECK(reduced_optic_compose(c1, c3, c3, comp, x3) ==
              reduced_optic_compose(
                  c1, c2, c3, x1, reduced_optic_compose(c2, c3, c3, x2, x3)));
      }
    }
  }
}

TEST_CASE("comparison with dependent lenses is an equivalence, bound 1") {
  std::mt19937 rng(7);
  EquivalenceReport r = dlens_equivalence_check(1, rng, 20);
  if (!r.ok())
    FAIL_CHECK(r.report.violations.front().law + ": " +
               r.report.violations.front().witness);
  CHECK(r.ok());
  CHECK(r.cospans == 5);  // i empty: 1; i singleton: 2 x 2 choices
  CHECK(r.composite_samples == 20);
}

TEST_CASE("comparison with dependent lenses is an equivalence, bound 2") {
  std::mt19937 rng(11);
  EquivalenceReport r = dlens_equivalence_check(2, rng, 10);
  if (!r.ok())
    FAIL_CHECK(r.report.violations.front().law + ": " +
               r.report.violations.front().witness);
  CHECK(r.ok());
  CHECK(r.cospans == 59);
  CHECK(r.dlens_objects > 0);
}

TEST_CASE("truncated coend optic stabilizes to the reduced count") {
  Cospan src{over_point(FinSet{{"s0", "s1"}}),
             over_point(FinSet{{"t0", "t1"}})};
  Cospan tgt{over_point(FinSet{{"a0", "a1"}}),
             over_point(FinSet{{"b0", "b1"}})};
  TruncatedCoendOptic t = truncated_coend_optic(src, tgt, 2);
  CHECK(t.count == 64);
  CHECK(t.stabilized);
}

TEST_CASE("pasting and base-change coherence over small carriers") {
  std::size_t checked = 0;
  for (std::size_t ni = 1; ni <= 2; ++ni) {
    FinSet i = canonical_set("i", ni);
    for (std::size_t na = 0; na <= 2; ++na)
      for (std::size_t nb = 0; nb <= 2; ++nb)
        for (std::size_t ns = 0; ns <= 2; ++ns) {
          FinSet a = canonical_set("a", na);
          FinSet b = canonical_set("b", nb);
          FinSet s = canonical_set("s", ns);
          for (const auto& u : all_functions(a, i))
            for (const auto& up : all_functions(b, i))
              for (const auto& f : all_functions(s, a)) {
                REQUIRE(pasting_check(f, u, up).ok());
                REQUIRE(
                    beck_chevalley_check(u, up, SliceObject{s, f}).ok());
                ++checked;
              }
        }
  }
  CHECK(checked > 200);
}
