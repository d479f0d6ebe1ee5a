#include <catch2/catch_amalgamated.hpp>

#include "fincat/corpus.hpp"
#include "fincat/optic.hpp"

using namespace fincat;

namespace {

// all raw representatives of a class
std::vector<std::pair<std::string, std::string>> members(
    const CoendResult& ce, const std::string& cls) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, rep] : ce.injections)
    if (rep == cls) out.push_back(key);
  return out;
}

std::string raw_tag(const std::pair<std::string, std::string>& key) {
  return diag_tag(key.first, key.second);
}

}  // namespace

TEST_CASE("adapter case: optic hom over the trivial base is a plain product "
          "of hom-sets") {
  auto A = corpus::trivial_bicat_action(corpus::walking_arrow());
  const FinCategory& C = A.fibre_at("*");
  for (const auto& s : C.objects.elems)
    for (const auto& t : C.objects.elems)
      for (const auto& a : C.objects.elems)
        for (const auto& b : C.objects.elems) {
          auto h = optic_hom(A, A, {"*", s, t}, {"*", a, b});
          CHECK(h.size() == C.hom(s, a).size() * C.hom(b, t).size());
        }
}

TEST_CASE("empty forward hom forces an empty optic hom") {
  auto A = corpus::trivial_bicat_action(corpus::walking_arrow());
  // hom(1, 0) is empty in the walking arrow
  auto h = optic_hom(A, A, {"*", "1", "0"}, {"*", "0", "0"});
  CHECK(h.size() == 0);
}

TEST_CASE("optic category laws on the poset action") {
  auto A = corpus::poset_bicat_action();
  const FinCategory& C = A.fibre_at("*");
  std::vector<OpticObject> objs;
  for (const auto& a : C.objects.elems)
    for (const auto& b : C.objects.elems) objs.push_back({"*", a, b});

  std::map<std::pair<std::size_t, std::size_t>, OpticHom> homs;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      homs.insert({{i, j}, optic_hom(A, A, objs[i], objs[j])});

  // identity classes are units
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const OpticHom& endo = homs.at({i, i});
    std::string id = optic_id(A, A, endo);
    for (std::size_t j = 0; j < objs.size(); ++j) {
      const OpticHom& h = homs.at({i, j});
      const OpticHom& endo_j = homs.at({j, j});
      std::string id_j = optic_id(A, A, endo_j);
      for (const auto& cls : h.classes.quot.carrier.elems) {
        CHECK(optic_compose(A, A, endo, id, h, cls, h) == cls);
        CHECK(optic_compose(A, A, h, cls, endo_j, id_j, h) == cls);
      }
    }
  }

  // composition is independent of representatives
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (std::size_t k = 0; k < objs.size(); ++k) {
        const OpticHom& gh = homs.at({i, j});
        const OpticHom& fh = homs.at({j, k});
        const OpticHom& tg = homs.at({i, k});
        for (const auto& g : gh.classes.quot.carrier.elems)
          for (const auto& f : fh.classes.quot.carrier.elems) {
            std::string first;
            bool any = false;
            for (const auto& gm : members(gh.classes, g))
              for (const auto& fm : members(fh.classes, f)) {
                std::string got = optic_compose(A, A, gh, raw_tag(gm), fh,
                                                raw_tag(fm), tg);
                if (!any) {
                  first = got;
                  any = true;
                }
                CHECK(got == first);
              }
          }
      }

  // associativity over all composable triples of classes
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (std::size_t k = 0; k < objs.size(); ++k)
        for (std::size_t l = 0; l < objs.size(); ++l) {
          const OpticHom& hij = homs.at({i, j});
          const OpticHom& hjk = homs.at({j, k});
          const OpticHom& hkl = homs.at({k, l});
          for (const auto& f : hij.classes.quot.carrier.elems)
            for (const auto& g : hjk.classes.quot.carrier.elems)
              for (const auto& h : hkl.classes.quot.carrier.elems) {
                auto gh = optic_compose(A, A, hij, f, hjk, g, homs.at({i, k}));
                auto lhs = optic_compose(A, A, homs.at({i, k}), gh, hkl, h,
                                         homs.at({i, l}));
                auto hk = optic_compose(A, A, hjk, g, hkl, h, homs.at({j, l}));
                auto rhs = optic_compose(A, A, hij, f, homs.at({j, l}), hk,
                                         homs.at({i, l}));
                CHECK(lhs == rhs);
              }
        }
}

TEST_CASE("eval: identity, class-independence, functoriality") {
  auto A = corpus::poset_bicat_action();
  auto P = corpus::hom_tambara(A);
  const FinCategory& C = A.fibre_at("*");
  std::vector<OpticObject> objs;
  for (const auto& a : C.objects.elems)
    for (const auto& b : C.objects.elems) objs.push_back({"*", a, b});

  for (std::size_t i = 0; i < objs.size(); ++i) {
    auto endo = optic_hom(A, A, objs[i], objs[i]);
    std::string id = optic_id(A, A, endo);
    for (const auto& p : P.at("*").at(objs[i].a, objs[i].b).elems)
      CHECK(eval(P, endo, id, p) == p);
  }

  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) {
      auto h = optic_hom(A, A, objs[i], objs[j]);
      for (const auto& cls : h.classes.quot.carrier.elems) {
        for (const auto& p : P.at("*").at(objs[j].a, objs[j].b).elems) {
          std::string first;
          bool any = false;
          for (const auto& mem : members(h.classes, cls)) {
            std::string got = eval(P, h, raw_tag(mem), p);
            if (!any) {
              first = got;
              any = true;
            }
            CHECK(got == first);
          }
        }
      }
    }

  // eval(g then f) = eval(f) then eval(g) elementwise
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (std::size_t k = 0; k < objs.size(); ++k) {
        auto gh = optic_hom(A, A, objs[i], objs[j]);
        auto fh = optic_hom(A, A, objs[j], objs[k]);
        auto tg = optic_hom(A, A, objs[i], objs[k]);
        for (const auto& g : gh.classes.quot.carrier.elems)
          for (const auto& f : fh.classes.quot.carrier.elems) {
            auto c = optic_compose(A, A, gh, g, fh, f, tg);
            for (const auto& p : P.at("*").at(objs[k].a, objs[k].b).elems)
              CHECK(eval(P, tg, c, p) == eval(P, gh, g, eval(P, fh, f, p)));
          }
      }
}

TEST_CASE("representation check over the trivial base") {
  auto A = corpus::trivial_bicat_action(corpus::walking_arrow());
  auto rep = representation_check(A, A, {"*", "1", "0"}, {"*", "0", "1"});
  INFO(rep.direction);
  CHECK(rep.ok());
  CHECK(rep.hom_src_tgt == rep.optic_count);

  auto rep2 = representation_check(A, A, {"*", "0", "0"}, {"*", "1", "1"});
  CHECK(rep2.ok());
}

TEST_CASE("representation check over the swap action") {
  auto A = corpus::swap_bicat_action();
  auto rep = representation_check(A, A, {"*", "p", "p"}, {"*", "p", "q"});
  INFO(rep.direction);
  CHECK(rep.ok());
  auto rep2 = representation_check(A, A, {"*", "p", "q"}, {"*", "q", "p"});
  CHECK(rep2.ok());
}

TEST_CASE("representation check over the poset action") {
  auto A = corpus::poset_bicat_action();
  auto rep = representation_check(A, A, {"*", "0", "1"}, {"*", "1", "0"});
  INFO(rep.direction);
  CHECK(rep.ok());
}
