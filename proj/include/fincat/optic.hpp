#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fincat/bicategory.hpp"
#include "fincat/profunctor.hpp"
#include "fincat/report.hpp"
#include "fincat/tambara.hpp"

namespace fincat {

/// A triple (base object, fibre object of X, fibre object of Y).
struct OpticObject {
  std::string o, a, b;
  bool operator==(const OpticObject&) const = default;
};

/// Hom-set from src = (o', s, t) to tgt = (o, a, b): the coend over the
/// hom-category M(o, o') of m |-> X(o')(s, m.a) x Y(o')(m.b, t). Classes are
/// tagged representatives "[m|(alpha,beta)]" with alpha : s -> m.a and
/// beta : m.b -> t.
struct OpticHom {
  OpticObject src, tgt;
  CoendResult classes;
  std::size_t size() const { return classes.size(); }
};

inline OpticHom optic_hom(const BicatAction& X, const BicatAction& Y,
                          const OpticObject& src, const OpticObject& tgt) {
  const FinBicategory& M = X.base;
  const FinCategory& H = M.hom_at(tgt.o, src.o);
  const FinCategory& Xp = X.fibre_at(src.o);
  const FinCategory& Yp = Y.fibre_at(src.o);
  auto set_fn = [&](const std::string& m, const std::string& n) {
    std::vector<std::string> es;
    for (const auto& al : Xp.hom(src.a, X.on1_at(n).on_obj(tgt.a)))
      for (const auto& be : Yp.hom(Y.on1_at(m).on_obj(tgt.b), src.b))
        es.push_back(pair_label(al, be));
    return FinSet(std::move(es));
  };
  auto lact_fn = [&](const std::string& k, const std::string& n) {
    const std::string& m1 = H.source(k);
    const std::string& m2 = H.target(k);
    FinSet dom = set_fn(m2, n);
    FinSet cod = set_fn(m1, n);
    std::map<std::string, std::string> t;
    for (const auto& e : dom.elems) {
      auto [al, be] = split_pair(e);
      t[e] = pair_label(al, Yp.then(Y.on2_at(k).at(tgt.b), be));
    }
    return FinFunction(dom, cod, std::move(t));
  };
  auto ract_fn = [&](const std::string& m, const std::string& k) {
    const std::string& n1 = H.source(k);
    const std::string& n2 = H.target(k);
    (void)n1;
    FinSet dom = set_fn(m, H.source(k));
    FinSet cod = set_fn(m, n2);
    std::map<std::string, std::string> t;
    for (const auto& e : dom.elems) {
      auto [al, be] = split_pair(e);
      t[e] = pair_label(Xp.then(al, X.on2_at(k).at(tgt.a)), be);
    }
    return FinFunction(dom, cod, std::move(t));
  };
  OpticHom out;
  out.src = src;
  out.tgt = tgt;
  out.classes = coend(make_profunctor(H, H, set_fn, lact_fn, ract_fn));
  return out;
}

/// The identity class: (unit 1-cell, identity, identity).
inline std::string optic_id(const BicatAction& X, const BicatAction& Y,
                            const OpticHom& endo) {
  if (!(endo.src == endo.tgt))
    throw input_error("optic_id: hom-set is not an endo hom");
  const std::string& u = X.base.unit.at(endo.src.o);
  return endo.classes.class_of(
      u, pair_label(X.fibre_at(endo.src.o).identity(endo.src.a),
                    Y.fibre_at(endo.src.o).identity(endo.src.b)));
}

/// Composite of g : (o'',u,v) -> (o',s,t) and f : (o',s,t) -> (o,a,b) on
/// chosen representatives: (m;n, gamma ; n.alpha, n.beta ; delta). The class
/// of the result does not depend on the representatives (tested).
inline std::string optic_compose(const BicatAction& X, const BicatAction& Y,
                                 const OpticHom& gh, const std::string& grep,
                                 const OpticHom& fh, const std::string& frep,
                                 const OpticHom& target) {
  if (!(gh.tgt == fh.src) || !(target.src == gh.src) ||
      !(target.tgt == fh.tgt))
    throw input_error("optic_compose: endpoint mismatch");
  auto [n, gd] = split_tag(grep);
  auto [ga, de] = split_pair(gd);
  auto [m, ab] = split_tag(frep);
  auto [al, be] = split_pair(ab);
  const FinCategory& Xo = X.fibre_at(gh.src.o);
  const FinCategory& Yo = Y.fibre_at(gh.src.o);
  const FinFunctor& nX = X.on1_at(n);
  const FinFunctor& nY = Y.on1_at(n);
  return target.classes.class_of(
      X.base.hcomp_1(m, n),
      pair_label(Xo.then(ga, nX.on_mor(al)), Yo.then(nY.on_mor(be), de)));
}

/// Action of an optic class on a Tambara module: strength along the residual
/// then the two profunctor actions. Independent of the representative.
inline std::string eval(const TambaraModule& P, const OpticHom& h,
                        const std::string& rep, const std::string& p) {
  auto [m, ab] = split_tag(rep);
  auto [al, be] = split_pair(ab);
  const std::string q = P.st_at(m, h.tgt.a, h.tgt.b)(p);
  const FinFunctor& mY = P.actY.on1_at(m);
  const std::string q2 =
      P.at(h.src.o).lact_on(al, mY.on_obj(h.tgt.b))(q);
  return P.at(h.src.o).ract_on(h.src.a, be)(q2);
}

/// Profunctor family concentrated at obj.o, there the representable
/// X(o)(-, a) x Y(o)(b, =).
inline ProfFamily representable_family(const BicatAction& X,
                                       const BicatAction& Y,
                                       const OpticObject& obj) {
  ProfFamily Q{X, Y, {}};
  for (const auto& o : X.base.objects.elems) {
    const FinCategory& Xo = X.fibre_at(o);
    const FinCategory& Yo = Y.fibre_at(o);
    if (o != obj.o) {
      FinSet empty(std::vector<std::string>{});
      Q.profs[o] = constant_profunctor(Xo, Yo, empty);
      continue;
    }
    auto set_fn = [&](const std::string& x, const std::string& y) {
      std::vector<std::string> es;
      for (const auto& g : Xo.hom(x, obj.a))
        for (const auto& h : Yo.hom(obj.b, y)) es.push_back(pair_label(g, h));
      return FinSet(std::move(es));
    };
    Q.profs[o] = make_profunctor(
        Xo, Yo, set_fn,
        [&](const std::string& f, const std::string& y) {
          FinSet dom = set_fn(Xo.target(f), y);
          FinSet cod = set_fn(Xo.source(f), y);
          std::map<std::string, std::string> t;
          for (const auto& e : dom.elems) {
            auto [g, h] = split_pair(e);
            t[e] = pair_label(Xo.then(f, g), h);
          }
          return FinFunction(dom, cod, std::move(t));
        },
        [&](const std::string& x, const std::string& g2) {
          FinSet dom = set_fn(x, Yo.source(g2));
          FinSet cod = set_fn(x, Yo.target(g2));
          std::map<std::string, std::string> t;
          for (const auto& e : dom.elems) {
            auto [g, h] = split_pair(e);
            t[e] = pair_label(g, Yo.then(h, g2));
          }
          return FinFunction(dom, cod, std::move(t));
        });
  }
  return Q;
}

/// Free module on the concentrated representable: the finite stand-in for
/// the Yoneda image of (o, a, b).
inline TambaraModule representable_module(const BicatAction& X,
                                          const BicatAction& Y,
                                          const OpticObject& obj) {
  return free_module(representable_family(X, Y, obj));
}

struct RepresentationReport {
  LawReport report;
  std::size_t optic_count = 0;
  std::size_t hom_src_tgt = 0;  // |Tamb(Rep(src), Rep(tgt))|
  std::size_t hom_tgt_src = 0;  // |Tamb(Rep(tgt), Rep(src))|
  std::string direction;
  bool ok() const { return report.ok(); }
};

/// Collapse a free-module class over the concentrated representable at tgt,
/// evaluated at (src.a, src.b), to an optic class: the co-Yoneda reduction
/// [m,(x,y) | ((al,(g,h)),be)] -> [m | (al ; m.g, m.h ; be)].
inline std::string collapse_representable_class(
    const BicatAction& X, const BicatAction& Y, const FreeResult& Ft,
    const OpticObject& src, const OpticObject& tgt, const OpticHom& H,
    const std::string& cls) {
  const CoendResult& ce = Ft.coends.at({src.o, src.a, src.b});
  // find any raw injection landing in this class
  for (const auto& [key, rep] : ce.injections) {
    if (rep != cls) continue;
    auto [m, xy] = split_pair(key.first);
    auto [alq, be] = split_pair(key.second);
    auto [al, q] = split_pair(alq);
    auto [g, h] = split_pair(q);
    const FinFunctor& mX = X.on1_at(m);
    const FinFunctor& mY = Y.on1_at(m);
    const FinCategory& Xo = X.fibre_at(src.o);
    const FinCategory& Yo = Y.fibre_at(src.o);
    return H.classes.class_of(
        m, pair_label(Xo.then(al, mX.on_mor(g)),
                      Yo.then(mY.on_mor(h), be)));
  }
  throw input_error("collapse_representable_class: unknown class " + cls);
}

/// Finite representation check: the Tambara-morphism set between the free
/// modules on the concentrated representables is in bijection with the
/// optic hom-set. Both orderings of the representables are counted and the
/// one that matches is reported; the bijection itself is constructed for
/// the matching direction via the free adjunction unit and the co-Yoneda
/// collapse.
inline RepresentationReport representation_check(
    const BicatAction& X, const BicatAction& Y, const OpticObject& src,
    const OpticObject& tgt, std::size_t budget = kDefaultEnumBudget) {
  RepresentationReport out;
  OpticHom H = optic_hom(X, Y, src, tgt);
  out.optic_count = H.size();

  ProfFamily Qs = representable_family(X, Y, src);
  ProfFamily Qt = representable_family(X, Y, tgt);
  FreeResult Fs = free_full(Qs);
  FreeResult Ft = free_full(Qt);
  auto fwd = enumerate_tambara_morphisms(Fs.mod, Ft.mod, budget);
  auto bwd = enumerate_tambara_morphisms(Ft.mod, Fs.mod, budget);
  out.hom_src_tgt = fwd.size();
  out.hom_tgt_src = bwd.size();
  out.direction = out.hom_src_tgt == out.optic_count ? "hom(Rep src, Rep tgt)"
                  : out.hom_tgt_src == out.optic_count
                      ? "hom(Rep tgt, Rep src)"
                      : "neither";
  if (out.hom_src_tgt != out.optic_count) {
    out.report.fail("representable hom count",
                    std::to_string(out.hom_src_tgt) + " vs optic " +
                        std::to_string(out.optic_count));
    return out;
  }

  // check the collapse itself is well defined on every raw injection
  const CoendResult& ce = Ft.coends.at({src.o, src.a, src.b});
  std::map<std::string, std::string> collapse;
  for (const auto& [key, rep] : ce.injections) {
    auto [m, xy] = split_pair(key.first);
    auto [alq, be] = split_pair(key.second);
    auto [al, q] = split_pair(alq);
    auto [g, h] = split_pair(q);
    const std::string img = H.classes.class_of(
        m, pair_label(X.fibre_at(src.o).then(al, X.on1_at(m).on_mor(g)),
                      Y.fibre_at(src.o).then(Y.on1_at(m).on_mor(h), be)));
    auto it = collapse.find(rep);
    if (it == collapse.end())
      collapse[rep] = img;
    else if (it->second != img)
      out.report.fail("collapse well-defined", rep);
  }
  if (!out.report.ok()) return out;

  // explicit bijection: evaluate each morphism at the unit class of the
  // identity pair, then collapse
  const std::string q0 = pair_label(X.fibre_at(src.o).identity(src.a),
                                    Y.fibre_at(src.o).identity(src.b));
  std::set<std::string> image;
  for (const auto& t : fwd) {
    const std::string e = t.at(src.o, src.a, src.b)(
        free_unit_class(Fs, src.o, src.a, src.b, q0));
    image.insert(collapse.at(e));
  }
  if (image.size() != fwd.size())
    out.report.fail("representation map injective",
                    std::to_string(image.size()) + " of " +
                        std::to_string(fwd.size()));
  if (image.size() != H.size())
    out.report.fail("representation map surjective",
                    std::to_string(image.size()) + " of " +
                        std::to_string(H.size()));
  return out;
}

}  // namespace fincat
