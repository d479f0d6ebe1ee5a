#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/finset.hpp"
#include "fincat/report.hpp"

namespace fincat {

/// An action of a finite category on an indexed set: a total set X with a
/// projection to the objects of the base, and for each morphism m: o -> o'
/// a transport of the fibre over o into the fibre over o'.
///
/// Composition convention is diagrammatic throughout: (m;n) . x = n.(m.x).
struct IndexedSetAction {
  FinCategory base;
  FinSet total;
  FinFunction proj;  // total -> base.objects
  std::map<std::pair<std::string, std::string>, std::string> act;  // (m,x)

  const std::string& act_on(const std::string& m, const std::string& x) const {
    auto it = act.find({m, x});
    if (it == act.end())
      throw input_error("IndexedSetAction: no entry for (" + m + ", " + x +
                        ")");
    return it->second;
  }

  std::vector<std::string> fibre(const std::string& o) const {
    std::vector<std::string> out;
    for (const auto& x : total.elems)
      if (proj(x) == o) out.push_back(x);
    return out;
  }

  bool operator==(const IndexedSetAction&) const = default;
};

inline LawReport check_action(const IndexedSetAction& A) {
  LawReport r;
  const FinCategory& M = A.base;
  if (A.proj.dom != A.total || A.proj.cod != M.objects) {
    r.fail("projection endpoints", "proj");
    return r;
  }
  for (const auto& m : M.morphisms.elems)
    for (const auto& x : A.total.elems) {
      bool applies = A.proj(x) == M.source(m);
      auto it = A.act.find({m, x});
      if (applies && it == A.act.end())
        r.fail("act total", "(" + m + ", " + x + ")");
      if (!applies && it != A.act.end())
        r.fail("act domain", "(" + m + ", " + x + ")");
      if (applies && it != A.act.end()) {
        if (!A.total.contains(it->second) ||
            A.proj(it->second) != M.target(m))
          r.fail("fibre preservation", "(" + m + ", " + x + ")");
      }
    }
  if (!r.ok()) return r;
  for (const auto& x : A.total.elems)
    if (A.act_on(M.identity(A.proj(x)), x) != x)
      r.fail("unit", x);
  for (const auto& m : M.morphisms.elems)
    for (const auto& n : M.morphisms.elems) {
      if (M.target(m) != M.source(n)) continue;
      for (const auto& x : A.fibre(M.source(m)))
        if (A.act_on(M.then(m, n), x) != A.act_on(n, A.act_on(m, x)))
          r.fail("composition", "(" + m + ", " + n + ", " + x + ")");
    }
  return r;
}

/// The trivial action of M on its own object set: transport along targets.
inline IndexedSetAction trivial_action(const FinCategory& M) {
  IndexedSetAction A;
  A.base = M;
  A.total = M.objects;
  A.proj = identity_function(M.objects);
  for (const auto& m : M.morphisms.elems)
    A.act[{m, M.source(m)}] = M.target(m);
  return A;
}

inline Copresheaf action_to_copresheaf(const IndexedSetAction& A) {
  auto r = check_action(A);
  if (!r.ok())
    throw input_error("action_to_copresheaf: invalid action: " +
                      r.violations.front().law);
  Copresheaf F;
  F.dom = A.base;
  for (const auto& o : A.base.objects.elems)
    F.sets[o] = FinSet(A.fibre(o));
  for (const auto& m : A.base.morphisms.elems) {
    std::map<std::string, std::string> t;
    for (const auto& x : A.fibre(A.base.source(m)))
      t[x] = A.act_on(m, x);
    F.actions[m] = FinFunction(F.sets.at(A.base.source(m)),
                               F.sets.at(A.base.target(m)), std::move(t));
  }
  return F;
}

inline IndexedSetAction copresheaf_to_action(const Copresheaf& F) {
  auto r = check_copresheaf(F);
  if (!r.ok())
    throw input_error("copresheaf_to_action: invalid copresheaf: " +
                      r.violations.front().law);
  // Keep the fibre labels when they are globally distinct so the round trip
  // is exactly the identity; otherwise disambiguate by object.
  bool clash = false;
  std::map<std::string, int> seen;
  for (const auto& o : F.dom.objects.elems)
    for (const auto& x : F.at(o).elems)
      if (++seen[x] > 1) clash = true;
  auto lab = [&](const std::string& o, const std::string& x) {
    return clash ? o + ":" + x : x;
  };
  IndexedSetAction A;
  A.base = F.dom;
  std::vector<std::string> elems;
  std::map<std::string, std::string> p;
  for (const auto& o : F.dom.objects.elems)
    for (const auto& x : F.at(o).elems) {
      elems.push_back(lab(o, x));
      p[lab(o, x)] = o;
    }
  A.total = FinSet(std::move(elems));
  A.proj = FinFunction(A.total, F.dom.objects, std::move(p));
  for (const auto& m : F.dom.morphisms.elems) {
    const std::string& o = F.dom.source(m);
    const std::string& o2 = F.dom.target(m);
    for (const auto& x : F.at(o).elems)
      A.act[{m, lab(o, x)}] = lab(o2, F.on(m)(x));
  }
  return A;
}

/// The category of elements of a copresheaf, bundled with its projection.
/// Objects are pairs (o, x in F(o)); a morphism (m, x): (o,x) -> (o', m.x)
/// for each m: o -> o'.
struct ActionCategory {
  FinCategory cat;
  FinFunctor proj_functor;  // cat -> base
};

inline ActionCategory grothendieck(const Copresheaf& F) {
  auto rep = check_copresheaf(F);
  if (!rep.ok())
    throw input_error("grothendieck: invalid copresheaf: " +
                      rep.violations.front().law);
  const FinCategory& M = F.dom;
  ActionCategory E;
  FinCategory& c = E.cat;
  std::vector<std::string> objs, mors;
  for (const auto& o : M.objects.elems)
    for (const auto& x : F.at(o).elems) objs.push_back(pair_label(o, x));
  for (const auto& m : M.morphisms.elems) {
    const std::string& o = M.source(m);
    for (const auto& x : F.at(o).elems) {
      std::string lm = pair_label(m, x);
      mors.push_back(lm);
      c.src[lm] = pair_label(o, x);
      c.tgt[lm] = pair_label(M.target(m), F.on(m)(x));
      E.proj_functor.mmap[lm] = m;
    }
  }
  c.objects = FinSet(std::move(objs));
  c.morphisms = FinSet(std::move(mors));
  for (const auto& o : M.objects.elems)
    for (const auto& x : F.at(o).elems) {
      c.id[pair_label(o, x)] = pair_label(M.identity(o), x);
      E.proj_functor.omap[pair_label(o, x)] = o;
    }
  for (const auto& m : M.morphisms.elems)
    for (const auto& n : M.morphisms.elems) {
      if (M.target(m) != M.source(n)) continue;
      for (const auto& x : F.at(M.source(m)).elems)
        c.comp[{pair_label(m, x), pair_label(n, F.on(m)(x))}] =
            pair_label(M.then(m, n), x);
    }
  E.proj_functor.dom = c;
  E.proj_functor.cod = M;
  return E;
}

/// Discrete-opfibration condition: every morphism of the base has exactly
/// one lift at every object over its source.
inline LawReport check_unique_lifts(const ActionCategory& E) {
  LawReport r;
  const FinCategory& c = E.cat;
  const FinCategory& M = E.proj_functor.cod;
  for (const auto& e : c.objects.elems) {
    const std::string& o = E.proj_functor.omap.at(e);
    for (const auto& m : M.morphisms.elems) {
      if (M.source(m) != o) continue;
      int lifts = 0;
      for (const auto& f : c.morphisms.elems)
        if (c.source(f) == e && E.proj_functor.mmap.at(f) == m) ++lifts;
      if (lifts != 1)
        r.fail("unique lift", "(" + e + ", " + m + ") has " +
                                  std::to_string(lifts) + " lifts");
    }
  }
  return r;
}

/// The domain of act as a set: {(m,x) | src(m) = proj(x)}, computed as a
/// pullback of src against proj.
inline FinSet action_domain(const IndexedSetAction& A) {
  std::map<std::string, std::string> st;
  for (const auto& m : A.base.morphisms.elems) st[m] = A.base.source(m);
  FinFunction srcf(A.base.morphisms, A.base.objects, std::move(st));
  return pullback(srcf, A.proj).carrier;
}

}  // namespace fincat
