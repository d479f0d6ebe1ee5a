#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/finset.hpp"
#include "fincat/report.hpp"

namespace fincat {

/// A finite category given by tables. Composition is diagrammatic:
/// comp[{f,g}] = f;g, defined exactly when tgt(f) = src(g).
struct FinCategory {
  FinSet objects;
  FinSet morphisms;
  std::map<std::string, std::string> src;
  std::map<std::string, std::string> tgt;
  std::map<std::string, std::string> id;  // object -> identity morphism
  std::map<std::pair<std::string, std::string>, std::string> comp;

  const std::string& source(const std::string& f) const { return src.at(f); }
  const std::string& target(const std::string& f) const { return tgt.at(f); }
  const std::string& identity(const std::string& o) const { return id.at(o); }

  /// f;g. Errors if the pair is not composable.
  const std::string& then(const std::string& f, const std::string& g) const {
    auto it = comp.find({f, g});
    if (it == comp.end())
      throw input_error("FinCategory: no composite for (" + f + ", " + g + ")");
    return it->second;
  }

  std::vector<std::string> hom(const std::string& a,
                               const std::string& b) const {
    std::vector<std::string> out;
    for (const auto& f : morphisms.elems)
      if (source(f) == a && target(f) == b) out.push_back(f);
    return out;
  }

  bool operator==(const FinCategory&) const = default;
};

/// Configuration bound on category size: exhaustive checkers assume small
/// tables, so exceeding the bound is rejected outright.
inline constexpr std::size_t kDefaultMorphismBound = 32;

inline void enforce_size_bound(const FinCategory& c,
                               std::size_t bound = kDefaultMorphismBound) {
  if (c.morphisms.size() > bound)
    throw resource_error("category exceeds morphism bound (" +
                         std::to_string(c.morphisms.size()) + " > " +
                         std::to_string(bound) + ")");
}

inline LawReport check_category(const FinCategory& c) {
  LawReport r;
  for (const auto& f : c.morphisms.elems) {
    if (!c.src.count(f) || !c.tgt.count(f)) {
      r.fail("src/tgt total", f);
      continue;
    }
    if (!c.objects.contains(c.source(f)) || !c.objects.contains(c.target(f)))
      r.fail("src/tgt into objects", f);
  }
  for (const auto& o : c.objects.elems) {
    auto it = c.id.find(o);
    if (it == c.id.end()) {
      r.fail("identity total", o);
      continue;
    }
    const std::string& i = it->second;
    if (!c.morphisms.contains(i) || c.source(i) != o || c.target(i) != o)
      r.fail("identity endpoints", o);
  }
  if (!r.ok()) return r;  // the remaining checks need well-formed tables

  // Totality and typing of composition.
  for (const auto& f : c.morphisms.elems)
    for (const auto& g : c.morphisms.elems) {
      bool composable = c.target(f) == c.source(g);
      auto it = c.comp.find({f, g});
      if (composable) {
        if (it == c.comp.end()) {
          r.fail("composition total", "(" + f + ", " + g + ")");
        } else if (!c.morphisms.contains(it->second) ||
                   c.source(it->second) != c.source(f) ||
                   c.target(it->second) != c.target(g)) {
          r.fail("composite endpoints", "(" + f + ", " + g + ")");
        }
      } else if (it != c.comp.end()) {
        r.fail("composition only on composable pairs", "(" + f + ", " + g + ")");
      }
    }
  if (!r.ok()) return r;

  // Unit absorption.
  for (const auto& f : c.morphisms.elems) {
    if (c.then(c.identity(c.source(f)), f) != f)
      r.fail("left unit", f);
    if (c.then(f, c.identity(c.target(f))) != f)
      r.fail("right unit", f);
  }

  // Associativity.
  for (const auto& f : c.morphisms.elems)
    for (const auto& g : c.morphisms.elems) {
      if (c.target(f) != c.source(g)) continue;
      for (const auto& h : c.morphisms.elems) {
        if (c.target(g) != c.source(h)) continue;
        if (c.then(c.then(f, g), h) != c.then(f, c.then(g, h)))
          r.fail("associativity", "(" + f + ", " + g + ", " + h + ")");
      }
    }
  return r;
}

struct FinFunctor {
  FinCategory dom;
  FinCategory cod;
  std::map<std::string, std::string> omap;
  std::map<std::string, std::string> mmap;

  const std::string& on_obj(const std::string& o) const { return omap.at(o); }
  const std::string& on_mor(const std::string& f) const { return mmap.at(f); }

  bool operator==(const FinFunctor&) const = default;
};

inline LawReport check_functor(const FinFunctor& F) {
  LawReport r;
  for (const auto& o : F.dom.objects.elems) {
    auto it = F.omap.find(o);
    if (it == F.omap.end() || !F.cod.objects.contains(it->second)) {
      r.fail("object map total", o);
      return r;
    }
  }
  for (const auto& f : F.dom.morphisms.elems) {
    auto it = F.mmap.find(f);
    if (it == F.mmap.end() || !F.cod.morphisms.contains(it->second)) {
      r.fail("morphism map total", f);
      return r;
    }
    if (F.cod.source(it->second) != F.on_obj(F.dom.source(f)) ||
        F.cod.target(it->second) != F.on_obj(F.dom.target(f)))
      r.fail("preserves src/tgt", f);
  }
  if (!r.ok()) return r;  // composition checks need well-typed images
  for (const auto& o : F.dom.objects.elems)
    if (F.on_mor(F.dom.identity(o)) != F.cod.identity(F.on_obj(o)))
      r.fail("preserves identities", o);
  for (const auto& f : F.dom.morphisms.elems)
    for (const auto& g : F.dom.morphisms.elems) {
      if (F.dom.target(f) != F.dom.source(g)) continue;
      if (F.on_mor(F.dom.then(f, g)) !=
          F.cod.then(F.on_mor(f), F.on_mor(g)))
        r.fail("preserves composition", "(" + f + ", " + g + ")");
    }
  return r;
}

inline FinFunctor identity_functor(const FinCategory& c) {
  FinFunctor F{c, c, {}, {}};
  for (const auto& o : c.objects.elems) F.omap[o] = o;
  for (const auto& f : c.morphisms.elems) F.mmap[f] = f;
  return F;
}

inline FinFunctor constant_functor(const FinCategory& dom,
                                   const FinCategory& cod,
                                   const std::string& o) {
  FinFunctor F{dom, cod, {}, {}};
  for (const auto& x : dom.objects.elems) F.omap[x] = o;
  for (const auto& f : dom.morphisms.elems) F.mmap[f] = cod.identity(o);
  return F;
}

/// Diagrammatic functor composition F;G.
inline FinFunctor compose_functors(const FinFunctor& F, const FinFunctor& G) {
  if (F.cod != G.dom) throw input_error("compose_functors: mismatch");
  FinFunctor H{F.dom, G.cod, {}, {}};
  for (const auto& [o, fo] : F.omap) H.omap[o] = G.on_obj(fo);
  for (const auto& [f, ff] : F.mmap) H.mmap[f] = G.on_mor(ff);
  return H;
}

struct NatTrans {
  FinFunctor src;
  FinFunctor tgt;
  std::map<std::string, std::string> components;  // object -> cod morphism

  const std::string& at(const std::string& o) const {
    return components.at(o);
  }
  bool operator==(const NatTrans&) const = default;
};

inline LawReport check_nat_trans(const NatTrans& a) {
  LawReport r;
  if (a.src.dom != a.tgt.dom || a.src.cod != a.tgt.cod) {
    r.fail("functors parallel", "");
    return r;
  }
  const FinCategory& C = a.src.dom;
  const FinCategory& D = a.src.cod;
  for (const auto& o : C.objects.elems) {
    auto it = a.components.find(o);
    if (it == a.components.end() || !D.morphisms.contains(it->second)) {
      r.fail("component total", o);
      return r;
    }
    if (D.source(it->second) != a.src.on_obj(o) ||
        D.target(it->second) != a.tgt.on_obj(o))
      r.fail("component endpoints", o);
  }
  if (!r.ok()) return r;
  for (const auto& f : C.morphisms.elems) {
    const std::string& x = C.source(f);
    const std::string& y = C.target(f);
    if (D.then(a.at(x), a.tgt.on_mor(f)) != D.then(a.src.on_mor(f), a.at(y)))
      r.fail("naturality", f);
  }
  return r;
}

inline NatTrans identity_nat(const FinFunctor& F) {
  NatTrans a{F, F, {}};
  for (const auto& o : F.dom.objects.elems)
    a.components[o] = F.cod.identity(F.on_obj(o));
  return a;
}

/// Vertical composite a;b of a : F => G and b : G => H.
inline NatTrans vcompose(const NatTrans& a, const NatTrans& b) {
  if (a.tgt != b.src) throw input_error("vcompose: mismatch");
  NatTrans c{a.src, b.tgt, {}};
  for (const auto& o : a.src.dom.objects.elems)
    c.components[o] = a.src.cod.then(a.at(o), b.at(o));
  return c;
}

/// Horizontal composite of a : F => G (C -> D) and b : H => K (D -> E).
inline NatTrans hcompose_nat(const NatTrans& a, const NatTrans& b) {
  if (a.src.cod != b.src.dom) throw input_error("hcompose_nat: mismatch");
  NatTrans c{compose_functors(a.src, b.src), compose_functors(a.tgt, b.tgt),
             {}};
  const FinCategory& E = b.src.cod;
  for (const auto& o : a.src.dom.objects.elems)
    c.components[o] =
        E.then(b.at(a.src.on_obj(o)), b.tgt.on_mor(a.at(o)));
  return c;
}

inline FinCategory opposite(const FinCategory& c) {
  FinCategory o = c;
  std::swap(o.src, o.tgt);
  o.comp.clear();
  for (const auto& [fg, h] : c.comp) o.comp[{fg.second, fg.first}] = h;
  return o;
}

inline FinCategory product_category(const FinCategory& c,
                                    const FinCategory& d) {
  FinCategory p;
  p.objects = product(c.objects, d.objects).carrier;
  p.morphisms = product(c.morphisms, d.morphisms).carrier;
  for (const auto& f : c.morphisms.elems)
    for (const auto& g : d.morphisms.elems) {
      std::string m = pair_label(f, g);
      p.src[m] = pair_label(c.source(f), d.source(g));
      p.tgt[m] = pair_label(c.target(f), d.target(g));
    }
  for (const auto& x : c.objects.elems)
    for (const auto& y : d.objects.elems)
      p.id[pair_label(x, y)] = pair_label(c.identity(x), d.identity(y));
  for (const auto& [fg, h] : c.comp)
    for (const auto& [fg2, h2] : d.comp)
      p.comp[{pair_label(fg.first, fg2.first),
              pair_label(fg.second, fg2.second)}] = pair_label(h, h2);
  return p;
}

/// The terminal category: one object, its identity.
inline FinCategory terminal_category(const std::string& obj = "*") {
  FinCategory c;
  c.objects = FinSet({obj});
  c.morphisms = FinSet({"1_" + obj});
  c.src["1_" + obj] = obj;
  c.tgt["1_" + obj] = obj;
  c.id[obj] = "1_" + obj;
  c.comp[{"1_" + obj, "1_" + obj}] = "1_" + obj;
  return c;
}

inline FinCategory discrete_category(const FinSet& objs) {
  FinCategory c;
  c.objects = objs;
  std::vector<std::string> ms;
  for (const auto& o : objs.elems) {
    std::string i = "1_" + o;
    ms.push_back(i);
    c.src[i] = o;
    c.tgt[i] = o;
    c.id[o] = i;
    c.comp[{i, i}] = i;
  }
  c.morphisms = FinSet(std::move(ms));
  return c;
}

/// A copresheaf on a category: sets indexed by objects, functions by
/// morphisms, functorially.
struct Copresheaf {
  FinCategory dom;
  std::map<std::string, FinSet> sets;          // object -> set
  std::map<std::string, FinFunction> actions;  // morphism -> function

  const FinSet& at(const std::string& o) const { return sets.at(o); }
  const FinFunction& on(const std::string& f) const { return actions.at(f); }
  bool operator==(const Copresheaf&) const = default;
};

inline LawReport check_copresheaf(const Copresheaf& F) {
  LawReport r;
  for (const auto& o : F.dom.objects.elems)
    if (!F.sets.count(o)) {
      r.fail("set total", o);
      return r;
    }
  for (const auto& f : F.dom.morphisms.elems) {
    auto it = F.actions.find(f);
    if (it == F.actions.end()) {
      r.fail("action total", f);
      return r;
    }
    if (it->second.dom != F.at(F.dom.source(f)) ||
        it->second.cod != F.at(F.dom.target(f)))
      r.fail("action endpoints", f);
  }
  if (!r.ok()) return r;
  for (const auto& o : F.dom.objects.elems)
    if (F.on(F.dom.identity(o)) != identity_function(F.at(o)))
      r.fail("preserves identities", o);
  for (const auto& f : F.dom.morphisms.elems)
    for (const auto& g : F.dom.morphisms.elems) {
      if (F.dom.target(f) != F.dom.source(g)) continue;
      if (F.on(F.dom.then(f, g)) != compose(F.on(f), F.on(g)))
        r.fail("preserves composition", "(" + f + ", " + g + ")");
    }
  return r;
}

/// Exhaustively enumerate all functors C -> D (desk scale only).
inline std::vector<FinFunctor> enumerate_functors(
    const FinCategory& C, const FinCategory& D,
    std::size_t budget = 1000000) {
  std::vector<FinFunctor> out;
  std::size_t explored = 0;
  const auto& objs = C.objects.elems;
  const auto& mors = C.morphisms.elems;

  std::map<std::string, std::string> omap, mmap;
  // Assign objects first, then morphisms, pruning with typing and, as soon
  // as both factors are placed, composition.
  auto check_partial_mor = [&](const std::string& f) {
    const std::string& ff = mmap.at(f);
    if (D.source(ff) != omap.at(C.source(f))) return false;
    if (D.target(ff) != omap.at(C.target(f))) return false;
    for (const auto& g : mors) {
      auto gi = mmap.find(g);
      if (gi == mmap.end()) continue;
      if (C.target(f) == C.source(g)) {
        auto ci = mmap.find(C.then(f, g));
        if (ci != mmap.end() && ci->second != D.then(ff, gi->second))
          return false;
      }
      if (C.target(g) == C.source(f)) {
        auto ci = mmap.find(C.then(g, f));
        if (ci != mmap.end() && ci->second != D.then(gi->second, ff))
          return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> go_obj = [&](std::size_t k) {
    if (k == objs.size()) {
      // Identities are forced; seed them to cut the search.
      mmap.clear();
      for (const auto& o : objs) mmap[C.identity(o)] = D.identity(omap[o]);
      bool ok = true;
      for (const auto& o : objs)
        if (!check_partial_mor(C.identity(o))) ok = false;
      if (ok) {
        // Recurse over the not-yet-assigned morphisms.
        std::vector<std::string> rest;
        for (const auto& f : mors)
          if (!mmap.count(f)) rest.push_back(f);
        std::function<void(std::size_t)> go = [&](std::size_t j) {
          if (++explored > budget)
            throw resource_error("enumerate_functors: budget exceeded");
          if (j == rest.size()) {
            out.push_back(FinFunctor{C, D, omap, mmap});
            return;
          }
          const std::string& f = rest[j];
          for (const auto& ff : D.morphisms.elems) {
            mmap[f] = ff;
            if (check_partial_mor(f)) go(j + 1);
            mmap.erase(f);
          }
        };
        go(0);
      }
      mmap.clear();
      return;
    }
    for (const auto& oo : D.objects.elems) {
      omap[objs[k]] = oo;
      go_obj(k + 1);
      omap.erase(objs[k]);
    }
  };
  if (C.objects.empty()) {
    out.push_back(FinFunctor{C, D, {}, {}});
    return out;
  }
  go_obj(0);
  return out;
}

}  // namespace fincat
