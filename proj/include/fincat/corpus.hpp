#pragma once

// Small stock categories and seeded random generators used by the law
// checkers' test corpora and the CLI suite runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fincat/bicategory.hpp"
#include "fincat/category.hpp"
#include "fincat/finset.hpp"
#include "fincat/profunctor.hpp"
#include "fincat/tambara.hpp"

namespace fincat::corpus {

/// The walking arrow: objects 0,1 with a single non-identity arrow a01.
inline FinCategory walking_arrow() {
  FinCategory c;
  c.objects = FinSet({"0", "1"});
  c.morphisms = FinSet({"1_0", "1_1", "a01"});
  c.src = {{"1_0", "0"}, {"1_1", "1"}, {"a01", "0"}};
  c.tgt = {{"1_0", "0"}, {"1_1", "1"}, {"a01", "1"}};
  c.id = {{"0", "1_0"}, {"1", "1_1"}};
  c.comp = {{{"1_0", "1_0"}, "1_0"}, {{"1_1", "1_1"}, "1_1"},
            {{"1_0", "a01"}, "a01"}, {{"a01", "1_1"}, "a01"}};
  return c;
}

/// Two parallel non-identity arrows 0 => 1.
inline FinCategory parallel_pair() {
  FinCategory c;
  c.objects = FinSet({"0", "1"});
  c.morphisms = FinSet({"1_0", "1_1", "f", "g"});
  c.src = {{"1_0", "0"}, {"1_1", "1"}, {"f", "0"}, {"g", "0"}};
  c.tgt = {{"1_0", "0"}, {"1_1", "1"}, {"f", "1"}, {"g", "1"}};
  c.id = {{"0", "1_0"}, {"1", "1_1"}};
  c.comp = {{{"1_0", "1_0"}, "1_0"},
            {{"1_1", "1_1"}, "1_1"},
            {{"1_0", "f"}, "f"},
            {{"f", "1_1"}, "f"},
            {{"1_0", "g"}, "g"},
            {{"g", "1_1"}, "g"}};
  return c;
}

/// The cospan shape 0 -> 2 <- 1.
inline FinCategory cospan_shape() {
  FinCategory c;
  c.objects = FinSet({"0", "1", "2"});
  c.morphisms = FinSet({"1_0", "1_1", "1_2", "l", "r"});
  c.src = {{"1_0", "0"}, {"1_1", "1"}, {"1_2", "2"}, {"l", "0"}, {"r", "1"}};
  c.tgt = {{"1_0", "0"}, {"1_1", "1"}, {"1_2", "2"}, {"l", "2"}, {"r", "2"}};
  c.id = {{"0", "1_0"}, {"1", "1_1"}, {"2", "1_2"}};
  c.comp = {{{"1_0", "1_0"}, "1_0"}, {{"1_1", "1_1"}, "1_1"},
            {{"1_2", "1_2"}, "1_2"}, {{"1_0", "l"}, "l"},
            {{"l", "1_2"}, "l"},     {{"1_1", "r"}, "r"},
            {{"r", "1_2"}, "r"}};
  return c;
}

/// A one-object category from a monoid multiplication table.
/// mult[i][j] is the index of element i followed by element j
/// (diagrammatic), index 0 is the unit.
inline FinCategory monoid_category(
    const std::string& tag, const std::vector<std::vector<std::size_t>>& mult) {
  std::size_t n = mult.size();
  FinCategory c;
  c.objects = FinSet({"*"});
  std::vector<std::string> ms;
  for (std::size_t k = 0; k < n; ++k) ms.push_back(tag + std::to_string(k));
  c.morphisms = FinSet(ms);
  for (const auto& m : ms) {
    c.src[m] = "*";
    c.tgt[m] = "*";
  }
  c.id["*"] = ms[0];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c.comp[{ms[i], ms[j]}] = ms[mult[i][j]];
  return c;
}

inline FinCategory z2_category() {
  return monoid_category("z", {{0, 1}, {1, 0}});
}

inline FinCategory z3_category() {
  return monoid_category("z", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

/// The two-element monoid {1, e} with e idempotent.
inline FinCategory idem_monoid_category() {
  return monoid_category("e", {{0, 1}, {1, 1}});
}

/// Discrete strict monoidal category from a monoid table (index 0 = unit).
inline MonoidalData discrete_monoidal(
    const std::string& tag, const std::vector<std::vector<std::size_t>>& mult) {
  std::size_t n = mult.size();
  std::vector<std::string> obs;
  for (std::size_t k = 0; k < n; ++k) obs.push_back(tag + std::to_string(k));
  MonoidalData d;
  d.cat = discrete_category(FinSet(obs));
  d.unit_obj = obs[0];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d.tensor_obj[{obs[i], obs[j]}] = obs[mult[i][j]];
      d.tensor_mor[{"1_" + obs[i], "1_" + obs[j]}] = "1_" + obs[mult[i][j]];
    }
  return d;
}

inline MonoidalData trivial_monoidal() { return discrete_monoidal("i", {{0}}); }

inline MonoidalData z2_monoidal() {
  return discrete_monoidal("s", {{0, 1}, {1, 0}});
}

/// The poset monoid {1 <= m} with m idempotent: two objects, one
/// non-identity morphism u : 1 -> m, tensor = meet-like multiplication.
/// Gives a one-object base with a non-identity 2-cell.
inline MonoidalData poset_monoidal() {
  MonoidalData d;
  FinCategory& c = d.cat;
  c.objects = FinSet({"w0", "w1"});
  c.morphisms = FinSet({"1_w0", "1_w1", "u"});
  c.src = {{"1_w0", "w0"}, {"1_w1", "w1"}, {"u", "w0"}};
  c.tgt = {{"1_w0", "w0"}, {"1_w1", "w1"}, {"u", "w1"}};
  c.id = {{"w0", "1_w0"}, {"w1", "1_w1"}};
  c.comp = {{{"1_w0", "1_w0"}, "1_w0"}, {{"1_w1", "1_w1"}, "1_w1"},
            {{"1_w0", "u"}, "u"},       {{"u", "1_w1"}, "u"}};
  d.unit_obj = "w0";
  auto t = [&](const std::string& a, const std::string& b) {
    return (a == "w0" && b == "w0") ? std::string("w0") : std::string("w1");
  };
  for (const auto& a : c.objects.elems)
    for (const auto& b : c.objects.elems)
      d.tensor_obj[{a, b}] = t(a, b);
  for (const auto& f : c.morphisms.elems)
    for (const auto& g : c.morphisms.elems) {
      std::string s = t(c.source(f), c.source(g));
      std::string e = t(c.target(f), c.target(g));
      d.tensor_mor[{f, g}] = (s == e) ? "1_" + s : "u";
    }
  return d;
}

/// A small category viewed as a bicategory with discrete hom-categories.
inline FinBicategory locally_discrete_bicat(const FinCategory& C) {
  FinBicategory B;
  B.objects = C.objects;
  for (const auto& o : C.objects.elems)
    for (const auto& o2 : C.objects.elems)
      B.hom[{o, o2}] = discrete_category(FinSet(C.hom(o, o2)));
  for (const auto& [fg, h] : C.comp) {
    B.hcomp1[fg] = h;
    B.hcomp2[{"1_" + fg.first, "1_" + fg.second}] = "1_" + h;
  }
  for (const auto& [o, i] : C.id) B.unit[o] = i;
  return B;
}

/// Strict action of a locally discrete bicategory built from a copresheaf:
/// fibres are discrete categories on the copresheaf's sets.
inline BicatAction discrete_bicat_action(const Copresheaf& F) {
  BicatAction X;
  X.base = locally_discrete_bicat(F.dom);
  for (const auto& o : F.dom.objects.elems)
    X.fibre[o] = discrete_category(F.at(o));
  for (const auto& m : F.dom.morphisms.elems) {
    FinFunctor G{X.fibre.at(F.dom.source(m)), X.fibre.at(F.dom.target(m)),
                 {}, {}};
    for (const auto& x : F.at(F.dom.source(m)).elems) {
      G.omap[x] = F.on(m)(x);
      G.mmap["1_" + x] = "1_" + F.on(m)(x);
    }
    X.on1[m] = G;
    X.on2["1_" + m] = identity_nat(G);
  }
  return X;
}

/// Z/2 delooped, acting on a discrete two-element fibre by swapping.
inline BicatAction swap_bicat_action() {
  BicatAction X;
  X.base = deloop(z2_monoidal());
  FinCategory f = discrete_category(FinSet({"p", "q"}));
  X.fibre["*"] = f;
  FinFunctor swap{f, f, {{"p", "q"}, {"q", "p"}},
                  {{"1_p", "1_q"}, {"1_q", "1_p"}}};
  X.on1["s0"] = identity_functor(f);
  X.on1["s1"] = swap;
  X.on2["1_s0"] = identity_nat(X.on1["s0"]);
  X.on2["1_s1"] = identity_nat(swap);
  return X;
}

/// The poset monoid delooped, acting on the walking arrow: the idempotent
/// 1-cell acts by the constant functor at 1, the 2-cell u by the unique
/// transformation into it. Exercises non-identity 2-cells.
inline BicatAction poset_bicat_action() {
  BicatAction X;
  X.base = deloop(poset_monoidal());
  FinCategory f = walking_arrow();
  X.fibre["*"] = f;
  FinFunctor idf = identity_functor(f);
  FinFunctor cst = constant_functor(f, f, "1");
  X.on1["w0"] = idf;
  X.on1["w1"] = cst;
  X.on2["1_w0"] = identity_nat(idf);
  X.on2["1_w1"] = identity_nat(cst);
  NatTrans u{idf, cst, {{"0", "a01"}, {"1", "1_1"}}};
  X.on2["u"] = u;
  return X;
}

/// Trivial base acting on a given category: one object, unit 1-cell only.
inline BicatAction trivial_bicat_action(const FinCategory& fib) {
  BicatAction X;
  X.base = deloop(trivial_monoidal());
  X.fibre["*"] = fib;
  X.on1["i0"] = identity_functor(fib);
  X.on2["1_i0"] = identity_nat(X.on1["i0"]);
  return X;
}

/// Hom profunctor at every fibre of a self-paired action.
inline ProfFamily hom_prof_family(const BicatAction& A) {
  ProfFamily Q{A, A, {}};
  for (const auto& o : A.base.objects.elems)
    Q.profs[o] = hom_profunctor(A.fibre_at(o));
  return Q;
}

/// Constant profunctor family at a fixed set over a self-paired action.
inline ProfFamily constant_prof_family(const BicatAction& A, const FinSet& K) {
  ProfFamily Q{A, A, {}};
  for (const auto& o : A.base.objects.elems)
    Q.profs[o] = constant_profunctor(A.fibre_at(o), A.fibre_at(o), K);
  return Q;
}

/// The hom family with the strength induced by the action's functors:
/// st_m(f) = m.f. Lawful for every strict action.
inline TambaraModule hom_tambara(const BicatAction& A) {
  TambaraModule P;
  P.actX = P.actY = A;
  P.profs = hom_prof_family(A).profs;
  for (const auto& [key, h] : A.base.hom) {
    const auto& [o, o2] = key;
    const FinCategory& fo = A.fibre_at(o);
    const FinCategory& fo2 = A.fibre_at(o2);
    for (const auto& m : h.objects.elems) {
      const FinFunctor& F = A.on1_at(m);
      for (const auto& x : fo.objects.elems)
        for (const auto& y : fo.objects.elems) {
          FinSet dom(fo.hom(x, y));
          FinSet cod(fo2.hom(F.on_obj(x), F.on_obj(y)));
          std::map<std::string, std::string> t;
          for (const auto& f : dom.elems) t[f] = F.on_mor(f);
          P.st[{m, x, y}] = FinFunction(dom, cod, std::move(t));
        }
    }
  }
  return P;
}

// ---------------------------------------------------------------------------
// Seeded random instance generators. Everything below produces lawful data
// by construction (thin categories, sums of representables and constants),
// so the checkers act as regression tests rather than filters.
// ---------------------------------------------------------------------------

/// A random thin category: the reflexive-transitive closure of a random
/// relation on up to max_objects objects, resampled until the morphism
/// count (identities included) fits max_morphisms.
inline FinCategory random_thin_category(std::mt19937& rng,
                                        std::size_t max_objects = 4,
                                        std::size_t max_morphisms = 10) {
  std::uniform_int_distribution<std::size_t> nobj(1, max_objects);
  std::uniform_int_distribution<int> coin(0, 9);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::size_t n = nobj(rng);
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      rel[i][i] = true;
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && coin(rng) < 3) rel[i][j] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (rel[i][k] && rel[k][j]) rel[i][j] = true;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j]) ++count;
    if (count > max_morphisms) continue;

    FinCategory c;
    std::vector<std::string> objs, mors;
    for (std::size_t i = 0; i < n; ++i) objs.push_back("o" + std::to_string(i));
    c.objects = FinSet(objs);
    auto arrow = [&](std::size_t i, std::size_t j) {
      return i == j ? "1_" + objs[i] : "r[" + objs[i] + "->" + objs[j] + "]";
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j]) {
          std::string m = arrow(i, j);
          mors.push_back(m);
          c.src[m] = objs[i];
          c.tgt[m] = objs[j];
          if (i == j) c.id[objs[i]] = m;
        }
    c.morphisms = FinSet(std::move(mors));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (rel[i][j] && rel[j][k])
            c.comp[{arrow(i, j), arrow(j, k)}] = arrow(i, k);
    return c;
  }
  return walking_arrow();
}

namespace detail {
/// One building block of a random (pro)functor into Set.
struct Summand {
  bool representable = false;
  std::string c1, c2;      // representing objects (profunctor case)
  std::size_t const_size = 0;  // constant case
};
}  // namespace detail

/// A random endoprofunctor on A as a sum of representables
/// A(-, b0) x A(a0, =) and constants, resampled until the diagonal total
/// fits diag_cap.
inline SetProfunctor random_endo_profunctor(const FinCategory& A,
                                            std::mt19937& rng,
                                            std::size_t diag_cap = 6) {
  const auto& objs = A.objects.elems;
  std::uniform_int_distribution<std::size_t> nsum(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
  std::uniform_int_distribution<std::size_t> csize(0, 2);
  std::uniform_int_distribution<int> kind(0, 1);

  auto build = [&](const std::vector<detail::Summand>& ss) {
    auto set_fn = [&, ss](const std::string& c, const std::string& d) {
      std::vector<std::string> es;
      for (std::size_t k = 0; k < ss.size(); ++k) {
        std::string tag = "s" + std::to_string(k);
        if (ss[k].representable) {
          for (const auto& f : A.hom(c, ss[k].c1))
            for (const auto& g : A.hom(ss[k].c2, d))
              es.push_back(pair_label(tag, pair_label(f, g)));
        } else {
          for (std::size_t e = 0; e < ss[k].const_size; ++e)
            es.push_back(pair_label(tag, "e" + std::to_string(e)));
        }
      }
      return FinSet(std::move(es));
    };
    auto lact_fn = [&, ss, set_fn](const std::string& u,
                                   const std::string& d) {
      FinSet dom = set_fn(A.target(u), d);
      FinSet cod = set_fn(A.source(u), d);
      std::map<std::string, std::string> t;
      for (const auto& e : dom.elems) {
        auto [tag, body] = split_pair(e);
        std::size_t k = std::stoul(tag.substr(1));
        if (ss[k].representable) {
          auto [f, g] = split_pair(body);
          t[e] = pair_label(tag, pair_label(A.then(u, f), g));
        } else {
          t[e] = e;
        }
      }
      return FinFunction(dom, cod, std::move(t));
    };
    auto ract_fn = [&, ss, set_fn](const std::string& c,
                                   const std::string& v) {
      FinSet dom = set_fn(c, A.source(v));
      FinSet cod = set_fn(c, A.target(v));
      std::map<std::string, std::string> t;
      for (const auto& e : dom.elems) {
        auto [tag, body] = split_pair(e);
        std::size_t k = std::stoul(tag.substr(1));
        if (ss[k].representable) {
          auto [f, g] = split_pair(body);
          t[e] = pair_label(tag, pair_label(f, A.then(g, v)));
        } else {
          t[e] = e;
        }
      }
      return FinFunction(dom, cod, std::move(t));
    };
    return make_profunctor(A, A, set_fn, lact_fn, ract_fn);
  };

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<detail::Summand> ss;
    std::size_t k = nsum(rng);
    for (std::size_t s = 0; s < k; ++s) {
      detail::Summand sm;
      sm.representable = kind(rng) == 0;
      if (sm.representable) {
        sm.c1 = objs[pick(rng)];
        sm.c2 = objs[pick(rng)];
      } else {
        sm.const_size = csize(rng);
      }
      ss.push_back(sm);
    }
    SetProfunctor P = build(ss);
    std::size_t diag = 0;
    for (const auto& c : objs) diag += P.at(c, c).size();
    if (diag <= diag_cap) return P;
  }
  return build({detail::Summand{false, "", "", 1}});
}

/// A random copresheaf on C as a sum of representables hom(c0, -) and
/// constants, resampled until every fibre fits per_object_cap and the
/// total fits total_cap.
inline Copresheaf random_copresheaf(const FinCategory& C, std::mt19937& rng,
                                    std::size_t per_object_cap = 3,
                                    std::size_t total_cap = 6) {
  const auto& objs = C.objects.elems;
  std::uniform_int_distribution<std::size_t> nsum(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
  std::uniform_int_distribution<std::size_t> csize(0, 2);
  std::uniform_int_distribution<int> kind(0, 1);

  auto build = [&](const std::vector<detail::Summand>& ss) {
    Copresheaf F;
    F.dom = C;
    auto set_at = [&](const std::string& o) {
      std::vector<std::string> es;
      for (std::size_t k = 0; k < ss.size(); ++k) {
        std::string tag = "s" + std::to_string(k);
        if (ss[k].representable) {
          for (const auto& f : C.hom(ss[k].c1, o))
            es.push_back(pair_label(tag, f));
        } else {
          for (std::size_t e = 0; e < ss[k].const_size; ++e)
            es.push_back(pair_label(tag, "e" + std::to_string(e)));
        }
      }
      return FinSet(std::move(es));
    };
    for (const auto& o : objs) F.sets[o] = set_at(o);
    for (const auto& m : C.morphisms.elems) {
      const FinSet& dom = F.sets.at(C.source(m));
      const FinSet& cod = F.sets.at(C.target(m));
      std::map<std::string, std::string> t;
      for (const auto& e : dom.elems) {
        auto [tag, body] = split_pair(e);
        std::size_t k = std::stoul(tag.substr(1));
        t[e] = ss[k].representable ? pair_label(tag, C.then(body, m)) : e;
      }
      F.actions[m] = FinFunction(dom, cod, std::move(t));
    }
    return F;
  };

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<detail::Summand> ss;
    std::size_t k = nsum(rng);
    for (std::size_t s = 0; s < k; ++s) {
      detail::Summand sm;
      sm.representable = kind(rng) == 0;
      if (sm.representable)
        sm.c1 = objs[pick(rng)];
      else
        sm.const_size = csize(rng);
      ss.push_back(sm);
    }
    Copresheaf F = build(ss);
    std::size_t total = 0, biggest = 0;
    for (const auto& o : objs) {
      total += F.at(o).size();
      biggest = std::max(biggest, F.at(o).size());
    }
    if (total <= total_cap && biggest <= per_object_cap) return F;
  }
  return build({detail::Summand{false, "", "", 1}});
}

/// A random strict action of a locally discrete bicategory: base a random
/// thin category with at most 2 objects and 4 morphisms, fibres the
/// discrete categories of a random copresheaf with fibres of size <= 3.
inline BicatAction random_discrete_bicat_action(std::mt19937& rng) {
  FinCategory base = random_thin_category(rng, 2, 4);
  return discrete_bicat_action(random_copresheaf(base, rng, 3, 6));
}

/// A random family of profunctors between the fibres of two actions over
/// the same base: per object, a sum of representables and constants with a
/// capped total.
inline ProfFamily random_prof_family(const BicatAction& X,
                                     const BicatAction& Y, std::mt19937& rng,
                                     std::size_t cap = 6) {
  ProfFamily Q;
  Q.actX = X;
  Q.actY = Y;
  std::uniform_int_distribution<std::size_t> nsum(1, 2);
  std::uniform_int_distribution<std::size_t> csize(0, 2);
  std::uniform_int_distribution<int> kind(0, 1);
  for (const auto& o : X.base.objects.elems) {
    const FinCategory& fx = X.fibre_at(o);
    const FinCategory& fy = Y.fibre_at(o);
    bool can_rep = !fx.objects.elems.empty() && !fy.objects.elems.empty();
    SetProfunctor best =
        constant_profunctor(fx, fy, FinSet(std::vector<std::string>{}));
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::vector<detail::Summand> ss;
      std::size_t k = nsum(rng);
      for (std::size_t s = 0; s < k; ++s) {
        detail::Summand sm;
        sm.representable = can_rep && kind(rng) == 0;
        if (sm.representable) {
          std::uniform_int_distribution<std::size_t> px(
              0, fx.objects.elems.size() - 1);
          std::uniform_int_distribution<std::size_t> py(
              0, fy.objects.elems.size() - 1);
          sm.c1 = fx.objects.elems[px(rng)];
          sm.c2 = fy.objects.elems[py(rng)];
        } else {
          sm.const_size = csize(rng);
        }
        ss.push_back(sm);
      }
      auto set_fn = [&, ss](const std::string& x, const std::string& y) {
        std::vector<std::string> es;
        for (std::size_t k2 = 0; k2 < ss.size(); ++k2) {
          std::string tag = "s" + std::to_string(k2);
          if (ss[k2].representable) {
            for (const auto& f : fx.hom(x, ss[k2].c1))
              for (const auto& g : fy.hom(ss[k2].c2, y))
                es.push_back(pair_label(tag, pair_label(f, g)));
          } else {
            for (std::size_t e = 0; e < ss[k2].const_size; ++e)
              es.push_back(pair_label(tag, "e" + std::to_string(e)));
          }
        }
        return FinSet(std::move(es));
      };
      SetProfunctor P = make_profunctor(
          fx, fy, set_fn,
          [&, ss, set_fn](const std::string& u, const std::string& y) {
            FinSet dom = set_fn(fx.target(u), y);
            FinSet cod = set_fn(fx.source(u), y);
            std::map<std::string, std::string> t;
            for (const auto& e : dom.elems) {
              auto [tag, body] = split_pair(e);
              std::size_t k2 = std::stoul(tag.substr(1));
              if (ss[k2].representable) {
                auto [f, g] = split_pair(body);
                t[e] = pair_label(tag, pair_label(fx.then(u, f), g));
              } else {
                t[e] = e;
              }
            }
            return FinFunction(dom, cod, std::move(t));
          },
          [&, ss, set_fn](const std::string& x, const std::string& v) {
            FinSet dom = set_fn(x, fy.source(v));
            FinSet cod = set_fn(x, fy.target(v));
            std::map<std::string, std::string> t;
            for (const auto& e : dom.elems) {
              auto [tag, body] = split_pair(e);
              std::size_t k2 = std::stoul(tag.substr(1));
              if (ss[k2].representable) {
                auto [f, g] = split_pair(body);
                t[e] = pair_label(tag, pair_label(f, fy.then(g, v)));
              } else {
                t[e] = e;
              }
            }
            return FinFunction(dom, cod, std::move(t));
          });
      std::size_t total = 0;
      for (const auto& [key, s] : P.sets) total += s.size();
      if (total <= cap) {
        best = std::move(P);
        break;
      }
    }
    Q.profs[o] = std::move(best);
  }
  return Q;
}

/// Z/2 delooped, acting on a random discrete fibre of size 1..3 by a random
/// involution. Every strength entry of a lawful module over this base is
/// pinned by the unit and composition laws, so single-entry mutations are
/// always detectable.
inline BicatAction random_involution_action(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> nsize(1, 3);
  std::size_t n = nsize(rng);
  std::vector<std::string> es;
  for (std::size_t k = 0; k < n; ++k) es.push_back("p" + std::to_string(k));
  FinCategory f = discrete_category(FinSet(es));

  // random involution: shuffle, pair adjacent elements, maybe leave fixpoints
  std::vector<std::string> order = es;
  std::shuffle(order.begin(), order.end(), rng);
  std::map<std::string, std::string> om;
  for (const auto& e : es) om[e] = e;
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t k = 0; k + 1 < order.size(); k += 2)
    if (coin(rng)) {
      om[order[k]] = order[k + 1];
      om[order[k + 1]] = order[k];
    }
  std::map<std::string, std::string> mm;
  for (const auto& e : es) mm["1_" + e] = "1_" + om[e];
  FinFunctor invol{f, f, om, mm};

  BicatAction X;
  X.base = deloop(z2_monoidal());
  X.fibre["*"] = f;
  X.on1["s0"] = identity_functor(f);
  X.on1["s1"] = invol;
  X.on2["1_s0"] = identity_nat(X.on1["s0"]);
  X.on2["1_s1"] = identity_nat(invol);
  return X;
}

/// Trivial one-cell base acting on a random discrete fibre: every strength
/// entry sits at the unit 1-cell, where the unit law pins it to the
/// identity.
inline BicatAction random_unit_action(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> nsize(1, 3);
  std::size_t n = nsize(rng);
  std::vector<std::string> es;
  for (std::size_t k = 0; k < n; ++k) es.push_back("p" + std::to_string(k));
  return trivial_bicat_action(discrete_category(FinSet(es)));
}

/// A uniformly random functor C -> D, drawn from the full enumeration.
inline FinFunctor random_functor(const FinCategory& C, const FinCategory& D,
                                 std::mt19937& rng) {
  std::vector<FinFunctor> all = enumerate_functors(C, D);
  if (all.empty()) throw input_error("random_functor: no functors exist");
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace fincat::corpus
