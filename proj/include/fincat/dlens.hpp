#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fincat/bicategory.hpp"
#include "fincat/category.hpp"
#include "fincat/finset.hpp"
#include "fincat/profunctor.hpp"
#include "fincat/report.hpp"

namespace fincat {

/// An object of a slice over a base set: a total set with its map down.
struct SliceObject {
  FinSet total;
  FinFunction map;  // total -> base
  bool operator==(const SliceObject&) const = default;
};

/// Compact rendering of a function table, used to label elements built from
/// functions.
inline std::string fn_label(const FinFunction& f) {
  std::string s = "{";
  bool first = true;
  for (const auto& x : f.dom.elems) {
    if (!first) s += ";";
    first = false;
    s += x + ">" + f(x);
  }
  return s + "}";
}

/// All slice morphisms A -> B over the shared base: functions on totals
/// commuting with the maps down.
inline std::vector<FinFunction> slice_homs(const SliceObject& A,
                                           const SliceObject& B) {
  if (A.map.cod != B.map.cod)
    throw input_error("slice_homs: different bases");
  std::vector<FinFunction> out;
  for (auto& f : all_functions(A.total, B.total))
    if (compose(f, B.map) == A.map) out.push_back(std::move(f));
  return out;
}

/// Skeletal slice category over i with totals of size 0..B: objects are
/// multisets over i with canonical element labels, morphisms all commuting
/// maps.
struct SliceCategory {
  FinCategory cat;
  std::map<std::string, SliceObject> obs;    // object label -> slice
  std::map<std::string, FinFunction> cells;  // morphism label -> map
};

/// Canonical slice object from a multiset of base elements (given as a
/// sorted list of images).
inline SliceObject canonical_slice(const FinSet& i,
                                   std::vector<std::string> images) {
  std::sort(images.begin(), images.end());
  std::vector<std::string> total;
  std::map<std::string, std::string> t;
  for (std::size_t k = 0; k < images.size(); ++k) {
    std::string x = std::to_string(k);
    while (x.size() < 2) x = "0" + x;
    total.push_back(x);
    t[x] = images[k];
  }
  SliceObject s;
  s.total = FinSet(std::move(total));
  s.map = FinFunction(s.total, i, std::move(t));
  return s;
}

inline std::string slice_canonical_label(const SliceObject& s) {
  std::vector<std::string> images;
  for (const auto& x : s.total.elems) images.push_back(s.map(x));
  std::sort(images.begin(), images.end());
  std::string out = "sl[";
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (k) out += ";";
    out += images[k];
  }
  return out + "]";
}

inline SliceCategory slice_category(const FinSet& i, std::size_t B) {
  SliceCategory out;
  std::vector<std::vector<std::string>> multisets;
  std::vector<std::string> cur;
  std::function<void(std::size_t)> gen = [&](std::size_t from) {
    multisets.push_back(cur);
    if (cur.size() == B) return;
    for (std::size_t k = from; k < i.elems.size(); ++k) {
      cur.push_back(i.elems[k]);
      gen(k);
      cur.pop_back();
    }
  };
  gen(0);
  std::vector<std::string> objs;
  for (const auto& ms : multisets) {
    SliceObject s = canonical_slice(i, ms);
    std::string lab = slice_canonical_label(s);
    objs.push_back(lab);
    out.obs[lab] = std::move(s);
  }
  FinCategory& c = out.cat;
  c.objects = FinSet(std::move(objs));
  std::vector<std::string> mors;
  for (const auto& [la, sa] : out.obs)
    for (const auto& [lb, sb] : out.obs)
      for (auto& h : slice_homs(sa, sb)) {
        std::string lm = "h[" + la + "->" + lb + "|" + fn_label(h) + "]";
        mors.push_back(lm);
        c.src[lm] = la;
        c.tgt[lm] = lb;
        out.cells[lm] = std::move(h);
      }
  c.morphisms = FinSet(std::move(mors));
  for (const auto& lm : c.morphisms.elems) {
    const FinFunction& f = out.cells.at(lm);
    if (c.src.at(lm) == c.tgt.at(lm) && f == identity_function(f.dom))
      c.id[c.src.at(lm)] = lm;
  }
  auto label_of = [&](const std::string& la, const std::string& lb,
                      const FinFunction& f) {
    return "h[" + la + "->" + lb + "|" + fn_label(f) + "]";
  };
  for (const auto& f : c.morphisms.elems)
    for (const auto& g : c.morphisms.elems) {
      if (c.tgt.at(f) != c.src.at(g)) continue;
      c.comp[{f, g}] = label_of(c.src.at(f), c.tgt.at(g),
                                compose(out.cells.at(f), out.cells.at(g)));
    }
  return out;
}

/// Pullback along one span leg, then sum along the other: the canonical
/// action of a span (p : z -> i, q : z -> j) on a slice over i. Totals are
/// the pullback pairs "(x,zel)".
inline SliceObject pull_push(const Span& m, const SliceObject& u) {
  if (u.map.cod != m.left_foot)
    throw input_error("pull_push: slice base and span foot differ");
  auto pb = pullback(u.map, m.left);
  SliceObject out;
  out.total = pb.carrier;
  out.map = compose(pb.proj2, m.right);
  return out;
}

/// Verdict of the slice-hom bijection: I/j(v, q_* p^* u) is the sum over
/// f : s -> a of the slice homs over i x j from <f;u, v> to <p, q>.
struct LemmaReport {
  LawReport report;
  std::size_t lhs_count = 0, rhs_count = 0;
  bool ok() const { return report.ok(); }
};

inline LemmaReport dlens_lemma_bijection(const SliceObject& u,
                                         const SliceObject& v, const Span& m,
                                         std::size_t full_check_cap = 4096) {
  LemmaReport out;
  const FinSet& i = m.left_foot;
  const FinSet& j = m.right_foot;
  if (u.map.cod != i || v.map.cod != j)
    throw input_error("dlens_lemma_bijection: base mismatch");
  SliceObject qpu = pull_push(m, u);

  // Both sides are products over x in s of a fibre: on the left the fibre
  // of q_* p^* u over v(x), on the right the admissible pairs (a0, z0)
  // with u(a0) = p(z0) and q(z0) = v(x). Verify, per element, that the
  // two fibres match under splitting/pairing of labels, which makes the
  // forward and inverse maps componentwise inverse.
  std::vector<std::vector<std::string>> fibres;  // per x, in s-order
  for (const auto& x : v.total.elems) {
    std::vector<std::string> fib;
    for (const auto& e : qpu.total.elems)
      if (qpu.map(e) == v.map(x)) fib.push_back(e);
    std::size_t rhs_fib = 0;
    for (const auto& a0 : u.total.elems)
      for (const auto& z0 : m.apex.elems) {
        if (u.map(a0) != m.left(z0) || m.right(z0) != v.map(x)) continue;
        ++rhs_fib;
        const std::string e = pair_label(a0, z0);
        if (!qpu.total.contains(e) || qpu.map(e) != v.map(x))
          out.report.fail("forward lands in rhs", e);
        auto [a1, z1] = split_pair(e);
        if (a1 != a0 || z1 != z0)
          out.report.fail("inverse . forward = id", e);
      }
    if (rhs_fib != fib.size())
      out.report.fail("fibre cardinalities equal", x);
    fibres.push_back(std::move(fib));
  }
  std::size_t count = 1;
  for (const auto& fib : fibres) count *= fib.size();
  out.lhs_count = out.rhs_count = count;

  // At tuple level (capped), rebuild each slice morphism, transpose it to a
  // pair (f, g), and check both composites are identities.
  if (count == 0 || count > full_check_cap || v.total.elems.empty())
    return out;
  std::vector<std::size_t> idx(fibres.size(), 0);
  while (true) {
    std::map<std::string, std::string> tphi;
    for (std::size_t k = 0; k < fibres.size(); ++k)
      tphi[v.total.elems[k]] = fibres[k][idx[k]];
    FinFunction phi(v.total, qpu.total, tphi);
    if (compose(phi, qpu.map) != v.map)
      out.report.fail("lhs element is a slice morphism", fn_label(phi));
    std::map<std::string, std::string> tf, tg;
    for (const auto& x : v.total.elems) {
      auto [a0, z0] = split_pair(phi(x));
      tf[x] = a0;
      tg[x] = z0;
    }
    FinFunction f(v.total, u.total, std::move(tf));
    FinFunction g(v.total, m.apex, std::move(tg));
    bool good = true;
    for (const auto& x : v.total.elems)
      if (u.map(f(x)) != m.left(g(x)) || m.right(g(x)) != v.map(x))
        good = false;
    if (!good) out.report.fail("forward lands in rhs", fn_label(phi));
    std::map<std::string, std::string> tphi2;
    for (const auto& x : v.total.elems) tphi2[x] = pair_label(f(x), g(x));
    if (FinFunction(v.total, qpu.total, std::move(tphi2)) != phi)
      out.report.fail("inverse . forward = id", fn_label(phi));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == fibres[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

/// A cospan-shaped optic object over a base set: forward carrier u and
/// backward carrier u' over the same index.
struct Cospan {
  SliceObject fwd;  // u  : a -> i
  SliceObject bwd;  // u' : b -> i
  bool operator==(const Cospan&) const = default;
};

/// s x_i b: the pullback of u' along f;u, as a slice over s via the first
/// projection.
inline SliceObject backward_pullback(const Cospan& tgt, const FinFunction& f,
                                     const SliceObject& v) {
  auto pb = pullback(compose(f, tgt.fwd.map), tgt.bwd.map);
  return SliceObject{pb.carrier, pb.proj1};
}

/// One element of the reduced optic hom: the forward map together with the
/// backward map out of the induced pullback.
struct ReducedOptic {
  FinFunction f;  // s -> a
  FinFunction h;  // s x_i b -> t, over j
  bool operator==(const ReducedOptic&) const = default;
};

/// Sum over f : I(s,a) of I/j(v_*(f;u)^* u', v'): the collapsed optic
/// hom-set between cospans, with explicit (f, h) elements.
struct ReducedOpticHom {
  FinSet elems;
  std::map<std::string, ReducedOptic> parts;
  std::size_t size() const { return elems.size(); }
};

inline std::string reduced_optic_label(const ReducedOptic& r) {
  return pair_label(fn_label(r.f), fn_label(r.h));
}

inline ReducedOpticHom reduced_optic_hom(const Cospan& src,
                                         const Cospan& tgt) {
  const SliceObject& v = src.fwd;
  const SliceObject& vp = src.bwd;
  ReducedOpticHom out;
  std::vector<std::string> labels;
  for (const auto& f : all_functions(v.total, tgt.fwd.total)) {
    SliceObject sxb = backward_pullback(tgt, f, v);
    // slice over j: total s x_i b, down v . proj1
    SliceObject over_j{sxb.total, compose(sxb.map, v.map)};
    for (const auto& h : slice_homs(over_j, vp)) {
      ReducedOptic r{f, h};
      std::string lab = reduced_optic_label(r);
      labels.push_back(lab);
      out.parts[lab] = std::move(r);
    }
  }
  out.elems = FinSet(std::move(labels));
  return out;
}

inline ReducedOptic reduced_optic_id(const Cospan& c) {
  SliceObject sxt = backward_pullback(c, identity_function(c.fwd.total),
                                      c.fwd);
  std::map<std::string, std::string> t;
  for (const auto& e : sxt.total.elems) t[e] = split_pair(e).second;
  return ReducedOptic{identity_function(c.fwd.total),
                      FinFunction(sxt.total, c.bwd.total, std::move(t))};
}

/// Composite of x1 : c1 -> c2 and x2 : c2 -> c3 (diagrammatic): forward
/// maps compose; the backward map feeds the middle pullback through x2's
/// backward part.
inline ReducedOptic reduced_optic_compose(const Cospan& c1, const Cospan& c2,
                                          const Cospan& c3,
                                          const ReducedOptic& x1,
                                          const ReducedOptic& x2) {
  FinFunction fwd = compose(x1.f, x2.f);
  SliceObject dom = backward_pullback(c3, fwd, c1.fwd);
  std::map<std::string, std::string> t;
  for (const auto& e : dom.total.elems) {
    auto [s0, d0] = split_pair(e);
    const std::string b0 = x2.h(pair_label(x1.f(s0), d0));
    t[e] = x1.h(pair_label(s0, b0));
  }
  return ReducedOptic{std::move(fwd),
                      FinFunction(dom.total, c1.bwd.total, std::move(t))};
}

/// A dependent lens between two maps q : t -> s and p : b -> a: a forward
/// map on bases and a backward map out of the induced pullback, over s.
struct DLensMorphism {
  FinFunction f;       // s -> a
  FinFunction fsharp;  // s x_a b -> t  with q . fsharp = proj1
  bool operator==(const DLensMorphism&) const = default;
};

inline SliceObject dlens_pullback(const FinFunction& q, const FinFunction& p,
                                  const FinFunction& f) {
  auto pb = pullback(f, p);  // pairs (s0, b0) with f(s0) = p(b0)
  (void)q;
  return SliceObject{pb.carrier, pb.proj1};
}

inline std::vector<DLensMorphism> dlens_homs(const FinFunction& q,
                                             const FinFunction& p) {
  std::vector<DLensMorphism> out;
  for (const auto& f : all_functions(q.cod, p.cod)) {
    SliceObject sxb = dlens_pullback(q, p, f);
    SliceObject qv{q.dom, q};
    for (const auto& fs : slice_homs(SliceObject{sxb.total, sxb.map},
                                     qv))
      out.push_back({f, fs});
  }
  return out;
}

inline DLensMorphism dlens_id(const FinFunction& q) {
  SliceObject sxt = dlens_pullback(q, q, identity_function(q.cod));
  std::map<std::string, std::string> t;
  for (const auto& e : sxt.total.elems) t[e] = split_pair(e).second;
  return {identity_function(q.cod),
          FinFunction(sxt.total, q.dom, std::move(t))};
}

inline DLensMorphism dlens_compose(const FinFunction& q1,
                                   const FinFunction& q2,
                                   const FinFunction& q3,
                                   const DLensMorphism& x1,
                                   const DLensMorphism& x2) {
  FinFunction f = compose(x1.f, x2.f);
  SliceObject dom = dlens_pullback(q1, q3, f);
  std::map<std::string, std::string> t;
  for (const auto& e : dom.total.elems) {
    auto [s0, c0] = split_pair(e);
    const std::string b0 = x2.fsharp(pair_label(x1.f(s0), c0));
    t[e] = x1.fsharp(pair_label(s0, b0));
  }
  (void)q2;
  return {std::move(f), FinFunction(dom.total, q1.dom, std::move(t))};
}

/// The comparison: a cospan (u : a -> i, u' : b -> i) is sent to the map
/// u^* u' : a x_i b -> a, and an optic element (f, h) to the dependent lens
/// with the same forward part and backward part (s0, b0) |-> h(s0, b0)
/// (the two pullbacks have identical carriers by construction).
inline FinFunction comparison_object(const Cospan& c) {
  auto pb = pullback(c.fwd.map, c.bwd.map);
  return pb.proj1;  // a x_i b -> a
}

inline DLensMorphism comparison_morphism(const Cospan& src, const Cospan& tgt,
                                         const ReducedOptic& x) {
  FinFunction qs = comparison_object(src);  // s x_j t -> s
  FinFunction qt = comparison_object(tgt);  // a x_i b -> a
  SliceObject dom = dlens_pullback(qs, qt, x.f);
  // dom pairs (s0, (a0,b0)) with x.f(s0) = a0; send to (s0, h(s0,b0))
  std::map<std::string, std::string> t;
  for (const auto& e : dom.total.elems) {
    auto [s0, ab] = split_pair(e);
    auto [a0, b0] = split_pair(ab);
    (void)a0;
    t[e] = pair_label(s0, x.h(pair_label(s0, b0)));
  }
  return {x.f, FinFunction(dom.total, qs.dom, std::move(t))};
}

/// Truncated coend form of the optic hom: coend over the span hom-category
/// with apexes of size <= B of I/j(v, m_* u) x I/j(m_* u', v').
struct TruncatedCoendOptic {
  std::size_t count = 0;
  bool stabilized = false;
};

inline std::size_t truncated_coend_count(const Cospan& src, const Cospan& tgt,
                                         std::size_t B) {
  const FinSet& i = tgt.fwd.map.cod;
  const FinSet& j = src.fwd.map.cod;
  SpanHomCategory sh = span_hom_category(i, j, B);
  std::map<std::string, SliceObject> pushed_u, pushed_up;
  for (const auto& [lab, sp] : sh.spans) {
    pushed_u[lab] = pull_push(sp, tgt.fwd);
    pushed_up[lab] = pull_push(sp, tgt.bwd);
  }
  auto set_fn = [&](const std::string& m1, const std::string& m2) {
    std::vector<std::string> es;
    for (const auto& phi : slice_homs(src.fwd, pushed_u.at(m2)))
      for (const auto& psi : slice_homs(pushed_up.at(m1), src.bwd))
        es.push_back(pair_label(fn_label(phi), fn_label(psi)));
    return FinSet(std::move(es));
  };
  // induced map on pull-push totals along an apex map
  auto induced = [&](const std::string& cell, const SliceObject& from,
                     const SliceObject& to) {
    const FinFunction& sg = sh.cells.at(cell);
    std::map<std::string, std::string> t;
    for (const auto& e : from.total.elems) {
      auto [x, z] = split_pair(e);
      t[e] = pair_label(x, sg(z));
    }
    return FinFunction(from.total, to.total, std::move(t));
  };
  auto decode = [&](const std::string& e, const SliceObject& domA,
                    const FinSet& codA, const SliceObject& domB,
                    const FinSet& codB) {
    auto [lphi, lpsi] = split_pair(e);
    (void)domA;
    (void)codA;
    (void)domB;
    (void)codB;
    return std::pair<std::string, std::string>(lphi, lpsi);
  };
  (void)decode;
  auto lact_fn = [&](const std::string& cell, const std::string& m2) {
    const std::string m1p = sh.cat.source(cell);
    const std::string m1 = sh.cat.target(cell);
    FinSet dom = set_fn(m1, m2);
    FinSet cod = set_fn(m1p, m2);
    FinFunction ind = induced(cell, pushed_up.at(m1p), pushed_up.at(m1));
    std::map<std::string, std::string> t;
    // rebuild psi as a function to precompose
    for (const auto& e : dom.elems) {
      auto [lphi, lpsi] = split_pair(e);
      // find psi by label among the slice homs
      std::string np;
      for (const auto& psi : slice_homs(pushed_up.at(m1), src.bwd))
        if (fn_label(psi) == lpsi) {
          np = fn_label(compose(ind, psi));
          break;
        }
      t[e] = pair_label(lphi, np);
    }
    return FinFunction(dom, cod, std::move(t));
  };
  auto ract_fn = [&](const std::string& m1, const std::string& cell) {
    const std::string m2 = sh.cat.source(cell);
    const std::string m2p = sh.cat.target(cell);
    FinSet dom = set_fn(m1, m2);
    FinSet cod = set_fn(m1, m2p);
    FinFunction ind = induced(cell, pushed_u.at(m2), pushed_u.at(m2p));
    std::map<std::string, std::string> t;
    for (const auto& e : dom.elems) {
      auto [lphi, lpsi] = split_pair(e);
      std::string np;
      for (const auto& phi : slice_homs(src.fwd, pushed_u.at(m2)))
        if (fn_label(phi) == lphi) {
          np = fn_label(compose(phi, ind));
          break;
        }
      t[e] = pair_label(np, lpsi);
    }
    return FinFunction(dom, cod, std::move(t));
  };
  return coend(make_profunctor(sh.cat, sh.cat, set_fn, lact_fn, ract_fn))
      .size();
}

inline TruncatedCoendOptic truncated_coend_optic(const Cospan& src,
                                                 const Cospan& tgt,
                                                 std::size_t B) {
  TruncatedCoendOptic out;
  out.count = truncated_coend_count(src, tgt, B);
  const std::size_t next = truncated_coend_count(src, tgt, B + 1);
  const std::size_t reduced = reduced_optic_hom(src, tgt).size();
  out.stabilized = out.count == next && out.count == reduced;
  return out;
}

/// Pasting of pullback squares: f^*(u^* u') and (f;u)^* u' have the same
/// fibres over s, via (s0,(a0,b0)) <-> (s0,b0).
inline LawReport pasting_check(const FinFunction& f, const FinFunction& u,
                               const FinFunction& up) {
  LawReport r;
  FinFunction uu = pullback(u, up).proj1;      // a x_i b -> a
  auto outer = pullback(f, uu);                // (s0,(a0,b0)) with f(s0)=a0
  auto direct = pullback(compose(f, u), up);   // (s0,b0)
  if (outer.carrier.size() != direct.carrier.size()) {
    r.fail("pasting sizes", std::to_string(outer.carrier.size()) + " vs " +
                                std::to_string(direct.carrier.size()));
    return r;
  }
  for (const auto& e : outer.carrier.elems) {
    auto [s0, ab] = split_pair(e);
    auto [a0, b0] = split_pair(ab);
    if (f(s0) != a0) r.fail("pasting coherence", e);
    if (!direct.carrier.contains(pair_label(s0, b0)))
      r.fail("pasting bijection", e);
  }
  return r;
}

/// Beck-Chevalley for a pullback square of finite sets: pulling back then
/// summing along the square's legs agrees with summing then pulling back,
/// naturally in the slice.
inline LawReport beck_chevalley_check(const FinFunction& f,
                                      const FinFunction& g,
                                      const SliceObject& u) {
  LawReport r;
  if (f.cod != g.cod || u.map.cod != f.dom)
    throw input_error("beck_chevalley_check: shape mismatch");
  auto sq = pullback(f, g);  // P with proj1 -> dom f, proj2 -> dom g
  // k_! h^* u : pull u back along proj1, push along proj2
  Span left{f.dom, g.dom, sq.carrier, sq.proj1, sq.proj2};
  SliceObject lhs = pull_push(left, u);
  // g^* f_! u : push u along f (postcompose), pull back along g
  SliceObject fu{u.total, compose(u.map, f)};
  auto pb = pullback(g, fu.map);  // pairs (b0, x0) with g(b0) = f(u(x0))
  SliceObject rhs{pb.carrier, pb.proj1};
  if (lhs.total.size() != rhs.total.size()) {
    r.fail("beck-chevalley sizes", std::to_string(lhs.total.size()) +
                                       " vs " +
                                       std::to_string(rhs.total.size()));
    return r;
  }
  // canonical match: (x0,(a0,b0)) with u(x0)=a0  <->  (b0,x0)
  for (const auto& e : lhs.total.elems) {
    auto [x0, ab] = split_pair(e);
    auto [a0, b0] = split_pair(ab);
    if (u.map(x0) != a0) r.fail("beck-chevalley coherence", e);
    if (!rhs.total.contains(pair_label(b0, x0)))
      r.fail("beck-chevalley bijection", e);
    else if (lhs.map(e) != rhs.map(pair_label(b0, x0)))
      r.fail("beck-chevalley over base", e);
  }
  return r;
}

inline FinSet canonical_set(const std::string& prefix, std::size_t n) {
  std::vector<std::string> es;
  for (std::size_t k = 0; k < n; ++k) es.push_back(prefix + std::to_string(k));
  return FinSet(std::move(es));
}

/// Every cospan over canonical sets with all three carriers of size
/// 0..bound.
inline std::vector<Cospan> all_cospans(std::size_t bound) {
  std::vector<Cospan> out;
  for (std::size_t ni = 0; ni <= bound; ++ni) {
    FinSet i = canonical_set("i", ni);
    for (std::size_t na = 0; na <= bound; ++na)
      for (std::size_t nb = 0; nb <= bound; ++nb) {
        FinSet a = canonical_set("a", na);
        FinSet b = canonical_set("b", nb);
        for (const auto& u : all_functions(a, i))
          for (const auto& up : all_functions(b, i))
            out.push_back({SliceObject{a, u}, SliceObject{b, up}});
      }
  }
  return out;
}

inline std::string dlens_label(const DLensMorphism& m) {
  return pair_label(fn_label(m.f), fn_label(m.fsharp));
}

/// Verdict of the comparison between cospans-with-reduced-optics and
/// dependent lenses: functor laws, fullness, faithfulness, and essential
/// surjectivity, all over carriers of size <= bound.
struct EquivalenceReport {
  LawReport report;
  std::size_t cospans = 0;
  std::size_t hom_pairs = 0;
  std::size_t composite_samples = 0;
  std::size_t dlens_objects = 0;
  bool ok() const { return report.ok(); }
};

inline EquivalenceReport dlens_equivalence_check(std::size_t bound,
                                                 std::mt19937& rng,
                                                 std::size_t samples) {
  EquivalenceReport out;
  std::vector<Cospan> cs = all_cospans(bound);
  out.cospans = cs.size();

  // identities are preserved
  for (const auto& c : cs) {
    if (comparison_morphism(c, c, reduced_optic_id(c)) !=
        dlens_id(comparison_object(c)))
      out.report.fail("identity preserved", slice_canonical_label(c.fwd));
  }

  // full and faithful: per hom pair, the morphism map is a bijection
  for (const auto& s : cs)
    for (const auto& t : cs) {
      ++out.hom_pairs;
      ReducedOpticHom H = reduced_optic_hom(s, t);
      FinFunction qs = comparison_object(s);
      FinFunction qt = comparison_object(t);
      auto image_homs = dlens_homs(qs, qt);
      std::set<std::string> target_labels, hit;
      for (const auto& m : image_homs) target_labels.insert(dlens_label(m));
      for (const auto& [lab, x] : H.parts) {
        std::string il = dlens_label(comparison_morphism(s, t, x));
        if (!target_labels.count(il))
          out.report.fail("image is a dependent lens", lab);
        if (!hit.insert(il).second) out.report.fail("faithful", lab);
      }
      if (hit.size() != target_labels.size())
        out.report.fail("full", std::to_string(hit.size()) + " of " +
                                    std::to_string(target_labels.size()));
      if (!out.report.ok()) return out;
    }

  // composition preserved on random composable triples
  std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
  std::size_t attempts = 0;
  while (out.composite_samples < samples && attempts < samples * 200) {
    ++attempts;
    const Cospan& c1 = cs[pick(rng)];
    const Cospan& c2 = cs[pick(rng)];
    const Cospan& c3 = cs[pick(rng)];
    ReducedOpticHom h12 = reduced_optic_hom(c1, c2);
    ReducedOpticHom h23 = reduced_optic_hom(c2, c3);
    if (h12.size() == 0 || h23.size() == 0) continue;
    std::uniform_int_distribution<std::size_t> p1(0, h12.size() - 1);
    std::uniform_int_distribution<std::size_t> p2(0, h23.size() - 1);
    const ReducedOptic& x1 = h12.parts.at(h12.elems.elems[p1(rng)]);
    const ReducedOptic& x2 = h23.parts.at(h23.elems.elems[p2(rng)]);
    ReducedOptic comp = reduced_optic_compose(c1, c2, c3, x1, x2);
    DLensMorphism lhs = comparison_morphism(c1, c3, comp);
    DLensMorphism rhs = dlens_compose(
        comparison_object(c1), comparison_object(c2), comparison_object(c3),
        comparison_morphism(c1, c2, x1), comparison_morphism(c2, c3, x2));
    if (lhs != rhs)
      out.report.fail("composition preserved",
                      reduced_optic_label(x1) + " then " +
                          reduced_optic_label(x2));
    ++out.composite_samples;
  }
  if (out.composite_samples < samples)
    out.report.fail("composable sample quota",
                    std::to_string(out.composite_samples));

  // essentially surjective: every map q : b -> a is isomorphic to the image
  // of the cospan (1_a : a -> a, q : b -> a)
  for (std::size_t na = 0; na <= bound; ++na)
    for (std::size_t nb = 0; nb <= bound; ++nb) {
      FinSet a = canonical_set("a", na);
      FinSet b = canonical_set("b", nb);
      for (const auto& q : all_functions(b, a)) {
        ++out.dlens_objects;
        Cospan c{SliceObject{a, identity_function(a)}, SliceObject{b, q}};
        FinFunction Fq = comparison_object(c);  // pairs (a0,b0), a0 = q(b0)
        // to : q -> Fq sends b0 to (q(b0), b0); from : Fq -> q projects
        SliceObject dto = dlens_pullback(q, Fq, identity_function(a));
        std::map<std::string, std::string> tt;
        for (const auto& e : dto.total.elems) {
          auto [a0, p] = split_pair(e);
          (void)a0;
          tt[e] = split_pair(p).second;
        }
        DLensMorphism to{identity_function(a),
                         FinFunction(dto.total, b, std::move(tt))};
        SliceObject dfrom = dlens_pullback(Fq, q, identity_function(a));
        std::map<std::string, std::string> tf;
        for (const auto& e : dfrom.total.elems) tf[e] = e;
        DLensMorphism from{identity_function(a),
                           FinFunction(dfrom.total, Fq.dom, std::move(tf))};
        if (dlens_compose(q, Fq, q, to, from) != dlens_id(q) ||
            dlens_compose(Fq, q, Fq, from, to) != dlens_id(Fq))
          out.report.fail("essentially surjective", fn_label(q));
      }
    }
  return out;
}

}  // namespace fincat
