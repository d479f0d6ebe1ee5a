#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/finset.hpp"
#include "fincat/report.hpp"

namespace fincat {

/// A finite strict bicategory. Each hom(o,o') is a FinCategory whose objects
/// are the 1-cells and whose morphisms are the 2-cells; hcomp1/hcomp2 give
/// strict horizontal composition of 1- and 2-cells (diagrammatic order).
/// 1-cell and 2-cell labels must be unique across all hom-categories.
struct FinBicategory {
  FinSet objects;
  std::map<std::pair<std::string, std::string>, FinCategory> hom;
  std::map<std::pair<std::string, std::string>, std::string> hcomp1;
  std::map<std::pair<std::string, std::string>, std::string> hcomp2;
  std::map<std::string, std::string> unit;  // object -> unit 1-cell

  const FinCategory& hom_at(const std::string& o,
                            const std::string& o2) const {
    auto it = hom.find({o, o2});
    if (it == hom.end())
      throw input_error("FinBicategory: no hom(" + o + ", " + o2 + ")");
    return it->second;
  }

  /// Endpoints of a 1-cell, found by scanning the hom-categories.
  std::pair<std::string, std::string> cell1_at(const std::string& m) const {
    for (const auto& [key, h] : hom)
      if (h.objects.contains(m)) return key;
    throw input_error("FinBicategory: unknown 1-cell " + m);
  }

  /// Endpoints of a 2-cell.
  std::pair<std::string, std::string> cell2_at(const std::string& a) const {
    for (const auto& [key, h] : hom)
      if (h.morphisms.contains(a)) return key;
    throw input_error("FinBicategory: unknown 2-cell " + a);
  }

  const std::string& hcomp_1(const std::string& m, const std::string& n) const {
    auto it = hcomp1.find({m, n});
    if (it == hcomp1.end())
      throw input_error("FinBicategory: no hcomp for 1-cells (" + m + ", " +
                        n + ")");
    return it->second;
  }

  const std::string& hcomp_2(const std::string& a, const std::string& b) const {
    auto it = hcomp2.find({a, b});
    if (it == hcomp2.end())
      throw input_error("FinBicategory: no hcomp for 2-cells (" + a + ", " +
                        b + ")");
    return it->second;
  }

  bool operator==(const FinBicategory&) const = default;
};

inline LawReport check_bicat(const FinBicategory& M) {
  LawReport r;
  std::map<std::string, int> seen1, seen2;
  for (const auto& o : M.objects.elems)
    for (const auto& o2 : M.objects.elems) {
      auto it = M.hom.find({o, o2});
      if (it == M.hom.end()) {
        r.fail("hom total", "(" + o + ", " + o2 + ")");
        continue;
      }
      r.absorb(check_category(it->second), "hom(" + o + "," + o2 + ")");
      for (const auto& m : it->second.objects.elems) ++seen1[m];
      for (const auto& a : it->second.morphisms.elems) ++seen2[a];
    }
  for (const auto& [m, k] : seen1)
    if (k > 1) r.fail("1-cell labels unique", m);
  for (const auto& [a, k] : seen2)
    if (k > 1) r.fail("2-cell labels unique", a);
  for (const auto& o : M.objects.elems) {
    auto it = M.unit.find(o);
    if (it == M.unit.end() || !M.hom_at(o, o).objects.contains(it->second))
      r.fail("unit total", o);
  }
  if (!r.ok()) return r;

  // hcomp of 1-cells: totality, endpoints, strict unit and associativity.
  for (const auto& o : M.objects.elems)
    for (const auto& o2 : M.objects.elems)
      for (const auto& o3 : M.objects.elems)
        for (const auto& m : M.hom_at(o, o2).objects.elems)
          for (const auto& n : M.hom_at(o2, o3).objects.elems) {
            auto it = M.hcomp1.find({m, n});
            if (it == M.hcomp1.end()) {
              r.fail("hcomp1 total", "(" + m + ", " + n + ")");
              continue;
            }
            if (!M.hom_at(o, o3).objects.contains(it->second))
              r.fail("hcomp1 endpoints", "(" + m + ", " + n + ")");
          }
  if (!r.ok()) return r;
  for (const auto& [key, h] : M.hom)
    for (const auto& m : h.objects.elems) {
      if (M.hcomp_1(M.unit.at(key.first), m) != m)
        r.fail("hcomp1 left unit", m);
      if (M.hcomp_1(m, M.unit.at(key.second)) != m)
        r.fail("hcomp1 right unit", m);
    }
  for (const auto& [mn, _] : M.hcomp1) {
    auto [m, n] = mn;
    auto [o2, o3] = M.cell1_at(n);
    for (const auto& o4 : M.objects.elems)
      for (const auto& k : M.hom_at(o3, o4).objects.elems)
        if (M.hcomp_1(M.hcomp_1(m, n), k) != M.hcomp_1(m, M.hcomp_1(n, k)))
          r.fail("hcomp1 associativity",
                 "(" + m + ", " + n + ", " + k + ")");
  }

  // hcomp of 2-cells: totality, endpoints, functoriality (interchange with
  // vertical composition and preservation of identity 2-cells), strict unit
  // and associativity.
  for (const auto& o : M.objects.elems)
    for (const auto& o2 : M.objects.elems)
      for (const auto& o3 : M.objects.elems) {
        const FinCategory& H = M.hom_at(o, o2);
        const FinCategory& K = M.hom_at(o2, o3);
        const FinCategory& HK = M.hom_at(o, o3);
        for (const auto& a : H.morphisms.elems)
          for (const auto& b : K.morphisms.elems) {
            auto it = M.hcomp2.find({a, b});
            if (it == M.hcomp2.end()) {
              r.fail("hcomp2 total", "(" + a + ", " + b + ")");
              continue;
            }
            const std::string& ab = it->second;
            if (!HK.morphisms.contains(ab) ||
                HK.source(ab) != M.hcomp_1(H.source(a), K.source(b)) ||
                HK.target(ab) != M.hcomp_1(H.target(a), K.target(b)))
              r.fail("hcomp2 endpoints", "(" + a + ", " + b + ")");
          }
        if (!r.ok()) return r;
        for (const auto& m : H.objects.elems)
          for (const auto& n : K.objects.elems)
            if (M.hcomp_2(H.identity(m), K.identity(n)) !=
                HK.identity(M.hcomp_1(m, n)))
              r.fail("hcomp2 identities", "(" + m + ", " + n + ")");
        for (const auto& a : H.morphisms.elems)
          for (const auto& a2 : H.morphisms.elems) {
            if (H.target(a) != H.source(a2)) continue;
            for (const auto& b : K.morphisms.elems)
              for (const auto& b2 : K.morphisms.elems) {
                if (K.target(b) != K.source(b2)) continue;
                if (M.hcomp_2(H.then(a, a2), K.then(b, b2)) !=
                    HK.then(M.hcomp_2(a, b), M.hcomp_2(a2, b2)))
                  r.fail("interchange", "(" + a + ", " + b + ")");
              }
          }
      }
  if (!r.ok()) return r;
  for (const auto& [key, h] : M.hom) {
    const std::string& ul = M.hom_at(key.first, key.first)
                                .identity(M.unit.at(key.first));
    const std::string& ur = M.hom_at(key.second, key.second)
                                .identity(M.unit.at(key.second));
    for (const auto& a : h.morphisms.elems) {
      if (M.hcomp_2(ul, a) != a) r.fail("hcomp2 left unit", a);
      if (M.hcomp_2(a, ur) != a) r.fail("hcomp2 right unit", a);
    }
  }
  for (const auto& [ab, _] : M.hcomp2) {
    auto [a, b] = ab;
    auto [o2, o3] = M.cell2_at(b);
    for (const auto& o4 : M.objects.elems)
      for (const auto& c : M.hom_at(o3, o4).morphisms.elems)
        if (M.hcomp_2(M.hcomp_2(a, b), c) != M.hcomp_2(a, M.hcomp_2(b, c)))
          r.fail("hcomp2 associativity", "(" + a + ", " + b + ", " + c + ")");
  }
  return r;
}

/// A strict action of a bicategory on categories: a fibre category per
/// object, a functor per 1-cell, a natural transformation per 2-cell,
/// preserving all compositions on the nose.
struct BicatAction {
  FinBicategory base;
  std::map<std::string, FinCategory> fibre;
  std::map<std::string, FinFunctor> on1;
  std::map<std::string, NatTrans> on2;

  const FinCategory& fibre_at(const std::string& o) const {
    return fibre.at(o);
  }
  const FinFunctor& on1_at(const std::string& m) const {
    auto it = on1.find(m);
    if (it == on1.end())
      throw input_error("BicatAction: no functor for 1-cell " + m);
    return it->second;
  }
  const NatTrans& on2_at(const std::string& a) const {
    auto it = on2.find(a);
    if (it == on2.end())
      throw input_error("BicatAction: no transformation for 2-cell " + a);
    return it->second;
  }
  bool operator==(const BicatAction&) const = default;
};

inline LawReport check_bicat_action(const BicatAction& X) {
  LawReport r;
  const FinBicategory& M = X.base;
  r.absorb(check_bicat(M), "base");
  for (const auto& o : M.objects.elems) {
    if (!X.fibre.count(o)) {
      r.fail("fibre total", o);
      continue;
    }
    r.absorb(check_category(X.fibre_at(o)), "fibre(" + o + ")");
  }
  if (!r.ok()) return r;
  for (const auto& [key, h] : M.hom) {
    for (const auto& m : h.objects.elems) {
      auto it = X.on1.find(m);
      if (it == X.on1.end()) {
        r.fail("on1 total", m);
        continue;
      }
      if (it->second.dom != X.fibre_at(key.first) ||
          it->second.cod != X.fibre_at(key.second)) {
        r.fail("on1 endpoints", m);
        continue;
      }
      r.absorb(check_functor(it->second), "on1(" + m + ")");
    }
    for (const auto& a : h.morphisms.elems) {
      auto it = X.on2.find(a);
      if (it == X.on2.end()) {
        r.fail("on2 total", a);
        continue;
      }
      if (it->second.src != X.on1_at(h.source(a)) ||
          it->second.tgt != X.on1_at(h.target(a))) {
        r.fail("on2 endpoints", a);
        continue;
      }
      r.absorb(check_nat_trans(it->second), "on2(" + a + ")");
    }
  }
  if (!r.ok()) return r;
  for (const auto& o : M.objects.elems)
    if (X.on1_at(M.unit.at(o)) != identity_functor(X.fibre_at(o)))
      r.fail("on1 unit", o);
  for (const auto& [mn, k] : M.hcomp1)
    if (X.on1_at(k) != compose_functors(X.on1_at(mn.first), X.on1_at(mn.second)))
      r.fail("on1 composition", "(" + mn.first + ", " + mn.second + ")");
  for (const auto& [key, h] : M.hom) {
    for (const auto& m : h.objects.elems)
      if (X.on2_at(h.identity(m)) != identity_nat(X.on1_at(m)))
        r.fail("on2 identity 2-cells", m);
    for (const auto& a : h.morphisms.elems)
      for (const auto& b : h.morphisms.elems) {
        if (h.target(a) != h.source(b)) continue;
        if (X.on2_at(h.then(a, b)) != vcompose(X.on2_at(a), X.on2_at(b)))
          r.fail("on2 vertical composition", "(" + a + ", " + b + ")");
      }
  }
  for (const auto& [ab, c] : M.hcomp2)
    if (X.on2_at(c) != hcompose_nat(X.on2_at(ab.first), X.on2_at(ab.second)))
      r.fail("on2 horizontal composition",
             "(" + ab.first + ", " + ab.second + ")");
  return r;
}

/// Input to deloop: a strict monoidal category given by explicit tensor
/// tables on objects and morphisms, with a chosen unit object.
struct MonoidalData {
  FinCategory cat;
  std::map<std::pair<std::string, std::string>, std::string> tensor_obj;
  std::map<std::pair<std::string, std::string>, std::string> tensor_mor;
  std::string unit_obj;
  bool operator==(const MonoidalData&) const = default;
};

/// One-object bicategory with hom = the given monoidal category and
/// horizontal composition = tensor. Errors when the tables are not strict.
inline FinBicategory deloop(const MonoidalData& d,
                            const std::string& point = "*") {
  FinBicategory B;
  B.objects = FinSet({point});
  B.hom[{point, point}] = d.cat;
  B.hcomp1 = d.tensor_obj;
  B.hcomp2 = d.tensor_mor;
  B.unit[point] = d.unit_obj;
  auto r = check_bicat(B);
  if (!r.ok())
    throw input_error("deloop: tables are not a strict monoidal category: " +
                      r.violations.front().law + " at " +
                      r.violations.front().witness);
  return B;
}

/// A span between two finite sets.
struct Span {
  FinSet left_foot, right_foot;
  FinSet apex;
  FinFunction left;   // apex -> left_foot
  FinFunction right;  // apex -> right_foot
  bool operator==(const Span&) const = default;
};

/// Canonical label of a span up to apex relabeling: the sorted multiset of
/// leg pairs.
inline std::string span_canonical_label(const Span& s) {
  std::vector<std::string> pairs;
  for (const auto& z : s.apex.elems)
    pairs.push_back(pair_label(s.left(z), s.right(z)));
  std::sort(pairs.begin(), pairs.end());
  std::string out = "sp[";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) out += ";";
    out += pairs[k];
  }
  return out + "]";
}

/// The canonical representative with that label: apex {0..n-1} ordered by
/// the sorted leg pairs.
inline Span canonical_span(const FinSet& i, const FinSet& j,
                           std::vector<std::pair<std::string, std::string>>
                               leg_pairs) {
  std::sort(leg_pairs.begin(), leg_pairs.end());
  Span s;
  s.left_foot = i;
  s.right_foot = j;
  std::vector<std::string> apex;
  std::map<std::string, std::string> lt, rt;
  for (std::size_t k = 0; k < leg_pairs.size(); ++k) {
    // zero-pad so the canonical ordering of labels matches numeric order
    std::string z = std::to_string(k);
    while (z.size() < 2) z = "0" + z;
    apex.push_back(z);
    lt[z] = leg_pairs[k].first;
    rt[z] = leg_pairs[k].second;
  }
  s.apex = FinSet(std::move(apex));
  s.left = FinFunction(s.apex, i, std::move(lt));
  s.right = FinFunction(s.apex, j, std::move(rt));
  return s;
}

/// Leg-respecting bijection between two spans with the same canonical label,
/// if one exists: match apex elements with equal leg pairs in sorted order.
inline std::optional<FinFunction> span_iso(const Span& a, const Span& b) {
  if (span_canonical_label(a) != span_canonical_label(b)) return std::nullopt;
  auto keyed = [](const Span& s) {
    std::vector<std::pair<std::string, std::string>> v;
    for (const auto& z : s.apex.elems)
      v.push_back({pair_label(s.left(z), s.right(z)), z});
    std::sort(v.begin(), v.end());
    return v;
  };
  auto va = keyed(a), vb = keyed(b);
  std::map<std::string, std::string> t;
  for (std::size_t k = 0; k < va.size(); ++k) t[va[k].second] = vb[k].second;
  return FinFunction(a.apex, b.apex, std::move(t));
}

inline Span identity_span(const FinSet& i) {
  Span s;
  s.left_foot = s.right_foot = s.apex = i;
  s.left = s.right = identity_function(i);
  return s;
}

/// Composite span by pullback over the shared foot (diagrammatic: m then n).
inline Span span_compose(const Span& m, const Span& n) {
  if (m.right_foot != n.left_foot)
    throw input_error("span_compose: middle feet differ");
  auto pb = pullback(m.right, n.left);
  Span s;
  s.left_foot = m.left_foot;
  s.right_foot = n.right_foot;
  s.apex = pb.carrier;
  s.left = compose(pb.proj1, m.left);
  s.right = compose(pb.proj2, n.right);
  return s;
}

/// Hom-category of spans i -> j with apexes of size 1..B, canonical objects,
/// 2-cells the leg-commuting apex maps. Returned with decoding tables.
struct SpanHomCategory {
  FinCategory cat;
  std::map<std::string, Span> spans;          // object label -> span
  std::map<std::string, FinFunction> cells;   // morphism label -> apex map
};

inline SpanHomCategory span_hom_category(const FinSet& i, const FinSet& j,
                                         std::size_t B) {
  if (B < 1) throw input_error("span_hom_category: bound must be >= 1");
  SpanHomCategory out;
  // all multisets of leg pairs of each size up to B
  std::vector<std::pair<std::string, std::string>> universe;
  for (const auto& a : i.elems)
    for (const auto& b : j.elems) universe.push_back({a, b});
  std::vector<std::vector<std::pair<std::string, std::string>>> multisets;
  std::vector<std::pair<std::string, std::string>> cur;
  std::function<void(std::size_t)> gen = [&](std::size_t from) {
    if (!cur.empty()) multisets.push_back(cur);
    if (cur.size() == B) return;
    for (std::size_t k = from; k < universe.size(); ++k) {
      cur.push_back(universe[k]);
      gen(k);
      cur.pop_back();
    }
  };
  gen(0);
  std::vector<std::string> objs;
  for (const auto& ms : multisets) {
    Span s = canonical_span(i, j, ms);
    std::string lab = span_canonical_label(s);
    objs.push_back(lab);
    out.spans[lab] = std::move(s);
  }
  FinCategory& c = out.cat;
  c.objects = FinSet(std::move(objs));
  std::vector<std::string> mors;
  for (const auto& [la, sa] : out.spans)
    for (const auto& [lb, sb] : out.spans) {
      // enumerate leg-preserving maps apex(a) -> apex(b)
      std::vector<std::vector<std::string>> choices;
      bool possible = true;
      for (const auto& z : sa.apex.elems) {
        std::vector<std::string> cands;
        for (const auto& w : sb.apex.elems)
          if (sa.left(z) == sb.left(w) && sa.right(z) == sb.right(w))
            cands.push_back(w);
        if (cands.empty()) possible = false;
        choices.push_back(std::move(cands));
      }
      if (!possible && !sa.apex.elems.empty()) continue;
      std::vector<std::size_t> pick(choices.size(), 0);
      while (true) {
        std::map<std::string, std::string> t;
        std::string enc;
        for (std::size_t k = 0; k < choices.size(); ++k) {
          t[sa.apex.elems[k]] = choices[k][pick[k]];
          if (k) enc += ",";
          enc += sa.apex.elems[k] + ":" + choices[k][pick[k]];
        }
        std::string lm = "f[" + la + "->" + lb + "|" + enc + "]";
        mors.push_back(lm);
        c.src[lm] = la;
        c.tgt[lm] = lb;
        out.cells[lm] = FinFunction(sa.apex, sb.apex, std::move(t));
        // next assignment
        std::size_t k = 0;
        for (; k < pick.size(); ++k) {
          if (++pick[k] < choices[k].size()) break;
          pick[k] = 0;
        }
        if (k == pick.size()) break;
        if (pick.empty()) break;
      }
    }
  c.morphisms = FinSet(std::move(mors));
  for (const auto& lm : c.morphisms.elems) {
    const FinFunction& f = out.cells.at(lm);
    if (c.src.at(lm) == c.tgt.at(lm) && f == identity_function(f.dom))
      c.id[c.src.at(lm)] = lm;
  }
  auto label_of = [&](const std::string& la, const std::string& lb,
                      const FinFunction& f) {
    std::string enc;
    for (std::size_t k = 0; k < f.dom.elems.size(); ++k) {
      if (k) enc += ",";
      enc += f.dom.elems[k] + ":" + f(f.dom.elems[k]);
    }
    return "f[" + la + "->" + lb + "|" + enc + "]";
  };
  for (const auto& f : c.morphisms.elems)
    for (const auto& g : c.morphisms.elems) {
      if (c.tgt.at(f) != c.src.at(g)) continue;
      c.comp[{f, g}] = label_of(c.src.at(f), c.tgt.at(g),
                                compose(out.cells.at(f), out.cells.at(g)));
    }
  return out;
}

/// A span whose apex elements carry a twist object from a twist category.
struct TwistedSpan {
  Span span;
  FinCategory twist;
  std::map<std::string, std::string> twist_of;  // apex element -> twist object
};

/// Composition of twisted spans for the degenerate case of a one-object,
/// one-morphism twist category: the span part is the plain pullback
/// composite, the twist part the unique assignment.
inline TwistedSpan mat_compose(const TwistedSpan& m, const TwistedSpan& n) {
  if (m.twist != n.twist) throw input_error("mat_compose: twist mismatch");
  if (m.twist.objects.size() != 1 || m.twist.morphisms.size() != 1)
    throw input_error("mat_compose: only degenerate twists are supported");
  TwistedSpan out;
  out.span = span_compose(m.span, n.span);
  out.twist = m.twist;
  for (const auto& z : out.span.apex.elems)
    out.twist_of[z] = m.twist.objects.elems.front();
  return out;
}

}  // namespace fincat
