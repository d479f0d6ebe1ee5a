#pragma once

// The property suites behind the `suite` CLI subcommand and the acceptance
// binary: each function runs one criterion end to end over seeded corpora
// and returns per-check verdicts with timings.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fincat/action.hpp"
#include "fincat/corpus.hpp"
#include "fincat/dlens.hpp"
#include "fincat/optic.hpp"
#include "fincat/profunctor.hpp"
#include "fincat/tambara.hpp"

namespace fincat::suites {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // first counterexample, empty when passing
  std::optional<std::size_t> count;
  long long millis = 0;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {
template <typename Body>
Check timed(const std::string& name, Body&& body) {
  Check c;
  c.name = name;
  c.pass = true;
  auto t0 = std::chrono::steady_clock::now();
  body(c);
  c.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  return c;
}

inline void fail(Check& c, const std::string& witness) {
  if (c.pass) c.witness = witness;
  c.pass = false;
}

inline void absorb(Check& c, const LawReport& r, const std::string& prefix) {
  if (r.ok()) return;
  fail(c, prefix + r.violations.front().law + " @ " +
              r.violations.front().witness);
}
}  // namespace detail

using CountOracle = std::function<std::size_t(const SetProfunctor&)>;
using MatchOracle = std::function<bool(const SetProfunctor&)>;

/// Criterion: coend and end engines agree with the brute-force
/// coequalizer/equalizer oracles on random profunctors.
inline Suite coend_end_suite(std::uint32_t seed,
                             const CountOracle& coend_oracle,
                             const CountOracle& end_oracle,
                             const MatchOracle& coend_classes,
                             std::size_t instances = 200) {
  Suite s{"coend-end", {}};
  std::mt19937 rng(seed);
  std::vector<SetProfunctor> ps;
  for (std::size_t k = 0; k < instances; ++k) {
    FinCategory A = corpus::random_thin_category(rng, 4, 10);
    ps.push_back(corpus::random_endo_profunctor(A, rng, 6));
  }
  s.checks.push_back(detail::timed("coend matches oracle", [&](Check& c) {
    c.count = ps.size();
    for (std::size_t k = 0; k < ps.size(); ++k) {
      detail::absorb(c, check_profunctor(ps[k]), "instance " +
                                                     std::to_string(k) + ": ");
      if (coend(ps[k]).size() != coend_oracle(ps[k]) || !coend_classes(ps[k]))
        detail::fail(c, "instance " + std::to_string(k));
    }
  }));
  s.checks.push_back(detail::timed("end matches oracle", [&](Check& c) {
    c.count = ps.size();
    for (std::size_t k = 0; k < ps.size(); ++k)
      if (end(ps[k]).size() != end_oracle(ps[k]))
        detail::fail(c, "instance " + std::to_string(k));
  }));
  return s;
}

/// Criterion: slice-hom bijection for every (u, v, span) over carriers of
/// size <= bound.
inline Suite dlens_lemma_suite(std::size_t bound = 3) {
  Suite s{"dlens-lemma", {}};
  s.checks.push_back(detail::timed("slice-hom bijection sweep", [&](Check& c) {
    std::size_t instances = 0;
    for (std::size_t ni = 0; ni <= bound; ++ni)
      for (std::size_t nj = 0; nj <= bound; ++nj) {
        FinSet i = canonical_set("i", ni);
        FinSet j = canonical_set("j", nj);
        for (std::size_t na = 0; na <= bound; ++na)
          for (std::size_t ns = 0; ns <= bound; ++ns)
            for (std::size_t nz = 0; nz <= bound; ++nz) {
              FinSet a = canonical_set("a", na);
              FinSet sv = canonical_set("s", ns);
              FinSet z = canonical_set("z", nz);
              auto us = all_functions(a, i);
              auto vs = all_functions(sv, j);
              auto zs = all_functions(z, i);
              auto qs = all_functions(z, j);
              for (const auto& u : us)
                for (const auto& v : vs)
                  for (const auto& p : zs)
                    for (const auto& q : qs) {
                      LemmaReport r = dlens_lemma_bijection(
                          SliceObject{a, u}, SliceObject{sv, v},
                          Span{i, j, z, p, q}, 64);
                      ++instances;
                      if (!r.ok()) {
                        detail::fail(c, fn_label(u) + " / " + fn_label(v) +
                                            " / " + fn_label(p) + " / " +
                                            fn_label(q) + ": " +
                                            r.report.violations.front().law);
                        return;
                      }
                    }
            }
      }
    c.count = instances;
  }));
  return s;
}

/// Criterion: the comparison with dependent lenses is an equivalence over
/// carriers <= 2, with identity/composition preserved on random pairs.
inline Suite dlens_equivalence_suite(std::uint32_t seed,
                                     std::size_t samples = 50) {
  Suite s{"dlens-equivalence", {}};
  s.checks.push_back(detail::timed("comparison equivalence", [&](Check& c) {
    std::mt19937 rng(seed);
    EquivalenceReport r = dlens_equivalence_check(2, rng, samples);
    c.count = r.cospans;
    detail::absorb(c, r.report, "");
    if (r.composite_samples < samples)
      detail::fail(c, "only " + std::to_string(r.composite_samples) +
                          " composable samples");
  }));
  return s;
}

/// The classical lens instance: singleton bases, all four carriers of
/// size 2.
inline std::pair<Cospan, Cospan> lens64_instance() {
  FinSet pt{{"*"}};
  auto over = [&](const FinSet& total) {
    return SliceObject{total, constant_function(total, pt, "*")};
  };
  Cospan src{over(FinSet{{"s0", "s1"}}), over(FinSet{{"t0", "t1"}})};
  Cospan tgt{over(FinSet{{"a0", "a1"}}), over(FinSet{{"b0", "b1"}})};
  return {src, tgt};
}

/// Criterion: the classical lens instance counts exactly 64 optics, and the
/// truncated coend form stabilizes to the same number.
inline Suite lens_count_suite(const Cospan& src, const Cospan& tgt,
                              std::size_t bound = 2) {
  Suite s{"lens-count", {}};
  s.checks.push_back(detail::timed("optic hom count is 64", [&](Check& c) {
    std::size_t n = reduced_optic_hom(src, tgt).size();
    c.count = n;
    if (n != 64) detail::fail(c, std::to_string(n));
  }));
  s.checks.push_back(detail::timed("truncated coend stabilizes", [&](Check& c) {
    TruncatedCoendOptic t = truncated_coend_optic(src, tgt, bound);
    c.count = t.count;
    if (t.count != 64 || !t.stabilized)
      detail::fail(c, "count " + std::to_string(t.count) +
                          (t.stabilized ? "" : ", not stabilized"));
  }));
  return s;
}

inline Suite lens_count_suite() {
  auto [src, tgt] = lens64_instance();
  return lens_count_suite(src, tgt);
}

/// Stock action list shared by the adjunction, mutation, and representation
/// corpora.
inline std::vector<BicatAction> stock_actions() {
  return {corpus::trivial_bicat_action(corpus::walking_arrow()),
          corpus::swap_bicat_action(), corpus::poset_bicat_action()};
}

/// Criterion: free/forgetful and forgetful/cofree transpositions are exact
/// bijections, and the cofree comonad laws hold, on >= `instances`
/// corpus instances.
inline Suite adjunction_suite(std::uint32_t seed, std::size_t instances = 20,
                              std::size_t budget = kDefaultEnumBudget) {
  Suite s{"adjunction", {}};
  std::mt19937 rng(seed);
  std::vector<std::pair<ProfFamily, TambaraModule>> corpus_list;
  for (const auto& A : stock_actions())
    corpus_list.push_back({corpus::hom_prof_family(A), corpus::hom_tambara(A)});

  std::vector<std::string> directions;
  std::size_t done = 0, attempts = 0;
  Check free_c{"free transposition bijection", true, "", 0, 0};
  Check cofree_c{"cofree transposition bijection", true, "", 0, 0};
  Check comonad_c{"cofree comonad laws", true, "", 0, 0};
  auto t0 = std::chrono::steady_clock::now();

  auto run_one = [&](const ProfFamily& Q, const TambaraModule& R) {
    AdjunctionReport ar = adjunction_check(Q, R, budget);
    for (const auto& v : ar.report.violations) {
      bool is_cofree = v.law.find("cofree") != std::string::npos;
      detail::fail(is_cofree ? cofree_c : free_c,
                   v.law + " @ " + v.witness);
    }
    LawReport cm = comonad_laws_check(Q);
    detail::absorb(comonad_c, cm, "");
    directions.push_back(ar.direction);
    ++done;
  };

  for (const auto& [Q, R] : corpus_list) run_one(Q, R);
  while (done < instances && attempts < instances * 20) {
    ++attempts;
    std::uniform_int_distribution<int> which(0, 2);
    BicatAction A;
    switch (which(rng)) {
      case 0: A = corpus::random_unit_action(rng); break;
      case 1: A = corpus::random_involution_action(rng); break;
      default: A = corpus::random_discrete_bicat_action(rng); break;
    }
    ProfFamily Q = corpus::random_prof_family(A, A, rng, 5);
    TambaraModule R = corpus::hom_tambara(A);
    try {
      run_one(Q, R);
    } catch (const resource_error&) {
      // instance too large for the enumeration budget; draw another
    }
  }
  long long total = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  free_c.count = done;
  cofree_c.count = done;
  comonad_c.count = done;
  free_c.millis = cofree_c.millis = comonad_c.millis = total;
  if (done < instances) {
    detail::fail(free_c, "only " + std::to_string(done) + " instances fit");
  }
  Check dir_c{"adjunction direction report", true, "", directions.size(), 0};
  std::set<std::string> uniq(directions.begin(), directions.end());
  std::string all;
  for (const auto& d : uniq) all += (all.empty() ? "" : " | ") + d;
  dir_c.witness = all;
  for (const auto& d : directions)
    if (d.find("free-left-adjoint;") == std::string::npos ||
        d.find("cofree-right-adjoint;") == std::string::npos)
      dir_c.pass = false;
  s.checks = {free_c, cofree_c, comonad_c, dir_c};
  return s;
}

/// Mutates one strength entry and expects the law checker to object.
inline Suite mutation_suite(std::uint32_t seed, std::size_t modules = 30) {
  Suite s{"mutation", {}};
  std::mt19937 rng(seed);
  s.checks.push_back(detail::timed("constructed modules pass", [&](Check& c) {
    c.count = 0;
  }));
  s.checks.push_back(detail::timed("strength mutations fail", [&](Check& c) {
    c.count = 0;
  }));
  Check& pass_c = s.checks[0];
  Check& mut_c = s.checks[1];
  auto t0 = std::chrono::steady_clock::now();

  std::size_t built = 0, mutations = 0, attempts = 0;
  while (built < modules && attempts < modules * 20) {
    ++attempts;
    std::uniform_int_distribution<int> base_kind(0, 1), mod_kind(0, 1);
    BicatAction A = base_kind(rng) == 0
                        ? corpus::random_unit_action(rng)
                        : corpus::random_involution_action(rng);
    ProfFamily Q = corpus::random_prof_family(A, A, rng, 5);
    TambaraModule M =
        mod_kind(rng) == 0 ? cofree(Q) : free_module(Q);
    // mutable entries exist only where a strength codomain has >= 2 points
    std::size_t can_mutate = 0;
    for (const auto& [key, f] : M.st)
      if (f.cod.size() >= 2) can_mutate += f.dom.size();
    if (can_mutate == 0) continue;
    LawReport ok = check_tambara(M);
    if (!ok.ok()) {
      detail::absorb(pass_c, ok, "constructed module: ");
      break;
    }
    ++built;
    for (const auto& [key, f] : M.st) {
      if (f.cod.size() < 2) continue;
      for (const auto& e : f.dom.elems)
        for (const auto& alt : f.cod.elems) {
          if (alt == f(e)) continue;
          TambaraModule bad = M;
          auto t = f.table;
          t[e] = alt;
          bad.st[key] = FinFunction(f.dom, f.cod, std::move(t));
          LawReport r = check_tambara(bad);
          ++mutations;
          if (r.ok())
            detail::fail(mut_c, "undetected mutation at (" +
                                    std::get<0>(key) + ", " +
                                    std::get<1>(key) + ", " +
                                    std::get<2>(key) + ") " + e + "->" + alt);
          else if (r.violations.front().witness.empty())
            detail::fail(mut_c, "violation without witness");
        }
    }
  }
  pass_c.count = built;
  mut_c.count = mutations;
  if (built < modules)
    detail::fail(pass_c,
                 "only " + std::to_string(built) + " mutable modules built");
  if (mutations == 0) detail::fail(mut_c, "no mutations generated");
  pass_c.millis = mut_c.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count();
  return s;
}

struct RepInstance {
  BicatAction act;
  OpticObject src, tgt;
};

/// Fixed corpus for the representation and eval criteria: every instance
/// uses the same action on both sides.
inline std::vector<RepInstance> representation_corpus() {
  std::vector<RepInstance> out;
  BicatAction tw = corpus::trivial_bicat_action(corpus::walking_arrow());
  for (const auto& sa : {"0", "1"})
    for (const auto& ta : {"0", "1"})
      out.push_back({tw, {"*", sa, ta}, {"*", ta, sa}});
  BicatAction sw = corpus::swap_bicat_action();
  out.push_back({sw, {"*", "p", "p"}, {"*", "p", "q"}});
  out.push_back({sw, {"*", "p", "q"}, {"*", "q", "p"}});
  out.push_back({sw, {"*", "q", "q"}, {"*", "p", "p"}});
  BicatAction po = corpus::poset_bicat_action();
  out.push_back({po, {"*", "0", "1"}, {"*", "0", "1"}});
  out.push_back({po, {"*", "0", "0"}, {"*", "1", "1"}});
  out.push_back({po, {"*", "1", "0"}, {"*", "0", "1"}});
  return out;
}

/// Criterion: representation_check reports an exact bijection on the fixed
/// corpus.
inline Suite representation_suite(std::size_t budget = kDefaultEnumBudget) {
  Suite s{"representation", {}};
  s.checks.push_back(detail::timed("representable-module bijection",
                                   [&](Check& c) {
    auto corpus_list = representation_corpus();
    c.count = corpus_list.size();
    for (std::size_t k = 0; k < corpus_list.size(); ++k) {
      const RepInstance& ri = corpus_list[k];
      RepresentationReport r =
          representation_check(ri.act, ri.act, ri.src, ri.tgt, budget);
      detail::absorb(c, r.report, "instance " + std::to_string(k) + ": ");
      if (!c.pass) return;
    }
  }));
  return s;
}

/// Criterion: compound-optics integrand bijection on random pairs of
/// functors between categories with <= 3 objects.
inline Suite compound_suite(std::uint32_t seed, std::size_t instances = 20) {
  Suite s{"compound", {}};
  s.checks.push_back(detail::timed("integrand bijection", [&](Check& c) {
    std::mt19937 rng(seed);
    c.count = instances;
    for (std::size_t k = 0; k < instances; ++k) {
      FinCategory C = corpus::random_thin_category(rng, 3, 9);
      FinCategory D = corpus::random_thin_category(rng, 3, 9);
      FinCategory Cp = corpus::random_thin_category(rng, 3, 9);
      FinCategory Dp = corpus::random_thin_category(rng, 3, 9);
      FinFunctor mC = corpus::random_functor(C, Cp, rng);
      FinFunctor mD = corpus::random_functor(D, Dp, rng);
      auto pick = [&](const FinCategory& K) {
        std::uniform_int_distribution<std::size_t> d(
            0, K.objects.elems.size() - 1);
        return K.objects.elems[d(rng)];
      };
      IsoReport r = compound_integrand_check(mC, mD, pick(C), pick(D),
                                             pick(Cp), pick(Dp));
      detail::absorb(c, r.report, "instance " + std::to_string(k) + ": ");
      if (!c.pass) return;
    }
  }));
  return s;
}

/// Criterion: eval respects coend classes and optic composition on the
/// representation corpus.
inline Suite eval_suite() {
  Suite s{"eval", {}};
  s.checks.push_back(detail::timed("well-defined on classes", [&](Check& c) {
    std::size_t classes = 0;
    for (const auto& ri : representation_corpus()) {
      TambaraModule P = corpus::hom_tambara(ri.act);
      OpticHom h = optic_hom(ri.act, ri.act, ri.src, ri.tgt);
      for (const auto& cls : h.classes.quot.carrier.elems) {
        ++classes;
        for (const auto& p :
             P.at(ri.tgt.o).at(ri.tgt.a, ri.tgt.b).elems) {
          std::string first;
          bool any = false;
          for (const auto& [key, rep] : h.classes.injections) {
            if (rep != cls) continue;
            std::string got = eval(P, h, diag_tag(key.first, key.second), p);
            if (!any) {
              first = got;
              any = true;
            } else if (got != first) {
              detail::fail(c, cls + " @ " + p);
              return;
            }
          }
        }
      }
    }
    c.count = classes;
  }));
  s.checks.push_back(detail::timed("functorial for composition", [&](Check& c) {
    std::size_t composites = 0;
    for (const auto& A :
         {corpus::trivial_bicat_action(corpus::walking_arrow()),
          corpus::swap_bicat_action(), corpus::poset_bicat_action()}) {
      TambaraModule P = corpus::hom_tambara(A);
      const FinCategory& F = A.fibre_at("*");
      std::vector<OpticObject> objs;
      for (const auto& a : F.objects.elems)
        for (const auto& b : F.objects.elems) objs.push_back({"*", a, b});
      for (const auto& oi : objs)
        for (const auto& oj : objs)
          for (const auto& ok : objs) {
            OpticHom gh = optic_hom(A, A, oi, oj);
            OpticHom fh = optic_hom(A, A, oj, ok);
            OpticHom tg = optic_hom(A, A, oi, ok);
            for (const auto& g : gh.classes.quot.carrier.elems)
              for (const auto& f : fh.classes.quot.carrier.elems) {
                std::string comp = optic_compose(A, A, gh, g, fh, f, tg);
                ++composites;
                for (const auto& p : P.at("*").at(ok.a, ok.b).elems)
                  if (eval(P, tg, comp, p) !=
                      eval(P, gh, g, eval(P, fh, f, p))) {
                    detail::fail(c, g + " ; " + f + " @ " + p);
                    return;
                  }
              }
          }
    }
    c.count = composites;
  }));
  return s;
}

/// Criterion: action <-> copresheaf round trips are identities, and the
/// Grothendieck total category is a discrete opfibration, on random
/// actions.
inline Suite presentation_suite(std::uint32_t seed,
                                std::size_t instances = 100) {
  Suite s{"presentation", {}};
  s.checks.push_back(detail::timed("round trips and unique lifts",
                                   [&](Check& c) {
    std::mt19937 rng(seed);
    c.count = instances;
    for (std::size_t k = 0; k < instances; ++k) {
      FinCategory C = corpus::random_thin_category(rng, 4, 10);
      Copresheaf F0 = corpus::random_copresheaf(C, rng, 6, 6);
      IndexedSetAction A = copresheaf_to_action(F0);
      std::string tag = "instance " + std::to_string(k) + ": ";
      detail::absorb(c, check_action(A), tag);
      Copresheaf F = action_to_copresheaf(A);
      if (copresheaf_to_action(F) != A) detail::fail(c, tag + "action trip");
      if (action_to_copresheaf(copresheaf_to_action(F)) != F)
        detail::fail(c, tag + "copresheaf trip");
      ActionCategory E = grothendieck(F);
      detail::absorb(c, check_category(E.cat), tag + "total category: ");
      detail::absorb(c, check_functor(E.proj_functor), tag + "projection: ");
      detail::absorb(c, check_unique_lifts(E), tag);
      if (!c.pass) return;
    }
  }));
  return s;
}

/// Every criterion in order, sharing one seed.
inline std::vector<Suite> full_suite(std::uint32_t seed,
                                     const CountOracle& coend_oracle,
                                     const CountOracle& end_oracle,
                                     const MatchOracle& coend_classes,
                                     std::size_t budget = kDefaultEnumBudget) {
  return {coend_end_suite(seed, coend_oracle, end_oracle, coend_classes),
          dlens_lemma_suite(),
          dlens_equivalence_suite(seed),
          lens_count_suite(),
          adjunction_suite(seed, 20, budget),
          mutation_suite(seed),
          representation_suite(budget),
          compound_suite(seed),
          eval_suite(),
          presentation_suite(seed)};
}

}  // namespace fincat::suites
