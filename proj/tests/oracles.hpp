#pragma once

// Brute-force oracles for the coend/end engine, independent of the
// union-find and backtracking paths in the library: the coequalizer
// oracle closes a boolean relation matrix to a full equivalence, the
// equalizer oracle filters the complete product of diagonal sets.

#include <map>
#include <string>
#include <vector>

#include "fincat/profunctor.hpp"

namespace oracles {

inline std::size_t coend_class_count_oracle(const fincat::SetProfunctor& H) {
  const fincat::FinCategory& C = H.left;
  std::vector<std::string> elems;
  for (const auto& c : C.objects.elems)
    for (const auto& x : H.at(c, c).elems)
      elems.push_back(fincat::diag_tag(c, x));
  std::map<std::string, std::size_t> idx;
  for (std::size_t k = 0; k < elems.size(); ++k) idx[elems[k]] = k;

  std::size_t n = elems.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n; ++k) rel[k][k] = true;
  for (const auto& f : C.morphisms.elems) {
    const std::string& c = C.source(f);
    const std::string& cp = C.target(f);
    for (const auto& x : H.at(cp, c).elems) {
      std::size_t u = idx.at(fincat::diag_tag(c, H.lact_on(f, c)(x)));
      std::size_t v = idx.at(fincat::diag_tag(cp, H.ract_on(cp, f)(x)));
      rel[u][v] = rel[v][u] = true;
    }
  }
  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  // count classes: an element is a class leader if no smaller index is related
  std::size_t classes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool leader = true;
    for (std::size_t j = 0; j < i; ++j)
      if (rel[i][j]) leader = false;
    if (leader) ++classes;
  }
  return classes;
}

/// Also verify the engine's class map induces exactly the closed relation.
inline bool coend_matches_oracle(const fincat::SetProfunctor& H) {
  auto engine = fincat::coend(H);
  if (engine.size() != coend_class_count_oracle(H)) return false;

  // every generating relation must be honored by the engine's classes
  const fincat::FinCategory& C = H.left;
  for (const auto& f : C.morphisms.elems) {
    const std::string& c = C.source(f);
    const std::string& cp = C.target(f);
    for (const auto& x : H.at(cp, c).elems)
      if (engine.class_of(c, H.lact_on(f, c)(x)) !=
          engine.class_of(cp, H.ract_on(cp, f)(x)))
        return false;
  }
  return true;
}

inline std::size_t end_family_count_oracle(const fincat::SetProfunctor& H) {
  const fincat::FinCategory& C = H.left;
  const auto& objs = C.objects.elems;
  std::vector<std::vector<std::string>> pools;
  for (const auto& c : objs) pools.push_back(H.at(c, c).elems);

  std::size_t count = 0;
  std::vector<std::size_t> choice(objs.size(), 0);
  if (objs.empty()) return 1;
  bool any_empty = false;
  for (const auto& p : pools)
    if (p.empty()) any_empty = true;
  if (any_empty) return 0;
  while (true) {
    std::map<std::string, std::string> tuple;
    for (std::size_t k = 0; k < objs.size(); ++k)
      tuple[objs[k]] = pools[k][choice[k]];
    bool ok = true;
    for (const auto& f : C.morphisms.elems) {
      const std::string& a = C.source(f);
      const std::string& b = C.target(f);
      if (H.lact_on(f, b)(tuple[b]) != H.ract_on(a, f)(tuple[a])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t k = objs.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++choice[k] < pools[k].size()) {
        done = false;
        break;
      }
      choice[k] = 0;
    }
    if (done) break;
  }
  return count;
}

}  // namespace oracles
