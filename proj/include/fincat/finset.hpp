#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

/// Error thrown when an enumeration exceeds its configured budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Error thrown on malformed or incompatible inputs.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite set of opaque string labels, kept sorted so that equal sets
/// compare equal.
struct FinSet {
  std::vector<std::string> elems;

  FinSet() = default;
  explicit FinSet(std::vector<std::string> es) : elems(std::move(es)) {
    std::sort(elems.begin(), elems.end());
    auto dup = std::adjacent_find(elems.begin(), elems.end());
    if (dup != elems.end())
      throw input_error("FinSet: duplicate label '" + *dup + "'");
  }

  std::size_t size() const { return elems.size(); }
  bool empty() const { return elems.empty(); }
  bool contains(const std::string& x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
  }
  bool operator==(const FinSet&) const = default;
  auto operator<=>(const FinSet&) const = default;
};

/// Canonical set {0, 1, ..., n-1}.
inline FinSet range_set(std::size_t n, const std::string& prefix = "") {
  std::vector<std::string> es;
  es.reserve(n);
  for (std::size_t k = 0; k < n; ++k) es.push_back(prefix + std::to_string(k));
  return FinSet(std::move(es));
}

/// Canonical label for an ordered pair.
inline std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

/// A total function between finite sets, tabulated.
struct FinFunction {
  FinSet dom;
  FinSet cod;
  std::map<std::string, std::string> table;

  FinFunction() = default;
  FinFunction(FinSet d, FinSet c, std::map<std::string, std::string> t)
      : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
    for (const auto& x : dom.elems) {
      auto it = table.find(x);
      if (it == table.end())
        throw input_error("FinFunction: undefined on '" + x + "'");
      if (!cod.contains(it->second))
        throw input_error("FinFunction: image '" + it->second +
                          "' not in codomain");
    }
    if (table.size() != dom.size())
      throw input_error("FinFunction: table has foreign entries");
  }

  const std::string& operator()(const std::string& x) const {
    auto it = table.find(x);
    if (it == table.end())
      throw input_error("FinFunction: applied outside domain: '" + x + "'");
    return it->second;
  }

  bool operator==(const FinFunction&) const = default;
  auto operator<=>(const FinFunction&) const = default;
};

inline FinFunction identity_function(const FinSet& a) {
  std::map<std::string, std::string> t;
  for (const auto& x : a.elems) t[x] = x;
  return FinFunction(a, a, std::move(t));
}

/// Diagrammatic composition: (f ; g)(x) = g(f(x)).
inline FinFunction compose(const FinFunction& f, const FinFunction& g) {
  if (f.cod != g.dom)
    throw input_error("compose: codomain/domain mismatch");
  std::map<std::string, std::string> t;
  for (const auto& x : f.dom.elems) t[x] = g(f(x));
  return FinFunction(f.dom, g.cod, std::move(t));
}

inline FinFunction constant_function(const FinSet& a, const FinSet& b,
                                     const std::string& y) {
  std::map<std::string, std::string> t;
  for (const auto& x : a.elems) t[x] = y;
  return FinFunction(a, b, std::move(t));
}

inline bool is_bijection(const FinFunction& f) {
  if (f.dom.size() != f.cod.size()) return false;
  std::set<std::string> image;
  for (const auto& [x, y] : f.table) image.insert(y);
  return image.size() == f.cod.size();
}

inline FinFunction inverse(const FinFunction& f) {
  if (!is_bijection(f)) throw input_error("inverse: not a bijection");
  std::map<std::string, std::string> t;
  for (const auto& [x, y] : f.table) t[y] = x;
  return FinFunction(f.cod, f.dom, std::move(t));
}

/// Product a x b with projections; elements are pair labels.
struct ProductResult {
  FinSet carrier;
  FinFunction proj1;
  FinFunction proj2;
};

inline ProductResult product(const FinSet& a, const FinSet& b) {
  std::vector<std::string> es;
  std::map<std::string, std::string> t1, t2;
  for (const auto& x : a.elems)
    for (const auto& y : b.elems) {
      std::string p = pair_label(x, y);
      es.push_back(p);
      t1[p] = x;
      t2[p] = y;
    }
  FinSet carrier(std::move(es));
  return {carrier, FinFunction(carrier, a, std::move(t1)),
          FinFunction(carrier, b, std::move(t2))};
}

/// Pairing <f,g>: c -> a x b of two functions out of a common domain.
inline FinFunction pairing(const FinFunction& f, const FinFunction& g,
                           const ProductResult& prod) {
  if (f.dom != g.dom) throw input_error("pairing: domain mismatch");
  std::map<std::string, std::string> t;
  for (const auto& x : f.dom.elems) t[x] = pair_label(f(x), g(x));
  return FinFunction(f.dom, prod.carrier, std::move(t));
}

/// Pullback of f : A -> C and g : B -> C; carrier = {(x,y) | f(x) = g(y)}.
struct PullbackResult {
  FinSet carrier;
  FinFunction proj1;  // to dom(f)
  FinFunction proj2;  // to dom(g)
};

inline PullbackResult pullback(const FinFunction& f, const FinFunction& g) {
  if (f.cod != g.cod) throw input_error("pullback: codomain mismatch");
  std::vector<std::string> es;
  std::map<std::string, std::string> t1, t2;
  for (const auto& x : f.dom.elems)
    for (const auto& y : g.dom.elems)
      if (f(x) == g(y)) {
        std::string p = pair_label(x, y);
        es.push_back(p);
        t1[p] = x;
        t2[p] = y;
      }
  FinSet carrier(std::move(es));
  return {carrier, FinFunction(carrier, f.dom, std::move(t1)),
          FinFunction(carrier, g.dom, std::move(t2))};
}

/// Equalizer of f, g : A -> B as the pullback special case
/// {x | f(x) = g(x)} with its inclusion.
struct EqualizerResult {
  FinSet carrier;
  FinFunction include;
};

inline EqualizerResult equalizer(const FinFunction& f, const FinFunction& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw input_error("equalizer: functions not parallel");
  std::vector<std::string> es;
  std::map<std::string, std::string> t;
  for (const auto& x : f.dom.elems)
    if (f(x) == g(x)) {
      es.push_back(x);
      t[x] = x;
    }
  FinSet carrier(std::move(es));
  return {carrier, FinFunction(carrier, f.dom, std::move(t))};
}

/// Quotient of a carrier by the finest equivalence containing the given
/// pairs. Representatives are the least class members in label order.
struct QuotientResult {
  FinSet carrier;                                // class representatives
  std::map<std::string, std::string> class_of;   // raw element -> rep
  std::vector<std::pair<std::string, std::string>> witnesses;  // merged pairs
};

inline QuotientResult quotient(
    const FinSet& carrier,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  // Union-find over label indices.
  std::map<std::string, std::size_t> idx;
  for (std::size_t k = 0; k < carrier.elems.size(); ++k)
    idx[carrier.elems[k]] = k;
  std::vector<std::size_t> parent(carrier.size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t k) {
    while (parent[k] != k) {
      parent[k] = parent[parent[k]];
      k = parent[k];
    }
    return k;
  };

  QuotientResult out;
  for (const auto& [u, v] : pairs) {
    auto iu = idx.find(u), iv = idx.find(v);
    if (iu == idx.end() || iv == idx.end())
      throw input_error("quotient: pair member not in carrier");
    std::size_t ru = find(iu->second), rv = find(iv->second);
    if (ru != rv) {
      // Keep the lesser label as root so representatives are canonical.
      if (carrier.elems[rv] < carrier.elems[ru]) std::swap(ru, rv);
      parent[rv] = ru;
      out.witnesses.emplace_back(u, v);
    }
  }

  std::vector<std::string> reps;
  for (std::size_t k = 0; k < carrier.size(); ++k) {
    std::size_t r = find(k);
    out.class_of[carrier.elems[k]] = carrier.elems[r];
    if (r == k) reps.push_back(carrier.elems[k]);
  }
  out.carrier = FinSet(std::move(reps));
  return out;
}

/// All functions a -> b, in lexicographic table order.
inline std::vector<FinFunction> all_functions(const FinSet& a,
                                              const FinSet& b) {
  std::vector<FinFunction> out;
  if (a.empty()) {
    out.push_back(FinFunction(a, b, {}));
    return out;
  }
  if (b.empty()) return out;
  std::vector<std::size_t> choice(a.size(), 0);
  while (true) {
    std::map<std::string, std::string> t;
    for (std::size_t k = 0; k < a.size(); ++k)
      t[a.elems[k]] = b.elems[choice[k]];
    out.push_back(FinFunction(a, b, std::move(t)));
    std::size_t k = a.size();
    while (k > 0) {
      --k;
      if (++choice[k] < b.size()) break;
      choice[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace fincat
