#pragma once

// Instance files: a JSON-syntax declaration format for sets, functions,
// categories, functors, profunctors, set actions, cospans, strict monoidal
// categories, delooped actions, and Tambara modules, with named references
// between declarations. Unknown keys are rejected; parse errors, unresolved
// references, and checker failures carry distinct error kinds.

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fincat/bicategory.hpp"
#include "fincat/category.hpp"
#include "fincat/dlens.hpp"
#include "fincat/finset.hpp"
#include "fincat/profunctor.hpp"
#include "fincat/tambara.hpp"

namespace fincat::instance {

using nlohmann::json;

struct ParseError : std::runtime_error {
  enum class Kind { Syntax, Reference, Checker };
  Kind kind;
  ParseError(Kind k, const std::string& msg)
      : std::runtime_error(std::string(k == Kind::Syntax      ? "syntax: "
                                       : k == Kind::Reference ? "reference: "
                                                              : "checker: ") +
                           msg),
        kind(k) {}
};

struct InstanceFile {
  std::map<std::string, FinSet> sets;
  std::map<std::string, FinFunction> functions;
  std::map<std::string, FinCategory> categories;
  std::map<std::string, FinFunctor> functors;
  std::map<std::string, SetProfunctor> profunctors;
  std::map<std::string, Copresheaf> actions;  // category actions on sets
  std::map<std::string, Cospan> cospans;
  std::map<std::string, MonoidalData> monoidal;
  std::map<std::string, BicatAction> bicat_actions;
  std::map<std::string, TambaraModule> tambara;
  bool operator==(const InstanceFile&) const = default;
};

namespace detail {

inline void expect_keys(const json& j, const std::string& where,
                        const std::vector<std::string>& allowed) {
  if (!j.is_object())
    throw ParseError(ParseError::Kind::Syntax, where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const auto& a : allowed)
      if (k == a) ok = true;
    if (!ok)
      throw ParseError(ParseError::Kind::Syntax,
                       where + ": unknown key '" + k + "'");
  }
}

inline const json& need(const json& j, const std::string& where,
                        const std::string& key) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(ParseError::Kind::Syntax,
                     where + ": missing key '" + key + "'");
  return *it;
}

inline std::string str(const json& j, const std::string& where) {
  if (!j.is_string())
    throw ParseError(ParseError::Kind::Syntax, where + " must be a string");
  return j.get<std::string>();
}

inline std::vector<std::string> str_list(const json& j,
                                         const std::string& where) {
  if (!j.is_array())
    throw ParseError(ParseError::Kind::Syntax, where + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(str(e, where + " entry"));
  return out;
}

inline std::map<std::string, std::string> str_table(const json& j,
                                                    const std::string& where) {
  if (!j.is_object())
    throw ParseError(ParseError::Kind::Syntax, where + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = str(v, where + "." + k);
  return out;
}

template <typename T>
const T& resolve(const std::map<std::string, T>& pool,
                 const std::string& name, const std::string& where) {
  auto it = pool.find(name);
  if (it == pool.end())
    throw ParseError(ParseError::Kind::Reference,
                     where + ": '" + name + "' is not declared");
  return it->second;
}

// split "a|b" (and "a|b|c") keys used for pair-indexed tables
inline std::vector<std::string> split_key(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::string checked(LawReport r, const std::string& where) {
  if (r.ok()) return "";
  throw ParseError(ParseError::Kind::Checker,
                   where + ": " + r.violations.front().law + " @ " +
                       r.violations.front().witness);
}

}  // namespace detail

inline InstanceFile parse(const json& doc) {
  using namespace detail;
  InstanceFile out;
  expect_keys(doc, "instance",
              {"sets", "functions", "categories", "functors", "profunctors",
               "actions", "cospans", "monoidal", "bicat_actions", "tambara"});

  if (doc.contains("sets"))
    for (const auto& [name, body] : doc.at("sets").items())
      out.sets[name] = FinSet(str_list(body, "sets." + name));

  if (doc.contains("functions"))
    for (const auto& [name, body] : doc.at("functions").items()) {
      std::string w = "functions." + name;
      expect_keys(body, w, {"dom", "cod", "table"});
      const FinSet& d = resolve(out.sets, str(need(body, w, "dom"), w), w);
      const FinSet& c = resolve(out.sets, str(need(body, w, "cod"), w), w);
      try {
        out.functions[name] =
            FinFunction(d, c, str_table(need(body, w, "table"), w));
      } catch (const input_error& e) {
        throw ParseError(ParseError::Kind::Checker, w + ": " + e.what());
      }
    }

  if (doc.contains("categories"))
    for (const auto& [name, body] : doc.at("categories").items()) {
      std::string w = "categories." + name;
      expect_keys(body, w,
                  {"objects", "morphisms", "identities", "composition"});
      FinCategory cat;
      cat.objects = FinSet(str_list(need(body, w, "objects"), w));
      std::vector<std::string> ms;
      for (const auto& m : need(body, w, "morphisms")) {
        expect_keys(m, w + ".morphisms", {"name", "src", "tgt"});
        std::string mn = str(need(m, w, "name"), w);
        ms.push_back(mn);
        cat.src[mn] = str(need(m, w, "src"), w);
        cat.tgt[mn] = str(need(m, w, "tgt"), w);
      }
      cat.morphisms = FinSet(std::move(ms));
      cat.id = str_table(need(body, w, "identities"), w);
      for (const auto& entry : need(body, w, "composition")) {
        auto t = str_list(entry, w + ".composition");
        if (t.size() != 3)
          throw ParseError(ParseError::Kind::Syntax,
                           w + ".composition entries are [f, g, f;g]");
        cat.comp[{t[0], t[1]}] = t[2];
      }
      checked(check_category(cat), w);
      out.categories[name] = std::move(cat);
    }

  if (doc.contains("functors"))
    for (const auto& [name, body] : doc.at("functors").items()) {
      std::string w = "functors." + name;
      expect_keys(body, w, {"dom", "cod", "objects", "morphisms"});
      FinFunctor F;
      F.dom = resolve(out.categories, str(need(body, w, "dom"), w), w);
      F.cod = resolve(out.categories, str(need(body, w, "cod"), w), w);
      F.omap = str_table(need(body, w, "objects"), w);
      F.mmap = str_table(need(body, w, "morphisms"), w);
      checked(check_functor(F), w);
      out.functors[name] = std::move(F);
    }

  if (doc.contains("profunctors"))
    for (const auto& [name, body] : doc.at("profunctors").items()) {
      std::string w = "profunctors." + name;
      expect_keys(body, w, {"left", "right", "sets", "lact", "ract"});
      SetProfunctor P;
      P.left = resolve(out.categories, str(need(body, w, "left"), w), w);
      P.right = resolve(out.categories, str(need(body, w, "right"), w), w);
      for (const auto& [key, v] : need(body, w, "sets").items()) {
        auto parts = split_key(key);
        if (parts.size() != 2)
          throw ParseError(ParseError::Kind::Syntax,
                           w + ".sets keys look like 'c|d'");
        P.sets[{parts[0], parts[1]}] = FinSet(str_list(v, w + ".sets"));
      }
      auto tables = [&](const char* field,
                        std::map<std::pair<std::string, std::string>,
                                 FinFunction>& dst,
                        auto dom_of, auto cod_of) {
        for (const auto& [key, v] : need(body, w, field).items()) {
          auto parts = split_key(key);
          if (parts.size() != 2)
            throw ParseError(ParseError::Kind::Syntax,
                             w + "." + field + " keys look like 'f|d'");
          try {
            dst[{parts[0], parts[1]}] =
                FinFunction(dom_of(parts[0], parts[1]),
                            cod_of(parts[0], parts[1]),
                            str_table(v, w + "." + field));
          } catch (const input_error& e) {
            throw ParseError(ParseError::Kind::Checker, w + ": " + e.what());
          } catch (const std::out_of_range&) {
            throw ParseError(ParseError::Kind::Reference,
                             w + "." + field + ": bad key '" + key + "'");
          }
        }
      };
      tables(
          "lact", P.lact,
          [&](const std::string& f, const std::string& d) {
            return P.at(P.left.target(f), d);
          },
          [&](const std::string& f, const std::string& d) {
            return P.at(P.left.source(f), d);
          });
      tables(
          "ract", P.ract,
          [&](const std::string& c, const std::string& g) {
            return P.at(c, P.right.source(g));
          },
          [&](const std::string& c, const std::string& g) {
            return P.at(c, P.right.target(g));
          });
      checked(check_profunctor(P), w);
      out.profunctors[name] = std::move(P);
    }

  if (doc.contains("actions"))
    for (const auto& [name, body] : doc.at("actions").items()) {
      std::string w = "actions." + name;
      expect_keys(body, w, {"category", "sets", "on"});
      Copresheaf F;
      F.dom = resolve(out.categories, str(need(body, w, "category"), w), w);
      for (const auto& [o, v] : need(body, w, "sets").items())
        F.sets[o] = FinSet(str_list(v, w + ".sets." + o));
      for (const auto& [m, v] : need(body, w, "on").items()) {
        if (!F.dom.morphisms.contains(m))
          throw ParseError(ParseError::Kind::Reference,
                           w + ".on: unknown morphism '" + m + "'");
        try {
          F.actions[m] =
              FinFunction(F.at(F.dom.source(m)), F.at(F.dom.target(m)),
                          str_table(v, w + ".on." + m));
        } catch (const input_error& e) {
          throw ParseError(ParseError::Kind::Checker, w + ": " + e.what());
        }
      }
      checked(check_copresheaf(F), w);
      out.actions[name] = std::move(F);
    }

  if (doc.contains("cospans"))
    for (const auto& [name, body] : doc.at("cospans").items()) {
      std::string w = "cospans." + name;
      expect_keys(body, w, {"fwd", "bwd"});
      const FinFunction& f =
          resolve(out.functions, str(need(body, w, "fwd"), w), w);
      const FinFunction& b =
          resolve(out.functions, str(need(body, w, "bwd"), w), w);
      if (f.cod != b.cod)
        throw ParseError(ParseError::Kind::Checker,
                         w + ": legs land in different bases");
      out.cospans[name] = Cospan{SliceObject{f.dom, f}, SliceObject{b.dom, b}};
    }

  if (doc.contains("monoidal"))
    for (const auto& [name, body] : doc.at("monoidal").items()) {
      std::string w = "monoidal." + name;
      expect_keys(body, w,
                  {"category", "unit", "tensor_objects", "tensor_morphisms"});
      MonoidalData d;
      d.cat = resolve(out.categories, str(need(body, w, "category"), w), w);
      d.unit_obj = str(need(body, w, "unit"), w);
      for (const auto& [k, v] : need(body, w, "tensor_objects").items()) {
        auto parts = split_key(k);
        if (parts.size() != 2)
          throw ParseError(ParseError::Kind::Syntax,
                           w + ".tensor_objects keys look like 'a|b'");
        d.tensor_obj[{parts[0], parts[1]}] = str(v, w);
      }
      for (const auto& [k, v] : need(body, w, "tensor_morphisms").items()) {
        auto parts = split_key(k);
        if (parts.size() != 2)
          throw ParseError(ParseError::Kind::Syntax,
                           w + ".tensor_morphisms keys look like 'f|g'");
        d.tensor_mor[{parts[0], parts[1]}] = str(v, w);
      }
      try {
        checked(check_bicat(deloop(d)), w);
      } catch (const input_error& e) {
        throw ParseError(ParseError::Kind::Checker, w + ": " + e.what());
      }
      out.monoidal[name] = std::move(d);
    }

  if (doc.contains("bicat_actions"))
    for (const auto& [name, body] : doc.at("bicat_actions").items()) {
      std::string w = "bicat_actions." + name;
      expect_keys(body, w, {"base", "fibre", "on1", "on2"});
      BicatAction A;
      A.base =
          deloop(resolve(out.monoidal, str(need(body, w, "base"), w), w));
      const FinCategory& fib =
          resolve(out.categories, str(need(body, w, "fibre"), w), w);
      A.fibre["*"] = fib;
      for (const auto& [m, v] : need(body, w, "on1").items())
        A.on1[m] = resolve(out.functors, str(v, w + ".on1." + m), w);
      for (const auto& [f, v] : need(body, w, "on2").items()) {
        const FinCategory& h = A.base.hom_at("*", "*");
        if (!h.morphisms.contains(f))
          throw ParseError(ParseError::Kind::Reference,
                           w + ".on2: unknown 2-cell '" + f + "'");
        auto s = A.on1.find(h.source(f));
        auto t = A.on1.find(h.target(f));
        if (s == A.on1.end() || t == A.on1.end())
          throw ParseError(ParseError::Kind::Reference,
                           w + ".on2." + f + ": endpoints lack on1 entries");
        A.on2[f] = NatTrans{s->second, t->second,
                            str_table(v, w + ".on2." + f)};
      }
      checked(check_bicat_action(A), w);
      out.bicat_actions[name] = std::move(A);
    }

  if (doc.contains("tambara"))
    for (const auto& [name, body] : doc.at("tambara").items()) {
      std::string w = "tambara." + name;
      expect_keys(body, w, {"action_x", "action_y", "profunctor", "strength"});
      TambaraModule P;
      P.actX =
          resolve(out.bicat_actions, str(need(body, w, "action_x"), w), w);
      P.actY =
          resolve(out.bicat_actions, str(need(body, w, "action_y"), w), w);
      P.profs["*"] =
          resolve(out.profunctors, str(need(body, w, "profunctor"), w), w);
      for (const auto& [k, v] : need(body, w, "strength").items()) {
        auto parts = split_key(k);
        if (parts.size() != 3)
          throw ParseError(ParseError::Kind::Syntax,
                           w + ".strength keys look like 'm|x|y'");
        const auto& [m, x, y] = std::tie(parts[0], parts[1], parts[2]);
        try {
          const FinFunctor& mX = P.actX.on1_at(m);
          const FinFunctor& mY = P.actY.on1_at(m);
          P.st[{m, x, y}] = FinFunction(
              P.profs.at("*").at(x, y),
              P.profs.at("*").at(mX.on_obj(x), mY.on_obj(y)),
              str_table(v, w + ".strength." + k));
        } catch (const input_error& e) {
          throw ParseError(ParseError::Kind::Checker, w + ": " + e.what());
        } catch (const std::out_of_range&) {
          throw ParseError(ParseError::Kind::Reference,
                           w + ".strength: bad key '" + k + "'");
        }
      }
      checked(check_tambara(P), w);
      out.tambara[name] = std::move(P);
    }

  return out;
}

inline InstanceFile parse_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(ParseError::Kind::Syntax, e.what());
  }
  return parse(doc);
}

inline InstanceFile parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(ParseError::Kind::Syntax, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

namespace detail {
template <typename T>
std::string name_of(const std::map<std::string, T>& pool, const T& value,
                    const std::string& what) {
  for (const auto& [n, v] : pool)
    if (v == value) return n;
  throw input_error("serialize: " + what + " is not declared in the instance");
}
}  // namespace detail

/// Rebuilds the declaration document. References are recovered by value
/// lookup among the declared names, so reparsing yields an equal instance.
inline json serialize(const InstanceFile& f) {
  using detail::name_of;
  json doc = json::object();
  if (!f.sets.empty()) {
    json& js = doc["sets"] = json::object();
    for (const auto& [n, s] : f.sets) js[n] = s.elems;
  }
  if (!f.functions.empty()) {
    json& jf = doc["functions"] = json::object();
    for (const auto& [n, fn] : f.functions)
      jf[n] = {{"dom", name_of(f.sets, fn.dom, "function domain")},
               {"cod", name_of(f.sets, fn.cod, "function codomain")},
               {"table", fn.table}};
  }
  if (!f.categories.empty()) {
    json& jc = doc["categories"] = json::object();
    for (const auto& [n, c] : f.categories) {
      json ms = json::array();
      for (const auto& m : c.morphisms.elems)
        ms.push_back(
            {{"name", m}, {"src", c.source(m)}, {"tgt", c.target(m)}});
      json comp = json::array();
      for (const auto& [fg, h] : c.comp)
        comp.push_back({fg.first, fg.second, h});
      jc[n] = {{"objects", c.objects.elems},
               {"morphisms", ms},
               {"identities", c.id},
               {"composition", comp}};
    }
  }
  if (!f.functors.empty()) {
    json& jf = doc["functors"] = json::object();
    for (const auto& [n, F] : f.functors)
      jf[n] = {{"dom", name_of(f.categories, F.dom, "functor domain")},
               {"cod", name_of(f.categories, F.cod, "functor codomain")},
               {"objects", F.omap},
               {"morphisms", F.mmap}};
  }
  if (!f.profunctors.empty()) {
    json& jp = doc["profunctors"] = json::object();
    for (const auto& [n, P] : f.profunctors) {
      json sets = json::object(), lact = json::object(),
           ract = json::object();
      for (const auto& [k, s] : P.sets)
        sets[k.first + "|" + k.second] = s.elems;
      for (const auto& [k, fn] : P.lact)
        lact[k.first + "|" + k.second] = fn.table;
      for (const auto& [k, fn] : P.ract)
        ract[k.first + "|" + k.second] = fn.table;
      jp[n] = {{"left", name_of(f.categories, P.left, "profunctor leg")},
               {"right", name_of(f.categories, P.right, "profunctor leg")},
               {"sets", sets},
               {"lact", lact},
               {"ract", ract}};
    }
  }
  if (!f.actions.empty()) {
    json& ja = doc["actions"] = json::object();
    for (const auto& [n, F] : f.actions) {
      json sets = json::object(), on = json::object();
      for (const auto& [o, s] : F.sets) sets[o] = s.elems;
      for (const auto& [m, fn] : F.actions) on[m] = fn.table;
      ja[n] = {{"category", name_of(f.categories, F.dom, "action base")},
               {"sets", sets},
               {"on", on}};
    }
  }
  if (!f.cospans.empty()) {
    json& jc = doc["cospans"] = json::object();
    for (const auto& [n, c] : f.cospans)
      jc[n] = {{"fwd", name_of(f.functions, c.fwd.map, "cospan leg")},
               {"bwd", name_of(f.functions, c.bwd.map, "cospan leg")}};
  }
  if (!f.monoidal.empty()) {
    json& jm = doc["monoidal"] = json::object();
    for (const auto& [n, d] : f.monoidal) {
      json to = json::object(), tm = json::object();
      for (const auto& [k, v] : d.tensor_obj) to[k.first + "|" + k.second] = v;
      for (const auto& [k, v] : d.tensor_mor) tm[k.first + "|" + k.second] = v;
      jm[n] = {{"category", name_of(f.categories, d.cat, "monoidal carrier")},
               {"unit", d.unit_obj},
               {"tensor_objects", to},
               {"tensor_morphisms", tm}};
    }
  }
  if (!f.bicat_actions.empty()) {
    json& jb = doc["bicat_actions"] = json::object();
    for (const auto& [n, A] : f.bicat_actions) {
      std::string base_name;
      for (const auto& [bn, d] : f.monoidal)
        if (deloop(d) == A.base) base_name = bn;
      if (base_name.empty())
        throw input_error("serialize: bicat action base is not declared");
      json on1 = json::object(), on2 = json::object();
      for (const auto& [m, F] : A.on1)
        on1[m] = detail::name_of(f.functors, F, "on1 functor");
      for (const auto& [c2, nt] : A.on2) on2[c2] = nt.components;
      jb[n] = {{"base", base_name},
               {"fibre", name_of(f.categories, A.fibre.at("*"), "fibre")},
               {"on1", on1},
               {"on2", on2}};
    }
  }
  if (!f.tambara.empty()) {
    json& jt = doc["tambara"] = json::object();
    for (const auto& [n, P] : f.tambara) {
      json st = json::object();
      for (const auto& [k, fn] : P.st)
        st[std::get<0>(k) + "|" + std::get<1>(k) + "|" + std::get<2>(k)] =
            fn.table;
      jt[n] = {
          {"action_x", name_of(f.bicat_actions, P.actX, "module action")},
          {"action_y", name_of(f.bicat_actions, P.actY, "module action")},
          {"profunctor",
           name_of(f.profunctors, P.profs.at("*"), "module profunctor")},
          {"strength", st}};
    }
  }
  return doc;
}

/// Law reports for every declared object, in declaration-table order.
inline LawReport check_all(const InstanceFile& f) {
  LawReport r;
  for (const auto& [n, c] : f.categories)
    r.absorb(check_category(c), "category " + n + ": ");
  for (const auto& [n, F] : f.functors)
    r.absorb(check_functor(F), "functor " + n + ": ");
  for (const auto& [n, P] : f.profunctors)
    r.absorb(check_profunctor(P), "profunctor " + n + ": ");
  for (const auto& [n, F] : f.actions)
    r.absorb(check_copresheaf(F), "action " + n + ": ");
  for (const auto& [n, d] : f.monoidal)
    r.absorb(check_bicat(deloop(d)), "monoidal " + n + ": ");
  for (const auto& [n, A] : f.bicat_actions)
    r.absorb(check_bicat_action(A), "bicat action " + n + ": ");
  for (const auto& [n, P] : f.tambara)
    r.absorb(check_tambara(P), "tambara " + n + ": ");
  return r;
}

}  // namespace fincat::instance
