#include <catch2/catch_amalgamated.hpp>

#include "fincat/instance.hpp"

using namespace fincat;
using namespace fincat::instance;

namespace {

const char* kMinimal = R"({"sets": {"two": ["a", "b"]}})";

const char* kLens = R"({
  "sets": {"base": ["*"], "s": ["s0", "s1"], "t": ["t0"]},
  "functions": {
    "u":  {"dom": "s", "cod": "base", "table": {"s0": "*", "s1": "*"}},
    "u'": {"dom": "t", "cod": "base", "table": {"t0": "*"}}
  },
  "cospans": {"c": {"fwd": "u", "bwd": "u'"}}
})";

const char* kArrow = R"({
  "categories": {
    "arrow": {
      "objects": ["o0", "o1"],
      "morphisms": [
        {"name": "1_o0", "src": "o0", "tgt": "o0"},
        {"name": "1_o1", "src": "o1", "tgt": "o1"},
        {"name": "f", "src": "o0", "tgt": "o1"}
      ],
      "identities": {"o0": "1_o0", "o1": "1_o1"},
      "composition": [
        ["1_o0", "1_o0", "1_o0"], ["1_o1", "1_o1", "1_o1"],
        ["1_o0", "f", "f"], ["f", "1_o1", "f"]
      ]
    }
  },
  "actions": {
    "rep": {
      "category": "arrow",
      "sets": {"o0": ["1_o0"], "o1": ["f"]},
      "on": {
        "1_o0": {"1_o0": "1_o0"},
        "1_o1": {"f": "f"},
        "f": {"1_o0": "f"}
      }
    }
  }
})";

ParseError::Kind kind_of(const std::string& text) {
  try {
    parse_text(text);
  } catch (const ParseError& e) {
    return e.kind;
  }
  FAIL("expected a parse error");
  return ParseError::Kind::Syntax;
}

}  // namespace

TEST_CASE("minimal instance declares a two-element set") {
  InstanceFile f = parse_text(kMinimal);
  REQUIRE(f.sets.at("two").size() == 2);
  CHECK(check_all(f).ok());
}

TEST_CASE("cospans resolve declared functions") {
  InstanceFile f = parse_text(kLens);
  const Cospan& c = f.cospans.at("c");
  CHECK(c.fwd.total.size() == 2);
  CHECK(c.bwd.total.size() == 1);
  CHECK(c.fwd.map.cod == f.sets.at("base"));
}

TEST_CASE("categories and actions are checked on parse") {
  InstanceFile f = parse_text(kArrow);
  CHECK(check_category(f.categories.at("arrow")).ok());
  CHECK(check_copresheaf(f.actions.at("rep")).ok());
}

TEST_CASE("error kinds are distinct") {
  SECTION("malformed JSON is a syntax error") {
    CHECK(kind_of("{\"sets\": [") == ParseError::Kind::Syntax);
  }
  SECTION("unknown keys are rejected as syntax errors") {
    CHECK(kind_of(R"({"sets": {}, "bogus": {}})") == ParseError::Kind::Syntax);
    CHECK(kind_of(R"({"functions": {"g": {"dom": "x", "cod": "x",
                       "table": {}, "extra": 1}}})") ==
          ParseError::Kind::Syntax);
  }
  SECTION("dangling references are resolution errors") {
    CHECK(kind_of(R"({"functions": {"g": {"dom": "nope", "cod": "nope",
                       "table": {}}}})") == ParseError::Kind::Reference);
    CHECK(kind_of(R"({"sets": {"s": ["x"]},
                       "cospans": {"c": {"fwd": "nope", "bwd": "nope"}}})") ==
          ParseError::Kind::Reference);
  }
  SECTION("law violations are checker errors") {
    // missing composite (1_o, 1_o)
    CHECK(kind_of(R"({"categories": {"c": {
            "objects": ["o"],
            "morphisms": [{"name": "1_o", "src": "o", "tgt": "o"}],
            "identities": {"o": "1_o"},
            "composition": []}}})") == ParseError::Kind::Checker);
    // function table misses an element
    CHECK(kind_of(R"({"sets": {"s": ["x", "y"], "t": ["z"]},
                       "functions": {"g": {"dom": "s", "cod": "t",
                       "table": {"x": "z"}}}})") == ParseError::Kind::Checker);
  }
}

TEST_CASE("serialize then reparse is the identity") {
  for (const char* text : {kMinimal, kLens, kArrow}) {
    InstanceFile f = parse_text(text);
    CHECK(parse(serialize(f)) == f);
  }
}

TEST_CASE("shipped lens instance parses and all checkers pass") {
  InstanceFile f = parse_file(std::string(FINCAT_SOURCE_DIR) +
                              "/instances/lens64.json");
  CHECK(check_all(f).ok());
  CHECK(parse(serialize(f)) == f);
  const Cospan& src = f.cospans.at("src");
  const Cospan& tgt = f.cospans.at("tgt");
  CHECK(reduced_optic_hom(src, tgt).size() == 64);
  CHECK(coend(f.profunctors.at("homarrow")).size() == 2);
  CHECK(end(f.profunctors.at("homarrow")).size() == 1);
}
