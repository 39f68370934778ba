#include <doctest.h>

#include "oracles.hpp"
#include "persuasion/error.hpp"
#include "persuasion/format.hpp"
#include "persuasion/generators.hpp"

using namespace persuasion;

namespace {

std::string semantic_message(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const SyntaxError&) {
    FAIL("unexpected syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::semantic_error);
    return e.what();
  }
  FAIL("expected a semantic error");
  return {};
}

}  // namespace

TEST_CASE("canonical persuasion file") {
  const std::string messy =
      R"({"threshold": "2/4", "type": "persuasion", "outcomes": ["a","b","c"],
          "weights": ["2/12", "1/3", "1/2"], "facts": [[2,0,0],[1]], "focal": [1,0]})";
  const auto inst = parse_persuasion(messy);
  CHECK(inst.threshold == Rational(1, 2));
  CHECK(inst.facts[0].indices() == std::vector<std::size_t>{0, 2});
  const std::string canonical =
      "{\n"
      "  \"type\": \"persuasion\",\n"
      "  \"outcomes\": [\"a\",\"b\",\"c\"],\n"
      "  \"weights\": [\"1/6\",\"1/3\",\"1/2\"],\n"
      "  \"facts\": [[0,2],[1]],\n"
      "  \"focal\": [0,1],\n"
      "  \"threshold\": \"1/2\"\n"
      "}\n";
  CHECK(serialize_instance(inst) == canonical);
  CHECK(serialize_instance(parse_instance(canonical)) == canonical);
}

TEST_CASE("exact cover file") {
  const auto xc = parse_exact_cover(R"({"type":"exact_cover","universe":3,"blocks":[[1,0],[],[2]]})");
  CHECK(xc.universe_size == 3);
  CHECK(xc.blocks.size() == 3);
  CHECK(serialize_instance(xc) == "{\n  \"type\": \"exact_cover\",\n  \"universe\": 3,\n  \"blocks\": [[0,1],[],[2]]\n}\n");
}

TEST_CASE("semantic errors name the violated invariant") {
  CHECK(semantic_message(R"({"type":"persuasion","outcomes":["a","b"],"weights":["1/2","1/3"],
                             "facts":[],"focal":[0],"threshold":"1/2"})")
            .find("normalization") != std::string::npos);
  CHECK(semantic_message(R"({"type":"persuasion","outcomes":["a","b"],"weights":["1/2","1/2"],
                             "facts":[[0,2]],"focal":[0],"threshold":"1/2"})")
            .find("facts[0]") != std::string::npos);
  CHECK(semantic_message(R"({"type":"persuasion","outcomes":["a"],"weights":["1/1"],
                             "facts":[],"focal":[0],"threshold":"0/1"})")
            .find("threshold") != std::string::npos);
  CHECK(semantic_message(R"({"type":"persuasion","outcomes":["a"],"weights":["1/1"],
                             "facts":[],"focal":[0],"threshold":"1/1","extra":1})")
            .find("extra") != std::string::npos);
  CHECK(semantic_message(R"({"type":"persuasion","outcomes":["a"],"weights":["1/1"],"facts":[],"focal":[0]})")
            .find("threshold") != std::string::npos);
  CHECK(semantic_message(R"({"type":"persuasion","outcomes":["a"],"weights":[0.5],
                             "facts":[],"focal":[0],"threshold":"1/1"})")
            .find("weights") != std::string::npos);
  CHECK(semantic_message(R"({"type":"exact_cover","universe":2,"blocks":[[-1]]})").find("blocks[0]") !=
        std::string::npos);
  CHECK(semantic_message(R"({"type":"graph"})").find("type") != std::string::npos);
  CHECK_THROWS_AS(parse_exact_cover(R"({"type":"persuasion","outcomes":["a"],"weights":["1/1"],
                                        "facts":[],"focal":[0],"threshold":"1/1"})"),
                  Error);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_instance("{\n  \"type\": \"exact_cover\",\n  \"universe\": 3,,\n}");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.code() == Errc::syntax_error);
    CHECK(e.line() == 3);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_instance("[1,2]"), SyntaxError);
}

TEST_CASE("serialize is a fixed point of parse on generated files") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto inst = oracle::random_instance(rng, 6, 9);
    const auto text = serialize_instance(inst);
    CHECK(serialize_instance(parse_instance(text)) == text);
    const auto xc = oracle::random_exact_cover(rng, 6, 5);
    const auto xc_text = serialize_instance(xc);
    CHECK(serialize_instance(parse_instance(xc_text)) == xc_text);
  }
  GenParams g;
  g.family = Family::gaussian_cherry;
  const auto gaussian = serialize_instance(gen_gaussian_cherry(g));
  CHECK(serialize_instance(parse_instance(gaussian)) == gaussian);
}
