#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include <json.hpp>

#include "ifss/error.hpp"
#include "ifss/io.hpp"
#include "support/oracle.hpp"
#include "support/worked_examples.hpp"

using namespace ifss;
using namespace ifss::testing;

namespace {

std::string fixture(const std::string& name) {
  return read_text_file(std::filesystem::path(IFSS_FIXTURE_DIR) / name);
}

template <class E>
std::string message_of(const std::string& text) {
  try {
    parse_soft_set(text);
  } catch (const E& e) {
    return e.what();
  }
  return "<no error>";
}

template <class E>
std::string relation_message_of(const std::string& text) {
  try {
    parse_relation(text);
  } catch (const E& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("parse the medicine document") {
  const auto f = parse_soft_set(fixture("medicine_F.json"));
  CHECK(f.parameter_count() == 3u);
  CHECK(f.universe().size() == 4u);
  CHECK(soft_equal(f, medicine_f(), 0.0));
  CHECK(soft_equal(parse_soft_set(fixture("medicine_G.json")), medicine_g(), 0.0));
}

TEST_CASE("degree errors carry their path") {
  const auto msg = message_of<ConstraintError>(fixture("bad_constraint.json"));
  CHECK(msg.find("values.f.m1") != std::string::npos);
  const auto range = message_of<RangeError>(
      R"({"universe": ["x"], "parameters": ["e"], "values": {"e": {"x": [1.2, 0.0]}}})");
  CHECK(range.find("values.e.x") != std::string::npos);
}

TEST_CASE("an empty parameter list is valid") {
  const auto s = parse_soft_set(R"({"universe": ["x", "y"], "parameters": [], "values": {}})");
  CHECK(s.empty());
  CHECK(s.universe().size() == 2u);
}

TEST_CASE("soft sets round-trip") {
  const auto g = medicine_g();
  CHECK(soft_equal(parse_soft_set(serialize_soft_set(g)), g, 0.0));

  const auto h = soft_intersect(NormPair::product_probsum(), medicine_f(), g);
  CHECK(soft_equal(parse_soft_set(serialize_soft_set(h)), h));

  TestRng rng(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<IFValue> values;
    for (int k = 0; k < 4; ++k) values.push_back(rng.ifvalue());
    const IFSoftSet s(Universe(kMedicines), {{"e", IFSet(Universe(kMedicines), values)}});
    const auto text = serialize_soft_set(s);
    REQUIRE(soft_equal(parse_soft_set(text), s));
    REQUIRE(serialize_soft_set(parse_soft_set(text)) == text);
  }
}

TEST_CASE("serialization is canonical") {
  const auto text = serialize_soft_set(medicine_g());
  CHECK(text == serialize_soft_set(parse_soft_set(fixture("medicine_G.json"))));
  CHECK(text.back() == '\n');

  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["parameters"] == nlohmann::json::array({"c", "f"}));
  CHECK(doc["values"]["f"]["m1"][0].get<double>() == 0.85);
  CHECK(text.find("0.85") != std::string::npos);
  CHECK(text.find("0.8500") == std::string::npos);

  // Integral degrees are written as integers.
  const IFSoftSet top(Universe({"x"}), {{"e", IFSet::uniform(Universe({"x"}), IFValue::top())}});
  CHECK(nlohmann::json::parse(serialize_soft_set(top))["values"]["e"]["x"].dump() == "[1,0]");
}

TEST_CASE("relations round-trip") {
  const auto empty = parse_relation(fixture("empty_relation.json"));
  CHECK(empty.empty());
  CHECK(empty.is_square());
  CHECK(relation_equal(parse_relation(serialize_relation(empty)), empty, 0.0));

  const auto product = cartesian_product(NormPair::product_probsum(), medicine_f(), medicine_g());
  const auto text = serialize_relation(product);
  CHECK(relation_equal(parse_relation(text), product));
  CHECK(serialize_relation(parse_relation(text)) == text);
}

TEST_CASE("soft set schema errors") {
  CHECK_THROWS_AS(parse_soft_set("{not json"), ParseError);
  CHECK_THROWS_AS(parse_soft_set("[1, 2]"), SchemaError);
  CHECK(message_of<SchemaError>(R"({"parameters": [], "values": {}})").find("universe") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_soft_set(R"({"universe": [], "parameters": [], "values": {}})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_soft_set(R"({"universe": ["x", "x"], "parameters": [], "values": {}})"),
                  SchemaError);
  CHECK_THROWS_AS(
      parse_soft_set(R"({"universe": ["x"], "parameters": ["e", "e"], "values": {"e": {"x": [0, 0]}}})"),
      SchemaError);
  CHECK(message_of<SchemaError>(R"({"universe": ["x"], "parameters": ["e"], "values": {}})")
            .find("values.e") != std::string::npos);
  CHECK(message_of<SchemaError>(
            R"({"universe": ["x"], "parameters": [], "values": {"e": {"x": [0, 0]}}})")
            .find("unknown parameter") != std::string::npos);
  CHECK_THROWS_AS(parse_soft_set(R"({"universe": ["x"], "parameters": ["e"], "values": {"e": {}}})"),
                  SchemaError);
  CHECK_THROWS_AS(
      parse_soft_set(R"({"universe": ["x"], "parameters": ["e"], "values": {"e": {"x": [0, 0], "y": [0, 0]}}})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_soft_set(R"({"universe": ["x"], "parameters": ["e"], "values": {"e": {"x": [0.5]}}})"),
      SchemaError);
  CHECK_THROWS_AS(
      parse_soft_set(R"({"universe": ["x"], "parameters": ["e"], "values": {"e": {"x": ["a", 0]}}})"),
      SchemaError);
  CHECK_THROWS_AS(parse_soft_set(R"({"universe": [1], "parameters": [], "values": {}})"),
                  SchemaError);
}

TEST_CASE("relation schema errors") {
  const std::string head = R"({"universe": ["x"], "left_params": ["a"], "right_params": ["b"], )";
  CHECK_THROWS_AS(parse_relation(head + R"("pairs": {}})"), SchemaError);
  CHECK(relation_message_of<SchemaError>(
            head + R"("pairs": [{"first": "b", "second": "b", "values": {"x": [0, 0]}}]})")
            .find("pairs[0].first") != std::string::npos);
  CHECK_THROWS_AS(parse_relation(head + R"("pairs": [{"first": "a", "second": "b", "values": {"x": [0, 0]}},
                                                     {"first": "a", "second": "b", "values": {"x": [0, 0]}}]})"),
                  SchemaError);
  CHECK(relation_message_of<ConstraintError>(
            head + R"("pairs": [{"first": "a", "second": "b", "values": {"x": [0.9, 0.9]}}]})")
            .find("pairs[0].values.x") != std::string::npos);
  CHECK_THROWS_AS(parse_relation(R"({"universe": ["x"], "pairs": []})"), SchemaError);
}

TEST_CASE("file helpers report missing files") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/dir/file.json"), Error);
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/file.json", "x"), Error);
}
