// Runs the CLI with --json and validates each document against the shipped
// schema. The validator below covers the subset of JSON Schema the file
// uses: type, required, properties, additionalProperties, items, enum,
// minimum and local $ref.

#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef XNS_CLI_PATH
#define XNS_CLI_PATH "xns"
#endif
#ifndef XNS_SCHEMA_PATH
#define XNS_SCHEMA_PATH "cli-output.schema.json"
#endif

namespace {

using nlohmann::json;

const json& schema_root() {
  static json root = [] {
    std::ifstream in(XNS_SCHEMA_PATH);
    REQUIRE_MESSAGE(in.good(), "schema file not found: " XNS_SCHEMA_PATH);
    return json::parse(in);
  }();
  return root;
}

const json& resolve(const json& node) {
  if (node.is_object() && node.contains("$ref")) {
    std::string ref = node["$ref"].get<std::string>();
    REQUIRE(ref.rfind("#/$defs/", 0) == 0);
    return schema_root()["$defs"].at(ref.substr(8));
  }
  return node;
}

bool validates(const json& doc, const json& raw_schema, std::string& why);

bool type_matches(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "boolean") return doc.is_boolean();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  return false;
}

bool validates(const json& doc, const json& raw_schema, std::string& why) {
  const json& schema = resolve(raw_schema);
  if (schema.contains("oneOf")) {
    int matched = 0;
    for (const json& branch : schema["oneOf"]) {
      std::string ignored;
      matched += validates(doc, branch, ignored);
    }
    if (matched != 1) {
      why = "matched " + std::to_string(matched) + " oneOf branches";
      return false;
    }
    return true;
  }
  if (schema.contains("type") &&
      !type_matches(doc, schema["type"].get<std::string>())) {
    why = "expected type " + schema["type"].get<std::string>();
    return false;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const json& option : schema["enum"]) found = found || doc == option;
    if (!found) {
      why = "value not in enum: " + doc.dump();
      return false;
    }
  }
  if (schema.contains("minimum") && doc.is_number_integer() &&
      doc.get<std::int64_t>() < schema["minimum"].get<std::int64_t>()) {
    why = "below minimum: " + doc.dump();
    return false;
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const json& key : schema["required"])
        if (!doc.contains(key.get<std::string>())) {
          why = "missing required key " + key.get<std::string>();
          return false;
        }
    const json props =
        schema.contains("properties") ? schema["properties"] : json::object();
    for (const auto& [key, value] : doc.items()) {
      if (props.contains(key)) {
        if (!validates(value, props[key], why)) {
          why = key + ": " + why;
          return false;
        }
      } else if (schema.contains("additionalProperties")) {
        const json& extra = schema["additionalProperties"];
        if (extra.is_boolean() && !extra.get<bool>()) {
          why = "unexpected key " + key;
          return false;
        }
        if (extra.is_object() && !validates(value, extra, why)) {
          why = key + ": " + why;
          return false;
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items"))
    for (const json& element : doc)
      if (!validates(element, schema["items"], why)) return false;
  return true;
}

json run_cli(const std::string& args) {
  std::string command = std::string(XNS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"),
                                             pclose);
  REQUIRE(pipe);
  std::string output;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe.get()))
    output.append(buffer, got);
  CAPTURE(command);
  CAPTURE(output);
  REQUIRE_FALSE(output.empty());
  return json::parse(output);
}

void expect_valid(const std::string& args, const std::string& def) {
  json doc = run_cli(args);
  std::string why;
  bool against_def = validates(doc, schema_root()["$defs"].at(def), why);
  CAPTURE(args);
  CAPTURE(why);
  CHECK(against_def);
  bool against_top = validates(doc, schema_root(), why);
  CHECK(against_top);
}

}  // namespace

TEST_CASE("CLI JSON output validates against the shipped schema") {
  expect_valid("pair --a 3:4:3,3,3,1,1,1,1,1,1 --b 3:4:3,3,3,1,1,1,1,1,1 --json",
               "pair");
  expect_valid("adeg --divisor 3:2:1,1,1,1,1,1,1,1,1 --json", "adeg");
  expect_valid("chi --divisor 4:3:2,2,2,2,2,2,2 --json", "chi");
  expect_valid(
      "cremona --divisor 3:10:7,6,6,6,6,1,1,1,1,1,1,1,1 --indices 1,2,3,4 "
      "--json",
      "cremona");
  expect_valid(
      "word --divisor 4:0:0,0,-1,0,0,0,0 --word "
      "[[1,2,3,4,5],[1,2,3,6,7],[3,4,5,6,7]] --json",
      "word");
  expect_valid("classify --divisor 4:3:2,2,2,2,2,2,2 --json", "classify");
  expect_valid("classify --divisor 3:5:6,2,1,1,1,1,1,1,1,1,1,1,1 --json",
               "classify");
  expect_valid("peel --divisor 3:4:3,3,3,1,1,1,1,1,1 --max-degree 4 --json",
               "peel");
  expect_valid("reduce --divisor 4:3:2,2,2,2,2,2,2 --json", "reduce");
  expect_valid("orbit --n 2 --s 6 --max-degree 2 --json", "orbit");
  expect_valid("expdim --divisor 2:2:1,1,1,1,1 --json", "expdim");
  expect_valid("expdim --divisor 3:2:2,2 --strata --json", "expdim");
  expect_valid("expdim --divisor 2:6:2,2,2,2,2,2,2,2,2 --method ghh --json",
               "expdim");
  expect_valid("oracle --divisor 2:2:1,1,1,1,1 --json", "oracle");
  expect_valid("fixtures --json", "fixtures");
}

TEST_CASE("identical invocations are byte-identical") {
  auto capture = [](const std::string& args) {
    return run_cli(args).dump();
  };
  std::string query = "oracle --divisor 3:4:2,2,2,2,2,2,2,2,2 --json";
  CHECK(capture(query) == capture(query));
  std::string census = "orbit --n 2 --s 7 --max-degree 3 --json";
  CHECK(capture(census) == capture(census));
}
