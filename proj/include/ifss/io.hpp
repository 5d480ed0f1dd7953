#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ifss/laws.hpp"
#include "ifss/relation.hpp"

namespace ifss {

// JSON documents.
//
// Soft set:
//   {"universe": [ids], "parameters": [ids],
//    "values": {param: {element: [mu, nu]}}}
// Relation:
//   {"universe": [ids], "left_params": [ids], "right_params": [ids],
//    "pairs": [{"first": a, "second": b, "values": {element: [mu, nu]}}]}
//
// Output is canonical: keys sorted, identifiers sorted, degrees rounded to 12
// significant digits and printed in their shortest form. Serializing a
// parsed document reproduces it byte for byte.
//
// Parsing reports ParseError for malformed JSON, SchemaError for structural
// problems and RangeError / ConstraintError for invalid degrees. Every
// message starts with the offending path, e.g. "values.f.m1".

IFSoftSet parse_soft_set(std::string_view text);
std::string serialize_soft_set(const IFSoftSet& s);

IFSoftRelation parse_relation(std::string_view text);
std::string serialize_relation(const IFSoftRelation& r);

/// A verdict with its witness inputs embedded as documents.
std::string serialize_verdict(const LawVerdict& verdict);

/// Throws Error when the file cannot be read or written.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ifss
