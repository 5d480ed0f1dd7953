#include "ifss/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ifss/error.hpp"

namespace ifss {

namespace {

using nlohmann::json;

json degree_to_json(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  const double rounded = std::strtod(buf, nullptr);
  if (rounded == std::floor(rounded)) return static_cast<std::int64_t>(rounded);
  return rounded;
}

json ifset_to_json(const IFSet& set) {
  json out = json::object();
  const auto elements = set.universe().elements();
  for (std::size_t i = 0; i < set.size(); ++i) {
    out[elements[i]] = json::array({degree_to_json(set[i].mu()), degree_to_json(set[i].nu())});
  }
  return out;
}

json universe_to_json(const Universe& u) {
  return json(std::vector<std::string>(u.elements().begin(), u.elements().end()));
}

json params_to_json(const ParamSet& params) {
  return json(std::vector<std::string>(params.begin(), params.end()));
}

json soft_set_to_json(const IFSoftSet& s) {
  json values = json::object();
  for (const auto& [param, set] : s.assignment()) values[param] = ifset_to_json(set);
  return {{"universe", universe_to_json(s.universe())},
          {"parameters", params_to_json(s.parameters())},
          {"values", std::move(values)}};
}

json relation_to_json(const IFSoftRelation& r) {
  json pairs = json::array();
  for (const auto& [p, set] : r.assignment()) {
    pairs.push_back({{"first", p.first}, {"second", p.second}, {"values", ifset_to_json(set)}});
  }
  return {{"universe", universe_to_json(r.universe())},
          {"left_params", params_to_json(r.left_params())},
          {"right_params", params_to_json(r.right_params())},
          {"pairs", std::move(pairs)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + key + ": missing key");
  return *it;
}

void require_object(const json& value, const std::string& path) {
  if (!value.is_object()) throw SchemaError((path.empty() ? "document" : path) + ": expected an object");
}

std::vector<std::string> string_list(const json& obj, const std::string& key,
                                     const std::string& path = "") {
  const json& list = require(obj, key, path);
  if (!list.is_array()) throw SchemaError(path + key + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!list[i].is_string()) {
      throw SchemaError(path + key + "[" + std::to_string(i) + "]: expected a string");
    }
    out.push_back(list[i].get<std::string>());
  }
  return out;
}

Universe parse_universe(const json& doc) {
  try {
    return Universe(string_list(doc, "universe"));
  } catch (const DomainError& e) {
    throw SchemaError(std::string("universe: ") + e.what());
  }
}

ParamSet param_set(const json& doc, const std::string& key) {
  ParamSet out;
  for (auto& p : string_list(doc, key)) {
    if (!out.insert(p).second) throw SchemaError(key + ": duplicate parameter '" + p + "'");
  }
  return out;
}

IFValue parse_degree_pair(const json& entry, const std::string& path) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
    throw SchemaError(path + ": expected [mu, nu]");
  }
  try {
    return make_ifvalue(entry[0].get<double>(), entry[1].get<double>());
  } catch (const RangeError& e) {
    throw RangeError(path + ": " + e.what());
  } catch (const ConstraintError& e) {
    throw ConstraintError(path + ": " + e.what());
  }
}

IFSet parse_ifset(const json& obj, const Universe& universe, const std::string& path) {
  require_object(obj, path);
  for (const auto& [element, entry] : obj.items()) {
    if (!universe.index_of(element)) {
      throw SchemaError(path + "." + element + ": element is not in the universe");
    }
  }
  std::vector<IFValue> values;
  for (const auto& element : universe.elements()) {
    auto it = obj.find(element);
    if (it == obj.end()) throw SchemaError(path + "." + element + ": missing value");
    values.push_back(parse_degree_pair(*it, path + "." + element));
  }
  return IFSet(universe, std::move(values));
}

IFSoftSet soft_set_from_json(const json& doc) {
  require_object(doc, "");
  Universe universe = parse_universe(doc);
  ParamSet params = param_set(doc, "parameters");
  const json& values = require(doc, "values", "");
  require_object(values, "values");
  for (const auto& [param, entry] : values.items()) {
    if (!params.contains(param)) throw SchemaError("values." + param + ": unknown parameter");
  }
  IFSoftSet::Assignment assignment;
  for (const auto& param : params) {
    auto it = values.find(param);
    if (it == values.end()) throw SchemaError("values." + param + ": missing parameter");
    assignment.emplace(param, parse_ifset(*it, universe, "values." + param));
  }
  return IFSoftSet(universe, std::move(assignment));
}

IFSoftRelation relation_from_json(const json& doc) {
  require_object(doc, "");
  Universe universe = parse_universe(doc);
  ParamSet left = param_set(doc, "left_params");
  ParamSet right = param_set(doc, "right_params");
  const json& pairs = require(doc, "pairs", "");
  if (!pairs.is_array()) throw SchemaError("pairs: expected an array");

  IFSoftRelation::Assignment assignment;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string path = "pairs[" + std::to_string(i) + "]";
    const json& entry = pairs[i];
    require_object(entry, path);
    auto id = [&](const char* key, const ParamSet& allowed, const char* set_name) {
      const json& v = require(entry, key, path + ".");
      if (!v.is_string()) throw SchemaError(path + "." + key + ": expected a string");
      auto s = v.get<std::string>();
      if (!allowed.contains(s)) {
        throw SchemaError(path + "." + key + ": '" + s + "' is not in " + set_name);
      }
      return s;
    };
    ParamPair pair{id("first", left, "left_params"), id("second", right, "right_params")};
    IFSet set = parse_ifset(require(entry, "values", path + "."), universe, path + ".values");
    if (!assignment.emplace(pair, std::move(set)).second) {
      throw SchemaError(path + ": duplicate pair " + to_string(pair));
    }
  }
  return IFSoftRelation(universe, std::move(left), std::move(right), std::move(assignment));
}

}  // namespace

IFSoftSet parse_soft_set(std::string_view text) { return soft_set_from_json(parse_json(text)); }

std::string serialize_soft_set(const IFSoftSet& s) { return dump(soft_set_to_json(s)); }

IFSoftRelation parse_relation(std::string_view text) {
  return relation_from_json(parse_json(text));
}

std::string serialize_relation(const IFSoftRelation& r) { return dump(relation_to_json(r)); }

std::string serialize_verdict(const LawVerdict& verdict) {
  json doc = {{"law", std::string(law_name(verdict.law))},
              {"norms", std::string(verdict.norm_pair.name())},
              {"holds", verdict.holds},
              {"checked", verdict.checked},
              {"trials", verdict.trials},
              {"generated", verdict.generated},
              {"restriction", nullptr},
              {"witness", nullptr}};
  if (verdict.restriction) doc["restriction"] = *verdict.restriction;
  if (verdict.witness) {
    json soft_sets = json::array();
    for (const auto& s : verdict.witness->soft_sets) soft_sets.push_back(soft_set_to_json(s));
    json relations = json::array();
    for (const auto& r : verdict.witness->relations) relations.push_back(relation_to_json(r));
    doc["witness"] = {{"violation", verdict.witness->violation},
                      {"soft_sets", std::move(soft_sets)},
                      {"relations", std::move(relations)}};
  }
  return dump(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace ifss
