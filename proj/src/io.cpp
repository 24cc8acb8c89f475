#include "corrideal/io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "corrideal/errors.hpp"

namespace corrideal {

using json = nlohmann::json;

namespace {

void require_keys(const json& obj, const char* where,
                  std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok)
      fail(errc::schema_error,
           std::string("unknown key '") + it.key() + "' in " + where);
  }
}

const json& require(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(errc::schema_error,
         std::string("missing key '") + key + "' in " + where);
  return *it;
}

std::string get_string(const json& v, const char* where) {
  if (!v.is_string())
    fail(errc::schema_error, std::string(where) + " must be a string");
  return v.get<std::string>();
}

ext_nat get_ext_nat(const json& v, const char* where) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return ext_nat::infinity();
    fail(errc::malformed_number,
         std::string(where) + " must be a non-negative integer or \"inf\"");
  }
  if (v.is_number_unsigned()) {
    std::uint64_t u = v.get<std::uint64_t>();
    if (u == ~std::uint64_t{0})
      fail(errc::malformed_number, std::string(where) + " is too large");
    return ext_nat(u);
  }
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
    return ext_nat(static_cast<std::uint64_t>(v.get<std::int64_t>()));
  fail(errc::malformed_number,
       std::string(where) + " must be a non-negative integer or \"inf\"");
}

std::uint32_t get_dim(const json& v, const char* where) {
  if (!v.is_number_integer())
    fail(errc::malformed_number,
         std::string(where) + " must be a positive integer");
  std::int64_t n = v.is_number_unsigned()
                       ? static_cast<std::int64_t>(
                             std::min<std::uint64_t>(v.get<std::uint64_t>(),
                                                     std::uint64_t{1} << 62))
                       : v.get<std::int64_t>();
  if (n <= 0 || n > (std::int64_t{1} << 31))
    fail(errc::malformed_number,
         std::string(where) + " must be a positive integer (at most 2^31)");
  return static_cast<std::uint32_t>(n);
}

correspondence parse_direct(const json& doc) {
  const json& algebra = require(doc, "algebra", "document");
  if (!algebra.is_object()) fail(errc::schema_error, "'algebra' must be an object");
  require_keys(algebra, "'algebra'", {"blocks"});
  const json& blocks = require(algebra, "blocks", "'algebra'");
  if (!blocks.is_array()) fail(errc::schema_error, "'blocks' must be an array");

  raw_correspondence raw;
  for (const json& b : blocks) {
    if (!b.is_object()) fail(errc::schema_error, "each block must be an object");
    require_keys(b, "a block", {"label", "dim"});
    raw.blocks.push_back({get_string(require(b, "label", "a block"), "'label'"),
                          get_dim(require(b, "dim", "a block"), "'dim'")});
  }

  const json& module = require(doc, "module", "document");
  if (!module.is_object()) fail(errc::schema_error, "'module' must be an object");
  require_keys(module, "'module'", {"fullness", "action"});

  const json& fullness = require(module, "fullness", "'module'");
  if (!fullness.is_object())
    fail(errc::schema_error, "'fullness' must be an object");
  for (auto it = fullness.begin(); it != fullness.end(); ++it)
    raw.fullness.push_back({it.key(), get_ext_nat(*it, "a fullness value")});

  const json& action = require(module, "action", "'module'");
  if (!action.is_array()) fail(errc::schema_error, "'action' must be an array");
  for (const json& e : action) {
    if (!e.is_object())
      fail(errc::schema_error, "each action entry must be an object");
    require_keys(e, "an action entry", {"on", "by", "mult"});
    raw.action.push_back(
        {get_string(require(e, "on", "an action entry"), "'on'"),
         get_string(require(e, "by", "an action entry"), "'by'"),
         get_ext_nat(require(e, "mult", "an action entry"), "'mult'")});
  }
  return validate_correspondence(raw);
}

correspondence parse_graph(const json& doc) {
  const json& graph = require(doc, "graph", "document");
  if (!graph.is_object()) fail(errc::schema_error, "'graph' must be an object");
  require_keys(graph, "'graph'", {"vertices", "edges"});

  graph_desc g;
  const json& vertices = require(graph, "vertices", "'graph'");
  if (!vertices.is_array())
    fail(errc::schema_error, "'vertices' must be an array");
  for (const json& v : vertices) {
    if (!v.is_object()) fail(errc::schema_error, "each vertex must be an object");
    require_keys(v, "a vertex", {"label"});
    g.vertices.push_back(
        get_string(require(v, "label", "a vertex"), "'label'"));
  }

  const json& edges = require(graph, "edges", "'graph'");
  if (!edges.is_array()) fail(errc::schema_error, "'edges' must be an array");
  for (const json& e : edges) {
    if (!e.is_object()) fail(errc::schema_error, "each edge must be an object");
    require_keys(e, "an edge", {"src", "dst", "count"});
    g.edges.push_back({get_string(require(e, "src", "an edge"), "'src'"),
                       get_string(require(e, "dst", "an edge"), "'dst'"),
                       get_ext_nat(require(e, "count", "an edge"), "'count'")});
  }
  return graph_to_correspondence(g);
}

}  // namespace

correspondence parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, e.what());
  }
  if (!doc.is_object()) fail(errc::schema_error, "document must be an object");

  const bool direct = doc.contains("algebra") || doc.contains("module");
  const bool graph = doc.contains("graph");
  if (direct && graph)
    fail(errc::schema_error,
         "document mixes the direct form and the graph form");
  if (graph) {
    require_keys(doc, "document", {"graph"});
    return parse_graph(doc);
  }
  if (direct) {
    require_keys(doc, "document", {"algebra", "module"});
    return parse_direct(doc);
  }
  fail(errc::schema_error, "document has neither 'algebra' nor 'graph'");
}

nlohmann::ordered_json emit_document(const correspondence& x) {
  nlohmann::ordered_json doc;
  auto& blocks = doc["algebra"]["blocks"] = nlohmann::ordered_json::array();
  for (const block& b : x.algebra().blocks())
    blocks.push_back({{"label", b.label}, {"dim", b.dim}});

  auto& fullness = doc["module"]["fullness"] = nlohmann::ordered_json::object();
  for (unsigned j = 0; j < x.size(); ++j) {
    ext_nat m = x.fullness(j);
    if (m.is_infinite())
      fullness[x.algebra().label(j)] = "inf";
    else
      fullness[x.algebra().label(j)] = m.value();
  }

  auto& action = doc["module"]["action"] = nlohmann::ordered_json::array();
  for (unsigned j = 0; j < x.size(); ++j)
    for (unsigned i = 0; i < x.size(); ++i) {
      ext_nat m = x.action(j, i);
      if (m.is_zero()) continue;
      nlohmann::ordered_json e;
      e["on"] = x.algebra().label(j);
      e["by"] = x.algebra().label(i);
      if (m.is_infinite())
        e["mult"] = "inf";
      else
        e["mult"] = m.value();
      action.push_back(std::move(e));
    }
  return doc;
}

ideal_set parse_label_set(const block_algebra& a, const std::string& csv) {
  ideal_set out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string label = csv.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!label.empty()) {
      auto i = a.find(label);
      if (!i) fail(errc::unknown_label, "unknown block label '" + label + "'");
      out = out.with(*i);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace corrideal
