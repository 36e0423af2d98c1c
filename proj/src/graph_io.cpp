#include "stconn/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stconn/error.hpp"

namespace stconn {

using nlohmann::json;

namespace {

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw Error(ErrorCode::BadInput, std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

GraphSpec parse_graph_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::BadInput, std::string("graph JSON does not parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorCode::BadInput, "graph JSON needs an integer \"n\" and an \"edges\" array");
  }
  GraphSpec spec;
  spec.n = as_index(doc["n"], "n");
  if (doc.contains("weight_default")) {
    if (!doc["weight_default"].is_number()) throw Error(ErrorCode::BadInput, "weight_default must be a number");
    spec.weight_default = doc["weight_default"].get<double>();
  }
  std::size_t k = 0;
  for (const auto& je : doc["edges"]) {
    if (!je.is_object() || !je.contains("u") || !je.contains("v")) {
      throw Error(ErrorCode::BadInput, "edge #" + std::to_string(k) + " needs \"u\" and \"v\"");
    }
    EdgeSpec es;
    es.u = as_index(je["u"], "u");
    es.v = as_index(je["v"], "v");
    if (!je.contains("label")) {
      es.label = "e" + std::to_string(k);
    } else if (je["label"].is_string()) {
      es.label = je["label"].get<std::string>();
    } else if (je["label"].is_number_integer()) {
      es.label = std::to_string(je["label"].get<long long>());
    } else {
      throw Error(ErrorCode::BadInput, "edge #" + std::to_string(k) + " label must be a string or integer");
    }
    if (je.contains("weight")) {
      if (!je["weight"].is_number()) throw Error(ErrorCode::BadInput, "edge weight must be a number");
      es.weight = je["weight"].get<double>();
    }
    if (je.contains("literal")) {
      const json& jl = je["literal"];
      if (!jl.is_object() || !jl.contains("var")) {
        throw Error(ErrorCode::BadInput, "literal must be an object with \"var\"");
      }
      Literal lit;
      lit.var = as_index(jl["var"], "literal.var");
      if (jl.contains("negated")) {
        if (!jl["negated"].is_boolean()) throw Error(ErrorCode::BadInput, "literal.negated must be boolean");
        lit.negated = jl["negated"].get<bool>();
      }
      es.literal = lit;
    }
    spec.edges.push_back(std::move(es));
    ++k;
  }
  return spec;
}

LabeledMultigraph load_graph(const std::string& json_text) { return build_graph(parse_graph_spec(json_text)); }

LabeledMultigraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open graph file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string canonical_graph_json(const LabeledMultigraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.vertex_count();
  doc["weight_default"] = g.weight_default();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    nlohmann::ordered_json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["label"] = e.label;
    je["weight"] = e.weight;
    je["literal"] = {{"var", e.literal.var}, {"negated", e.literal.negated}};
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(2);
}

}  // namespace stconn
