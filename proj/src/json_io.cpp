#include "treekummer/json_io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <utility>

#include "treekummer/errors.hpp"

namespace treekummer {

namespace {

const Json& require_field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw InputError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

std::vector<double> parse_double_array(const Json& j, const char* name) {
  if (!j.is_array()) {
    throw InputError(std::string("field \"") + name + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw InputError(std::string("field \"") + name + "\" must hold numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

Tree parse_tree_json(const Json& j) {
  if (!j.is_object()) throw InputError("tree spec must be an object");
  const Json& jv = require_field(j, "vertices");
  if (!jv.is_number_integer() || jv.get<int>() < 1) {
    throw InputError("\"vertices\" must be a positive integer");
  }
  const Json& je = require_field(j, "edges");
  if (!je.is_array()) throw InputError("\"edges\" must be an array of [i,j] pairs");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : je) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InputError("edge entry " + e.dump() + " is not an [i,j] pair");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Tree::validate(jv.get<int>(), std::move(edges));
}

Json tree_to_json(const Tree& t) {
  Json j;
  j["vertices"] = t.size();
  Json edges = Json::array();
  for (auto [a, b] : t.edges()) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

ParamMatrix parse_params_json(const Json& j) {
  Tree tree = parse_tree_json(require_field(j, "tree"));
  std::vector<double> diag = parse_double_array(require_field(j, "c_diag"), "c_diag");

  const Json& je = require_field(j, "c_edge");
  if (!je.is_array()) throw InputError("\"c_edge\" must be an array");
  std::vector<double> edge_values(tree.edges().size(), 0.0);
  std::vector<char> seen(tree.edges().size(), 0);
  for (const auto& entry : je) {
    if (!entry.is_object()) {
      throw InputError("c_edge entry " + entry.dump() +
                       " must be {\"edge\":[i,j],\"value\":v}");
    }
    const Json& edge = require_field(entry, "edge");
    const Json& value = require_field(entry, "value");
    if (!edge.is_array() || edge.size() != 2 || !value.is_number()) {
      throw InputError("c_edge entry " + entry.dump() + " is malformed");
    }
    const int a = edge[0].get<int>();
    const int b = edge[1].get<int>();
    const std::pair<int, int> canon = std::minmax(a, b);
    const auto& edges = tree.edges();
    const auto it = std::find(edges.begin(), edges.end(), canon);
    if (it == edges.end()) {
      throw InputError("c_edge names {" + std::to_string(a) + "," + std::to_string(b) +
                       "} which is not a tree edge");
    }
    const size_t idx = static_cast<size_t>(it - edges.begin());
    if (seen[idx]) {
      throw InputError("c_edge lists {" + std::to_string(canon.first) + "," +
                       std::to_string(canon.second) + "} twice");
    }
    seen[idx] = 1;
    edge_values[idx] = value.get<double>();
  }
  for (size_t idx = 0; idx < seen.size(); ++idx) {
    if (!seen[idx]) {
      auto [a, b] = tree.edges()[idx];
      throw InputError("c_edge missing value for edge {" + std::to_string(a) + "," +
                       std::to_string(b) + "}");
    }
  }
  return ParamMatrix(std::move(tree), std::move(diag), std::move(edge_values));
}

TkDistribution parse_tk_json(const Json& j) {
  ParamMatrix params = parse_params_json(j);
  std::vector<double> a = parse_double_array(require_field(j, "a"), "a");
  return TkDistribution(std::move(a), std::move(params));
}

Json load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("spec file " + path + " is not valid JSON: " + e.what());
  }
}

std::string spec_file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open spec file: " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

Json report_to_json(const TestReport& r, std::uint64_t seed) {
  Json j;
  j["method"] = r.method;
  j["statistic"] = r.statistic;
  if (r.p_value) {
    j["p_value"] = *r.p_value;
  } else {
    j["p_value"] = nullptr;
  }
  j["level"] = r.level;
  j["decision"] = r.reject ? "reject" : "accept";
  j["seed"] = seed;
  return j;
}

void write_sample_csv(const SampleMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  for (int c = 0; c < m.cols; ++c) {
    out << c;
    out << (c + 1 < m.cols ? ',' : '\n');
  }
  char buf[32];
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", m.at(r, c));
      out << buf << (c + 1 < m.cols ? ',' : '\n');
    }
  }
}

}  // namespace treekummer
