#include "qwalk/config_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qwalk/error.hpp"

namespace qwalk::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

NodeId parse_node_key(const std::string& key) {
  NodeId value = 0;
  const auto* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error(ErrorKind::ParseError, "'" + key + "' is not an integer id");
  return value;
}

template <typename T>
T get_as(const json& value, const std::string& what) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, what + ": " + e.what());
  }
}

std::map<NodeId, std::vector<NodeId>> parse_port_lists(const json& block, const std::string& key) {
  if (!block.is_object()) throw Error(ErrorKind::ParseError, "\"" + key + "\" must be an object");
  std::map<NodeId, std::vector<NodeId>> lists;
  for (const auto& [node, order] : block.items())
    lists[parse_node_key(node)] = get_as<std::vector<NodeId>>(order, key + "[" + node + "]");
  return lists;
}

PortTable parse_table_block(const json& block, std::string_view key) {
  const std::string name(key);
  if (!block.is_object()) throw Error(ErrorKind::ParseError, "\"" + name + "\" must be an object");
  PortTable table;
  for (const auto& [node, ports] : block.items()) {
    if (!ports.is_object()) throw Error(ErrorKind::ParseError, name + "[" + node + "] must be an object");
    auto& row = table[parse_node_key(node)];
    for (const auto& [port, label] : ports.items())
      row[static_cast<Port>(parse_node_key(port))] = get_as<Port>(label, name + "[" + node + "][" + port + "]");
  }
  return table;
}

Complex parse_complex(const json& value, const std::string& what) {
  const auto pair = get_as<std::vector<double>>(value, what);
  if (pair.size() != 2) throw Error(ErrorKind::ParseError, what + " must be [re, im]");
  return {pair[0], pair[1]};
}

StandardUnitary parse_kind(const std::string& name) {
  if (name == "identity") return StandardUnitary::Identity;
  if (name == "hadamard") return StandardUnitary::Hadamard;
  if (name == "grover") return StandardUnitary::Grover;
  if (name == "dft") return StandardUnitary::Dft;
  throw Error(ErrorKind::ParseError, "unknown standard unitary '" + name + "'");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << contents;
}

GraphSpec parse_graph(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object() || !doc.contains("edges"))
    throw Error(ErrorKind::ParseError, "graph file needs an \"edges\" array");
  std::vector<Edge> edges;
  for (const auto& pair : get_as<std::vector<std::vector<NodeId>>>(doc["edges"], "edges")) {
    if (pair.size() != 2) throw Error(ErrorKind::ParseError, "each edge must be a pair [u, v]");
    edges.emplace_back(pair[0], pair[1]);
  }
  GraphSpec spec;
  spec.coin_graph = doc.contains("ports") ? PortedGraph::from_edges(edges, parse_port_lists(doc["ports"], "ports"))
                                          : PortedGraph::from_edges(edges);
  if (doc.contains("scattering_ports"))
    spec.scattering_graph =
        PortedGraph::from_edges(edges, parse_port_lists(doc["scattering_ports"], "scattering_ports"));
  if (doc.contains("mu")) spec.shift_table = parse_table_block(doc["mu"], "mu");
  return spec;
}

UnitarySpec parse_unitary(std::string_view json_text) {
  const json doc = parse_json(json_text);
  UnitarySpec spec;
  const json* block = nullptr;
  if (doc.is_object() && doc.contains("coin") && !doc.contains("gamma")) {
    spec.role = UnitaryRole::Coin;
    block = &doc["coin"];
  } else if (doc.is_object() && doc.contains("gamma") && !doc.contains("coin")) {
    spec.role = UnitaryRole::Scattering;
    block = &doc["gamma"];
  } else {
    throw Error(ErrorKind::ParseError, "unitary file needs exactly one of the keys \"coin\" or \"gamma\"");
  }
  if (!block->is_object() || !block->contains("default"))
    throw Error(ErrorKind::ParseError, "unitary block needs a \"default\" entry");
  spec.fallback = parse_kind(get_as<std::string>((*block)["default"], "default"));
  if (block->contains("overrides")) {
    const json& overrides = (*block)["overrides"];
    if (!overrides.is_object()) throw Error(ErrorKind::ParseError, "\"overrides\" must be an object");
    for (const auto& [node, rows] : overrides.items()) {
      const std::string where = "overrides[" + node + "]";
      if (!rows.is_array()) throw Error(ErrorKind::ParseError, where + " must be an array of rows");
      const auto n = static_cast<Eigen::Index>(rows.size());
      Matrix m(n, n);
      for (Eigen::Index r = 0; r < n; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
          throw Error(ErrorKind::DimensionMismatch, where + " is not square");
        for (Eigen::Index c = 0; c < n; ++c)
          m(r, c) = parse_complex(row[static_cast<std::size_t>(c)], where);
      }
      spec.overrides[parse_node_key(node)] = std::move(m);
    }
  }
  return spec;
}

LocalUnitaryFamily build_family(const UnitarySpec& spec, const PortedGraph& graph, bool check) {
  if (check) return LocalUnitaryFamily::standard(graph, spec.role, spec.fallback, spec.overrides);
  std::vector<Matrix> matrices;
  for (std::size_t n = 0; n < graph.node_count(); ++n) {
    auto it = spec.overrides.find(graph.node_id(n));
    matrices.push_back(it != spec.overrides.end() ? it->second : standard_matrix(spec.fallback, graph.degree_at(n)));
  }
  auto family = LocalUnitaryFamily::unchecked(spec.role, std::move(matrices));
  family.check_dimensions(graph);
  return family;
}

PortTable parse_port_table(std::string_view json_text, std::string_view key) {
  const json doc = parse_json(json_text);
  const std::string name(key);
  if (!doc.is_object() || !doc.contains(name))
    throw Error(ErrorKind::ParseError, "expected an object with key \"" + name + "\"");
  return parse_table_block(doc[name], key);
}

WalkState parse_initial_state(std::string_view json_text, const PortedGraph& graph, Model model) {
  const json doc = parse_json(json_text);
  const json& list = doc.is_object() && doc.contains("initial") ? doc["initial"] : doc;
  if (!list.is_array() || list.empty())
    throw Error(ErrorKind::ParseError, "initial state must be a non-empty array of {node, port, amp}");
  std::vector<Complex> amplitudes(graph.dimension());
  std::set<std::size_t> seen;
  for (const auto& entry : list) {
    if (!entry.is_object() || !entry.contains("node") || !entry.contains("port") || !entry.contains("amp"))
      throw Error(ErrorKind::ParseError, "initial state entries need node, port and amp");
    const auto node = get_as<NodeId>(entry["node"], "node");
    const auto port = get_as<Port>(entry["port"], "port");
    const std::size_t b = graph.basis_index(node, port);
    if (!seen.insert(b).second)
      throw Error(ErrorKind::ParseError, "initial state lists (" + std::to_string(node) + ", " +
                                             std::to_string(port) + ") twice");
    amplitudes[b] = parse_complex(entry["amp"], "amp");
  }
  return WalkState::normalized(model, std::move(amplitudes));
}

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

std::string to_csv(std::span<const Distribution> steps) {
  std::string out = "step,label,probability\n";
  for (std::size_t n = 0; n < steps.size(); ++n)
    for (const auto& [label, p] : steps[n].entries)
      out += std::to_string(n) + "," + label + "," + format_double(p) + "\n";
  return out;
}

std::string to_json(std::span<const Distribution> steps) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& step : steps) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (const auto& [label, p] : step.entries) row[label] = p;
    out.push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

std::string report_to_json(const EquivalenceReport& report, const std::map<std::string, double>& extra) {
  nlohmann::ordered_json out;
  out["dimension"] = report.dimension;
  out["dense_checked"] = report.dense_checked;
  out["dense_deviation"] = report.dense_deviation;
  out["trials"] = report.trials;
  out["sparse_deviation"] = report.sparse_deviation;
  out["tolerance"] = report.tolerance;
  out["passed"] = report.passed;
  for (const auto& [key, value] : extra) out[key] = value;
  return out.dump(2) + "\n";
}

}  // namespace qwalk::io
