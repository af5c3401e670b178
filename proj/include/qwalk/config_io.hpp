#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qwalk/equivalence.hpp"
#include "qwalk/local_unitary.hpp"
#include "qwalk/measurement.hpp"
#include "qwalk/ported_graph.hpp"
#include "qwalk/shift_permutation.hpp"
#include "qwalk/walk_state.hpp"

// JSON configuration files and distribution / report output.
//
// Graph file:
//   { "edges": [[u, v], ...],
//     "ports": { "<node>": [neighbor, ...] },             optional, coin labeling
//     "scattering_ports": { "<node>": [neighbor, ...] },  optional, scattering labeling
//     "mu": { "<node>": { "<port>": label } } }           optional shift table
//
// Local unitary file, key "coin" or "gamma":
//   { "coin": { "default": "grover" | "dft" | "hadamard" | "identity",
//               "overrides": { "<node>": [[[re, im], ...], ...] } } }
//
// Initial state: [ { "node": j, "port": s, "amp": [re, im] }, ... ]
// (optionally wrapped as { "initial": [...] }).

namespace qwalk::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

struct GraphSpec {
  PortedGraph coin_graph;
  std::optional<PortedGraph> scattering_graph;
  std::optional<PortTable> shift_table;
};

GraphSpec parse_graph(std::string_view json_text);

struct UnitarySpec {
  UnitaryRole role = UnitaryRole::Coin;
  StandardUnitary fallback = StandardUnitary::Identity;
  std::map<NodeId, Matrix> overrides;
};

UnitarySpec parse_unitary(std::string_view json_text);

/// Unitarity is enforced unless `check` is false.
LocalUnitaryFamily build_family(const UnitarySpec& spec, const PortedGraph& graph, bool check = true);

/// Reads a per-node port table stored under `key` ("mu", "phi").
PortTable parse_port_table(std::string_view json_text, std::string_view key);

WalkState parse_initial_state(std::string_view json_text, const PortedGraph& graph, Model model);

/// Shortest representation that reads back to the same double.
std::string format_double(double value);

/// `step,label,probability` rows, one block per step.
std::string to_csv(std::span<const Distribution> steps);
/// Array of per-step {label: probability} objects in partition order.
std::string to_json(std::span<const Distribution> steps);

/// `extra` entries are appended as additional numeric fields.
std::string report_to_json(const EquivalenceReport& report, const std::map<std::string, double>& extra = {});

}  // namespace qwalk::io
