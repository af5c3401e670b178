#pragma once

#include <random>
#include <vector>

#include "qwalk/local_unitary.hpp"
#include "qwalk/ported_graph.hpp"
#include "qwalk/shift_permutation.hpp"
#include "qwalk/walk_state.hpp"

// Seeded graph and operator fixtures for tests and audits.

namespace qwalk::fixtures {

using Rng = std::mt19937_64;

PortedGraph path_graph(int nodes);
PortedGraph cycle_graph(int nodes);
PortedGraph complete_graph(int nodes);
/// Center 0 with leaves 1..leaves.
PortedGraph star_graph(int leaves);

/// G(n, p) over nodes 0..n-1, retried until at least one edge exists.
/// Isolated nodes do not appear in the result.
PortedGraph erdos_renyi(int nodes, double p, Rng& rng);

/// Same edges, each node's ports shuffled.
PortedGraph shuffled_ports(const PortedGraph& graph, Rng& rng);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
Matrix random_unitary(int size, Rng& rng);
LocalUnitaryFamily random_family(const PortedGraph& graph, UnitaryRole role, Rng& rng);

/// Random shift table satisfying the restriction: for every node j the
/// walkers arriving at j are dealt a random permutation of its ports.
ShiftPermutation random_shift(const PortedGraph& graph, Rng& rng);

WalkState random_state(Model model, std::size_t dimension, Rng& rng);

}  // namespace qwalk::fixtures
