// netgen.hpp -- seeded generation of desk-scale test networks. Endpoint
// sets are blocks of a random vertex partition, so every source/range
// overlap is an equality and the generated networks stay inside the domain
// where canonical forms are unique.

#ifndef NETSEMI_NETGEN_HPP
#define NETSEMI_NETGEN_HPP

#include <cstdint>

#include "netsemi/network.hpp"

namespace netsemi {

struct RandomNetworkOptions {
  int max_vertices = 6;   // at least 2
  int max_relations = 4;  // at least 1
  bool graph_only = false;
};

/// Deterministic for a given (options, seed) pair.
Network random_network(const RandomNetworkOptions& opts, std::uint64_t seed);

/// The worked four-vertex example used across tests and the `example6` CLI
/// command: t1 : {v1,v2} -> {v3}, t2 : {v3} -> {v4}.
Network example6_network();

/// A two-vertex one-edge graph: e : {a} -> {b}.
Network two_vertex_graph();

}  // namespace netsemi

#endif  // NETSEMI_NETGEN_HPP
