#include "netsemi/netgen.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace netsemi {

Network random_network(const RandomNetworkOptions& opts, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  const int nv = uniform(2, std::max(2, opts.max_vertices));
  NetworkDescription desc;
  for (int i = 0; i < nv; ++i)
    desc.vertices.push_back("v" + std::to_string(i + 1));

  // Partition the vertices into blocks; relations pick distinct blocks as
  // endpoints. Graphs use the all-singletons partition.
  std::vector<std::vector<std::string>> blocks;
  if (opts.graph_only) {
    for (const auto& v : desc.vertices) blocks.push_back({v});
  } else {
    std::vector<std::string> shuffled = desc.vertices;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const int nblocks = uniform(2, nv);
    blocks.assign(nblocks, {});
    for (int i = 0; i < nv; ++i)
      blocks[i < nblocks ? i : uniform(0, nblocks - 1)].push_back(shuffled[i]);
  }

  const int nrel = uniform(1, std::max(1, opts.max_relations));
  std::set<std::pair<int, int>> used;
  const int nblocks = static_cast<int>(blocks.size());
  for (int i = 0; i < nrel; ++i) {
    int src = uniform(0, nblocks - 1);
    int rng_block = uniform(0, nblocks - 2);
    if (rng_block >= src) ++rng_block;  // distinct from src
    if (opts.graph_only && !used.insert({src, rng_block}).second)
      continue;  // keep graphs simple: no repeated edges
    NetworkDescription::RawRelation rel;
    rel.name = "t" + std::to_string(desc.relations.size() + 1);
    rel.source = blocks[src];
    rel.range = blocks[rng_block];
    desc.relations.push_back(std::move(rel));
  }
  return Network::validate(desc);
}

Network example6_network() {
  NetworkDescription desc;
  desc.vertices = {"v1", "v2", "v3", "v4"};
  desc.relations.push_back({"t1", {"v1", "v2"}, {"v3"}});
  desc.relations.push_back({"t2", {"v3"}, {"v4"}});
  return Network::validate(desc);
}

Network two_vertex_graph() {
  NetworkDescription desc;
  desc.vertices = {"a", "b"};
  desc.relations.push_back({"e", {"a"}, {"b"}});
  return Network::validate(desc);
}

}  // namespace netsemi
