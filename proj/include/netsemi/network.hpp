// network.hpp -- the network data model: vertices, relations with set-valued
// endpoints, the derived alphabet T0, and network isomorphism search.

#ifndef NETSEMI_NETWORK_HPP
#define NETSEMI_NETWORK_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netsemi/error.hpp"

namespace netsemi {

/// A duplicate-free, sorted set of vertex identifiers. Equality is by value.
struct VertexSet {
  std::vector<std::string> members;

  VertexSet() = default;
  explicit VertexSet(std::vector<std::string> m);

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool contains(const std::string& v) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  auto operator<=>(const VertexSet&) const = default;

  /// Renders as {v1,v2}.
  std::string str() const;
};

struct Relation {
  std::string name;
  VertexSet source;
  VertexSet range;
};

/// Raw, unvalidated network description (output of the text parser).
struct NetworkDescription {
  std::vector<std::string> vertices;
  struct RawRelation {
    std::string name;
    std::vector<std::string> source;
    std::vector<std::string> range;
  };
  std::vector<RawRelation> relations;
};

/// Parses the one-declaration-per-line text format:
///
///   # comment
///   vertices v1 v2 v3 v4
///   rel t1 : v1 v2 -> v3
///   rel t2 : v3 -> v4
///
/// Throws Error(parse_error) with a line number on malformed input.
NetworkDescription parse_network_text(const std::string& text);

/// A validated network. Immutable after construction; derived data (T0,
/// endpoint indices, intersection table) is computed once.
///
/// T0 is the set of all relation sources and ranges together with every
/// singleton vertex set, stored duplicate-free in sorted order.
class Network {
 public:
  /// Validates a raw description. Throws Error with one of
  /// empty_source_or_range, source_range_overlap, duplicate_relation_name,
  /// unknown_vertex.
  static Network validate(const NetworkDescription& raw);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<VertexSet>& t0() const { return t0_; }

  /// Index into t0(), or -1 when the set is not a member.
  int t0_index(const VertexSet& vs) const;
  /// Index into relations(), or -1 for an unknown name.
  int relation_index(const std::string& name) const;

  int source_t0(int rel) const { return rel_source_[rel]; }
  int range_t0(int rel) const { return rel_range_[rel]; }

  bool t0_intersects(int a, int b) const {
    return intersects_[static_cast<std::size_t>(a) * t0_.size() + b];
  }

  /// Number of relations whose source equals the given set.
  int out_index(const VertexSet& a) const;
  /// Number of relations whose range equals the given set.
  int in_index(const VertexSet& a) const;

  /// True when every relation has singleton source and range.
  bool is_graph() const { return is_graph_; }

  /// True when every nonempty overlap between a relation source and a
  /// relation range is an equality of sets. The path quotient's normal-form
  /// machinery is only sound on such networks; see require_coherent().
  bool junction_coherent() const { return junction_coherent_; }

  /// Throws Error(unsupported_network) unless junction_coherent().
  void require_coherent() const;

 private:
  Network() = default;

  std::vector<std::string> vertices_;
  std::vector<Relation> relations_;
  std::vector<VertexSet> t0_;
  std::map<VertexSet, int> t0_lookup_;
  std::map<std::string, int> rel_lookup_;
  std::vector<int> rel_source_;
  std::vector<int> rel_range_;
  std::vector<char> intersects_;  // t0 x t0 intersection table
  bool is_graph_ = true;
  bool junction_coherent_ = true;
};

/// An isomorphism between two networks: compatible bijections on vertex
/// identifiers and relation names.
struct NetworkIso {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> relation_map;
};

/// Checks the NetworkIso invariants: both maps bijective and the image of
/// every source/range set matches the mapped relation's endpoints.
bool verify_isomorphism(const Network& g, const Network& d,
                        const NetworkIso& iso);

/// Exhaustive backtracking search over relation assignments, pruned by
/// endpoint sizes and out/in-indices; vertex assignment is resolved by
/// membership-signature cells once the relation bijection is fixed.
std::optional<NetworkIso> find_isomorphism(const Network& g, const Network& d);

/// Composes the two maps of an iso with a second one (g -> d -> e).
NetworkIso compose_isomorphisms(const NetworkIso& first,
                                const NetworkIso& second);

/// Inverts an isomorphism.
NetworkIso invert_isomorphism(const NetworkIso& iso);

}  // namespace netsemi

#endif  // NETSEMI_NETWORK_HPP
