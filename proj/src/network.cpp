#include "netsemi/network.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace netsemi {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::empty_source_or_range: return "EmptySourceOrRange";
    case Errc::source_range_overlap: return "SourceRangeOverlap";
    case Errc::duplicate_relation_name: return "DuplicateRelationName";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::empty_word: return "EmptyWord";
    case Errc::not_a_path: return "NotAPath";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::non_canonical_operand: return "NonCanonicalOperand";
    case Errc::zero_operand: return "ZeroOperand";
    case Errc::not_regular_operand: return "NotRegularOperand";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::ideal_check_failed: return "IdealCheckFailed";
    case Errc::insufficient_ball: return "InsufficientBall";
    case Errc::unsupported_network: return "UnsupportedNetwork";
    case Errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

VertexSet::VertexSet(std::vector<std::string> m) : members(std::move(m)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexSet::contains(const std::string& v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto i = members.begin();
  auto j = other.members.begin();
  while (i != members.end() && j != other.members.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members.begin(), other.members.end(),
                       members.begin(), members.end());
}

std::string VertexSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i];
  }
  out += '}';
  return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

NetworkDescription parse_network_text(const std::string& text) {
  NetworkDescription desc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_vertices = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw Error(Errc::parse_error,
                  "line " + std::to_string(lineno) + ": " + msg);
    };
    if (tokens[0] == "vertices") {
      if (saw_vertices) fail("duplicate vertices declaration");
      saw_vertices = true;
      desc.vertices.assign(tokens.begin() + 1, tokens.end());
    } else if (tokens[0] == "rel") {
      // rel NAME : v... -> v...
      if (tokens.size() < 3 || tokens[2] != ":")
        fail("expected 'rel NAME : SRC... -> RNG...'");
      NetworkDescription::RawRelation rel;
      rel.name = tokens[1];
      std::size_t i = 3;
      while (i < tokens.size() && tokens[i] != "->") rel.source.push_back(tokens[i++]);
      if (i == tokens.size()) fail("missing '->' in relation declaration");
      for (++i; i < tokens.size(); ++i) rel.range.push_back(tokens[i]);
      desc.relations.push_back(std::move(rel));
    } else {
      fail("unknown declaration '" + tokens[0] + "'");
    }
  }
  if (!saw_vertices)
    throw Error(Errc::parse_error, "missing vertices declaration");
  return desc;
}

Network Network::validate(const NetworkDescription& raw) {
  Network net;
  net.vertices_ = raw.vertices;
  std::sort(net.vertices_.begin(), net.vertices_.end());
  net.vertices_.erase(
      std::unique(net.vertices_.begin(), net.vertices_.end()),
      net.vertices_.end());
  std::set<std::string> known(net.vertices_.begin(), net.vertices_.end());

  std::set<std::string> names;
  for (const auto& r : raw.relations) {
    if (!names.insert(r.name).second)
      throw Error(Errc::duplicate_relation_name, r.name);
    for (const auto& v : r.source)
      if (!known.count(v))
        throw Error(Errc::unknown_vertex, v + " in source of " + r.name);
    for (const auto& v : r.range)
      if (!known.count(v))
        throw Error(Errc::unknown_vertex, v + " in range of " + r.name);
    VertexSet src(r.source), rng(r.range);
    if (src.empty() || rng.empty())
      throw Error(Errc::empty_source_or_range, r.name);
    if (src.intersects(rng))
      throw Error(Errc::source_range_overlap, r.name);
    net.relations_.push_back({r.name, std::move(src), std::move(rng)});
  }

  std::set<VertexSet> t0set;
  for (const auto& r : net.relations_) {
    t0set.insert(r.source);
    t0set.insert(r.range);
  }
  for (const auto& v : net.vertices_) t0set.insert(VertexSet({v}));
  net.t0_.assign(t0set.begin(), t0set.end());
  for (std::size_t i = 0; i < net.t0_.size(); ++i)
    net.t0_lookup_[net.t0_[i]] = static_cast<int>(i);

  for (std::size_t i = 0; i < net.relations_.size(); ++i) {
    const auto& r = net.relations_[i];
    net.rel_lookup_[r.name] = static_cast<int>(i);
    net.rel_source_.push_back(net.t0_lookup_.at(r.source));
    net.rel_range_.push_back(net.t0_lookup_.at(r.range));
    if (r.source.size() != 1 || r.range.size() != 1) net.is_graph_ = false;
  }

  const std::size_t n = net.t0_.size();
  net.intersects_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      net.intersects_[i * n + j] = net.t0_[i].intersects(net.t0_[j]);

  // Every nonempty source/range overlap must be an equality, otherwise the
  // reduction system admits an unjoinable divergence at u^-1 A w^-1 and the
  // quotient loses unique normal forms.
  for (const auto& u : net.relations_) {
    for (const auto& w : net.relations_) {
      if (u.source.intersects(w.range) && u.source != w.range)
        net.junction_coherent_ = false;
    }
  }
  return net;
}

int Network::t0_index(const VertexSet& vs) const {
  auto it = t0_lookup_.find(vs);
  return it == t0_lookup_.end() ? -1 : it->second;
}

int Network::relation_index(const std::string& name) const {
  auto it = rel_lookup_.find(name);
  return it == rel_lookup_.end() ? -1 : it->second;
}

int Network::out_index(const VertexSet& a) const {
  int count = 0;
  for (const auto& r : relations_)
    if (r.source == a) ++count;
  return count;
}

int Network::in_index(const VertexSet& a) const {
  int count = 0;
  for (const auto& r : relations_)
    if (r.range == a) ++count;
  return count;
}

void Network::require_coherent() const {
  if (!junction_coherent_)
    throw Error(Errc::unsupported_network,
                "a relation source partially overlaps a relation range; "
                "canonical forms are not unique on this network");
}

bool verify_isomorphism(const Network& g, const Network& d,
                        const NetworkIso& iso) {
  if (iso.vertex_map.size() != g.vertices().size()) return false;
  if (iso.relation_map.size() != g.relations().size()) return false;
  if (g.vertices().size() != d.vertices().size()) return false;
  if (g.relations().size() != d.relations().size()) return false;

  std::set<std::string> vimage, rimage;
  for (const auto& [v, w] : iso.vertex_map) {
    if (std::find(g.vertices().begin(), g.vertices().end(), v) ==
        g.vertices().end())
      return false;
    if (std::find(d.vertices().begin(), d.vertices().end(), w) ==
        d.vertices().end())
      return false;
    vimage.insert(w);
  }
  if (vimage.size() != d.vertices().size()) return false;

  auto map_set = [&](const VertexSet& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs.members) out.push_back(iso.vertex_map.at(v));
    return VertexSet(std::move(out));
  };

  for (const auto& [t, q] : iso.relation_map) {
    int ti = g.relation_index(t);
    int qi = d.relation_index(q);
    if (ti < 0 || qi < 0) return false;
    rimage.insert(q);
    const auto& rt = g.relations()[ti];
    const auto& rq = d.relations()[qi];
    if (map_set(rt.source) != rq.source) return false;
    if (map_set(rt.range) != rq.range) return false;
  }
  return rimage.size() == d.relations().size();
}

namespace {

// Membership signature of a vertex: which (relation, endpoint) pairs it
// belongs to, with relations named by g-side indices under the current
// relation assignment.
std::vector<std::pair<int, int>> vertex_signature(
    const Network& net, const std::string& v,
    const std::vector<int>& rel_to_g_index) {
  std::vector<std::pair<int, int>> sig;
  for (std::size_t i = 0; i < net.relations().size(); ++i) {
    int gi = rel_to_g_index[i];
    if (net.relations()[i].source.contains(v)) sig.emplace_back(gi, 0);
    if (net.relations()[i].range.contains(v)) sig.emplace_back(gi, 1);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

struct IsoSearch {
  const Network& g;
  const Network& d;
  std::vector<int> assign;      // g relation index -> d relation index
  std::vector<char> used;

  std::optional<NetworkIso> result;

  bool compatible(int gi, int di) const {
    const auto& rg = g.relations()[gi];
    const auto& rd = d.relations()[di];
    if (rg.source.size() != rd.source.size()) return false;
    if (rg.range.size() != rd.range.size()) return false;
    if (g.out_index(rg.source) != d.out_index(rd.source)) return false;
    if (g.out_index(rg.range) != d.out_index(rd.range)) return false;
    if (g.in_index(rg.source) != d.in_index(rd.source)) return false;
    if (g.in_index(rg.range) != d.in_index(rd.range)) return false;
    return true;
  }

  bool finish() {
    // With the relation bijection fixed, vertices can be matched cell by
    // cell, where a cell collects vertices with identical membership
    // signatures. Any cell-respecting bijection is an isomorphism, so the
    // sizes of corresponding cells must agree.
    std::vector<int> g_identity(g.relations().size());
    for (std::size_t i = 0; i < g_identity.size(); ++i)
      g_identity[i] = static_cast<int>(i);
    // d relation index -> g relation index
    std::vector<int> d_to(d.relations().size(), -1);
    for (std::size_t i = 0; i < assign.size(); ++i)
      d_to[assign[i]] = static_cast<int>(i);

    std::map<std::vector<std::pair<int, int>>, std::vector<std::string>> gcells,
        dcells;
    for (const auto& v : g.vertices())
      gcells[vertex_signature(g, v, g_identity)].push_back(v);
    for (const auto& w : d.vertices())
      dcells[vertex_signature(d, w, d_to)].push_back(w);
    if (gcells.size() != dcells.size()) return false;

    NetworkIso iso;
    auto gi = gcells.begin();
    auto di = dcells.begin();
    for (; gi != gcells.end(); ++gi, ++di) {
      if (gi->first != di->first) return false;
      if (gi->second.size() != di->second.size()) return false;
      for (std::size_t k = 0; k < gi->second.size(); ++k)
        iso.vertex_map[gi->second[k]] = di->second[k];
    }
    for (std::size_t i = 0; i < assign.size(); ++i)
      iso.relation_map[g.relations()[i].name] =
          d.relations()[assign[i]].name;
    if (!verify_isomorphism(g, d, iso)) return false;
    result = std::move(iso);
    return true;
  }

  bool search(std::size_t gi) {
    if (gi == g.relations().size()) return finish();
    for (std::size_t di = 0; di < d.relations().size(); ++di) {
      if (used[di] || !compatible(static_cast<int>(gi), static_cast<int>(di)))
        continue;
      used[di] = 1;
      assign[gi] = static_cast<int>(di);
      if (search(gi + 1)) return true;
      used[di] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<NetworkIso> find_isomorphism(const Network& g,
                                           const Network& d) {
  if (g.vertices().size() != d.vertices().size()) return std::nullopt;
  if (g.relations().size() != d.relations().size()) return std::nullopt;
  IsoSearch search{g, d,
                   std::vector<int>(g.relations().size(), -1),
                   std::vector<char>(d.relations().size(), 0),
                   std::nullopt};
  search.search(0);
  return search.result;
}

NetworkIso compose_isomorphisms(const NetworkIso& first,
                                const NetworkIso& second) {
  NetworkIso out;
  for (const auto& [a, b] : first.vertex_map)
    out.vertex_map[a] = second.vertex_map.at(b);
  for (const auto& [a, b] : first.relation_map)
    out.relation_map[a] = second.relation_map.at(b);
  return out;
}

NetworkIso invert_isomorphism(const NetworkIso& iso) {
  NetworkIso out;
  for (const auto& [a, b] : iso.vertex_map) out.vertex_map[b] = a;
  for (const auto& [a, b] : iso.relation_map) out.relation_map[b] = a;
  return out;
}

}  // namespace netsemi
