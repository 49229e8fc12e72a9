#include "netsemi/relations.hpp"

#include <algorithm>
#include <set>

namespace netsemi {

bool l_star_related(const Network& net, const QElement& a, const QElement& b) {
  (void)net;
  if (a.zero || b.zero)
    throw Error(Errc::zero_operand, "l_star_related on zero");
  return a.beta == b.beta;
}

FalsifierResult l_star_falsifier(const Network& net, const QElement& a,
                                 const QElement& b,
                                 const std::vector<Probe>& probes) {
  auto apply = [&](const QElement& e, const std::optional<QElement>& x) {
    return x ? multiply(net, e, *x) : e;
  };
  for (const auto& p : probes) {
    bool left = apply(a, p.x) == apply(a, p.y);
    bool right = apply(b, p.x) == apply(b, p.y);
    if (left != right) return {true, p};
  }
  return {false, {}};
}

std::vector<Probe> make_ball_probes(const std::vector<QElement>& ball) {
  std::vector<std::optional<QElement>> pool;
  pool.push_back(std::nullopt);
  for (const auto& q : ball) pool.emplace_back(q);
  std::vector<Probe> probes;
  probes.reserve(pool.size() * pool.size());
  for (const auto& x : pool)
    for (const auto& y : pool) probes.push_back({x, y});
  return probes;
}

bool r_related_regular(const Network& net, const QElement& a,
                       const QElement& b) {
  if (a.zero || b.zero)
    throw Error(Errc::zero_operand, "r_related_regular on zero");
  if (!is_rlp_word(net, a.alpha) || !is_rlp_word(net, b.alpha))
    throw Error(Errc::not_regular_operand, "r_related_regular");
  return a.alpha == b.alpha;
}

RStarVerdict r_star_mixed(const Network& net, const QElement& a,
                          const QElement& b) {
  if (a.zero || b.zero)
    throw Error(Errc::zero_operand, "r_star_mixed on zero");
  bool la = is_rlp_word(net, a.alpha);
  bool lb = is_rlp_word(net, b.alpha);
  if (la != lb) return RStarVerdict::definitely_not;
  return RStarVerdict::unknown;
}

bool leq_natural(const Network& net, const QElement& e, const QElement& f) {
  if (!is_idempotent(net, e) || !is_idempotent(net, f))
    throw Error(Errc::not_idempotent, "leq_natural");
  return multiply(net, e, f) == e && multiply(net, f, e) == e;
}

OrderReport classify_maximal(const Network& net,
                             const std::vector<QElement>& ball) {
  std::vector<QElement> idems;
  for (const auto& q : ball)
    if (is_idempotent(net, q)) idems.push_back(q);

  auto maximal_among = [&](const std::vector<QElement>& family) {
    std::vector<QElement> out;
    for (const auto& e : family) {
      bool maximal = true;
      for (const auto& f : family) {
        if (f == e) continue;
        if (leq_natural(net, e, f)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(e);
    }
    return out;
  };

  OrderReport report;
  report.maximal_in_eq = maximal_among(idems);
  std::vector<QElement> e_family;
  for (const auto& q : idems)
    if (q.zero || !q.beta.single_sub()) e_family.push_back(q);
  report.maximal_in_e = maximal_among(e_family);

  // Covering pairs of the natural order on all ball idempotents.
  for (const auto& e : idems) {
    for (const auto& f : idems) {
      if (e == f || !leq_natural(net, e, f)) continue;
      bool covering = true;
      for (const auto& g : idems) {
        if (g == e || g == f) continue;
        if (leq_natural(net, e, g) && leq_natural(net, g, f)) {
          covering = false;
          break;
        }
      }
      if (covering) report.hasse_pairs.emplace_back(e, f);
    }
  }
  return report;
}

Skeleton extract_skeleton(const Network& net,
                          const std::vector<QElement>& ball) {
  auto report = classify_maximal(net, ball);
  std::vector<QElement> sub_idems;
  for (const auto& q : ball)
    if (!q.zero && q.alpha.single_sub() && q.alpha == q.beta)
      sub_idems.push_back(q);
  if (sub_idems.size() != net.t0().size())
    throw Error(Errc::insufficient_ball, "missing subset idempotents");

  Skeleton skel;
  skel.sub_idempotents = sub_idems;
  for (const auto& q : report.maximal_in_e) {
    if (q.zero) continue;
    if (q.beta.size() != 1 || !q.beta.syms[0].is_rel())
      throw Error(Errc::insufficient_ball,
                  "unexpected maximal idempotent " + format_element(net, q));
    skel.t_idempotents.push_back(q);
  }
  if (skel.t_idempotents.size() != net.relations().size())
    throw Error(Errc::insufficient_ball, "missing relation idempotents");
  for (const auto& q : skel.t_idempotents) {
    int rel = q.beta.syms[0].idx;
    Word word({Symbol::rel_inv(rel), Symbol::rel(rel)});
    skel.range_of[q] = canonicalize(net, word);

    std::optional<QElement> source;
    for (const auto& s : sub_idems) {
      if (multiply(net, s, q) == q) {
        if (source)
          throw Error(Errc::insufficient_ball,
                      "left identity of " + format_element(net, q) +
                          " is not unique");
        source = s;
      }
    }
    if (!source)
      throw Error(Errc::insufficient_ball, "no left identity found");
    skel.source_of[q] = *source;
  }
  return skel;
}

namespace {

// Incidence profile of a skeleton: each t-idempotent becomes an edge between
// its source and range subset idempotents; two skeletons match when the edge
// multisets agree under some bijection of the subset idempotents. Desk-scale
// backtracking over subset-idempotent assignments.
struct SkeletonMatcher {
  std::vector<std::pair<int, int>> a_edges, b_edges;  // (src, rng) as indices
  int a_nodes = 0, b_nodes = 0;

  bool match() const {
    if (a_nodes != b_nodes) return false;
    if (a_edges.size() != b_edges.size()) return false;
    const std::multiset<std::pair<int, int>> target(b_edges.begin(),
                                                    b_edges.end());
    std::vector<int> perm(a_nodes);
    for (int i = 0; i < a_nodes; ++i) perm[i] = i;
    do {
      std::multiset<std::pair<int, int>> mapped;
      for (auto [s, r] : a_edges) mapped.insert({perm[s], perm[r]});
      if (mapped == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }
};

int node_index(std::vector<QElement>& nodes, const QElement& q) {
  auto it = std::find(nodes.begin(), nodes.end(), q);
  if (it != nodes.end()) return static_cast<int>(it - nodes.begin());
  nodes.push_back(q);
  return static_cast<int>(nodes.size()) - 1;
}

}  // namespace

bool skeletons_match(const Skeleton& a, const Skeleton& b) {
  if (a.sub_idempotents.size() != b.sub_idempotents.size()) return false;
  SkeletonMatcher m;
  std::vector<QElement> a_nodes, b_nodes;
  for (const auto& q : a.t_idempotents)
    m.a_edges.emplace_back(node_index(a_nodes, a.source_of.at(q)),
                           node_index(a_nodes, a.range_of.at(q)));
  for (const auto& q : b.t_idempotents)
    m.b_edges.emplace_back(node_index(b_nodes, b.source_of.at(q)),
                           node_index(b_nodes, b.range_of.at(q)));
  m.a_nodes = static_cast<int>(a_nodes.size());
  m.b_nodes = static_cast<int>(b_nodes.size());
  return m.match();
}

}  // namespace netsemi
