// relations.hpp -- generalized Green's relations on canonical elements, the
// natural partial order on idempotents, maximal-idempotent classification,
// and the incidence skeleton used for structural comparison.

#ifndef NETSEMI_RELATIONS_HPP
#define NETSEMI_RELATIONS_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "netsemi/qsemigroup.hpp"

namespace netsemi {

/// Closed-form L* test: the beta components agree as words. Throws
/// Error(zero_operand) on zero (only zero is L*-related to zero).
bool l_star_related(const Network& net, const QElement& a, const QElement& b);

/// A probe (x, y) over the semigroup with an adjoined identity; nullopt
/// stands for the identity.
struct Probe {
  std::optional<QElement> x;
  std::optional<QElement> y;
};

struct FalsifierResult {
  bool refuted = false;
  Probe witness;  // set when refuted
};

/// Checks the defining biconditional (ax = ay) <=> (bx = by) over the probe
/// list. A refutation is definitive; consistency is only evidence, since the
/// true quantifier ranges over the whole semigroup.
FalsifierResult l_star_falsifier(const Network& net, const QElement& a,
                                 const QElement& b,
                                 const std::vector<Probe>& probes);

/// All probe pairs over a ball together with the adjoined identity.
std::vector<Probe> make_ball_probes(const std::vector<QElement>& ball);

/// Green's R on regular elements: the alpha components agree. Throws
/// zero_operand / not_regular_operand when the preconditions fail.
bool r_related_regular(const Network& net, const QElement& a,
                       const QElement& b);

enum class RStarVerdict { definitely_not, unknown };

/// R* is refuted when exactly one alpha component is a reduced linear path;
/// no characterization is available otherwise.
RStarVerdict r_star_mixed(const Network& net, const QElement& a,
                          const QElement& b);

/// Natural partial order on idempotents: e <= f iff e = ef = fe. Throws
/// Error(not_idempotent) when either argument is not idempotent.
bool leq_natural(const Network& net, const QElement& e, const QElement& f);

struct OrderReport {
  std::vector<QElement> maximal_in_eq;  // maximal idempotents
  std::vector<QElement> maximal_in_e;   // maximal after removing T0 singles
  std::vector<std::pair<QElement, QElement>> hasse_pairs;  // covering e < f
};

/// Pairwise natural-order scan over the idempotents of a ball.
OrderReport classify_maximal(const Network& net,
                             const std::vector<QElement>& ball);

/// For each maximal non-subset idempotent q = (t, t): the subset idempotent
/// acting as identity on the left of q, and the canonical form of ~t t.
struct Skeleton {
  std::vector<QElement> t_idempotents;
  std::vector<QElement> sub_idempotents;
  std::map<QElement, QElement> source_of;
  std::map<QElement, QElement> range_of;
};

/// Throws Error(insufficient_ball) when the ball misses a (t, t) idempotent
/// or the subset idempotents.
Skeleton extract_skeleton(const Network& net,
                          const std::vector<QElement>& ball);

/// True when some bijection of the t-idempotents and subset idempotents
/// carries one skeleton's source/range incidence onto the other's.
bool skeletons_match(const Skeleton& a, const Skeleton& b);

}  // namespace netsemi

#endif  // NETSEMI_RELATIONS_HPP
