// ideals.hpp -- ideal constructions on the path quotient: the non-linear
// ideal, principal ideals under the out-index hypothesis, exhaustive ideal
// verification on balls, and Rees congruence classes.

#ifndef NETSEMI_IDEALS_HPP
#define NETSEMI_IDEALS_HPP

#include <optional>
#include <string>
#include <vector>

#include "netsemi/qsemigroup.hpp"

namespace netsemi {

enum class IdealKind { non_linear, principal };

/// Which side conditions held when a principal ideal was constructed. The
/// singleton-range field is a consequence of the first two and is recorded
/// separately so a disagreement would be visible.
struct IdealHypothesis {
  bool out_index_zero = false;
  bool no_covering_superset = false;
  bool range_is_singleton = false;
  bool multiple_relations = false;      // carriers s and r only
  bool distinct_range_exists = false;   // carriers s and r only
};

/// A decidable membership predicate over canonical elements, together with
/// the data that generated it. Zero is always a member.
struct IdealSpec {
  Subsemigroup carrier = Subsemigroup::q;
  IdealKind kind = IdealKind::non_linear;
  int relation = -1;  // principal ideals: the generating relation index
  IdealHypothesis hypothesis;
};

/// Membership is decided from the canonical form alone: the non-linear
/// ideal collects elements whose alpha is a reduced path that is not
/// linear; a principal ideal collects elements whose range equals the
/// generating relation's range. Both are intersected with the carrier.
bool ideal_contains(const Network& net, const IdealSpec& spec,
                    const QElement& q);

/// The ideal of elements with non-linear alpha. Carriers q and s.
IdealSpec nonlinear_ideal(const Network& net, Subsemigroup carrier);

/// The principal ideal generated by (t, t). Requires o(r(t)) = 0 and no
/// non-singleton member of T0 containing r(t); carriers s and r further
/// require |T| > 1 and a relation with a different range. Throws
/// Error(hypothesis_violated) naming the failed condition.
IdealSpec principal_star_ideal(const Network& net, const std::string& t,
                               Subsemigroup carrier);

struct IdealCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // set on failure
};

struct IdealReport {
  bool pass = true;
  std::vector<IdealCheck> checks;
};

/// Exhaustive checks over a ball of the spec's carrier: two-sided
/// absorption, properness, star-closure (principal ideals), agreement of
/// the closed-form trace with the set generated by ball products
/// (principal), and idempotent count (non-linear).
IdealReport verify_ideal(const Network& net, const IdealSpec& spec,
                         const std::vector<QElement>& ball);

/// Trace of the ideal on a ball.
std::vector<QElement> ideal_trace(const Network& net, const IdealSpec& spec,
                                  const std::vector<QElement>& ball);

struct CongruenceClasses {
  std::vector<std::vector<QElement>> classes;  // the ideal class first
  bool compatible = false;
  // Star compatibility is only meaningful for star-closed (principal)
  // ideals; it stays empty for the non-linear ideal.
  std::optional<bool> unary_compatible;
};

/// Rees congruence classes on a ball: the ideal trace merged into one class,
/// everything else a singleton. Verifies product compatibility exhaustively
/// and, for principal ideals, star compatibility. Throws
/// Error(ideal_check_failed) when verify_ideal does not pass.
CongruenceClasses rees_quotient(const Network& net, const IdealSpec& spec,
                                const std::vector<QElement>& ball);

}  // namespace netsemi

#endif  // NETSEMI_IDEALS_HPP
