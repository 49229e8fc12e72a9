// qsemigroup.hpp -- canonical elements of the path quotient semigroup in
// right normal form, the closed-form product and its rewriting oracle, the
// star operation, regularity, and bounded element enumeration.

#ifndef NETSEMI_QSEMIGROUP_HPP
#define NETSEMI_QSEMIGROUP_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "netsemi/rewrite.hpp"
#include "netsemi/word.hpp"

namespace netsemi {

/// A congruence class in right normal form: the zero, or a pair (alpha,
/// beta) with alpha a reduced path, beta a reduced linear path and
/// r(alpha) = r(beta). The representative word is alpha beta^-1. Structural
/// equality of the pair decides element equality.
struct QElement {
  bool zero = true;
  Word alpha;
  Word beta;

  static QElement zero_element() { return QElement{}; }

  std::size_t ball_size() const { return zero ? 0 : alpha.size() + beta.size(); }

  auto operator<=>(const QElement& o) const {
    if (auto c = (o.zero <=> zero); c != 0) return c;  // zero sorts first
    if (auto c = (ball_size() <=> o.ball_size()); c != 0) return c;
    if (auto c = (alpha <=> o.alpha); c != 0) return c;
    return beta <=> o.beta;
  }
  bool operator==(const QElement& o) const {
    return zero == o.zero && alpha == o.alpha && beta == o.beta;
  }
};

struct QElementHash {
  std::size_t operator()(const QElement& q) const {
    if (q.zero) return 0;
    WordHash h;
    return h(q.alpha) * 31 + h(q.beta);
  }
};

/// Builds an element from an (alpha, beta) pair, checking the right normal
/// form invariants. Throws Error(non_canonical_operand) when they fail.
QElement make_qelement(const Network& net, Word alpha, Word beta);

/// Representative word alpha beta^-1 (the single zero symbol for zero).
Word representative_word(const Network& net, const QElement& q);

/// Reduces an arbitrary word over X and packages the normal form as a right
/// normal form pair: a pure path gains a subset on the beta side, a pure
/// inverse word gains one on the alpha side, and a range mismatch is fixed
/// by appending r(beta) to alpha. Requires a junction-coherent network,
/// otherwise normal forms are not unique per class.
QElement canonicalize(const Network& net, const Word& w);

/// The closed-form product of two canonical elements:
///   (1) beta = r(alpha) and r(alpha) meets s(mu): alpha mu nu^-1;
///   (2) mu = beta xi: alpha xi nu^-1  (a subset-only mu counts as a prefix
///       exactly when it equals s(beta));
///   (3) beta = mu eta: alpha (nu eta)^-1;
///   (4) zero otherwise.
/// Outputs are re-canonicalized; degenerate prefixes collapse there.
QElement multiply(const Network& net, const QElement& a, const QElement& b);

/// Ground truth: canonicalize the concatenation of the two representative
/// words. The closed form must agree with this everywhere.
QElement multiply_oracle(const Network& net, const QElement& a,
                         const QElement& b);

/// The unique idempotent in a's L*-class: (beta, beta), zero fixed.
QElement star(const Network& net, const QElement& a);

/// Zero, or alpha = beta.
bool is_idempotent(const Network& net, const QElement& a);

/// Zero, or alpha a reduced linear path.
bool is_regular(const Network& net, const QElement& a);

/// (beta, alpha) when regular and nonzero, zero for zero, nullopt otherwise.
std::optional<QElement> inverse_of(const Network& net, const QElement& a);

enum class Subsemigroup { q, s, r };

/// q: always. s: zero or beta outside T0. r: additionally alpha a reduced
/// linear path outside T0.
bool in_subsemigroup(const Network& net, const QElement& a, Subsemigroup w);

/// All canonical elements with |alpha| + |beta| <= max_len that lie in the
/// requested subsemigroup, zero included, deterministically ordered.
std::vector<QElement> enumerate_ball(const Network& net, int max_len,
                                     Subsemigroup which);

/// Surface syntax "alpha | beta" with word syntax on both sides, or "0".
QElement parse_element(const Network& net, const std::string& text);
std::string format_element(const Network& net, const QElement& q);

/// Pushes an element through a network isomorphism, symbol by symbol.
QElement map_element(const Network& g, const Network& d,
                     const NetworkIso& iso, const QElement& q);

}  // namespace netsemi

#endif  // NETSEMI_QSEMIGROUP_HPP
