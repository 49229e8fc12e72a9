// rewrite.hpp -- the presentation <X : NR1..NR6> as an executable string
// rewriting system: redex discovery, leftmost normal forms with traces, an
// all-orders oracle, and the local-confluence checker over length-3 words.

#ifndef NETSEMI_REWRITE_HPP
#define NETSEMI_REWRITE_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "netsemi/word.hpp"

namespace netsemi {

/// Rule tags. NR1 splits into its two one-sided forms, NR6 likewise.
///   NR1a  s(t) t -> t          NR1b  t r(t) -> t
///   NR2   x y -> 0   when r(x) and s(y) are disjoint
///   NR3   ~t1 t2 -> 0 when t1 != t2
///   NR4   ~t t -> r(t)
///   NR5   ~t A -> 0  when s(t) != A
///   NR6a  0 x -> 0             NR6b  x 0 -> 0
enum class RuleTag { nr1a, nr1b, nr2, nr3, nr4, nr5, nr6a, nr6b };

const char* rule_name(RuleTag t);

/// 1..6, collapsing the a/b variants.
int rule_family(RuleTag t);

struct Redex {
  std::size_t pos;
  RuleTag tag;
  auto operator<=>(const Redex&) const = default;
};

/// All (position, rule) pairs whose left-hand side matches, position
/// ascending and, per position, in tag order NR6, NR1a, NR1b, NR4, NR3,
/// NR5, NR2.
std::vector<Redex> find_redexes(const Network& net, const Word& w);

/// Rewrites the two symbols at redex.pos; every rule shortens the word by
/// exactly one symbol.
Word apply_redex(const Network& net, const Word& w, const Redex& redex);

struct RewriteStep {
  std::size_t pos;
  RuleTag tag;
  Word result;
};

struct RewriteTrace {
  Word start;
  std::vector<RewriteStep> steps;
};

struct NormalFormResult {
  Word word;
  RewriteTrace trace;
};

/// Leftmost-first reduction to an irreducible word. Terminates in fewer than
/// |w| steps since every rule shortens the word.
NormalFormResult normal_form(const Network& net, const Word& w);

/// Exhaustively explores every reduction order and returns the set of
/// irreducible words reached. Throws Error(budget_exceeded) when the number
/// of distinct explored words passes the budget.
std::set<Word> normal_forms_all_orders(const Network& net, const Word& w,
                                       std::size_t budget = 100000);

struct ConfluenceTriple {
  Word word;            // the length-3 word x y z
  RuleTag left;         // first rule matching x y
  RuleTag right;        // first rule matching y z
  int case_no;          // 1..7 by the (rule family, rule family) pair
  bool joinable;
  std::vector<Word> normal_forms;
};

struct ConfluenceReport {
  bool pass = true;
  std::size_t triples_checked = 0;
  std::vector<ConfluenceTriple> triples;

  std::vector<const ConfluenceTriple*> failures() const;
};

/// Scans every triple (x, y, z) over X \ {0} where both xy and yz are
/// redexes and verifies that all reduction orders of the word xyz join.
ConfluenceReport check_local_confluence(const Network& net);

}  // namespace netsemi

#endif  // NETSEMI_REWRITE_HPP
