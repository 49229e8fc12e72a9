// word.hpp -- words over the alphabet X = T u T0 u T^-1 u {0}, path and
// linear-path classification, path composition, and bounded enumeration of
// reduced paths and reduced linear paths.

#ifndef NETSEMI_WORD_HPP
#define NETSEMI_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netsemi/network.hpp"

namespace netsemi {

enum class SymKind : std::uint8_t { rel = 0, sub = 1, rel_inv = 2, zero = 3 };

/// One alphabet symbol: a relation t, a subset A from T0, an inverse t^-1,
/// or the zero. idx points into Network::relations() or Network::t0().
struct Symbol {
  SymKind kind = SymKind::zero;
  std::int32_t idx = -1;

  static Symbol rel(int i) { return {SymKind::rel, i}; }
  static Symbol sub(int i) { return {SymKind::sub, i}; }
  static Symbol rel_inv(int i) { return {SymKind::rel_inv, i}; }
  static Symbol zero() { return {SymKind::zero, -1}; }

  bool is_rel() const { return kind == SymKind::rel; }
  bool is_sub() const { return kind == SymKind::sub; }
  bool is_rel_inv() const { return kind == SymKind::rel_inv; }
  bool is_zero() const { return kind == SymKind::zero; }

  auto operator<=>(const Symbol&) const = default;
};

struct Word {
  std::vector<Symbol> syms;

  Word() = default;
  explicit Word(std::vector<Symbol> s) : syms(std::move(s)) {}

  std::size_t size() const { return syms.size(); }
  bool empty() const { return syms.empty(); }
  bool single_sub() const { return syms.size() == 1 && syms[0].is_sub(); }
  bool is_zero_word() const { return syms.size() == 1 && syms[0].is_zero(); }

  auto operator<=>(const Word&) const = default;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& s : w.syms) {
      h = (h ^ static_cast<std::size_t>(s.kind)) * 1099511628211ull;
      h = (h ^ static_cast<std::size_t>(s.idx + 1)) * 1099511628211ull;
    }
    return h;
  }
};

/// Source/range of a symbol as t0 indices. s(t^-1) = r(t), r(t^-1) = s(t)
/// and s(A) = A = r(A). Must not be called on zero.
int symbol_source(const Network& net, Symbol s);
int symbol_range(const Network& net, Symbol s);

/// Source/range of a word (first symbol's source, last symbol's range).
int word_source(const Network& net, const Word& w);
int word_range(const Network& net, const Word& w);

std::string format_symbol(const Network& net, Symbol s);
std::string format_word(const Network& net, const Word& w);

/// Parses whitespace-separated tokens: `t1` relation, `~t1` inverse,
/// `{v1,v2}` subset (must be a member of T0), `0` zero.
Word parse_word(const Network& net, const std::string& text);

Word inverse_word(const Network& net, const Word& w);
Word concat(const Word& a, const Word& b);

enum class PathClass { not_path, path, linear_path };

struct WordClassification {
  PathClass cls = PathClass::not_path;
  bool reduced = false;  // meaningful when cls != not_path
};

/// A word over T u T0 is a path when every adjacent range/source pair
/// intersects, and linear when every such pair is equal. Reduced means no
/// adjacent pair matches an NR1 left-hand side. Words containing inverses or
/// zero are not paths. Throws Error(empty_word) on the empty word.
WordClassification classify_word(const Network& net, const Word& w);

/// (source, range) of a path word; throws Error(not_a_path) otherwise.
std::pair<VertexSet, VertexSet> source_range(const Network& net,
                                             const Word& w);

/// The path semigroup product: concatenation when the junction intersects,
/// the zero word otherwise. Both arguments must classify as paths.
Word compose_paths(const Network& net, const Word& a, const Word& b);

enum class PathKind { rp, rlp };

/// All reduced paths (rp) or reduced linear paths (rlp) of length at most
/// max_len, in (length, symbol order) lexicographic order. The rlp family is
/// the pure-relation chains with exact range/source matching together with
/// the single-subset words.
std::vector<Word> enumerate_paths(const Network& net, int max_len,
                                  PathKind kind);

/// True when the reduced path w is a reduced linear path.
bool is_rlp_word(const Network& net, const Word& w);

/// All length <= max_len words over the full alphabet X (including inverses
/// and zero), in lexicographic order; used by brute-force oracles.
std::vector<Symbol> full_alphabet(const Network& net);

}  // namespace netsemi

#endif  // NETSEMI_WORD_HPP
