#include "netsemi/word.hpp"

#include <cassert>
#include <sstream>

namespace netsemi {

int symbol_source(const Network& net, Symbol s) {
  switch (s.kind) {
    case SymKind::rel: return net.source_t0(s.idx);
    case SymKind::rel_inv: return net.range_t0(s.idx);
    case SymKind::sub: return s.idx;
    case SymKind::zero: break;
  }
  assert(false && "zero has no source");
  return -1;
}

int symbol_range(const Network& net, Symbol s) {
  switch (s.kind) {
    case SymKind::rel: return net.range_t0(s.idx);
    case SymKind::rel_inv: return net.source_t0(s.idx);
    case SymKind::sub: return s.idx;
    case SymKind::zero: break;
  }
  assert(false && "zero has no range");
  return -1;
}

int word_source(const Network& net, const Word& w) {
  return symbol_source(net, w.syms.front());
}

int word_range(const Network& net, const Word& w) {
  return symbol_range(net, w.syms.back());
}

std::string format_symbol(const Network& net, Symbol s) {
  switch (s.kind) {
    case SymKind::rel: return net.relations()[s.idx].name;
    case SymKind::rel_inv: return "~" + net.relations()[s.idx].name;
    case SymKind::sub: return net.t0()[s.idx].str();
    case SymKind::zero: return "0";
  }
  return "?";
}

std::string format_word(const Network& net, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.syms.size(); ++i) {
    if (i) out += ' ';
    out += format_symbol(net, w.syms[i]);
  }
  return out;
}

Word parse_word(const Network& net, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "0") {
      w.syms.push_back(Symbol::zero());
    } else if (tok.front() == '~') {
      int r = net.relation_index(tok.substr(1));
      if (r < 0)
        throw Error(Errc::parse_error, "unknown relation in '" + tok + "'");
      w.syms.push_back(Symbol::rel_inv(r));
    } else if (tok.front() == '{') {
      if (tok.back() != '}')
        throw Error(Errc::parse_error, "unterminated set '" + tok + "'");
      std::vector<std::string> members;
      std::string member;
      for (char c : tok.substr(1, tok.size() - 2)) {
        if (c == ',') {
          if (!member.empty()) members.push_back(member);
          member.clear();
        } else {
          member += c;
        }
      }
      if (!member.empty()) members.push_back(member);
      int t = net.t0_index(VertexSet(std::move(members)));
      if (t < 0)
        throw Error(Errc::parse_error, tok + " is not a member of T0");
      w.syms.push_back(Symbol::sub(t));
    } else {
      int r = net.relation_index(tok);
      if (r < 0)
        throw Error(Errc::parse_error, "unknown relation '" + tok + "'");
      w.syms.push_back(Symbol::rel(r));
    }
  }
  if (w.empty()) throw Error(Errc::empty_word, "no tokens");
  return w;
}

Word inverse_word(const Network& net, const Word& w) {
  (void)net;
  Word out;
  out.syms.reserve(w.size());
  for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
    Symbol s = *it;
    if (s.is_rel()) s.kind = SymKind::rel_inv;
    else if (s.is_rel_inv()) s.kind = SymKind::rel;
    // subsets and zero are self-inverse
    out.syms.push_back(s);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.syms.insert(out.syms.end(), b.syms.begin(), b.syms.end());
  return out;
}

namespace {

// NR1 left-hand sides on an adjacent pair of path symbols.
bool nr1_redex(const Network& net, Symbol x, Symbol y) {
  if (x.is_sub() && x.idx == symbol_source(net, y)) return true;   // s(t)t
  if (y.is_sub() && y.idx == symbol_range(net, x)) return true;    // t r(t)
  return false;
}

}  // namespace

WordClassification classify_word(const Network& net, const Word& w) {
  if (w.empty()) throw Error(Errc::empty_word, "classify_word");
  for (const auto& s : w.syms)
    if (s.is_rel_inv() || s.is_zero()) return {PathClass::not_path, false};

  bool linear = true;
  bool reduced = true;
  for (std::size_t i = 0; i + 1 < w.syms.size(); ++i) {
    int r = symbol_range(net, w.syms[i]);
    int s = symbol_source(net, w.syms[i + 1]);
    if (!net.t0_intersects(r, s)) return {PathClass::not_path, false};
    if (r != s) linear = false;
    if (nr1_redex(net, w.syms[i], w.syms[i + 1])) reduced = false;
  }
  return {linear ? PathClass::linear_path : PathClass::path, reduced};
}

std::pair<VertexSet, VertexSet> source_range(const Network& net,
                                             const Word& w) {
  auto c = classify_word(net, w);
  if (c.cls == PathClass::not_path)
    throw Error(Errc::not_a_path, format_word(net, w));
  return {net.t0()[word_source(net, w)], net.t0()[word_range(net, w)]};
}

Word compose_paths(const Network& net, const Word& a, const Word& b) {
  if (classify_word(net, a).cls == PathClass::not_path ||
      classify_word(net, b).cls == PathClass::not_path)
    throw Error(Errc::not_a_path, "compose_paths");
  if (!net.t0_intersects(word_range(net, a), word_source(net, b)))
    return Word({Symbol::zero()});
  return concat(a, b);
}

std::vector<Word> enumerate_paths(const Network& net, int max_len,
                                  PathKind kind) {
  std::vector<Word> out;
  const int nrel = static_cast<int>(net.relations().size());
  const int nt0 = static_cast<int>(net.t0().size());

  if (kind == PathKind::rlp) {
    // Pure-relation chains with exact matching, plus the T0 singles.
    std::vector<Word> frontier;
    for (int i = 0; i < nrel; ++i) frontier.push_back(Word({Symbol::rel(i)}));
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
      out.insert(out.end(), frontier.begin(), frontier.end());
      std::vector<Word> next;
      for (const auto& w : frontier) {
        int r = word_range(net, w);
        for (int i = 0; i < nrel; ++i) {
          if (net.source_t0(i) == r) {
            Word ext = w;
            ext.syms.push_back(Symbol::rel(i));
            next.push_back(std::move(ext));
          }
        }
      }
      frontier = std::move(next);
    }
    for (int i = 0; i < nt0; ++i) out.push_back(Word({Symbol::sub(i)}));
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
      return std::pair(a.size(), a.syms) < std::pair(b.size(), b.syms);
    });
    return out;
  }

  // Reduced paths: breadth-first over T u T0 symbols, keeping the path
  // condition and NR1-irreducibility at each extension.
  std::vector<Symbol> alphabet;
  for (int i = 0; i < nrel; ++i) alphabet.push_back(Symbol::rel(i));
  for (int i = 0; i < nt0; ++i) alphabet.push_back(Symbol::sub(i));

  std::vector<Word> frontier;
  for (auto s : alphabet) frontier.push_back(Word({s}));
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<Word> next;
    for (const auto& w : frontier) {
      Symbol last = w.syms.back();
      int r = symbol_range(net, last);
      for (auto s : alphabet) {
        if (!net.t0_intersects(r, symbol_source(net, s))) continue;
        if (nr1_redex(net, last, s)) continue;
        Word ext = w;
        ext.syms.push_back(s);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool is_rlp_word(const Network& net, const Word& w) {
  if (w.single_sub()) return true;
  int prev = -1;
  for (const auto& s : w.syms) {
    if (!s.is_rel()) return false;
    if (prev >= 0 && net.source_t0(s.idx) != prev) return false;
    prev = net.range_t0(s.idx);
  }
  return true;
}

std::vector<Symbol> full_alphabet(const Network& net) {
  std::vector<Symbol> alpha;
  for (std::size_t i = 0; i < net.relations().size(); ++i)
    alpha.push_back(Symbol::rel(static_cast<int>(i)));
  for (std::size_t i = 0; i < net.t0().size(); ++i)
    alpha.push_back(Symbol::sub(static_cast<int>(i)));
  for (std::size_t i = 0; i < net.relations().size(); ++i)
    alpha.push_back(Symbol::rel_inv(static_cast<int>(i)));
  alpha.push_back(Symbol::zero());
  return alpha;
}

}  // namespace netsemi
