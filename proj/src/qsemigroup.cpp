#include "netsemi/qsemigroup.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace netsemi {

QElement make_qelement(const Network& net, Word alpha, Word beta) {
  net.require_coherent();
  auto ca = classify_word(net, alpha);
  if (ca.cls == PathClass::not_path || !ca.reduced)
    throw Error(Errc::non_canonical_operand,
                "alpha is not a reduced path: " + format_word(net, alpha));
  auto cb = classify_word(net, beta);
  if (cb.cls == PathClass::not_path || !cb.reduced || !is_rlp_word(net, beta))
    throw Error(Errc::non_canonical_operand,
                "beta is not a reduced linear path: " + format_word(net, beta));
  if (word_range(net, alpha) != word_range(net, beta))
    throw Error(Errc::non_canonical_operand,
                "r(alpha) != r(beta): " + format_word(net, alpha) + " | " +
                    format_word(net, beta));
  QElement q;
  q.zero = false;
  q.alpha = std::move(alpha);
  q.beta = std::move(beta);
  return q;
}

Word representative_word(const Network& net, const QElement& q) {
  if (q.zero) return Word({Symbol::zero()});
  return concat(q.alpha, inverse_word(net, q.beta));
}

QElement canonicalize(const Network& net, const Word& w) {
  net.require_coherent();
  Word nf = normal_form(net, w).word;
  if (nf.is_zero_word()) return QElement::zero_element();

  std::size_t split = nf.size();
  for (std::size_t i = 0; i < nf.size(); ++i) {
    if (nf.syms[i].is_rel_inv()) {
      split = i;
      break;
    }
  }
  Word alpha(std::vector<Symbol>(nf.syms.begin(), nf.syms.begin() + split));
  Word beta;
  for (std::size_t i = nf.size(); i > split; --i) {
    Symbol s = nf.syms[i - 1];
    assert(s.is_rel_inv() && "irreducible words end in a pure inverse block");
    beta.syms.push_back(Symbol::rel(s.idx));
  }
  if (alpha.empty()) alpha.syms.push_back(Symbol::sub(word_range(net, beta)));
  if (beta.empty()) beta.syms.push_back(Symbol::sub(word_range(net, alpha)));
  if (word_range(net, alpha) != word_range(net, beta))
    alpha.syms.push_back(Symbol::sub(word_range(net, beta)));

  assert(classify_word(net, alpha).reduced);
  if (!is_rlp_word(net, beta))
    throw Error(Errc::unsupported_network,
                "inverse block of a normal form is not linear");
  QElement q;
  q.zero = false;
  q.alpha = std::move(alpha);
  q.beta = std::move(beta);
  return q;
}

namespace {

bool is_prefix(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  return std::equal(p.syms.begin(), p.syms.end(), w.syms.begin());
}

Word suffix_from(const Word& w, std::size_t start) {
  return Word(std::vector<Symbol>(w.syms.begin() + start, w.syms.end()));
}

}  // namespace

QElement multiply(const Network& net, const QElement& a, const QElement& b) {
  if (a.zero || b.zero) return QElement::zero_element();
  if (a.alpha.empty() || a.beta.empty() || b.alpha.empty() || b.beta.empty())
    throw Error(Errc::non_canonical_operand, "empty component");

  const Word& alpha = a.alpha;
  const Word& beta = a.beta;
  const Word& mu = b.alpha;
  const Word& nu = b.beta;

  if (beta.single_sub()) {  // beta = r(alpha), case (1)
    if (!net.t0_intersects(word_range(net, alpha), word_source(net, mu)))
      return QElement::zero_element();
    return canonicalize(net, concat(concat(alpha, mu), inverse_word(net, nu)));
  }

  // beta is a pure-relation linear word
  if (mu.single_sub()) {
    // [A beta] = [beta] exactly when A = s(beta); eta = beta in case (3)
    if (mu.syms[0].idx != word_source(net, beta))
      return QElement::zero_element();
    return canonicalize(net,
                        concat(alpha, inverse_word(net, concat(nu, beta))));
  }
  if (is_prefix(beta, mu)) {  // case (2), xi possibly empty
    Word xi = suffix_from(mu, beta.size());
    Word left = xi.empty() ? alpha : concat(alpha, xi);
    return canonicalize(net, concat(left, inverse_word(net, nu)));
  }
  if (is_prefix(mu, beta)) {  // case (3)
    Word eta = suffix_from(beta, mu.size());
    return canonicalize(net,
                        concat(alpha, inverse_word(net, concat(nu, eta))));
  }
  return QElement::zero_element();
}

QElement multiply_oracle(const Network& net, const QElement& a,
                         const QElement& b) {
  return canonicalize(
      net, concat(representative_word(net, a), representative_word(net, b)));
}

QElement star(const Network& net, const QElement& a) {
  (void)net;
  if (a.zero) return a;
  QElement out;
  out.zero = false;
  out.alpha = a.beta;
  out.beta = a.beta;
  return out;
}

bool is_idempotent(const Network& net, const QElement& a) {
  (void)net;
  return a.zero || a.alpha == a.beta;
}

bool is_regular(const Network& net, const QElement& a) {
  return a.zero || is_rlp_word(net, a.alpha);
}

std::optional<QElement> inverse_of(const Network& net, const QElement& a) {
  if (a.zero) return a;
  if (!is_regular(net, a)) return std::nullopt;
  QElement out;
  out.zero = false;
  out.alpha = a.beta;
  out.beta = a.alpha;
  return out;
}

bool in_subsemigroup(const Network& net, const QElement& a, Subsemigroup w) {
  if (a.zero) return true;
  switch (w) {
    case Subsemigroup::q:
      return true;
    case Subsemigroup::s:
      return !a.beta.single_sub();
    case Subsemigroup::r:
      return !a.beta.single_sub() && !a.alpha.single_sub() &&
             is_rlp_word(net, a.alpha);
  }
  return false;
}

std::vector<QElement> enumerate_ball(const Network& net, int max_len,
                                     Subsemigroup which) {
  net.require_coherent();
  std::vector<QElement> out;
  out.push_back(QElement::zero_element());
  if (max_len < 2) {
    return out;  // a nonzero element needs at least one symbol on each side
  }

  auto rps = enumerate_paths(net, max_len - 1, PathKind::rp);
  std::map<int, std::vector<const Word*>> rp_by_range;
  for (const auto& w : rps) rp_by_range[word_range(net, w)].push_back(&w);

  for (const auto& beta : enumerate_paths(net, max_len - 1, PathKind::rlp)) {
    auto it = rp_by_range.find(word_range(net, beta));
    if (it == rp_by_range.end()) continue;
    for (const Word* alpha : it->second) {
      if (alpha->size() + beta.size() > static_cast<std::size_t>(max_len))
        continue;
      QElement q;
      q.zero = false;
      q.alpha = *alpha;
      q.beta = beta;
      if (in_subsemigroup(net, q, which)) out.push_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QElement parse_element(const Network& net, const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos) {
    Word w = parse_word(net, text);
    if (w.is_zero_word()) return QElement::zero_element();
    throw Error(Errc::parse_error,
                "expected 'alpha | beta' or '0', got '" + text + "'");
  }
  Word alpha = parse_word(net, text.substr(0, bar));
  Word beta = parse_word(net, text.substr(bar + 1));
  return make_qelement(net, std::move(alpha), std::move(beta));
}

std::string format_element(const Network& net, const QElement& q) {
  if (q.zero) return "0";
  return format_word(net, q.alpha) + " | " + format_word(net, q.beta);
}

QElement map_element(const Network& g, const Network& d,
                     const NetworkIso& iso, const QElement& q) {
  if (q.zero) return q;
  auto map_word = [&](const Word& w) {
    Word out;
    for (auto s : w.syms) {
      switch (s.kind) {
        case SymKind::rel:
        case SymKind::rel_inv: {
          const auto& name = g.relations()[s.idx].name;
          int j = d.relation_index(iso.relation_map.at(name));
          out.syms.push_back({s.kind, j});
          break;
        }
        case SymKind::sub: {
          std::vector<std::string> mapped;
          for (const auto& v : g.t0()[s.idx].members)
            mapped.push_back(iso.vertex_map.at(v));
          int j = d.t0_index(VertexSet(std::move(mapped)));
          assert(j >= 0 && "isomorphism must preserve T0");
          out.syms.push_back(Symbol::sub(j));
          break;
        }
        case SymKind::zero:
          out.syms.push_back(s);
          break;
      }
    }
    return out;
  };
  return make_qelement(d, map_word(q.alpha), map_word(q.beta));
}

}  // namespace netsemi
