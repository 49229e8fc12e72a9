#include "netsemi/rewrite.hpp"

#include <cassert>
#include <unordered_set>

namespace netsemi {

const char* rule_name(RuleTag t) {
  switch (t) {
    case RuleTag::nr1a: return "NR1a";
    case RuleTag::nr1b: return "NR1b";
    case RuleTag::nr2: return "NR2";
    case RuleTag::nr3: return "NR3";
    case RuleTag::nr4: return "NR4";
    case RuleTag::nr5: return "NR5";
    case RuleTag::nr6a: return "NR6a";
    case RuleTag::nr6b: return "NR6b";
  }
  return "?";
}

int rule_family(RuleTag t) {
  switch (t) {
    case RuleTag::nr1a:
    case RuleTag::nr1b: return 1;
    case RuleTag::nr2: return 2;
    case RuleTag::nr3: return 3;
    case RuleTag::nr4: return 4;
    case RuleTag::nr5: return 5;
    case RuleTag::nr6a:
    case RuleTag::nr6b: return 6;
  }
  return 0;
}

namespace {

// Rules matching the pair (x, y), in the fixed tag precedence order.
void pair_redexes(const Network& net, Symbol x, Symbol y,
                  std::size_t pos, std::vector<Redex>& out) {
  if (x.is_zero()) out.push_back({pos, RuleTag::nr6a});
  if (y.is_zero()) out.push_back({pos, RuleTag::nr6b});
  if (x.is_zero() || y.is_zero()) return;

  if (x.is_sub() && x.idx == symbol_source(net, y))
    out.push_back({pos, RuleTag::nr1a});
  if (y.is_sub() && y.idx == symbol_range(net, x))
    out.push_back({pos, RuleTag::nr1b});
  if (x.is_rel_inv() && y.is_rel() && x.idx == y.idx)
    out.push_back({pos, RuleTag::nr4});
  if (x.is_rel_inv() && y.is_rel() && x.idx != y.idx)
    out.push_back({pos, RuleTag::nr3});
  if (x.is_rel_inv() && y.is_sub() && y.idx != net.source_t0(x.idx))
    out.push_back({pos, RuleTag::nr5});
  if (!net.t0_intersects(symbol_range(net, x), symbol_source(net, y)))
    out.push_back({pos, RuleTag::nr2});
}

}  // namespace

std::vector<Redex> find_redexes(const Network& net, const Word& w) {
  assert(!w.empty());
  std::vector<Redex> out;
  for (std::size_t i = 0; i + 1 < w.syms.size(); ++i)
    pair_redexes(net, w.syms[i], w.syms[i + 1], i, out);
  return out;
}

Word apply_redex(const Network& net, const Word& w, const Redex& redex) {
  Word out;
  out.syms.reserve(w.size() - 1);
  out.syms.assign(w.syms.begin(), w.syms.begin() + redex.pos);
  switch (redex.tag) {
    case RuleTag::nr1a:
      out.syms.push_back(w.syms[redex.pos + 1]);
      break;
    case RuleTag::nr1b:
      out.syms.push_back(w.syms[redex.pos]);
      break;
    case RuleTag::nr4:
      out.syms.push_back(Symbol::sub(net.range_t0(w.syms[redex.pos].idx)));
      break;
    case RuleTag::nr2:
    case RuleTag::nr3:
    case RuleTag::nr5:
    case RuleTag::nr6a:
    case RuleTag::nr6b:
      out.syms.push_back(Symbol::zero());
      break;
  }
  out.syms.insert(out.syms.end(), w.syms.begin() + redex.pos + 2,
                  w.syms.end());
  return out;
}

NormalFormResult normal_form(const Network& net, const Word& w) {
  if (w.empty()) throw Error(Errc::empty_word, "normal_form");
  NormalFormResult res;
  res.trace.start = w;
  Word cur = w;
  const std::size_t max_steps = w.size();
  while (true) {
    auto redexes = find_redexes(net, cur);
    if (redexes.empty()) break;
    Word next = apply_redex(net, cur, redexes.front());
    assert(next.size() < cur.size());
    res.trace.steps.push_back({redexes.front().pos, redexes.front().tag, next});
    cur = std::move(next);
    assert(res.trace.steps.size() < max_steps);
  }
  (void)max_steps;
  res.word = std::move(cur);
  return res;
}

std::set<Word> normal_forms_all_orders(const Network& net, const Word& w,
                                       std::size_t budget) {
  if (w.empty()) throw Error(Errc::empty_word, "normal_forms_all_orders");
  std::unordered_set<Word, WordHash> visited;
  std::vector<Word> stack;
  std::set<Word> normal;
  visited.insert(w);
  stack.push_back(w);
  while (!stack.empty()) {
    Word cur = std::move(stack.back());
    stack.pop_back();
    auto redexes = find_redexes(net, cur);
    if (redexes.empty()) {
      normal.insert(std::move(cur));
      continue;
    }
    for (const auto& r : redexes) {
      Word next = apply_redex(net, cur, r);
      if (visited.insert(next).second) {
        if (visited.size() > budget)
          throw Error(Errc::budget_exceeded,
                      "state budget " + std::to_string(budget));
        stack.push_back(std::move(next));
      }
    }
  }
  return normal;
}

std::vector<const ConfluenceTriple*> ConfluenceReport::failures() const {
  std::vector<const ConfluenceTriple*> out;
  for (const auto& t : triples)
    if (!t.joinable) out.push_back(&t);
  return out;
}

namespace {

int classify_case(RuleTag left, RuleTag right) {
  int a = rule_family(left);
  int b = rule_family(right);
  if (a == 1 && b == 1) return 1;
  if ((a == 1 && b == 2) || (a == 2 && b == 1)) return 2;
  if ((a == 1 && b == 3) || (a == 3 && b == 1)) return 3;
  if ((a == 1 && b == 4) || (a == 4 && b == 1)) return 4;
  if ((a == 1 && b == 5) || (a == 5 && b == 1)) return 5;
  if ((a == 2 && b == 4) || (a == 4 && b == 2)) return 7;
  // remaining overlaps: NR2 against NR2/NR3/NR5 on either side
  return 6;
}

}  // namespace

ConfluenceReport check_local_confluence(const Network& net) {
  ConfluenceReport report;
  std::vector<Symbol> alpha = full_alphabet(net);
  alpha.pop_back();  // drop zero; NR6 overlaps are trivially joinable

  std::vector<Redex> left, right;
  for (auto x : alpha) {
    for (auto y : alpha) {
      left.clear();
      pair_redexes(net, x, y, 0, left);
      if (left.empty()) continue;
      for (auto z : alpha) {
        right.clear();
        pair_redexes(net, y, z, 1, right);
        if (right.empty()) continue;
        ConfluenceTriple rec;
        rec.word = Word({x, y, z});
        rec.left = left.front().tag;
        rec.right = right.front().tag;
        rec.case_no = classify_case(rec.left, rec.right);
        auto nfs = normal_forms_all_orders(net, rec.word);
        rec.normal_forms.assign(nfs.begin(), nfs.end());
        rec.joinable = nfs.size() == 1;
        if (!rec.joinable) report.pass = false;
        ++report.triples_checked;
        report.triples.push_back(std::move(rec));
      }
    }
  }
  return report;
}

}  // namespace netsemi
