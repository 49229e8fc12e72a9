#include "netsemi/ideals.hpp"

#include <algorithm>
#include <set>

namespace netsemi {

bool ideal_contains(const Network& net, const IdealSpec& spec,
                    const QElement& q) {
  if (q.zero) return true;
  if (!in_subsemigroup(net, q, spec.carrier)) return false;
  switch (spec.kind) {
    case IdealKind::non_linear:
      return !is_rlp_word(net, q.alpha);
    case IdealKind::principal:
      return word_range(net, q.beta) == net.range_t0(spec.relation);
  }
  return false;
}

IdealSpec nonlinear_ideal(const Network& net, Subsemigroup carrier) {
  (void)net;
  IdealSpec spec;
  spec.carrier = carrier;
  spec.kind = IdealKind::non_linear;
  return spec;
}

IdealSpec principal_star_ideal(const Network& net, const std::string& t,
                               Subsemigroup carrier) {
  int rel = net.relation_index(t);
  if (rel < 0) throw Error(Errc::parse_error, "unknown relation " + t);
  const VertexSet& range = net.relations()[rel].range;

  IdealSpec spec;
  spec.carrier = carrier;
  spec.kind = IdealKind::principal;
  spec.relation = rel;
  auto& hyp = spec.hypothesis;

  hyp.out_index_zero = net.out_index(range) == 0;
  hyp.no_covering_superset = true;
  for (const auto& a : net.t0())
    if (a.size() > 1 && range.is_subset_of(a)) hyp.no_covering_superset = false;
  hyp.range_is_singleton = range.size() == 1;
  hyp.multiple_relations = net.relations().size() > 1;
  hyp.distinct_range_exists = false;
  for (const auto& q : net.relations())
    if (q.range != range) hyp.distinct_range_exists = true;

  if (!hyp.out_index_zero)
    throw Error(Errc::hypothesis_violated,
                "out-index of r(" + t + ") is " +
                    std::to_string(net.out_index(range)) + ", not 0");
  if (!hyp.no_covering_superset)
    throw Error(Errc::hypothesis_violated,
                "a non-singleton member of T0 contains r(" + t + ")");
  if (carrier != Subsemigroup::q) {
    if (!hyp.multiple_relations)
      throw Error(Errc::hypothesis_violated,
                  "carrier needs more than one relation");
    if (!hyp.distinct_range_exists)
      throw Error(Errc::hypothesis_violated,
                  "carrier needs a relation with a different range");
  }
  return spec;
}

std::vector<QElement> ideal_trace(const Network& net, const IdealSpec& spec,
                                  const std::vector<QElement>& ball) {
  std::vector<QElement> out;
  for (const auto& q : ball)
    if (ideal_contains(net, spec, q)) out.push_back(q);
  return out;
}

IdealReport verify_ideal(const Network& net, const IdealSpec& spec,
                         const std::vector<QElement>& ball) {
  IdealReport report;
  auto add = [&](std::string name, bool pass, std::string witness = "") {
    if (!pass) report.pass = false;
    report.checks.push_back({std::move(name), pass, std::move(witness)});
  };

  auto trace = ideal_trace(net, spec, ball);

  {
    bool ok = true;
    std::string witness;
    for (const auto& a : trace) {
      for (const auto& s : ball) {
        if (!ideal_contains(net, spec, multiply(net, a, s))) {
          ok = false;
          witness = format_element(net, a) + " * " + format_element(net, s);
          break;
        }
        if (!ideal_contains(net, spec, multiply(net, s, a))) {
          ok = false;
          witness = format_element(net, s) + " * " + format_element(net, a);
          break;
        }
      }
      if (!ok) break;
    }
    add("absorption", ok, witness);
  }

  {
    bool proper = false;
    for (const auto& q : ball)
      if (!ideal_contains(net, spec, q)) proper = true;
    add("properness", proper, proper ? "" : "ideal covers the whole ball");
  }

  if (spec.kind == IdealKind::principal) {
    bool closed = true;
    std::string witness;
    for (const auto& a : trace) {
      if (!ideal_contains(net, spec, star(net, a))) {
        closed = false;
        witness = format_element(net, a);
        break;
      }
    }
    add("star_closure", closed, witness);

    // The closed-form trace must equal the set generated by sandwiching the
    // generator between ball elements (with an adjoined identity).
    QElement gen;
    gen.zero = false;
    gen.alpha = Word({Symbol::rel(spec.relation)});
    gen.beta = gen.alpha;
    std::set<QElement> generated;
    std::vector<std::optional<QElement>> pool;
    pool.push_back(std::nullopt);
    for (const auto& q : ball) pool.emplace_back(q);
    auto mul1 = [&](const std::optional<QElement>& x, const QElement& e) {
      return x ? multiply(net, *x, e) : e;
    };
    for (const auto& x : pool) {
      QElement xe = mul1(x, gen);
      for (const auto& y : pool) {
        QElement xey = y ? multiply(net, xe, *y) : xe;
        if (std::binary_search(ball.begin(), ball.end(), xey))
          generated.insert(std::move(xey));
      }
    }
    std::set<QElement> expected(trace.begin(), trace.end());
    add("generated_equals_closed_form", generated == expected);
  }

  if (spec.kind == IdealKind::non_linear) {
    // Idempotent separation: the ideal must contain no nonzero idempotent.
    bool separating = true;
    std::string witness;
    for (const auto& a : trace) {
      if (!a.zero && is_idempotent(net, a)) {
        separating = false;
        witness = format_element(net, a);
        break;
      }
    }
    add("only_zero_idempotent", separating, witness);
  }
  return report;
}

CongruenceClasses rees_quotient(const Network& net, const IdealSpec& spec,
                                const std::vector<QElement>& ball) {
  auto report = verify_ideal(net, spec, ball);
  if (!report.pass)
    throw Error(Errc::ideal_check_failed, "verify_ideal did not pass");

  auto trace = ideal_trace(net, spec, ball);
  std::set<QElement> in_ideal(trace.begin(), trace.end());

  CongruenceClasses out;
  out.classes.push_back(trace);
  for (const auto& q : ball)
    if (!in_ideal.count(q)) out.classes.push_back({q});

  // Membership is total, so products that leave the ball are still decided.
  auto related = [&](const QElement& a, const QElement& b) {
    return a == b ||
           (ideal_contains(net, spec, a) && ideal_contains(net, spec, b));
  };

  // All related pairs: the diagonal plus the ideal square.
  std::vector<std::pair<const QElement*, const QElement*>> pairs;
  for (const auto& q : ball) pairs.emplace_back(&q, &q);
  for (const auto& a : trace)
    for (const auto& b : trace)
      if (!(a == b)) pairs.emplace_back(&a, &b);

  out.compatible = true;
  for (const auto& [a, a2] : pairs) {
    for (const auto& [b, b2] : pairs) {
      if (!related(multiply(net, *a, *b), multiply(net, *a2, *b2))) {
        out.compatible = false;
        break;
      }
    }
    if (!out.compatible) break;
  }

  if (spec.kind == IdealKind::principal) {
    bool ok = true;
    for (const auto& a : trace)
      for (const auto& b : trace)
        if (!related(star(net, a), star(net, b))) ok = false;
    out.unary_compatible = ok;
  }
  return out;
}

}  // namespace netsemi
