#include <doctest.h>

#include <set>

#include "netsemi/ideals.hpp"
#include "netsemi/netgen.hpp"

using namespace netsemi;

namespace {

QElement el(const Network& net, const std::string& s) {
  return parse_element(net, s);
}

std::set<QElement> trace_set(const Network& net, const IdealSpec& spec,
                             const std::vector<QElement>& ball) {
  auto t = ideal_trace(net, spec, ball);
  return std::set<QElement>(t.begin(), t.end());
}

}  // namespace

TEST_CASE("non-linear ideal membership") {
  Network net = example6_network();
  auto spec = nonlinear_ideal(net, Subsemigroup::q);
  CHECK(ideal_contains(net, spec, el(net, "{v1} t1 | t1")));
  CHECK_FALSE(ideal_contains(net, spec, el(net, "t1 | t1")));
  CHECK(ideal_contains(net, spec, QElement::zero_element()));
  CHECK(ideal_contains(net, spec, el(net, "{v1} {v1,v2} | {v1,v2}")));
  CHECK_FALSE(ideal_contains(net, spec, el(net, "{v3} | {v3}")));
}

TEST_CASE("non-linear ideal collapses to zero on graphs") {
  Network g2 = two_vertex_graph();
  auto spec = nonlinear_ideal(g2, Subsemigroup::q);
  auto ball = enumerate_ball(g2, 4, Subsemigroup::q);
  auto trace = ideal_trace(g2, spec, ball);
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].zero);

  // the quotient by {0} is identity-like: every class a singleton
  auto classes = rees_quotient(g2, spec, ball);
  CHECK(classes.compatible);
  CHECK(classes.classes.size() == ball.size());
  for (const auto& c : classes.classes) CHECK(c.size() == 1);
}

TEST_CASE("non-linear ideal verifies and separates idempotents") {
  Network net = example6_network();
  for (auto carrier : {Subsemigroup::q, Subsemigroup::s}) {
    auto spec = nonlinear_ideal(net, carrier);
    auto ball = enumerate_ball(net, 4, carrier);
    auto report = verify_ideal(net, spec, ball);
    CHECK(report.pass);
    auto classes = rees_quotient(net, spec, ball);
    CHECK(classes.compatible);
    CHECK_FALSE(classes.unary_compatible.has_value());
    // the merged class plus singletons partition the ball
    std::size_t total = 0;
    for (const auto& c : classes.classes) total += c.size();
    CHECK(total == ball.size());
    CHECK(classes.classes.front().size() ==
          trace_set(net, spec, ball).size());
  }
}

TEST_CASE("principal ideal hypotheses") {
  Network net = example6_network();
  for (auto carrier : {Subsemigroup::q, Subsemigroup::s, Subsemigroup::r}) {
    auto spec = principal_star_ideal(net, "t2", carrier);
    CHECK(spec.hypothesis.out_index_zero);
    CHECK(spec.hypothesis.no_covering_superset);
    CHECK(spec.hypothesis.range_is_singleton);
  }
  // o(r(t1)) = o({v3}) = 1
  CHECK_THROWS_WITH_AS(principal_star_ideal(net, "t1", Subsemigroup::q),
                       doctest::Contains("out-index"), Error);

  // carrier restrictions need a second relation with a different range
  NetworkDescription desc;
  desc.vertices = {"a", "b"};
  desc.relations.push_back({"e", {"a"}, {"b"}});
  Network single = Network::validate(desc);
  CHECK_NOTHROW(principal_star_ideal(single, "e", Subsemigroup::q));
  CHECK_THROWS_AS(principal_star_ideal(single, "e", Subsemigroup::r), Error);

  // a non-singleton member of T0 covering the range blocks the hypothesis
  NetworkDescription cov;
  cov.vertices = {"a", "b", "c"};
  cov.relations.push_back({"e", {"c"}, {"a", "b"}});
  Network covering = Network::validate(cov);
  CHECK_THROWS_WITH_AS(principal_star_ideal(covering, "e", Subsemigroup::q),
                       doctest::Contains("non-singleton"), Error);
}

TEST_CASE("principal ideal traces of the worked example") {
  Network net = example6_network();

  auto spec_q = principal_star_ideal(net, "t2", Subsemigroup::q);
  auto ball_q = enumerate_ball(net, 4, Subsemigroup::q);
  std::set<QElement> expected_q = {
      QElement::zero_element(),
      el(net, "{v4} | {v4}"),
      el(net, "t2 | {v4}"),
      el(net, "t1 t2 | {v4}"),
      el(net, "{v1} t1 t2 | {v4}"),
      el(net, "{v2} t1 t2 | {v4}"),
      el(net, "{v4} | t2"),
      el(net, "{v4} | t1 t2"),
      el(net, "t2 | t2"),
      el(net, "t2 | t1 t2"),
      el(net, "t1 t2 | t2"),
      el(net, "t1 t2 | t1 t2"),
      el(net, "{v1} t1 t2 | t2"),
      el(net, "{v2} t1 t2 | t2")};
  CHECK(trace_set(net, spec_q, ball_q) == expected_q);

  auto spec_s = principal_star_ideal(net, "t2", Subsemigroup::s);
  auto ball_s = enumerate_ball(net, 4, Subsemigroup::s);
  std::set<QElement> expected_s = {
      QElement::zero_element(),    el(net, "{v4} | t2"),
      el(net, "{v4} | t1 t2"),     el(net, "t2 | t2"),
      el(net, "t2 | t1 t2"),       el(net, "t1 t2 | t2"),
      el(net, "t1 t2 | t1 t2"),    el(net, "{v1} t1 t2 | t2"),
      el(net, "{v2} t1 t2 | t2")};
  CHECK(trace_set(net, spec_s, ball_s) == expected_s);

  auto spec_r = principal_star_ideal(net, "t2", Subsemigroup::r);
  auto ball_r = enumerate_ball(net, 4, Subsemigroup::r);
  std::set<QElement> expected_r = {
      QElement::zero_element(), el(net, "t2 | t2"),
      el(net, "t2 | t1 t2"),    el(net, "t1 t2 | t2"),
      el(net, "t1 t2 | t1 t2")};
  CHECK(trace_set(net, spec_r, ball_r) == expected_r);
}

TEST_CASE("principal ideals verify on every carrier") {
  Network net = example6_network();
  for (auto carrier : {Subsemigroup::q, Subsemigroup::s, Subsemigroup::r}) {
    auto spec = principal_star_ideal(net, "t2", carrier);
    auto ball = enumerate_ball(net, 4, carrier);
    auto report = verify_ideal(net, spec, ball);
    CHECK(report.pass);
    for (const auto& check : report.checks) CHECK(check.pass);

    auto classes = rees_quotient(net, spec, ball);
    CHECK(classes.compatible);
    REQUIRE(classes.unary_compatible.has_value());
    CHECK(*classes.unary_compatible);
  }
}

TEST_CASE("star closure holds for principal traces") {
  Network net = example6_network();
  auto spec = principal_star_ideal(net, "t2", Subsemigroup::q);
  auto ball = enumerate_ball(net, 4, Subsemigroup::q);
  for (const auto& a : ideal_trace(net, spec, ball))
    CHECK(ideal_contains(net, spec, star(net, a)));
}

TEST_CASE("a fake all-covering ideal fails properness") {
  Network net = example6_network();
  // carrier q, non-linear kind, but force the trace to cover everything by
  // checking against a one-element ball
  auto spec = nonlinear_ideal(net, Subsemigroup::q);
  std::vector<QElement> tiny = {QElement::zero_element()};
  auto report = verify_ideal(net, spec, tiny);
  bool properness_failed = false;
  for (const auto& check : report.checks)
    if (check.name == "properness" && !check.pass) properness_failed = true;
  CHECK(properness_failed);
  CHECK_THROWS_AS(rees_quotient(net, spec, tiny), Error);
}

TEST_CASE("traces grow consistently with the ball radius") {
  Network net = example6_network();
  auto spec = principal_star_ideal(net, "t2", Subsemigroup::q);
  auto ball3 = enumerate_ball(net, 3, Subsemigroup::q);
  auto ball4 = enumerate_ball(net, 4, Subsemigroup::q);
  auto t3 = trace_set(net, spec, ball3);
  auto t4 = trace_set(net, spec, ball4);
  std::set<QElement> t4_restricted;
  for (const auto& q : t4)
    if (q.ball_size() <= 3) t4_restricted.insert(q);
  CHECK(t3 == t4_restricted);
}

TEST_CASE("non-linear ideal gives a congruence strictly between the bounds") {
  for (std::uint64_t seed = 500; seed < 505; ++seed) {
    Network net = random_network({6, 4, false}, seed);
    bool has_wide_source = false;
    for (const auto& r : net.relations())
      if (r.source.size() > 1) has_wide_source = true;
    if (!has_wide_source) continue;
    auto spec = nonlinear_ideal(net, Subsemigroup::q);
    auto ball = enumerate_ball(net, 4, Subsemigroup::q);
    auto trace = ideal_trace(net, spec, ball);
    CHECK(trace.size() > 1);            // not the identity congruence
    CHECK(trace.size() < ball.size());  // not the universal one
    CHECK(verify_ideal(net, spec, ball).pass);
  }
}
