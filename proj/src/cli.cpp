#include "netsemi/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "netsemi/ideals.hpp"
#include "netsemi/netgen.hpp"
#include "netsemi/relations.hpp"

namespace netsemi {

namespace {

using nlohmann::json;

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::parse_error, "cannot open network file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return Network::validate(parse_network_text(buf.str()));
}

Subsemigroup parse_sub(const std::string& s) {
  if (s == "Q" || s == "q") return Subsemigroup::q;
  if (s == "S" || s == "s") return Subsemigroup::s;
  if (s == "R" || s == "r") return Subsemigroup::r;
  throw CLI::ValidationError("expected Q, S or R, got " + s);
}

const char* sub_name(Subsemigroup s) {
  switch (s) {
    case Subsemigroup::q: return "Q";
    case Subsemigroup::s: return "S";
    case Subsemigroup::r: return "R";
  }
  return "?";
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

void emit(std::ostream& out, bool as_json, const std::string& command,
          const std::string& network, const json& result,
          const json& witnesses, const std::string& text) {
  if (as_json) {
    json doc;
    doc["command"] = command;
    doc["network"] = network;
    doc["result"] = result;
    doc["witnesses"] = witnesses;
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

struct Invocation {
  std::string network_file;
  bool as_json = false;
  int ball = 4;
};

int cmd_nf(const Invocation& inv, const std::vector<std::string>& tokens,
           bool trace, std::ostream& out) {
  Network net = load_network(inv.network_file);
  Word w = parse_word(net, join(tokens));
  auto res = normal_form(net, w);
  std::ostringstream text;
  json jtrace = json::array();
  if (trace) {
    for (std::size_t i = 0; i < res.trace.steps.size(); ++i) {
      const auto& s = res.trace.steps[i];
      text << i + 1 << ". pos=" << s.pos << " rule=" << rule_name(s.tag)
           << " : " << format_word(net, s.result) << "\n";
      jtrace.push_back({{"pos", s.pos},
                        {"rule", rule_name(s.tag)},
                        {"word", format_word(net, s.result)}});
    }
  }
  text << format_word(net, res.word) << "\n";
  json result = {{"input", format_word(net, w)},
                 {"normal_form", format_word(net, res.word)},
                 {"trace", jtrace}};
  emit(out, inv.as_json, "nf", inv.network_file, result, json::array(),
       text.str());
  return 0;
}

int cmd_mul(const Invocation& inv, const std::string& sa,
            const std::string& sb, std::ostream& out) {
  Network net = load_network(inv.network_file);
  QElement a = parse_element(net, sa);
  QElement b = parse_element(net, sb);
  QElement p = multiply(net, a, b);
  bool agrees = p == multiply_oracle(net, a, b);
  json result = {{"a", format_element(net, a)},
                 {"b", format_element(net, b)},
                 {"product", format_element(net, p)},
                 {"oracle_agrees", agrees}};
  emit(out, inv.as_json, "mul", inv.network_file, result, json::array(),
       format_element(net, p) + "\n");
  return agrees ? 0 : 1;
}

int cmd_star(const Invocation& inv, const std::string& sa, std::ostream& out) {
  Network net = load_network(inv.network_file);
  QElement a = parse_element(net, sa);
  QElement s = star(net, a);
  json result = {{"a", format_element(net, a)},
                 {"star", format_element(net, s)}};
  emit(out, inv.as_json, "star", inv.network_file, result, json::array(),
       format_element(net, s) + "\n");
  return 0;
}

int cmd_props(const Invocation& inv, const std::string& sa,
              std::ostream& out) {
  Network net = load_network(inv.network_file);
  QElement a = parse_element(net, sa);
  auto inv_elem = inverse_of(net, a);
  std::ostringstream text;
  text << "element: " << format_element(net, a) << "\n"
       << "idempotent: " << (is_idempotent(net, a) ? "yes" : "no") << "\n"
       << "regular: " << (is_regular(net, a) ? "yes" : "no") << "\n"
       << "in_S: " << (in_subsemigroup(net, a, Subsemigroup::s) ? "yes" : "no")
       << "\n"
       << "in_R: " << (in_subsemigroup(net, a, Subsemigroup::r) ? "yes" : "no")
       << "\n"
       << "star: " << format_element(net, star(net, a)) << "\n"
       << "inverse: " << (inv_elem ? format_element(net, *inv_elem) : "none")
       << "\n";
  json result = {{"element", format_element(net, a)},
                 {"idempotent", is_idempotent(net, a)},
                 {"regular", is_regular(net, a)},
                 {"in_S", in_subsemigroup(net, a, Subsemigroup::s)},
                 {"in_R", in_subsemigroup(net, a, Subsemigroup::r)},
                 {"star", format_element(net, star(net, a))},
                 {"inverse", inv_elem ? json(format_element(net, *inv_elem))
                                      : json(nullptr)}};
  emit(out, inv.as_json, "props", inv.network_file, result, json::array(),
       text.str());
  return 0;
}

int cmd_enum(const Invocation& inv, Subsemigroup which, std::ostream& out) {
  Network net = load_network(inv.network_file);
  auto ball = enumerate_ball(net, inv.ball, which);
  std::ostringstream text;
  json elems = json::array();
  for (const auto& q : ball) {
    text << format_element(net, q) << "\n";
    elems.push_back(format_element(net, q));
  }
  json result = {{"ball", inv.ball},
                 {"sub", sub_name(which)},
                 {"count", ball.size()},
                 {"elements", elems}};
  emit(out, inv.as_json, "enum", inv.network_file, result, json::array(),
       text.str());
  return 0;
}

int cmd_order(const Invocation& inv, std::ostream& out) {
  Network net = load_network(inv.network_file);
  auto ball = enumerate_ball(net, inv.ball, Subsemigroup::q);
  auto report = classify_maximal(net, ball);
  std::ostringstream text;
  json jmax_eq = json::array(), jmax_e = json::array(),
       jhasse = json::array();
  text << "maximal idempotents:\n";
  for (const auto& q : report.maximal_in_eq) {
    text << "  " << format_element(net, q) << "\n";
    jmax_eq.push_back(format_element(net, q));
  }
  text << "maximal after removing subset idempotents:\n";
  for (const auto& q : report.maximal_in_e) {
    text << "  " << format_element(net, q) << "\n";
    jmax_e.push_back(format_element(net, q));
  }
  text << "covering pairs:\n";
  for (const auto& [e, f] : report.hasse_pairs) {
    text << "  " << format_element(net, e) << "  <  "
         << format_element(net, f) << "\n";
    jhasse.push_back({format_element(net, e), format_element(net, f)});
  }
  json result = {{"ball", inv.ball},
                 {"maximal_in_EQ", jmax_eq},
                 {"maximal_in_E", jmax_e},
                 {"hasse_pairs", jhasse}};
  emit(out, inv.as_json, "order", inv.network_file, result, json::array(),
       text.str());
  return 0;
}

int cmd_skeleton(const Invocation& inv, std::ostream& out) {
  Network net = load_network(inv.network_file);
  auto ball = enumerate_ball(net, inv.ball, Subsemigroup::q);
  auto skel = extract_skeleton(net, ball);
  std::ostringstream text;
  json rows = json::array();
  for (const auto& q : skel.t_idempotents) {
    text << format_element(net, q) << "  source "
         << format_element(net, skel.source_of.at(q)) << "  range "
         << format_element(net, skel.range_of.at(q)) << "\n";
    rows.push_back({{"idempotent", format_element(net, q)},
                    {"source", format_element(net, skel.source_of.at(q))},
                    {"range", format_element(net, skel.range_of.at(q))}});
  }
  json result = {{"ball", inv.ball}, {"rows", rows}};
  emit(out, inv.as_json, "skeleton", inv.network_file, result, json::array(),
       text.str());
  return 0;
}

int cmd_confluence(const Invocation& inv, std::ostream& out) {
  Network net = load_network(inv.network_file);
  auto report = check_local_confluence(net);
  std::map<int, int> by_case;
  for (const auto& t : report.triples) ++by_case[t.case_no];
  std::ostringstream text;
  text << "triples checked: " << report.triples_checked << "\n";
  for (const auto& [c, n] : by_case)
    text << "  case " << c << ": " << n << "\n";
  json jfail = json::array();
  for (const auto* t : report.failures()) {
    text << "NOT JOINABLE: " << format_word(net, t->word) << " ("
         << rule_name(t->left) << " vs " << rule_name(t->right) << ")\n";
    json nfs = json::array();
    for (const auto& nf : t->normal_forms) nfs.push_back(format_word(net, nf));
    jfail.push_back({{"word", format_word(net, t->word)},
                     {"left", rule_name(t->left)},
                     {"right", rule_name(t->right)},
                     {"normal_forms", nfs}});
  }
  text << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  json jcases = json::object();
  for (const auto& [c, n] : by_case) jcases[std::to_string(c)] = n;
  json result = {{"pass", report.pass},
                 {"triples_checked", report.triples_checked},
                 {"cases", jcases}};
  emit(out, inv.as_json, "confluence", inv.network_file, result, jfail,
       text.str());
  return report.pass ? 0 : 1;
}

int cmd_ideal(const Invocation& inv, const std::string& which,
              Subsemigroup carrier, bool verify, std::ostream& out) {
  Network net = load_network(inv.network_file);
  IdealSpec spec;
  if (which == "nonlinear") {
    spec = nonlinear_ideal(net, carrier);
  } else if (which.rfind("principal:", 0) == 0) {
    spec = principal_star_ideal(net, which.substr(10), carrier);
  } else {
    throw CLI::ValidationError("expected nonlinear or principal:<t>");
  }
  auto ball = enumerate_ball(net, inv.ball, spec.carrier);
  auto trace = ideal_trace(net, spec, ball);

  std::ostringstream text;
  json jtrace = json::array();
  text << "trace on " << sub_name(spec.carrier) << " ball-" << inv.ball
       << " (" << trace.size() << " elements):\n";
  for (const auto& q : trace) {
    text << "  " << format_element(net, q) << "\n";
    jtrace.push_back(format_element(net, q));
  }
  json result = {{"kind", which},
                 {"carrier", sub_name(spec.carrier)},
                 {"ball", inv.ball},
                 {"trace", jtrace}};
  json jchecks = json::array();
  bool pass = true;
  if (verify) {
    auto report = verify_ideal(net, spec, ball);
    pass = report.pass;
    for (const auto& c : report.checks) {
      text << c.name << ": " << (c.pass ? "PASS" : "FAIL");
      if (!c.witness.empty()) text << " (" << c.witness << ")";
      text << "\n";
      jchecks.push_back({{"name", c.name},
                         {"pass", c.pass},
                         {"witness", c.witness}});
    }
    if (report.pass) {
      auto classes = rees_quotient(net, spec, ball);
      text << "quotient classes: " << classes.classes.size()
           << ", compatible: " << (classes.compatible ? "PASS" : "FAIL");
      pass = pass && classes.compatible;
      result["quotient_classes"] = classes.classes.size();
      result["compatible"] = classes.compatible;
      if (classes.unary_compatible) {
        text << ", star compatible: "
             << (*classes.unary_compatible ? "PASS" : "FAIL");
        pass = pass && *classes.unary_compatible;
        result["star_compatible"] = *classes.unary_compatible;
      }
      text << "\n";
    }
    result["verified"] = pass;
  }
  emit(out, inv.as_json, "ideal", inv.network_file, result, jchecks,
       text.str());
  return pass ? 0 : 1;
}

int cmd_iso(const std::string& file_g, const std::string& file_d,
            bool as_json, std::ostream& out) {
  Network g = load_network(file_g);
  Network d = load_network(file_d);
  auto iso = find_isomorphism(g, d);

  bool skel_agree = false;
  {
    Skeleton sg = extract_skeleton(g, enumerate_ball(g, 2, Subsemigroup::q));
    Skeleton sd = extract_skeleton(d, enumerate_ball(d, 2, Subsemigroup::q));
    skel_agree = skeletons_match(sg, sd) == iso.has_value();
  }

  std::ostringstream text;
  json result;
  bool products_ok = false;
  if (iso) {
    text << "vertices:\n";
    for (const auto& [a, b] : iso->vertex_map)
      text << "  " << a << " -> " << b << "\n";
    text << "relations:\n";
    for (const auto& [a, b] : iso->relation_map)
      text << "  " << a << " -> " << b << "\n";

    auto ball_g = enumerate_ball(g, 3, Subsemigroup::q);
    auto ball_d = enumerate_ball(d, 3, Subsemigroup::q);
    std::vector<QElement> mapped;
    for (const auto& q : ball_g) mapped.push_back(map_element(g, d, *iso, q));
    std::sort(mapped.begin(), mapped.end());
    products_ok = mapped == ball_d;
    for (const auto& a : ball_g) {
      for (const auto& b : ball_g) {
        QElement lhs = map_element(g, d, *iso, multiply(g, a, b));
        QElement rhs = multiply(d, map_element(g, d, *iso, a),
                                map_element(g, d, *iso, b));
        if (lhs != rhs) products_ok = false;
      }
    }
    text << "products preserved on ball 3: " << (products_ok ? "PASS" : "FAIL")
         << "\n";
    json jv = json::object(), jr = json::object();
    for (const auto& [a, b] : iso->vertex_map) jv[a] = b;
    for (const auto& [a, b] : iso->relation_map) jr[a] = b;
    result = {{"isomorphic", true},
              {"vertex_map", jv},
              {"relation_map", jr},
              {"products_preserved", products_ok}};
  } else {
    text << "no isomorphism\n";
    result = {{"isomorphic", false}};
  }
  text << "skeleton comparison agrees: " << (skel_agree ? "PASS" : "FAIL")
       << "\n";
  result["skeletons_agree"] = skel_agree;
  emit(out, as_json, "iso", file_g + "," + file_d, result, json::array(),
       text.str());
  if (!iso) return 1;
  return (products_ok && skel_agree) ? 0 : 1;
}

int cmd_example6(bool as_json, std::ostream& out) {
  Network net = example6_network();
  std::ostringstream text;
  json result;

  text << "vertices:";
  for (const auto& v : net.vertices()) text << " " << v;
  text << "\nrelations:";
  for (std::size_t i = 0; i < net.relations().size(); ++i) {
    const auto& r = net.relations()[i];
    text << (i ? " ; " : " ") << r.name << " : " << r.source.str() << " -> "
         << r.range.str();
  }
  text << "\nT0:";
  json jt0 = json::array();
  for (const auto& a : net.t0()) {
    text << " " << a.str();
    jt0.push_back(a.str());
  }
  text << "\n";

  json jrlp = json::array();
  text << "reduced linear paths (length <= 2):";
  for (const auto& w : enumerate_paths(net, 2, PathKind::rlp)) {
    text << "  " << format_word(net, w);
    jrlp.push_back(format_word(net, w));
  }
  text << "\n";

  auto rball = enumerate_ball(net, 4, Subsemigroup::r);
  text << "R ball-4 (" << rball.size() << " elements):\n";
  json jr = json::array();
  for (const auto& q : rball) {
    text << "  " << format_element(net, q) << "\n";
    jr.push_back(format_element(net, q));
  }

  json jideals = json::object();
  for (auto carrier : {Subsemigroup::q, Subsemigroup::s, Subsemigroup::r}) {
    auto spec = principal_star_ideal(net, "t2", carrier);
    auto ball = enumerate_ball(net, 4, carrier);
    auto trace = ideal_trace(net, spec, ball);
    text << "principal ideal at t2, carrier " << sub_name(carrier) << " ("
         << trace.size() << " elements):\n";
    json jt = json::array();
    for (const auto& q : trace) {
      text << "  " << format_element(net, q) << "\n";
      jt.push_back(format_element(net, q));
    }
    jideals[sub_name(carrier)] = jt;
  }

  auto qball = enumerate_ball(net, 4, Subsemigroup::q);
  auto sball = enumerate_ball(net, 4, Subsemigroup::s);
  auto contains = [](const std::vector<QElement>& big,
                     const std::vector<QElement>& small) {
    for (const auto& q : small)
      if (!std::binary_search(big.begin(), big.end(), q)) return false;
    return true;
  };
  bool r_in_s = contains(sball, rball) && rball.size() < sball.size();
  bool s_in_q = contains(qball, sball) && sball.size() < qball.size();
  QElement s_not_r, q_not_s;
  for (const auto& q : sball)
    if (!std::binary_search(rball.begin(), rball.end(), q)) {
      s_not_r = q;
      break;
    }
  for (const auto& q : qball)
    if (!std::binary_search(sball.begin(), sball.end(), q)) {
      q_not_s = q;
      break;
    }
  text << "strict inclusions on ball-4: R in S: "
       << (r_in_s ? "PASS" : "FAIL") << ", S in Q: "
       << (s_in_q ? "PASS" : "FAIL") << "\n";
  text << "  in S not R: " << format_element(net, s_not_r) << "\n";
  text << "  in Q not S: " << format_element(net, q_not_s) << "\n";

  result = {{"t0", jt0},
            {"rlp_length_2", jrlp},
            {"r_ball", jr},
            {"principal_ideal_t2", jideals},
            {"strict_inclusions", r_in_s && s_in_q},
            {"witness_in_s_not_r", format_element(net, s_not_r)},
            {"witness_in_q_not_s", format_element(net, q_not_s)}};
  emit(out, as_json, "example6", "builtin", result, json::array(),
       text.str());
  return (r_in_s && s_in_q) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"network path-quotient semigroup toolkit"};
  app.require_subcommand(1);

  Invocation inv;
  bool trace = false, verify = false;
  std::string sub = "Q", carrier = "Q", which_ideal;
  std::vector<std::string> word_tokens;
  std::string elem_a, elem_b, file_g, file_d;

  auto add_common = [&](CLI::App* cmd, bool needs_network = true) {
    if (needs_network)
      cmd->add_option("--network", inv.network_file, "network file")
          ->required();
    cmd->add_flag("--json", inv.as_json, "machine-readable report");
  };

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  add_common(nf);
  nf->add_flag("--trace", trace, "print the rewriting steps");
  nf->add_option("word", word_tokens, "word tokens")->required();

  auto* mul = app.add_subcommand("mul", "product of two canonical elements");
  add_common(mul);
  mul->add_option("a", elem_a, "left element")->required();
  mul->add_option("b", elem_b, "right element")->required();

  auto* star_cmd = app.add_subcommand("star", "the idempotent of the L*-class");
  add_common(star_cmd);
  star_cmd->add_option("a", elem_a, "element")->required();

  auto* props = app.add_subcommand("props", "properties of an element");
  add_common(props);
  props->add_option("a", elem_a, "element")->required();

  auto* enum_cmd = app.add_subcommand("enum", "enumerate a ball of elements");
  add_common(enum_cmd);
  enum_cmd->add_option("--ball", inv.ball, "size bound (default 4)");
  enum_cmd->add_option("--sub", sub, "Q, S or R (default Q)");

  auto* order = app.add_subcommand("order", "maximal idempotents and order");
  add_common(order);
  order->add_option("--ball", inv.ball, "size bound (default 4)");

  auto* skel = app.add_subcommand("skeleton", "incidence skeleton");
  add_common(skel);
  skel->add_option("--ball", inv.ball, "size bound (default 4)");

  auto* conf = app.add_subcommand("confluence", "local confluence check");
  add_common(conf);

  auto* ideal = app.add_subcommand("ideal", "ideal trace and verification");
  add_common(ideal);
  ideal->add_option("which", which_ideal, "nonlinear or principal:<t>")
      ->required();
  ideal->add_option("--carrier", carrier, "Q, S or R (default Q)");
  ideal->add_option("--ball", inv.ball, "size bound (default 4)");
  ideal->add_flag("--verify", verify, "run the exhaustive ideal checks");

  auto* iso = app.add_subcommand("iso", "network isomorphism search");
  iso->add_flag("--json", inv.as_json, "machine-readable report");
  iso->add_option("g", file_g, "first network file")->required();
  iso->add_option("d", file_d, "second network file")->required();

  auto* ex6 = app.add_subcommand("example6", "reproduce the worked example");
  ex6->add_flag("--json", inv.as_json, "machine-readable report");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);  // CLI11's vector overload takes reversed arguments
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (nf->parsed()) return cmd_nf(inv, word_tokens, trace, out);
    if (mul->parsed()) return cmd_mul(inv, elem_a, elem_b, out);
    if (star_cmd->parsed()) return cmd_star(inv, elem_a, out);
    if (props->parsed()) return cmd_props(inv, elem_a, out);
    if (enum_cmd->parsed()) return cmd_enum(inv, parse_sub(sub), out);
    if (order->parsed()) return cmd_order(inv, out);
    if (skel->parsed()) return cmd_skeleton(inv, out);
    if (conf->parsed()) return cmd_confluence(inv, out);
    if (ideal->parsed())
      return cmd_ideal(inv, which_ideal, parse_sub(carrier), verify, out);
    if (iso->parsed()) return cmd_iso(file_g, file_d, inv.as_json, out);
    if (ex6->parsed()) return cmd_example6(inv.as_json, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case Errc::parse_error:
      case Errc::usage_error:
      case Errc::empty_word:
      case Errc::empty_source_or_range:
      case Errc::source_range_overlap:
      case Errc::duplicate_relation_name:
      case Errc::unknown_vertex:
        return 2;
      default:
        return 1;
    }
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace netsemi
