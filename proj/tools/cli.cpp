#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "kmboard/canonical.hpp"
#include "kmboard/counting.hpp"
#include "kmboard/domains.hpp"
#include "kmboard/duhamel.hpp"
#include "kmboard/errors.hpp"
#include "kmboard/moves.hpp"
#include "kmboard/pairs.hpp"
#include "kmboard/symexpr.hpp"
#include "kmboard/trees.hpp"
#include "kmboard/verify.hpp"

namespace kmboard::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct Options {
  int k = 0;
  std::string mu, sgn, pair;
  bool is_signed = false;
  std::string format;
  std::string out;
  std::uint64_t seed = 1;
  std::uint64_t cap = 0;
  std::string kind = "td";
  std::string form = "tamed";
  std::string moves = "km";
  std::string check = "all";
  bool marked = false;
  bool integrated = false;
  bool members = false;
  int threads = 1;
};

json pair_json(const CollapsingPair& p) {
  json sgn = json::array();
  for (Sign s : p.sgn) sgn.push_back(std::string(1, sign_char(s)));
  return json{{"k", p.k}, {"mu", p.mu}, {"sgn", sgn}};
}

CollapsingPair pair_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError("--pair", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("mu"))
    throw UsageError("--pair", "expected {\"k\": int, \"mu\": [int...], \"sgn\": [\"+\"|\"-\"...]}");
  try {
    int k = j.at("k").get<int>();
    std::vector<int> mu = j.at("mu").get<std::vector<int>>();
    std::vector<Sign> sgn(mu.size(), Sign::Plus);
    if (j.contains("sgn")) {
      std::string joined;
      for (const auto& s : j.at("sgn")) joined += (joined.empty() ? "" : ",") + s.get<std::string>();
      sgn = parse_sign_list(joined);
    }
    return validate_pair(k, std::move(mu), std::move(sgn));
  } catch (const json::exception& e) {
    throw UsageError("--pair", e.what());
  } catch (const Error& e) {
    throw UsageError("--pair", e.what());
  }
}

CollapsingPair read_pair(const Options& o) {
  if (!o.pair.empty()) return pair_from_json(o.pair);
  if (o.mu.empty()) throw UsageError("--mu", "required (or give --pair)");
  std::vector<int> mu;
  try {
    mu = parse_int_list(o.mu);
  } catch (const Error& e) {
    throw UsageError("--mu", e.what());
  }
  std::vector<Sign> sgn(mu.size(), Sign::Plus);
  if (!o.sgn.empty()) {
    try {
      sgn = parse_sign_list(o.sgn);
    } catch (const Error& e) {
      throw UsageError("--sgn", e.what());
    }
    if (sgn.size() != mu.size())
      throw UsageError("--sgn", "has " + std::to_string(sgn.size()) + " entries, --mu has " + std::to_string(mu.size()));
  }
  const int k = static_cast<int>(mu.size());
  if (o.k != 0 && o.k != k) throw UsageError("--k", "is " + std::to_string(o.k) + " but --mu has " + std::to_string(k) + " entries");
  try {
    return validate_pair(k, std::move(mu), std::move(sgn));
  } catch (const ConstraintViolation& e) {
    int j = e.index();
    throw UsageError("--mu", "entry mu(" + std::to_string(2 * j) + ") must satisfy " +
                                 (j == 1 ? std::string("mu(2) = 1") : "1 <= mu(2j) < 2j"));
  } catch (const Error& e) {
    throw UsageError("--mu", e.what());
  }
}

void require_k(const Options& o, int cap) {
  if (o.k < 1) throw UsageError("--k", "must be >= 1");
  if (o.k > cap) throw UsageError("--k", "exhaustive runs are capped at k=" + std::to_string(cap));
}

std::string format_or(const Options& o, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = o.format.empty() ? fallback : o.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("--format", "'" + f + "' is not supported by this command");
}

json moves_json(const std::vector<int>& moves) {
  json a = json::array();
  for (int j : moves) a.push_back({2 * j, 2 * j + 2});
  return a;
}

const char* slot_name(int s) { return s == kLeft ? "L" : s == kMiddle ? "M" : "R"; }

std::string child_label(const SignedTree& t, int c) { return c ? std::to_string(t.label(c)) : "."; }

// ---- commands

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_k(o, kEnumerationCap);
  std::string f = format_or(o, "json", {"json", "text"});
  std::uint64_t n = 0;
  PairStream(o.k, o.is_signed).for_each([&](const CollapsingPair& p) {
    if (o.cap && n >= o.cap) return;
    ++n;
    if (f == "json") out << pair_json(p).dump() << '\n';
    else out << to_string(p) << '\n';
  });
  return kExitOk;
}

int cmd_tree(const Options& o, std::ostream& out) {
  CollapsingPair p = read_pair(o);
  std::string f = format_or(o, "text", {"text", "json", "dot"});
  SignedTree t = tree_from_pair(p);
  if (f == "dot") {
    out << tree_to_dot(t);
  } else if (f == "json") {
    json nodes = json::array();
    for (int j = 1; j <= p.k; ++j) {
      json ch = json::array();
      for (int c : t.child[j]) ch.push_back(c ? t.label(c) : 0);
      nodes.push_back({{"label", 2 * j},
                       {"parent", t.label(t.parent[j])},
                       {"slot", slot_name(t.slot[j])},
                       {"sign", std::string(1, sign_char(t.sign[j]))},
                       {"children", ch}});
    }
    out << json{{"pair", pair_json(p)}, {"skeleton", skeleton_key(p, true)}, {"nodes", nodes}}.dump() << '\n';
  } else {
    out << "pair: " << to_string(p) << '\n' << "skeleton: " << skeleton_key(p, true) << '\n';
    for (int j = 1; j <= p.k; ++j)
      out << 2 * j << sign_char(t.sign[j]) << ": L=" << child_label(t, t.child[j][kLeft])
          << " M=" << child_label(t, t.child[j][kMiddle]) << " R=" << child_label(t, t.child[j][kRight]) << '\n';
  }
  return kExitOk;
}

std::string dchild_text(const DChild& c) {
  if (c.is_leaf()) return "F_{" + std::to_string(c.f_index) + "," + sign_char(c.f_sign) + "}";
  return "D^(" + std::to_string(2 * c.node) + ")";
}

int cmd_dtree(const Options& o, std::ostream& out) {
  CollapsingPair p = read_pair(o);
  std::string f = format_or(o, "text", {"text", "json", "dot"});
  DTree t = build_dtree(p);
  if (o.marked) t = mark_dtree(t);
  if (f == "dot") {
    out << dtree_to_dot(t);
  } else if (f == "json") {
    out << dtree_to_json(t) << '\n';
  } else {
    out << "D^(0): " << dchild_text(t.root[0]) << ' ' << dchild_text(t.root[1]) << '\n';
    for (int j = 1; j <= p.k; ++j) {
      out << "D^(" << 2 * j << ")" << sign_char(t.sign[j]) << ':';
      for (const auto& c : t.child[j]) out << ' ' << dchild_text(c);
      if (t.marked && (t.mark_phi[j] || t.mark_r[j]))
        out << "  [" << (t.mark_phi[j] ? "phi" : "") << (t.mark_phi[j] && t.mark_r[j] ? "," : "")
            << (t.mark_r[j] ? "R" : "") << ']';
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_canon(const Options& o, std::ostream& out) {
  CollapsingPair p = read_pair(o);
  format_or(o, "json", {"json"});
  json j{{"form", o.form}, {"input", pair_json(p)}};
  if (o.form == "echelon") {
    Reduction r = to_echelon(p);
    j["pair"] = pair_json(r.pair);
    j["moves"] = moves_json(r.moves);
  } else if (o.form == "tamed") {
    Reduction r = to_tamed(p);
    j["pair"] = pair_json(r.pair);
    j["moves"] = moves_json(r.moves);
  } else {
    Reduction r = to_tamed(p);
    ReferenceResult rr = to_reference(r.pair);
    j["tamed"] = pair_json(r.pair);
    j["moves"] = moves_json(r.moves);
    j["pair"] = pair_json(rr.reference);
    j["rho"] = rr.rho.image;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

struct ClassRecord {
  CollapsingPair representative;
  std::uint64_t size = 0;
  std::vector<CollapsingPair> members;
};

int cmd_classify(const Options& o, std::ostream& out) {
  require_k(o, kEnumerationCap);
  format_or(o, "json", {"json"});
  std::map<std::string, ClassRecord> classes;
  if (o.moves == "km" || o.moves == "signed-km") {
    const bool is_signed = o.moves == "signed-km";
    PairStream(o.k, is_signed).for_each([&](const CollapsingPair& p) {
      ClassRecord& c = classes[skeleton_key(p, is_signed)];
      ++c.size;
      if (is_signed ? is_tamed(p) : is_upper_echelon(p)) c.representative = p;
      if (o.members) c.members.push_back(p);
    });
  } else {
    PairStream(o.k, true).for_each([&](const CollapsingPair& p) {
      if (!is_reference(p)) return;
      ClassRecord& c = classes[to_string(p)];
      c.representative = p;
      for (const auto& rho : allowable_permutations(p)) {
        ++c.size;
        if (o.members) c.members.push_back(apply_wild(p, rho));
      }
      std::sort(c.members.begin(), c.members.end());
    });
  }
  for (const auto& [key, c] : classes) {
    json j{{"canonical_key", key}, {"size", c.size}, {"representative", pair_json(c.representative)}};
    if (o.members) {
      json m = json::array();
      for (const auto& p : c.members) m.push_back(pair_json(p));
      j["members"] = m;
    }
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_domain(const Options& o, std::ostream& out) {
  CollapsingPair p = read_pair(o);
  std::string f = format_or(o, "text", {"text", "json"});
  TimePoset d;
  if (o.kind == "td") {
    d = td_domain(p);
  } else if (o.kind == "tc") {
    d = tc_domain(p);
  } else {
    if (!is_reference(p)) throw UsageError("--kind", "tr needs a reference pair, " + to_string(p) + " is not one");
    d = tr_domain(p);
  }
  if (f == "text") {
    out << relations_text(d);
  } else {
    json j{{"kind", o.kind}, {"relations", json::parse(relations_json(d))}};
    if (d.variables() <= 26) j["extensions"] = count_linear_extensions(d);
    out << j.dump() << '\n';
  }
  return kExitOk;
}

json bound_json(const IntegralBound& b) { return json{{"node", 2 * b.node}, {"lower", b.lower}, {"upper", b.upper}}; }

int cmd_expand(const Options& o, std::ostream& out) {
  CollapsingPair p = read_pair(o);
  std::string f = format_or(o, "text", {"text", "json"});
  if (o.integrated) {
    IntegratedExpansion ie = integrated_expand(p);
    if (f == "text") {
      out << render_integrated(ie, p) << '\n';
    } else {
      json bounds = json::array();
      for (const auto& b : ie.nodes) bounds.push_back(bound_json(b));
      out << json{{"outer", bound_json(ie.outer)},
                  {"bounds", bounds},
                  {"x1", json::parse(render_json(ie.integrand.x1))},
                  {"x1_prime", json::parse(render_json(ie.integrand.x1_prime))}}
                 .dump()
          << '\n';
    }
    return kExitOk;
  }
  Expansion e = expand(p);
  if (f == "text") {
    out << "x1 = " << render_text(e.x1) << '\n' << "x1' = " << render_text(e.x1_prime) << '\n';
  } else {
    out << json{{"x1", json::parse(render_json(e.x1))}, {"x1_prime", json::parse(render_json(e.x1_prime))}}.dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_schedule(const Options& o, std::ostream& out) {
  CollapsingPair p = read_pair(o);
  std::string f = format_or(o, "text", {"text", "json"});
  EstimateSchedule s = estimate_schedule(mark_dtree(build_dtree(p)));
  if (f == "text") {
    for (std::size_t i = 0; i < s.cases.size(); ++i)
      out << "coupling " << 2 * (i + 1) << ": " << case_tag(s.cases[i]) << " -> " << case_estimate(s.cases[i]) << '\n';
    out << "small factors: " << s.small_factor_power << '\n'
        << "H norm power: " << s.h_norm_power << '\n'
        << "constant power: " << s.constant_power << '\n';
  } else {
    json cases = json::array();
    for (std::size_t i = 0; i < s.cases.size(); ++i)
      cases.push_back({{"coupling", 2 * (i + 1)}, {"case", case_tag(s.cases[i])}, {"estimate", case_estimate(s.cases[i])}});
    out << json{{"k", s.k},
                {"cases", cases},
                {"small_factor_power", s.small_factor_power},
                {"h_norm_power", s.h_norm_power},
                {"constant_power", s.constant_power}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.k < 1) throw UsageError("--k", "must be >= 1");
  std::string f = format_or(o, "text", {"text", "json"});
  std::vector<std::string> names = o.check == "all" ? check_names() : std::vector<std::string>{o.check};
  std::vector<CheckResult> results;
  for (const auto& n : names) {
    try {
      results.push_back(run_check(n, o.k, o.seed));
    } catch (const CapExceeded& e) {
      throw UsageError("--k", e.what());
    }
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok;
  if (f == "text") {
    for (const auto& r : results) {
      if (names.size() > 1) out << "[" << r.name << "]\n";
      for (const auto& l : r.lines) out << l << '\n';
    }
  } else {
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name}, {"ok", r.ok}, {"lines", r.lines}, {"data", json::parse(r.json)}});
    out << json{{"k", o.k}, {"seed", o.seed}, {"ok", ok}, {"checks", checks}}.dump() << '\n';
  }
  return ok ? kExitOk : kExitVerify;
}

void add_pair_flags(CLI::App* c, Options& o) {
  c->add_option("--mu", o.mu, "collapsing map mu(2),...,mu(2k), comma separated");
  c->add_option("--sgn", o.sgn, "signs sgn(2),...,sgn(2k); default all +");
  c->add_option("--pair", o.pair, "pair as JSON {\"k\",\"mu\",\"sgn\"}");
  c->add_option("--k", o.k, "coupling order (checked against --mu)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Board-game combinatorics of quintic collapsing maps", "kmboard"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--out", o.out, "output file; '-' or 'jsonl' for standard output");
  app.add_option("--threads", o.threads, "worker threads (runs are sequential)")->check(CLI::PositiveNumber);
  app.fallthrough();

  auto* enumerate = app.add_subcommand("enumerate", "list every pair of order k");
  enumerate->add_option("--k", o.k, "coupling order")->required();
  enumerate->add_flag("--signed", o.is_signed, "include the sign arrays");
  enumerate->add_option("--cap", o.cap, "stop after this many pairs");

  auto* tree = app.add_subcommand("tree", "signed ternary tree of a pair");
  add_pair_flags(tree, o);
  auto* dtree = app.add_subcommand("dtree", "Duhamel tree of a pair");
  add_pair_flags(dtree, o);
  dtree->add_flag("--marked", o.marked, "apply the marking algorithm");

  auto* canon = app.add_subcommand("canon", "canonical form with its witness");
  add_pair_flags(canon, o);
  canon->add_option("--form", o.form, "echelon, tamed or reference")
      ->check(CLI::IsMember({"echelon", "tamed", "reference"}));

  auto* classify = app.add_subcommand("classify", "equivalence classes of order k, one JSON line each");
  classify->add_option("--k", o.k, "coupling order")->required();
  classify->add_option("--moves", o.moves, "km, signed-km or wild")->check(CLI::IsMember({"km", "signed-km", "wild"}));
  classify->add_flag("--members", o.members, "list every member");

  auto* domain = app.add_subcommand("domain", "time integration domain");
  add_pair_flags(domain, o);
  domain->add_option("--kind", o.kind, "td, tc or tr")->check(CLI::IsMember({"td", "tc", "tr"}));

  auto* expand_cmd = app.add_subcommand("expand", "symbolic Duhamel expansion");
  add_pair_flags(expand_cmd, o);
  expand_cmd->add_flag("--integrated", o.integrated, "show the time integrals");

  auto* schedule = app.add_subcommand("schedule", "estimate schedule of the marked D-tree");
  add_pair_flags(schedule, o);

  auto* verify = app.add_subcommand("verify", "check counting and structure invariants");
  verify->add_option("--k", o.k, "coupling order")->required();
  std::string check_help = "all";
  for (const auto& n : check_names()) check_help += "|" + n;
  std::vector<std::string> check_values{"all"};
  for (const auto& n : check_names()) check_values.push_back(n);
  verify->add_option("--check", o.check, check_help)->check(CLI::IsMember(check_values));
  verify->add_option("--seed", o.seed, "seed for randomized suites");

  for (auto* c : app.get_subcommands({})) {
    c->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitOk;
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buf;
  int code = kExitOk;
  try {
    if (*enumerate) code = cmd_enumerate(o, buf);
    else if (*tree) code = cmd_tree(o, buf);
    else if (*dtree) code = cmd_dtree(o, buf);
    else if (*canon) code = cmd_canon(o, buf);
    else if (*classify) code = cmd_classify(o, buf);
    else if (*domain) code = cmd_domain(o, buf);
    else if (*expand_cmd) code = cmd_expand(o, buf);
    else if (*schedule) code = cmd_schedule(o, buf);
    else if (*verify) code = cmd_verify(o, buf);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out.empty() || o.out == "-" || o.out == "jsonl") {
    out << buf.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "usage error: --out: cannot open '" << o.out << "'\n";
      return kExitUsage;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace kmboard::cli
