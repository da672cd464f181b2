// lascar: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 negative verdict or property failure, 2 usage, 3 configuration.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lascar/errors.hpp"
#include "lascar/expr.hpp"
#include "lascar/json_io.hpp"
#include "lascar/m2.hpp"
#include "lascar/suite.hpp"
#include "lascar/walk.hpp"

namespace {

using namespace lascar;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kConfig = 3;

struct Globals {
  std::string basis_path;
  std::uint64_t seed = 1;
  int n_max = 3;
  int refine_cap = IrrationalBasis::kDefaultRefinementCap;
  bool json = false;

  std::shared_ptr<IrrationalBasis> basis() const {
    return basis_path.empty() ? IrrationalBasis::standard(refine_cap) : IrrationalBasis::load(basis_path, refine_cap);
  }
};

// "-" reads stdin, an existing path reads the file, anything else is inline text.
std::string slurp(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::error_code ec;
  if (arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return arg;
}

Json read_json(const std::string& arg) {
  try {
    return Json::parse(slurp(arg));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

// Points and translations may be JSON objects or bare expressions.
Json read_json_or_text(const std::string& arg) {
  std::string text = slurp(arg);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '"')) return read_json(text);
  return Json(text);
}

Point read_point(const std::string& arg, const std::shared_ptr<IrrationalBasis>& basis) {
  return point_from_json(read_json_or_text(arg), basis);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json class_json(const H1Element& h) { return h.value.to_string(); }

int cmd_star(const Globals& g, const std::string& expr) {
  StarSet result = eval_star(expr, g.basis());
  if (g.json)
    emit({{"expr", expr}, {"result", to_json(result)}});
  else
    std::cout << result.to_string() << '\n';
  return kOk;
}

int cmd_sd(const Globals& g, const std::string& a_text, const std::string& b_text) {
  auto basis = g.basis();
  Point a = read_point(a_text, basis), b = read_point(b_text, basis);
  StarValue d = sd(a, b);
  if (g.json)
    emit({{"sd", to_json(d)}, {"reverse", to_json(sd(b, a))}, {"lascar", lascar_equivalent(a, b)},
          {"bracket", class_json(bracket(a, b))}});
  else
    std::cout << d.to_string() << '\n';
  return kOk;
}

int cmd_psi(const Globals& g, const std::string& t_text, const std::string& base_text) {
  auto basis = g.basis();
  Json tj = read_json_or_text(t_text);
  Translation t = translation_from_json(tj, basis);
  Point base = base_text.empty() ? Point(RealValue(0)) : read_point(base_text, basis);
  H1Element h = psi(t, base);
  if (g.json)
    emit({{"translation", to_json(t)}, {"base", to_json(base)}, {"class", class_json(h)},
          {"kernel", h.value.is_zero()}});
  else
    std::cout << h.to_string() << '\n';
  return kOk;
}

// Shells are given by a representation {a, b, c, aPrime} or as a 1-chain.
Shell1 read_shell(const std::string& arg, const std::shared_ptr<IrrationalBasis>& basis) {
  Json j = read_json(arg);
  if (j.is_object() && j.contains("a")) return make_shell(representation_from_json(j, basis));
  auto shell = as_shell(chain_from_json(j, basis));
  if (!shell) throw UsageError("input chain is not a 1-shell");
  return *shell;
}

PointContext context_for(const std::shared_ptr<IrrationalBasis>& basis, const Shell1& s) {
  PointContext ctx(basis);
  Representation r = representation_of(s);
  auto v = s.vertices();
  std::array<Point, 7> seen{v[0], v[1], v[2], r.a, r.b, r.c, r.a_prime};
  ctx.reserve(seen);
  return ctx;
}

int cmd_shell_decide(const Globals& g, const std::string& input) {
  auto basis = g.basis();
  Shell1 s = read_shell(input, basis);
  PointContext ctx = context_for(basis, s);
  Representation r = representation_of(s);
  bool bounds = is_boundary(s);
  Json certificate = nullptr;
  if (auto w = witness_boundary(s, ctx)) {
    if (!(boundary(*w) == s.as_chain())) throw std::logic_error("witness failed re-verification");
    certificate = to_json(*w);
  }
  emit({{"result", bounds ? "bounds" : "not-bounding"},
        {"bounds", bounds},
        {"lascar", lascar_equivalent(r.a, r.a_prime)},
        {"class", class_json(shell_class(s))},
        {"holonomy", to_json(shell_holonomy(s))},
        {"representation", to_json(r)},
        {"certificate", certificate}});
  return bounds ? kOk : kNegative;
}

int cmd_shell_witness(const Globals& g, const std::string& input) {
  auto basis = g.basis();
  Shell1 s = read_shell(input, basis);
  PointContext ctx = context_for(basis, s);
  auto w = witness_boundary(s, ctx);
  if (!w) {
    std::cerr << "shell is not a boundary; class " << shell_class(s).to_string() << '\n';
    emit(nullptr);
    return kNegative;
  }
  if (!(boundary(*w) == s.as_chain())) throw std::logic_error("witness failed re-verification");
  emit(to_json(*w));
  return kOk;
}

int cmd_chain_verify(const Globals& g, const std::string& input, const std::string& shell_text) {
  auto basis = g.basis();
  Chain c = chain_from_json(read_json(input), basis);
  require_well_formed(c);
  Chain d = c.dim() > 0 ? boundary(c) : Chain(0);
  bool dd_zero = c.dim() < 2 || boundary(d).empty();
  Json out{{"dim", c.dim()}, {"length", c.length()}, {"boundary", to_json(d)}, {"boundaryOfBoundaryZero", dd_zero}};
  bool ok = dd_zero;
  if (c.dim() == 1) out["isShell"] = is_shell(c);
  if (c.dim() == 2) out["boundaryIsShell"] = is_shell(d);
  if (!shell_text.empty()) {
    bool matches = d == read_shell(shell_text, basis).as_chain();
    out["boundsShell"] = matches;
    ok = ok && matches;
  }
  emit(out);
  return ok ? kOk : kNegative;
}

int cmd_walk_verify(const Globals& g, const std::string& input, const std::string& shell_text) {
  auto basis = g.basis();
  ChainWalk w = walk_from_json(read_json(input), basis);
  Shell1 s = read_shell(shell_text, basis);
  bool ok = verify_chain_walk(w, s.e01, s.e02) && boundary(w.as_chain()) == s.as_chain();
  Json out{{"result", ok ? "valid" : "invalid"}, {"valid", ok}};
  if (ok) {
    WalkRepresentation wr = walk_representation(w);
    std::string defect = walk_representation_defect(wr, s);
    out["representation"] = to_json(wr);
    if (!defect.empty()) {
      out["representationDefect"] = defect;
      ok = false;
    }
  }
  emit(out);
  return ok ? kOk : kNegative;
}

int cmd_walk_search(const Globals& g, const std::string& input) {
  auto basis = g.basis();
  Shell1 s = read_shell(input, basis);
  PointContext ctx = context_for(basis, s);
  auto w = search_walk(s, g.n_max, ctx);
  if (!w) {
    emit({{"result", "not-found"}, {"nMax", g.n_max}, {"bounds", is_boundary(s)}});
    return kNegative;
  }
  if (!verify_chain_walk(*w, s.e01, s.e02) || !(boundary(w->as_chain()) == s.as_chain()))
    throw std::logic_error("walk failed re-verification");
  emit({{"result", "found"},
        {"nMax", g.n_max},
        {"n", (static_cast<int>(w->terms.size()) - 1) / 2},
        {"walk", to_json(*w)},
        {"representation", to_json(walk_representation(*w))}});
  return kOk;
}

int cmd_m2_eval(const Globals& g, const std::vector<std::string>& texts, int k) {
  auto basis = g.basis();
  std::vector<Point> points;
  for (const auto& t : texts) points.push_back(read_point(t, basis));
  Json out{{"points", Json::array()}, {"En", to_string(classify_En(points))}};
  for (const auto& p : points) out["points"].push_back(to_json(p));
  if (points.size() == 3) {
    out["k"] = k;
    out["sPrime"] = s_prime_k(points[0], points[1], points[2], k);
    out["s"] = s_relation(points[0], points[1], points[2]);
  }
  if (points.size() == 2) {
    M2Bracket e = bracket_via_m2(points[0], points[1], k);
    H1Element exact = bracket(points[0], points[1]);
    out["k"] = k;
    out["bracket"] = class_json(exact);
    out["m2Enclosure"] = {{"low", to_string(e.low)}, {"high", to_string(e.high)}, {"exact", e.exact}};
    out["encloses"] = encloses_mod_Z(e, exact.value);
  }
  emit(out);
  bool agree = !out.contains("sPrime") || out["sPrime"] == out["s"];
  if (out.contains("encloses")) agree = agree && out["encloses"].get<bool>();
  return agree ? kOk : kNegative;
}

int cmd_suite(const Globals& g, bool acceptance_only) {
  SuiteConfig cfg;
  cfg.basis = g.basis();
  cfg.seed = g.seed;
  cfg.n_max = g.n_max;
  std::vector<CheckResult> results;
  if (!acceptance_only) results = run_properties(cfg);
  for (auto& r : run_acceptance(cfg)) results.push_back(std::move(r));
  bool ok = true;
  Json report = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (g.json)
      report.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"seconds", r.seconds},
                        {"limitSeconds", r.limit_seconds}, {"samples", r.samples}, {"detail", r.detail}});
    else
      std::cout << r.line() << '\n';
  }
  if (g.json) emit({{"passed", ok}, {"seed", g.seed}, {"results", report}});
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lascar group computations on the circle model"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--basis", g.basis_path, "basis declaration file (JSON)");
  app.add_option("--seed", g.seed, "seed for randomized sampling");
  app.add_option("--nmax", g.n_max, "walk search bound")->check(CLI::Range(0, 8));
  app.add_option("--refine-cap", g.refine_cap, "certificate halvings before giving up")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "machine-readable output where the default is text");

  std::function<int()> run;
  std::string a, b;
  std::vector<std::string> points;
  int k = 3;
  bool acceptance_only = false;

  auto* star = app.add_subcommand("star", "evaluate a star-arithmetic expression");
  star->add_option("expr", a, "expression, e.g. \"1/2+e + 1/3-e\"")->required();
  star->callback([&] { run = [&] { return cmd_star(g, a); }; });

  auto* sdc = app.add_subcommand("sd", "directed S-distance from one point to another");
  sdc->add_option("a", a, "point: angle expression or {angle, iota}")->required();
  sdc->add_option("b", b, "point")->required();
  sdc->callback([&] { run = [&] { return cmd_sd(g, a, b); }; });

  auto* decide = app.add_subcommand("shell-decide", "decide whether a 1-shell bounds, with certificate");
  decide->add_option("shell", a, "representation or 1-chain JSON (inline, file, or -)")->required();
  decide->callback([&] { run = [&] { return cmd_shell_decide(g, a); }; });

  auto* witness = app.add_subcommand("shell-witness", "emit a verified 2-chain whose boundary is the shell");
  witness->add_option("shell", a, "representation or 1-chain JSON")->required();
  witness->callback([&] { run = [&] { return cmd_shell_witness(g, a); }; });

  auto* chain = app.add_subcommand("chain-verify", "check a chain and its boundary");
  chain->add_option("chain", a, "chain JSON")->required();
  chain->add_option("--shell", b, "shell the chain should bound");
  chain->callback([&] { run = [&] { return cmd_chain_verify(g, a, b); }; });

  auto* wverify = app.add_subcommand("walk-verify", "check a chain-walk against a shell");
  wverify->add_option("walk", a, "walk JSON")->required();
  wverify->add_option("--shell", b, "target shell")->required();
  wverify->callback([&] { run = [&] { return cmd_walk_verify(g, a, b); }; });

  auto* wsearch = app.add_subcommand("walk-search", "bounded search for a chain-walk bounding a shell");
  wsearch->add_option("shell", a, "representation or 1-chain JSON")->required();
  wsearch->callback([&] { run = [&] { return cmd_walk_search(g, a); }; });

  auto* psic = app.add_subcommand("psi", "image of a translation in H1");
  psic->add_option("translation", a, "shift expression or {shift, iotaShift}")->required();
  psic->add_option("--base", b, "base point (default 0)");
  psic->callback([&] { run = [&] { return cmd_psi(g, a, b); }; });

  auto* m2 = app.add_subcommand("m2-eval", "evaluate S'_k, E_n classes and brackets through the reduct");
  m2->add_option("points", points, "one or more points")->required();
  m2->add_option("-k", k, "arc count")->check(CLI::Range(3, 64));
  m2->callback([&] { run = [&] { return cmd_m2_eval(g, points, k); }; });

  auto* suite = app.add_subcommand("suite", "run property groups and acceptance criteria");
  suite->add_flag("--acceptance-only", acceptance_only, "skip the property groups");
  suite->callback([&] { run = [&] { return cmd_suite(g, acceptance_only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kNegative;
  }
}
