#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "spohn/contfrac.hpp"
#include "spohn/elliptic.hpp"
#include "spohn/error.hpp"
#include "spohn/game.hpp"
#include "spohn/serialize.hpp"
#include "spohn/spohn_geometry.hpp"

namespace spohn::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string game;
  std::string game_file;
  std::string bimatrix;
  std::string game2;
  std::string quadrics;
  std::string curve;
  std::string curve2;
  std::string point;
  std::string pi1;
  std::string pi2;
  std::string dist;
  std::string ne;
  bool cooperation = false;
  bool invariants = false;
  int grid = 100;
  std::uint64_t seed = kDefaultSeed;
  std::string value;
  int convergents = 10;
  std::string format = "json";
};

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  // Inline text, or stdin when the value is "-".
  std::string inline_or_stdin(const std::string& value) {
    if (value != "-") return value;
    if (stdin_used_) throw ParseError("stdin can feed only one input");
    stdin_used_ = true;
    return std::string(std::istreambuf_iterator<char>(in_), {});
  }

  std::string file_or_stdin(const std::string& path) {
    if (path == "-") return inline_or_stdin(path);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read input file '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), {});
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON in " + what + ": " + e.what());
  }
}

PayoffTables load_game(const Options& o, Inputs& io) {
  const int sources = !o.game.empty() + !o.game_file.empty() + !o.bimatrix.empty();
  if (sources != 1) throw ParseError("exactly one of --game, --game-file, --bimatrix is required");
  if (!o.bimatrix.empty()) return PayoffTables::parse_bimatrix(io.inline_or_stdin(o.bimatrix));
  const std::string text = o.game.empty() ? io.file_or_stdin(o.game_file) : io.inline_or_stdin(o.game);
  return game_from_json(parse_json(text, "game"));
}

bool has_game(const Options& o) { return !o.game.empty() || !o.game_file.empty() || !o.bimatrix.empty(); }

QuadricPair load_quadrics(const Options& o, Inputs& io) {
  return quadric_pair_from_json(parse_json(io.inline_or_stdin(o.quadrics), "quadrics"));
}

// Plane cubic from either a game or a quadric pair.
PlaneCubic load_cubic(const Options& o, Inputs& io) {
  if (!o.quadrics.empty()) {
    if (has_game(o)) throw ParseError("give either a game or --quadrics, not both");
    return cubic_from_quadrics(load_quadrics(o, io));
  }
  return spohn_plane_cubic(load_game(o, io));
}

void render_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        render_text(value, out, prefix + key + ".");
      } else {
        out << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
    }
  } else {
    out << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

json cmd_cubic(const Options& o, Inputs& io) {
  if (!o.quadrics.empty()) return json{{"cubic", load_cubic(o, io)}};
  const auto X = load_game(o, io);
  const auto q = build_quadrics(X);
  const auto s = build_cubic(X);
  return json{{"c", s.c},
              {"f", s.f},
              {"text", s.f.str()},
              {"quadrics", {{"q1", q.q1.str()}, {"q2", q.q2.str()}}}};
}

json cmd_classify(const Options& o, Inputs& io) {
  const auto v = analyze_cubic(load_game(o, io));
  json out{{"cases", v.cases}, {"kind", to_string(v.kind)}};
  if (v.zero_condition) out["zero_condition"] = *v.zero_condition;
  return out;
}

json cmd_decompose(const Options& o, Inputs& io) {
  const auto X = load_game(o, io);
  const auto v = analyze_cubic(X);
  if (v.kind == VerdictKind::ZeroCubic) {
    throw DomainError("the Spohn cubic is identically zero (condition " +
                      (v.zero_condition ? std::to_string(*v.zero_condition) : std::string("?")) + ")");
  }
  return json(v);
}

json cmd_j(const Options& o, Inputs& io) {
  const auto c = load_cubic(o, io);
  json out{{"j", j_invariant(c)}};
  if (o.invariants) out["invariants"] = aronhold(c);
  return out;
}

json cmd_reduce(const Options& o, Inputs& io) {
  const auto c = load_cubic(o, io);
  std::optional<ProjPoint> pt;
  if (!o.point.empty()) {
    pt = point_from_json(parse_json(io.inline_or_stdin(o.point), "point"));
  } else {
    pt = default_base_point(c);
    if (!pt) throw DomainError("no coordinate point is a smooth point of the cubic; pass --point");
  }
  json out = weierstrass_from_cubic(c, *pt);
  out["base_point"] = *pt;
  return out;
}

json cmd_equiv(const Options& o, Inputs& io) {
  if (!o.curve.empty() || !o.curve2.empty()) {
    if (o.curve.empty() || o.curve2.empty()) throw ParseError("--curve and --curve2 must be given together");
    const auto E1 = weierstrass_from_json(parse_json(io.inline_or_stdin(o.curve), "curve"));
    const auto E2 = weierstrass_from_json(parse_json(io.inline_or_stdin(o.curve2), "curve2"));
    const auto j1 = E1.j(), j2 = E2.j();
    if (j1.singular() || j2.singular()) throw DomainError("curve is singular");
    return json{{"j1", j1}, {"j2", j2}, {"same_j", *j1.value == *j2.value}, {"q_isomorphic", q_isomorphic(E1, E2)}};
  }
  if (o.game2.empty()) throw ParseError("equiv needs --game2 (or --curve and --curve2)");
  const auto X1 = load_game(o, io);
  const auto X2 = game_from_json(parse_json(io.inline_or_stdin(o.game2), "game2"));
  return json(game_equivalence(X1, X2));
}

json cmd_nash(const Options& o, Inputs& io) {
  const auto X = load_game(o, io);
  json pure = json::array();
  for (const auto& [i, j] : pure_nash(X)) pure.push_back({i, j});
  const auto tm = totally_mixed_nash(X);
  json mixed;
  switch (tm.status) {
    case TotallyMixedNash::Status::Found:
      mixed = {{"status", "found"}, {"q", tm.profile->q}, {"r", tm.profile->r},
               {"distribution", json(tm.profile->segre().p)}};
      break;
    case TotallyMixedNash::Status::None:
      mixed = {{"status", "none"}};
      break;
    case TotallyMixedNash::Status::Degenerate:
      mixed = {{"status", "degenerate"}};
      break;
  }
  return json{{"pure", pure}, {"totally_mixed", mixed}};
}

json cmd_konstanz(const Options& o, Inputs& io) {
  if (o.pi1.empty() || o.pi2.empty()) throw ParseError("konstanz needs --pi1 and --pi2");
  const auto X = load_game(o, io);
  return json(konstanz_matrix(X, Rational::parse(o.pi1), Rational::parse(o.pi2)));
}

json cmd_de_check(const Options& o, Inputs& io) {
  if (o.dist.empty()) throw ParseError("de-check needs --dist");
  const auto X = load_game(o, io);
  const auto p = distribution_from_json(parse_json(io.inline_or_stdin(o.dist), "dist"));
  json payoffs = json::array();
  for (const auto& v : partial_conditional_payoffs(X, p).values) payoffs.push_back(v ? json(*v) : json(nullptr));
  return json{{"status", to_string(de_membership(X, p))},
              {"conditional_payoffs", payoffs},
              {"in_W", w_membership(p)},
              {"totally_mixed", p.totally_mixed()}};
}

json cmd_witness(const Options& o, Inputs& io) {
  const auto X = load_game(o, io);
  if (o.cooperation) {
    if (!o.ne.empty()) throw ParseError("give either --ne or --cooperation");
    return json(cooperation_witness(X));
  }
  if (o.ne.empty()) throw ParseError("witness needs --ne '[q, r]' or --cooperation");
  return json(ne_witness_sequence(X, profile_from_json(parse_json(io.inline_or_stdin(o.ne), "ne"))));
}

json cmd_pareto(const Options& o, Inputs& io) {
  const auto X = load_game(o, io);
  json out = pareto_sweep(X, o.grid, o.seed);
  out["seed"] = o.seed;
  out["grid"] = o.grid;
  return out;
}

json cmd_approx(const Options& o, Inputs&) {
  if (o.value.empty()) throw ParseError("approx needs --value");
  return json(contfrac_approx(o.value, o.convergents));
}

void add_game_options(CLI::App* sub, Options& o) {
  sub->add_option("--game", o.game, "game JSON {\"A\": [[..],[..]], \"B\": ..} or - for stdin");
  sub->add_option("--game-file", o.game_file, "file with game JSON, - for stdin");
  sub->add_option("--bimatrix", o.bimatrix, "bimatrix text \"a11,b11 a12,b12; a21,b21 a22,b22\"");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact algebraic geometry of 2x2 games", "spohn"};
  app.require_subcommand(1);

  using Handler = json (*)(const Options&, Inputs&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    commands.emplace_back(sub, h);
    return sub;
  };

  auto* cubic = add("cubic", "Spohn quadrics and cubic of a game, or the plane cubic of a quadric pair", cmd_cubic);
  add_game_options(cubic, o);
  cubic->add_option("--quadrics", o.quadrics, "quadric pair JSON {\"P1\", \"P2\", \"point\"} or {\"A\", \"B\", \"point\"}");

  auto* classify = add("classify", "zero test and reducibility cases", cmd_classify);
  add_game_options(classify, o);

  auto* decompose = add("decompose", "components of the Spohn cubic with smooth rational points", cmd_decompose);
  add_game_options(decompose, o);

  auto* jcmd = add("j", "j-invariant of the Spohn cubic or of a quadric pair", cmd_j);
  add_game_options(jcmd, o);
  jcmd->add_option("--quadrics", o.quadrics, "quadric pair JSON");
  jcmd->add_flag("--invariants", o.invariants, "also report S, T and the discriminant");

  auto* reduce = add("reduce", "long Weierstrass model", cmd_reduce);
  add_game_options(reduce, o);
  reduce->add_option("--quadrics", o.quadrics, "quadric pair JSON");
  reduce->add_option("--point", o.point, "base point on the plane cubic as a JSON array");

  auto* equiv = add("equiv", "j and Q-isomorphism of two games or two Weierstrass curves", cmd_equiv);
  add_game_options(equiv, o);
  equiv->add_option("--game2", o.game2, "second game JSON");
  equiv->add_option("--curve", o.curve, "Weierstrass curve JSON {\"a\": [a1,a2,a3,a4,a6]} or {\"A\", \"B\"}");
  equiv->add_option("--curve2", o.curve2, "second Weierstrass curve JSON");

  auto* nash = add("nash", "pure and totally mixed Nash equilibria", cmd_nash);
  add_game_options(nash, o);

  auto* konstanz = add("konstanz", "Konstanz matrix and determinant", cmd_konstanz);
  add_game_options(konstanz, o);
  konstanz->add_option("--pi1", o.pi1, "expected payoff of player 1");
  konstanz->add_option("--pi2", o.pi2, "expected payoff of player 2");

  auto* de = add("de-check", "dependency-equilibrium test of a joint distribution", cmd_de_check);
  add_game_options(de, o);
  de->add_option("--dist", o.dist, "JSON array [p11, p12, p21, p22]");

  auto* witness = add("witness", "witness sequences for boundary equilibria or cooperation", cmd_witness);
  add_game_options(witness, o);
  witness->add_option("--ne", o.ne, "Nash equilibrium as JSON [q, r] or {\"q\", \"r\"}");
  witness->add_flag("--cooperation", o.cooperation, "cooperation witness for prisoner's-dilemma-type games");

  auto* pareto = add("pareto", "sampled dependency equilibria dominating the Nash payoffs", cmd_pareto);
  add_game_options(pareto, o);
  pareto->add_option("--grid", o.grid, "number of random slices")->check(CLI::NonNegativeNumber);
  pareto->add_option("--seed", o.seed, "random seed (default 1)");

  auto* approx = add("approx", "continued-fraction approximation of a decimal", cmd_approx);
  approx->add_option("--value", o.value, "finite decimal");
  approx->add_option("--convergents", o.convergents, "number of convergents")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"spohn"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Inputs io(in);
  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      const json result = handler(o, io);
      if (o.format == "text") {
        render_text(result, out);
      } else {
        out << result.dump() << '\n';
      }
      return 0;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const json::exception& e) {
      err << "error: invalid input: " << e.what() << '\n';
      return 2;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << '\n';
      return 3;
    }
  }
  return 2;
}

}  // namespace spohn::cli
