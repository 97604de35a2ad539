#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "toroidal/expr.hpp"
#include "toroidal/report.hpp"

namespace toroidal::cli {

namespace {

struct Config {
  std::string type = "A";
  int rank = 3;
  std::string mode = "strict";
  int K = 3;
  std::string E = "7/2";
  std::string output = "text";
  std::uint64_t seed = 0;
  std::string out_path;
  unsigned threads = 0;
  int jacobi = 10;
  bool no_sweep = false;
  bool all = false;
  bool list = false;
  std::string expr_a;
  std::string expr_b;
};

NullMode parse_mode(const std::string &s) {
  if (s == "strict")
    return NullMode::Strict;
  if (s == "full")
    return NullMode::Full;
  throw ConfigError("mode must be 'strict' or 'full', got '" + s + "'");
}

bool json_output(const Config &c) {
  if (c.output == "json")
    return true;
  if (c.output == "text")
    return false;
  throw ConfigError("output must be 'text' or 'json', got '" + c.output + "'");
}

// Writes to --out when given, else to `out`.
void emit(const Config &c, std::ostream &out, const std::string &text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path);
  if (!f)
    throw ConfigError("cannot open output file '" + c.out_path + "'");
  f << text;
}

int run_verify(const Config &c, std::ostream &out, std::ostream &err) {
  const LatticeContext ctx = build_lattice(parse_alg_type(c.type), c.rank);
  VerifyOptions o;
  o.mode = parse_mode(c.mode);
  o.K = c.K;
  o.twice_E = parse_half(c.E);
  o.seed = c.seed;
  o.jacobi_triples = c.jacobi;
  o.mode_sweep = !c.no_sweep;
  o.threads = c.threads;
  const bool js = json_output(c);
  const RelationReport r = verify(ctx, o);
  emit(c, out, js ? report_json(ctx, r).dump(2) + "\n" : report_text(ctx, r, c.all));
  const std::size_t fails = r.count(Status::Fail);
  if (fails > 0)
    err << fails << " relation check(s) failed\n";
  return fails > 0 ? 1 : 0;
}

int run_ope(const Config &c, std::ostream &out) {
  const LatticeContext ctx = build_lattice(parse_alg_type(c.type), c.rank);
  const NullMode mode = parse_mode(c.mode);
  const bool js = json_output(c);
  LocalField a = parse_local_field(c.expr_a, ctx);
  LocalField b = parse_local_field(c.expr_b, ctx);
  if (mode == NullMode::Strict) {
    a = mod_null(a);
    b = mod_null(b);
  }
  BracketResult r = bracket(Pairing(ctx), a, b);
  if (mode == NullMode::Strict)
    r.delta_part = mod_null(r.delta_part);
  const bool null = !r.delta_part.is_zero() && is_null(r.delta_part);
  if (js) {
    nlohmann::json j{{"schema", kSchemaVersion},
                     {"a", to_expr(a)},
                     {"b", to_expr(b)},
                     {"delta", to_expr(r.delta_part)},
                     {"d_delta", r.ddelta_part.str()},
                     {"null", null}};
    emit(c, out, j.dump(2) + "\n");
  } else {
    emit(c, out, to_expr(r) + (null ? "  [NULL]" : "") + "\n");
  }
  return 0;
}

int run_table(const Config &c, std::ostream &out) {
  const LatticeContext ctx = build_lattice(parse_alg_type(c.type), c.rank);
  const GeneratorTable t = build_generators(ctx);
  if (json_output(c)) {
    nlohmann::json j = lattice_json(ctx);
    j["schema"] = kSchemaVersion;
    j["generators"] = generators_json(t);
    emit(c, out, j.dump(2) + "\n");
  } else {
    emit(c, out, lattice_text(ctx, t));
  }
  return 0;
}

int run_states(const Config &c, std::ostream &out) {
  const LatticeContext ctx = build_lattice(parse_alg_type(c.type), c.rank);
  const int twice_e = parse_half(c.E);
  const FockSpace space = FockSpace::for_context(ctx, NullMode::Full);
  const auto states = enumerate_states(space, twice_e);
  std::map<int, std::size_t> per;
  for (const auto &s : states)
    ++per[space.twice_energy(s)];
  if (json_output(c)) {
    nlohmann::json slices = nlohmann::json::array();
    for (const auto &[e, n] : per)
      slices.push_back({{"E", half_str(e)}, {"count", n}});
    nlohmann::json j{{"schema", kSchemaVersion}, {"name", ctx.name()},  {"E", half_str(twice_e)},
                     {"labels", space.num_labels()}, {"slices", slices}, {"total", states.size()}};
    if (c.list) {
      nlohmann::json l = nlohmann::json::array();
      for (const auto &s : states)
        l.push_back(space.dump(s));
      j["states"] = l;
    }
    emit(c, out, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << ctx.name() << " states with energy <= " << half_str(twice_e) << " over " << space.num_labels()
     << " labels\n";
  for (const auto &[e, n] : per)
    os << "  E=" << half_str(e) << ": " << n << "\n";
  os << "total: " << states.size() << "\n";
  if (c.list)
    for (const auto &s : states)
      os << "  " << space.dump(s) << "\n";
  emit(c, out, os.str());
  return 0;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  Config c;
  CLI::App app{"Exact verifier for fermionic realizations of 2-toroidal Lie algebras"};
  app.set_config("--config", "", "key=value file mirroring the long flags");
  app.require_subcommand(1);
  app.add_option("--type", c.type, "algebra type: A, B, C or D")->capture_default_str();
  app.add_option("--rank", c.rank, "rank n (type A uses A_{n-1})")->capture_default_str();
  app.add_option("--mode", c.mode, "null handling: strict or full")->capture_default_str();
  app.add_option("-K,--max-mode", c.K, "mode cutoff |k|, |m| <= K")->capture_default_str();
  app.add_option("-E,--energy", c.E, "state energy cutoff (half-integer)")->capture_default_str();
  app.add_option("--output", c.output, "text or json")->capture_default_str();
  app.add_option("--seed", c.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--out", c.out_path, "write the report to a file instead of stdout");

  auto *verify_cmd = app.add_subcommand("verify", "run the relation suite");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--threads", c.threads, "worker threads (0 = TOROIDAL_THREADS or all cores)");
  verify_cmd->add_option("--jacobi", c.jacobi, "number of random Jacobi triples")->capture_default_str();
  verify_cmd->add_flag("--no-sweep", c.no_sweep, "skip the mode-level sweep");
  verify_cmd->add_flag("--all", c.all, "list passing checks in text output");

  auto *ope_cmd = app.add_subcommand("ope", "bracket of two quadratic fields");
  ope_cmd->fallthrough();
  ope_cmd->add_option("a", c.expr_a, "first field, e.g. ':eps(1) eps*(2):'")->required();
  ope_cmd->add_option("b", c.expr_b, "second field")->required();

  auto *table_cmd = app.add_subcommand("table", "lattice data and generator table");
  table_cmd->fallthrough();

  auto *states_cmd = app.add_subcommand("states", "Fock state inventory by energy");
  states_cmd->fallthrough();
  states_cmd->add_flag("--list", c.list, "print every state");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*verify_cmd)
      return run_verify(c, out, err);
    if (*ope_cmd)
      return run_ope(c, out);
    if (*table_cmd)
      return run_table(c, out);
    return run_states(c, out);
  } catch (const ParseError &e) {
    err << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  } catch (const ConfigError &e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace toroidal::cli
