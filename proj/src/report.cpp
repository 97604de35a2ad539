#include "toroidal/report.hpp"

#include <sstream>

#include "toroidal/expr.hpp"

namespace toroidal {

using nlohmann::json;

std::string half_str(int twice) {
  return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

int parse_half(const std::string &text) {
  Rational v;
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      v = Rational::parse(text);
    } else {
      const std::string frac = text.substr(dot + 1);
      long long den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i)
        den *= 10;
      v = Rational::parse(text.substr(0, dot) + frac + "/" + std::to_string(den));
    }
  } catch (const std::exception &) {
    throw ConfigError("energy '" + text + "' is not a number");
  }
  const Rational t = v * Rational(2);
  if (!t.is_integer() || t.sign() < 0)
    throw ConfigError("energy '" + text + "' must be a nonnegative half-integer");
  return static_cast<int>(t.to_int64());
}

json lattice_json(const LatticeContext &ctx) {
  json j;
  j["type"] = std::string(1, to_char(ctx.type()));
  j["rank"] = ctx.rank();
  j["name"] = ctx.name();
  j["cartan"] = ctx.cartan_matrix();
  json d = json::array();
  for (const Coeff &c : ctx.d_vector())
    d.push_back(c.str());
  j["d_vector"] = d;
  j["marks"] = ctx.marks();
  json roots = json::array();
  for (const auto &r : ctx.simple_roots())
    roots.push_back(r.str());
  j["simple_roots"] = roots;
  j["alpha_max"] = ctx.alpha_max().str();
  j["beta"] = ctx.beta().str();
  if (ctx.beta_bar())
    j["beta_bar"] = ctx.beta_bar()->str();
  json alpha = json::array();
  for (const auto &l : ctx.alphabet())
    alpha.push_back(l.str());
  j["alphabet"] = alpha;
  return j;
}

json generators_json(const GeneratorTable &t) {
  json j = json::array();
  for (int i = 0; i < t.num_nodes(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    j.push_back({{"node", i}, {"x+", to_expr(t.xplus[k])}, {"x-", to_expr(t.xminus[k])}, {"h", to_expr(t.h[k])}});
  }
  return j;
}

json report_json(const LatticeContext &ctx, const RelationReport &r) {
  json header = lattice_json(ctx);
  header["schema"] = kSchemaVersion;
  header["engine_version"] = kEngineVersion;
  header["mode"] = to_string(r.options.mode);
  header["K"] = r.options.K;
  header["E"] = half_str(r.options.twice_E);
  header["seed"] = r.options.seed;
  header["jacobi_triples"] = r.options.jacobi_triples;
  header["mode_sweep"] = r.options.mode_sweep;
  header["middle_node_range"] = "1..n-1";

  json body = json::array();
  json millis = json::object();
  for (const auto &e : r.entries) {
    const auto &in = e.instance;
    json params{{"level", in.level}, {"nodes", in.nodes}};
    if (in.sign != 0)
      params["sign"] = in.sign > 0 ? "+" : "-";
    if (in.modes) {
      params["k"] = in.modes->first;
      params["m"] = in.modes->second;
    }
    if (!in.subject.empty())
      params["subject"] = in.subject;
    json entry{{"id", to_string(in.id)},
               {"key", in.key()},
               {"params", params},
               {"status", to_string(e.status)},
               {"residue", e.residue.is_zero() ? "" : to_expr(e.residue)},
               {"samples", e.samples}};
    if (!e.detail.empty())
      entry["detail"] = e.detail;
    body.push_back(std::move(entry));
    millis[in.key()] = e.millis;
  }

  json summary{{"pass", r.count(Status::Pass)},
               {"pass_mod_null", r.count(Status::PassModNull)},
               {"fail", r.count(Status::Fail)},
               {"total", r.entries.size()}};
  return json{{"schema", kSchemaVersion}, {"header", header}, {"body", body}, {"summary", summary},
              {"millis", millis}};
}

std::string lattice_text(const LatticeContext &ctx, const GeneratorTable &t) {
  std::ostringstream os;
  os << ctx.name() << "  (type " << to_char(ctx.type()) << ", rank " << ctx.rank() << ")\n";
  os << "alphabet:";
  for (const auto &l : ctx.alphabet())
    os << " " << l.str();
  os << "\nbeta = " << ctx.beta().str() << "\n";
  if (ctx.beta_bar())
    os << "betabar = " << ctx.beta_bar()->str() << "\n";
  os << "alpha_max = " << ctx.alpha_max().str() << "\n";
  os << "simple roots:\n";
  for (int i = 0; i < ctx.num_nodes(); ++i)
    os << "  alpha_" << i << " = " << ctx.simple_roots()[static_cast<std::size_t>(i)].str() << "\n";
  os << "cartan matrix:\n";
  for (const auto &row : ctx.cartan_matrix()) {
    os << " ";
    for (long long a : row) {
      const std::string s = std::to_string(a);
      os << std::string(4 - std::min<std::size_t>(3, s.size()), ' ') << s;
    }
    os << "\n";
  }
  os << "d vector: (";
  for (std::size_t i = 0; i < ctx.d_vector().size(); ++i)
    os << (i ? ", " : "") << ctx.d_vector()[i].str();
  os << ")\nmarks: (";
  for (std::size_t i = 0; i < ctx.marks().size(); ++i)
    os << (i ? ", " : "") << ctx.marks()[i];
  os << ")\ngenerators:\n";
  for (int i = 0; i < t.num_nodes(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    os << "  x(+alpha_" << i << ") = " << to_expr(t.xplus[k]) << "\n";
    os << "  x(-alpha_" << i << ") = " << to_expr(t.xminus[k]) << "\n";
    os << "  alpha_" << i << "(z) = " << to_expr(t.h[k]) << "\n";
  }
  return os.str();
}

std::string report_text(const LatticeContext &ctx, const RelationReport &r, bool all_entries) {
  std::ostringstream os;
  os << "verify " << ctx.name() << " mode=" << to_string(r.options.mode) << " K=" << r.options.K
     << " E=" << half_str(r.options.twice_E) << " seed=" << r.options.seed << "\n";
  for (const auto &e : r.entries) {
    if (!all_entries && e.status == Status::Pass)
      continue;
    os << "  " << to_string(e.status) << "  " << e.instance.key();
    if (!e.residue.is_zero())
      os << "  residue: " << to_expr(e.residue);
    os << "\n";
    if (!e.detail.empty())
      os << "      " << e.detail << "\n";
  }
  const RelationId ids[] = {RelationId::R1,      RelationId::R2,       RelationId::R3,     RelationId::R4,
                            RelationId::Serre,   RelationId::NullRoot, RelationId::Central, RelationId::Level,
                            RelationId::Oracle,  RelationId::Jacobi};
  for (RelationId id : ids) {
    const std::size_t p = r.count(id, Status::Pass), q = r.count(id, Status::PassModNull),
                      f = r.count(id, Status::Fail);
    if (p + q + f == 0)
      continue;
    os << "  " << to_string(id) << ": " << p << " pass, " << q << " pass_mod_null, " << f << " fail\n";
  }
  os << "summary: " << r.count(Status::Pass) << " pass, " << r.count(Status::PassModNull)
     << " pass_mod_null, " << r.count(Status::Fail) << " fail (" << r.entries.size() << " checks)\n";
  return os.str();
}

} // namespace toroidal
