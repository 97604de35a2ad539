#include "toroidal/toroidal_rep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "toroidal/expr.hpp"

namespace toroidal {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

LocalField m(AtomicLabel a, AtomicLabel b) { return LocalField::mono(a, b); }

template <class F>
auto parallel_map(std::size_t n, unsigned threads, F &&f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++)
        out[i] = f(i);
    });
  pool.clear();
  return out;
}

} // namespace

// --------------------------------------------------------- generator table

GeneratorTable build_generators(const LatticeContext &ctx) {
  using L = AtomicLabel;
  const int n = ctx.rank();
  const int nodes = ctx.num_nodes();
  GeneratorTable t;
  t.xplus.resize(static_cast<std::size_t>(nodes));
  t.xminus.resize(static_cast<std::size_t>(nodes));
  t.h.resize(static_cast<std::size_t>(nodes));
  auto at = [](std::vector<LocalField> &v, int i) -> LocalField & { return v[static_cast<std::size_t>(i)]; };

  const LinField beta = beta_field(ctx, false);
  const LinField beta_s = beta_field(ctx, true);
  const Coeff half = Rational(1, 2);

  switch (ctx.type()) {
  case AlgType::A:
    at(t.xplus, 0) = normal_quad(L::eps(n), beta_s);
    at(t.xminus, 0) = normal_quad(L::eps_star(n), beta);
    at(t.h, 0) = m(L::eps(n), L::eps_star(n)) - normal_quad(beta, beta_s);
    break;
  case AlgType::B:
  case AlgType::D:
    at(t.xplus, 0) = normal_quad(beta_s, L::eps_star(2));
    at(t.xminus, 0) = normal_quad(beta, L::eps(2));
    at(t.h, 0) = normal_quad(beta_s, beta) + m(L::eps_star(2), L::eps(2));
    break;
  case AlgType::C: {
    const LinField bbar = beta_bar_field(ctx, false);
    const LinField bbar_s = beta_bar_field(ctx, true);
    at(t.xplus, 0) = Coeff::inv_sqrt2() * (normal_quad(beta_s, L::eps_bar_star(1)) -
                                            normal_quad(L::eps_star(1), bbar_s));
    at(t.xminus, 0) = Coeff::inv_sqrt2() * (normal_quad(beta, L::eps_bar(1)) -
                                             normal_quad(L::eps(1), bbar));
    at(t.h, 0) = half * (normal_quad(beta_s, beta) + m(L::eps_star(1), L::eps(1)) +
                         normal_quad(bbar_s, bbar) + m(L::eps_bar_star(1), L::eps_bar(1)));
    break;
  }
  }

  for (int i = 1; i <= n - 1; ++i) {
    if (ctx.type() == AlgType::C) {
      at(t.xplus, i) = m(L::eps(i), L::eps_star(i + 1)) - m(L::eps_bar(i + 1), L::eps_bar_star(i));
      at(t.xminus, i) = m(L::eps_star(i), L::eps(i + 1)) - m(L::eps_bar_star(i + 1), L::eps_bar(i));
      at(t.h, i) = half * (m(L::eps(i), L::eps_star(i)) - m(L::eps(i + 1), L::eps_star(i + 1)) -
                           m(L::eps_bar(i), L::eps_bar_star(i)) +
                           m(L::eps_bar(i + 1), L::eps_bar_star(i + 1)));
    } else {
      at(t.xplus, i) = m(L::eps(i), L::eps_star(i + 1));
      at(t.xminus, i) = m(L::eps_star(i), L::eps(i + 1));
      at(t.h, i) = m(L::eps(i), L::eps_star(i)) - m(L::eps(i + 1), L::eps_star(i + 1));
    }
  }

  switch (ctx.type()) {
  case AlgType::A:
    break;
  case AlgType::B:
    at(t.xplus, n) = Coeff::sqrt2() * m(L::eps(n), L::ghost());
    at(t.xminus, n) = Coeff::sqrt2() * m(L::ghost(), L::eps_star(n));
    at(t.h, n) = m(L::eps(n), L::eps_star(n));
    break;
  case AlgType::C:
    at(t.xplus, n) = m(L::eps(n), L::eps_bar_star(n));
    at(t.xminus, n) = m(L::eps_star(n), L::eps_bar(n));
    at(t.h, n) = m(L::eps(n), L::eps_star(n)) - m(L::eps_bar(n), L::eps_bar_star(n));
    break;
  case AlgType::D:
    at(t.xplus, n) = m(L::eps(n - 1), L::eps(n));
    at(t.xminus, n) = m(L::eps_star(n - 1), L::eps_star(n));
    at(t.h, n) = m(L::eps(n - 1), L::eps_star(n - 1)) + m(L::eps(n), L::eps_star(n));
    break;
  }

  if (ctx.type() != AlgType::C)
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        if (k != l)
          t.root_fields.emplace(std::make_pair(k, l), m(L::eps(k), L::eps_star(l)));
  return t;
}

GeneratorTable reduce(const GeneratorTable &table, NullMode mode) {
  if (mode == NullMode::Full)
    return table;
  GeneratorTable r = table;
  for (auto *v : {&r.xplus, &r.xminus, &r.h})
    for (auto &f : *v)
      f = mod_null(f);
  for (auto &[kl, f] : r.root_fields)
    f = mod_null(f);
  return r;
}

// ------------------------------------------------------------------ naming

const char *to_string(RelationId id) {
  switch (id) {
  case RelationId::R1: return "R1";
  case RelationId::R2: return "R2";
  case RelationId::R3: return "R3";
  case RelationId::R4: return "R4";
  case RelationId::Serre: return "SERRE";
  case RelationId::NullRoot: return "NULLROOT";
  case RelationId::Central: return "CENTRAL";
  case RelationId::Level: return "LEVEL";
  case RelationId::Oracle: return "ORACLE";
  case RelationId::Jacobi: return "JACOBI";
  }
  return "?";
}

const char *to_string(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::PassModNull: return "pass_mod_null";
  case Status::Fail: return "fail";
  }
  return "?";
}

std::string to_string(const GenRef &g) {
  const char *p = g.kind == GenKind::XPlus ? "X+" : g.kind == GenKind::XMinus ? "X-" : "H";
  return p + std::to_string(g.node);
}

const LocalField &lookup(const GeneratorTable &t, const GenRef &g) {
  const auto i = static_cast<std::size_t>(g.node);
  switch (g.kind) {
  case GenKind::XPlus: return t.xplus.at(i);
  case GenKind::XMinus: return t.xminus.at(i);
  case GenKind::H: break;
  }
  return t.h.at(i);
}

std::vector<GenRef> all_generators(const GeneratorTable &t) {
  std::vector<GenRef> g;
  for (int i = 0; i < t.num_nodes(); ++i) {
    g.push_back({GenKind::XPlus, i});
    g.push_back({GenKind::XMinus, i});
    g.push_back({GenKind::H, i});
  }
  return g;
}

std::string RelationInstance::key() const {
  std::ostringstream os;
  os << to_string(id) << "/" << level << "/";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << (i ? "," : "") << nodes[i];
  if (sign != 0)
    os << "/" << (sign > 0 ? "+" : "-");
  if (modes)
    os << "/k=" << modes->first << ",m=" << modes->second;
  if (!subject.empty())
    os << "/" << subject;
  return os.str();
}

namespace {

auto sort_key(const RelationInstance &r) {
  return std::tie(r.id, r.level, r.nodes, r.sign, r.modes, r.subject);
}

} // namespace

Status classify(const LocalField &residue, NullMode mode) {
  if (residue.is_zero())
    return Status::Pass;
  if (mode == NullMode::Full && is_null(residue))
    return Status::PassModNull;
  return Status::Fail;
}

LocalField bracket_residue(const BracketResult &actual, const BracketResult &expected) {
  LocalField r = actual.delta_part - expected.delta_part;
  r.add_identity(actual.ddelta_part - expected.ddelta_part);
  return r;
}

// -------------------------------------------------------------- RepContext

RepContext::RepContext(const LatticeContext &ctx, NullMode mode)
    : ctx_(ctx), pairing_(ctx), mode_(mode), table_(reduce(build_generators(ctx), mode)),
      fock_(FockSpace::for_context(ctx, mode)) {}

BracketResult RepContext::bracket(const LocalField &a, const LocalField &b) const {
  BracketResult r = toroidal::bracket(pairing_, a, b);
  if (mode_ == NullMode::Strict)
    r.delta_part = mod_null(r.delta_part);
  return r;
}

Coeff RepContext::gram(int i, int j) const {
  return form(simple_root(ctx_, i), simple_root(ctx_, j));
}

// ------------------------------------------------------ field-level checks

namespace {

RelationEntry field_entry(const RepContext &rep, RelationId id, std::vector<int> nodes, int sign,
                          const BracketResult &actual, const BracketResult &expected,
                          Clock::time_point t0) {
  RelationEntry e;
  e.instance.id = id;
  e.instance.level = "field";
  e.instance.nodes = std::move(nodes);
  e.instance.sign = sign;
  e.residue = bracket_residue(actual, expected);
  e.status = classify(e.residue, rep.mode());
  e.samples = 1;
  e.millis = millis_since(t0);
  return e;
}

const LocalField &xfield(const GeneratorTable &t, int i, int sign) {
  return sign > 0 ? t.xplus.at(static_cast<std::size_t>(i)) : t.xminus.at(static_cast<std::size_t>(i));
}

BracketResult r3_rhs(const RepContext &rep, int i, int j) {
  if (i != j)
    return {};
  const Coeff f = Coeff(-2) / rep.gram(i, i);
  return {f * rep.table().h.at(static_cast<std::size_t>(i)), f};
}

} // namespace

RelationEntry check_R1(const RepContext &rep, int i, int j) {
  const auto t0 = Clock::now();
  const auto &t = rep.table();
  BracketResult actual = rep.bracket(t.h.at(static_cast<std::size_t>(i)), t.h.at(static_cast<std::size_t>(j)));
  return field_entry(rep, RelationId::R1, {i, j}, 0, actual, {LocalField(), rep.gram(i, j)}, t0);
}

RelationEntry check_R2(const RepContext &rep, int i, int j, int sign) {
  const auto t0 = Clock::now();
  const auto &t = rep.table();
  const LocalField &x = xfield(t, j, sign);
  BracketResult actual = rep.bracket(t.h.at(static_cast<std::size_t>(i)), x);
  BracketResult expected{Coeff(sign) * rep.gram(i, j) * x, Coeff()};
  return field_entry(rep, RelationId::R2, {i, j}, sign, actual, expected, t0);
}

RelationEntry check_R2_root_field(const RepContext &rep, int i, int k, int l) {
  const auto t0 = Clock::now();
  const auto &t = rep.table();
  const LocalField &x = t.root_fields.at({k, l});
  BracketResult actual = rep.bracket(t.h.at(static_cast<std::size_t>(i)), x);
  const Coeff c = form(simple_root(rep.lattice(), i), LatticeVector::eps(k) - LatticeVector::eps(l));
  RelationEntry e = field_entry(rep, RelationId::R2, {i, k, l}, 0, actual, {c * x, Coeff()}, t0);
  e.instance.level = "eps";
  return e;
}

RelationEntry check_R3(const RepContext &rep, int i, int j) {
  const auto t0 = Clock::now();
  const auto &t = rep.table();
  BracketResult actual = rep.bracket(xfield(t, i, +1), xfield(t, j, -1));
  return field_entry(rep, RelationId::R3, {i, j}, 0, actual, r3_rhs(rep, i, j), t0);
}

RelationEntry check_R4_and_serre(const RepContext &rep, int i, int j, int sign) {
  const auto t0 = Clock::now();
  const auto &t = rep.table();
  if (i == j) {
    BracketResult actual = rep.bracket(xfield(t, i, sign), xfield(t, i, sign));
    return field_entry(rep, RelationId::R4, {i, i}, sign, actual, {}, t0);
  }
  const int power = 1 - static_cast<int>(cartan_entry(rep.lattice(), i, j));
  LocalField r = ad_power(rep.pairing(), xfield(t, i, sign), xfield(t, j, sign), power, rep.mode());
  RelationEntry e = field_entry(rep, RelationId::Serre, {i, j}, sign, {r, Coeff()}, {}, t0);
  e.instance.subject = "p=" + std::to_string(power);
  return e;
}

RelationEntry check_level(const RepContext &rep, int i) {
  const auto t0 = Clock::now();
  const auto &t = rep.table();
  const Coeff actual = rep.bracket(xfield(t, i, +1), xfield(t, i, -1)).ddelta_part;
  const Coeff expected = Coeff(-2) / rep.gram(i, i);
  RelationEntry e;
  e.instance.id = RelationId::Level;
  e.instance.level = "field";
  e.instance.nodes = {i};
  e.residue = LocalField::identity(actual - expected);
  e.status = classify(e.residue, rep.mode());
  e.samples = 1;
  e.millis = millis_since(t0);
  return e;
}

std::vector<RelationEntry> check_null_root(const RepContext &rep, const std::vector<FockState> &states) {
  std::vector<RelationEntry> out;
  const auto &t = rep.table();
  const auto &marks = rep.lattice().marks();
  LocalField d;
  for (int i = 0; i < t.num_nodes(); ++i)
    d += Coeff(marks[static_cast<std::size_t>(i)]) * t.h[static_cast<std::size_t>(i)];

  for (const GenRef &g : all_generators(t)) {
    const auto t0 = Clock::now();
    RelationEntry e = field_entry(rep, RelationId::NullRoot, {g.node}, 0, rep.bracket(d, lookup(t, g)), {}, t0);
    e.instance.subject = to_string(g);
    out.push_back(std::move(e));
  }

  for (int j = 0; j < t.num_nodes(); ++j) {
    const auto t0 = Clock::now();
    Coeff s;
    for (int i = 0; i < t.num_nodes(); ++i)
      s += Coeff(marks[static_cast<std::size_t>(i)]) * rep.gram(i, j);
    RelationEntry e;
    e.instance.id = RelationId::NullRoot;
    e.instance.level = "form";
    e.instance.nodes = {j};
    e.residue = LocalField::identity(s);
    e.status = classify(e.residue, rep.mode());
    e.samples = 1;
    e.millis = millis_since(t0);
    out.push_back(std::move(e));
  }

  if (!states.empty()) {
    const auto t0 = Clock::now();
    const FieldOperator op(rep.fock(), mod_null(d));
    RelationEntry e;
    e.instance.id = RelationId::NullRoot;
    e.instance.level = "state";
    e.instance.modes = std::make_pair(0, 0);
    for (const FockState &s : states) {
      StateVec v = op.apply(0, s);
      ++e.samples;
      if (!v.is_zero() && e.status == Status::Pass) {
        e.status = Status::Fail;
        e.residue = mod_null(d);
        e.detail = "zero mode on " + rep.fock().dump(s) + " gives " + rep.fock().dump(v);
      }
    }
    e.millis = millis_since(t0);
    out.push_back(std::move(e));
  }
  return out;
}

RelationEntry check_central(const RepContext &rep, const LocalField &residue) {
  const auto t0 = Clock::now();
  RelationEntry e;
  e.instance.id = RelationId::Central;
  e.instance.level = "field";
  e.instance.subject = to_expr(residue);
  for (const GenRef &g : all_generators(rep.table())) {
    BracketResult b = rep.bracket(residue, lookup(rep.table(), g));
    ++e.samples;
    if (!b.is_zero() && e.status == Status::Pass) {
      e.status = Status::Fail;
      e.residue = bracket_residue(b, {});
      e.detail = "[R, " + to_string(g) + "] = " + to_expr(b);
    }
  }
  e.millis = millis_since(t0);
  return e;
}

// ------------------------------------------------------ mode-level checks

std::optional<PairExpectation> expectation_for(const RepContext &rep, const GenRef &a, const GenRef &b) {
  const auto &t = rep.table();
  if (a.kind == GenKind::H && b.kind == GenKind::H)
    return PairExpectation{RelationId::R1, {a.node, b.node}, 0, {LocalField(), rep.gram(a.node, b.node)}};
  if (a.kind == GenKind::H) {
    const int sign = b.kind == GenKind::XPlus ? 1 : -1;
    return PairExpectation{RelationId::R2, {a.node, b.node}, sign,
                           {Coeff(sign) * rep.gram(a.node, b.node) * lookup(t, b), Coeff()}};
  }
  if (a.kind == GenKind::XPlus && b.kind == GenKind::XMinus)
    return PairExpectation{RelationId::R3, {a.node, b.node}, 0, r3_rhs(rep, a.node, b.node)};
  if (a.kind == b.kind && a.node == b.node)
    return PairExpectation{RelationId::R4, {a.node, a.node}, a.kind == GenKind::XPlus ? 1 : -1, {}};
  return std::nullopt;
}

std::vector<RelationEntry> sweep_pair(const RepContext &rep, const GenRef &a, const GenRef &b, int K,
                                      const std::vector<FockState> &states) {
  const auto t0 = Clock::now();
  const FockSpace &fock = rep.fock();
  const auto &t = rep.table();
  const FieldOperator opa(fock, lookup(t, a));
  const FieldOperator opb(fock, lookup(t, b));
  const BracketResult br = rep.bracket(lookup(t, a), lookup(t, b));
  const FieldOperator opf(fock, br.delta_part);

  const auto expect = expectation_for(rep, a, b);
  std::optional<FieldOperator> ope;
  std::optional<FieldOperator> opr;
  LocalField field_residue;
  bool residue_null = false;
  if (expect) {
    ope.emplace(fock, expect->rhs.delta_part);
    field_residue = bracket_residue(br, expect->rhs);
    residue_null = rep.mode() == NullMode::Full && is_null(field_residue);
    if (residue_null)
      opr.emplace(fock, field_residue);
  }

  std::vector<std::pair<int, int>> km;
  for (int k = -K; k <= K; ++k)
    for (int mm = -K; mm <= K; ++mm)
      if (std::abs(k + mm) <= K)
        km.emplace_back(k, mm);

  RelationEntry oracle;
  oracle.instance.id = RelationId::Oracle;
  oracle.instance.level = "mode";
  oracle.instance.subject = to_string(a) + "," + to_string(b);
  std::vector<RelationEntry> rel(expect ? km.size() : 0);
  for (std::size_t q = 0; q < rel.size(); ++q) {
    rel[q].instance.id = expect->id;
    rel[q].instance.level = "mode";
    rel[q].instance.nodes = expect->nodes;
    rel[q].instance.sign = expect->sign;
    rel[q].instance.modes = km[q];
  }

  const std::size_t span = static_cast<std::size_t>(2 * K + 1);
  std::vector<StateVec> as(span), bs(span), fs(span), es(span), rs(span);
  auto idx = [K](int x) { return static_cast<std::size_t>(x + K); };

  for (const FockState &s : states) {
    for (int x = -K; x <= K; ++x) {
      as[idx(x)] = opa.apply(x, s);
      bs[idx(x)] = opb.apply(x, s);
      fs[idx(x)] = opf.apply(x, s);
      if (ope)
        es[idx(x)] = ope->apply(x, s);
      if (opr)
        rs[idx(x)] = opr->apply(x, s);
    }
    for (std::size_t q = 0; q < km.size(); ++q) {
      const auto [k, mm] = km[q];
      const int j = k + mm;
      std::vector<StateVec::Term> buf;
      for (const auto &[u, c] : bs[idx(mm)].terms())
        opa.accumulate(k, u, c, buf);
      for (const auto &[u, c] : as[idx(k)].terms())
        opb.accumulate(mm, u, -c, buf);
      const StateVec lhs = StateVec::from_terms(std::move(buf));

      StateVec oracle_rhs = fs[idx(j)];
      if (j == 0)
        oracle_rhs += StateVec::basis(s, br.ddelta_part * Coeff(k));
      ++oracle.samples;
      if (lhs != oracle_rhs && oracle.status == Status::Pass) {
        oracle.status = Status::Fail;
        oracle.detail = "k=" + std::to_string(k) + " m=" + std::to_string(mm) + " on " + fock.dump(s) +
                        ": commutator " + fock.dump(lhs) + " vs bracket " + fock.dump(oracle_rhs);
      }

      if (!expect)
        continue;
      RelationEntry &e = rel[q];
      ++e.samples;
      StateVec rhs = es[idx(j)];
      if (j == 0)
        rhs += StateVec::basis(s, expect->rhs.ddelta_part * Coeff(k));
      if (lhs == rhs)
        continue;
      if (residue_null && lhs == rhs + rs[idx(j)]) {
        if (e.status == Status::Pass) {
          e.status = Status::PassModNull;
          e.residue = field_residue;
        }
        continue;
      }
      if (e.status != Status::Fail) {
        e.status = Status::Fail;
        e.residue = field_residue;
        e.detail = "on " + fock.dump(s) + ": commutator " + fock.dump(lhs) + " vs expected " + fock.dump(rhs);
      }
    }
  }

  std::vector<RelationEntry> out;
  const double ms = millis_since(t0);
  oracle.millis = ms;
  out.push_back(std::move(oracle));
  for (auto &e : rel) {
    e.millis = ms / static_cast<double>(rel.size() + 1);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RelationEntry> check_jacobi(const RepContext &rep, int count, std::uint64_t seed, int K,
                                        const std::vector<FockState> &states) {
  std::vector<RelationEntry> out;
  const auto gens = all_generators(rep.table());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> mode(-K, K);
  const FockSpace &fock = rep.fock();

  for (int n = 0; n < count; ++n) {
    const auto t0 = Clock::now();
    const GenRef ga = gens[pick(rng)];
    const GenRef gb = gens[pick(rng)];
    const GenRef gc = gens[pick(rng)];
    const int k = mode(rng);
    const int l = mode(rng);
    std::vector<int> ms;
    for (int x = -K; x <= K; ++x)
      if (std::abs(k + l + x) <= K)
        ms.push_back(x);
    const int mm = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];

    const FieldOperator a(fock, lookup(rep.table(), ga));
    const FieldOperator b(fock, lookup(rep.table(), gb));
    const FieldOperator c(fock, lookup(rep.table(), gc));
    auto comm = [](const FieldOperator &x, int xm, const FieldOperator &y, int ym, const StateVec &v) {
      return x.apply(xm, y.apply(ym, v)) - y.apply(ym, x.apply(xm, v));
    };
    // [X_x, [Y_y, Z_z]] v
    auto nested = [&](const FieldOperator &x, int xm, const FieldOperator &y, int ym,
                      const FieldOperator &z, int zm, const StateVec &v) {
      return x.apply(xm, comm(y, ym, z, zm, v)) - comm(y, ym, z, zm, x.apply(xm, v));
    };

    RelationEntry e;
    e.instance.id = RelationId::Jacobi;
    e.instance.level = "mode";
    e.instance.nodes = {n};
    std::ostringstream subj;
    subj << to_string(ga) << "(" << k << ")," << to_string(gb) << "(" << l << ")," << to_string(gc) << "("
         << mm << ")";
    e.instance.subject = subj.str();
    for (const FockState &s : states) {
      const StateVec v = StateVec::basis(s);
      StateVec sum = nested(a, k, b, l, c, mm, v);
      sum += nested(b, l, c, mm, a, k, v);
      sum += nested(c, mm, a, k, b, l, v);
      ++e.samples;
      if (!sum.is_zero() && e.status == Status::Pass) {
        e.status = Status::Fail;
        e.detail = "on " + fock.dump(s) + ": cyclic sum " + fock.dump(sum);
      }
    }
    e.millis = millis_since(t0);
    out.push_back(std::move(e));
  }
  return out;
}

// ------------------------------------------------------------------ verify

std::size_t RelationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const RelationEntry &e) { return e.status == s; }));
}

std::size_t RelationReport::count(RelationId id, Status s) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const RelationEntry &e) {
    return e.instance.id == id && e.status == s;
  }));
}

unsigned resolve_threads(unsigned requested) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (requested > 0)
    return requested;
  if (const char *env = std::getenv("TOROIDAL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0)
      return std::min(hw, static_cast<unsigned>(v));
  }
  return hw;
}

RelationReport verify(const LatticeContext &ctx, const VerifyOptions &opts) {
  if (opts.K < 1)
    throw ConfigError("K must be >= 1");
  if (opts.twice_E < 0)
    throw ConfigError("E must be >= 0");
  const RepContext rep(ctx, opts.mode);
  const int nodes = rep.table().num_nodes();
  // Largest single-particle level reachable in a nested mode application.
  const int reach = (opts.twice_E + 1) / 2 + 2 * opts.K;
  if (reach > rep.fock().max_level())
    throw ConfigError("K and E exceed the Fock state capacity for " + ctx.name());

  RelationReport report;
  report.type = ctx.type();
  report.rank = ctx.rank();
  report.options = opts;
  auto &out = report.entries;

  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < nodes; ++j) {
      out.push_back(check_R1(rep, i, j));
      out.push_back(check_R2(rep, i, j, +1));
      out.push_back(check_R2(rep, i, j, -1));
      out.push_back(check_R3(rep, i, j));
      out.push_back(check_R4_and_serre(rep, i, j, +1));
      out.push_back(check_R4_and_serre(rep, i, j, -1));
    }
    for (const auto &[kl, f] : rep.table().root_fields)
      out.push_back(check_R2_root_field(rep, i, kl.first, kl.second));
    out.push_back(check_level(rep, i));
  }

  const std::vector<FockState> states = enumerate_states(rep.fock(), opts.twice_E);
  for (auto &e : check_null_root(rep, states))
    out.push_back(std::move(e));

  std::vector<LocalField> residues;
  {
    std::set<std::string> seen;
    for (const auto &e : out)
      if (e.status == Status::PassModNull && seen.insert(to_expr(e.residue)).second)
        residues.push_back(e.residue);
  }
  for (const auto &r : residues)
    out.push_back(check_central(rep, r));

  if (opts.mode_sweep) {
    const auto gens = all_generators(rep.table());
    std::vector<std::pair<GenRef, GenRef>> pairs;
    for (const auto &a : gens)
      for (const auto &b : gens)
        pairs.emplace_back(a, b);
    auto results = parallel_map(pairs.size(), resolve_threads(opts.threads), [&](std::size_t i) {
      return sweep_pair(rep, pairs[i].first, pairs[i].second, opts.K, states);
    });
    for (auto &r : results)
      for (auto &e : r)
        out.push_back(std::move(e));
  }

  if (opts.jacobi_triples > 0)
    for (auto &e : check_jacobi(rep, opts.jacobi_triples, opts.seed, opts.K, states))
      out.push_back(std::move(e));

  std::stable_sort(out.begin(), out.end(), [](const RelationEntry &x, const RelationEntry &y) {
    return sort_key(x.instance) < sort_key(y.instance);
  });
  return report;
}

} // namespace toroidal
