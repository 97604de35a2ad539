#include "toroidal/wick.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toroidal {

// ---------------------------------------------------------------- LinField

void LinField::add(AtomicLabel l, const Coeff &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

LinField LinField::from_vector(const LatticeVector &v, bool starred) {
  using K = LatticeVector::Basis::Kind;
  LinField f;
  for (const auto &[b, c] : v.terms()) {
    switch (b.kind) {
    case K::CBar:
      f.add(starred ? AtomicLabel::cbar_star() : AtomicLabel::cbar(), c);
      break;
    case K::Eps:
      f.add(starred ? AtomicLabel::eps_star(b.index) : AtomicLabel::eps(b.index), c);
      break;
    case K::EpsBar:
      f.add(starred ? AtomicLabel::eps_bar_star(b.index) : AtomicLabel::eps_bar(b.index), c);
      break;
    case K::DBar:
      throw ConfigError("dbar carries no fermion field");
    }
  }
  return f;
}

LinField &LinField::operator+=(const LinField &o) {
  for (const auto &[l, c] : o.terms_)
    add(l, c);
  return *this;
}

LinField &LinField::operator-=(const LinField &o) {
  for (const auto &[l, c] : o.terms_)
    add(l, -c);
  return *this;
}

LinField &LinField::operator*=(const Coeff &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[l, x] : terms_)
    x *= c;
  return *this;
}

LinField beta_field(const LatticeContext &ctx, bool starred) {
  return LinField::from_vector(ctx.beta(), starred);
}

LinField beta_bar_field(const LatticeContext &ctx, bool starred) {
  if (!ctx.beta_bar())
    throw ConfigError("betabar exists only in type C");
  return LinField::from_vector(*ctx.beta_bar(), starred);
}

// ----------------------------------------------------------------- Pairing

Pairing::Pairing(const LatticeContext &ctx) : alphabet_(ctx.alphabet()) {
  const std::size_t n = alphabet_.size();
  table_.assign(n, std::vector<Coeff>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const AtomicLabel a = alphabet_[i];
      const AtomicLabel b = alphabet_[j];
      const bool ga = a.kind == AtomicLabel::Kind::Ghost;
      const bool gb = b.kind == AtomicLabel::Kind::Ghost;
      if (ga || gb) {
        table_[i][j] = (ga && gb) ? Coeff(-1) : Coeff(0);
      } else if (a.starred() != b.starred()) {
        table_[i][j] = form(ctx.label_vector(a), ctx.label_vector(b));
      }
    }
  }
}

bool Pairing::contains(AtomicLabel l) const {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), l);
}

std::size_t Pairing::index_of(AtomicLabel l) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), l);
  if (it == alphabet_.end() || *it != l)
    throw ConfigError("label " + l.str() + " is not in the alphabet");
  return static_cast<std::size_t>(it - alphabet_.begin());
}

Coeff Pairing::operator()(AtomicLabel a, AtomicLabel b) const {
  return table_[index_of(a)][index_of(b)];
}

Coeff pair(const Pairing &p, const LinField &u, const LinField &v) {
  Coeff s;
  for (const auto &[a, ca] : u.terms())
    for (const auto &[b, cb] : v.terms()) {
      const Coeff x = p(a, b);
      if (!x.is_zero())
        s += ca * cb * x;
    }
  return s;
}

// -------------------------------------------------------------- LocalField

const char *to_string(NullMode m) { return m == NullMode::Strict ? "strict" : "full"; }

LocalField LocalField::identity(const Coeff &c) {
  LocalField f;
  f.id_ = c;
  return f;
}

LocalField LocalField::mono(AtomicLabel a, AtomicLabel b, const Coeff &c) {
  LocalField f;
  f.add_mono(a, b, c);
  return f;
}

void LocalField::add_mono(AtomicLabel a, AtomicLabel b, const Coeff &c) {
  if (a == b || c.is_zero())
    return;
  QuadMono m{a, b};
  Coeff x = c;
  if (b < a) {
    m = {b, a};
    x = -x;
  }
  auto [it, inserted] = quad_.try_emplace(m, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero())
      quad_.erase(it);
  }
}

LocalField &LocalField::operator+=(const LocalField &o) {
  id_ += o.id_;
  for (const auto &[m, c] : o.quad_)
    add_mono(m.u, m.v, c);
  return *this;
}

LocalField &LocalField::operator-=(const LocalField &o) {
  id_ -= o.id_;
  for (const auto &[m, c] : o.quad_)
    add_mono(m.u, m.v, -c);
  return *this;
}

LocalField &LocalField::operator*=(const Coeff &c) {
  if (c.is_zero()) {
    *this = LocalField();
    return *this;
  }
  id_ *= c;
  for (auto &[m, x] : quad_)
    x *= c;
  return *this;
}

std::vector<AtomicLabel> LocalField::labels() const {
  std::set<AtomicLabel> s;
  for (const auto &[m, c] : quad_) {
    s.insert(m.u);
    s.insert(m.v);
  }
  return {s.begin(), s.end()};
}

LocalField normal_quad(const LinField &u, const LinField &v) {
  LocalField f;
  for (const auto &[a, ca] : u.terms())
    for (const auto &[b, cb] : v.terms())
      f.add_mono(a, b, ca * cb);
  return f;
}

// ----------------------------------------------------------------- bracket

namespace {

// Five-term Wick formula for one monomial pair, accumulated with weight w.
void bracket_mono(const Pairing &p, const QuadMono &r, const QuadMono &s, const Coeff &w,
                  BracketResult &out) {
  const Coeff r1s1 = p(r.u, s.u);
  const Coeff r1s2 = p(r.u, s.v);
  const Coeff r2s1 = p(r.v, s.u);
  const Coeff r2s2 = p(r.v, s.v);
  if (!r1s2.is_zero())
    out.delta_part.add_mono(r.v, s.u, w * r1s2);
  if (!r1s1.is_zero())
    out.delta_part.add_mono(r.v, s.v, -(w * r1s1));
  if (!r2s1.is_zero())
    out.delta_part.add_mono(r.u, s.v, w * r2s1);
  if (!r2s2.is_zero())
    out.delta_part.add_mono(r.u, s.u, -(w * r2s2));
  const Coeff central = r1s2 * r2s1 - r1s1 * r2s2;
  if (!central.is_zero())
    out.ddelta_part += w * central;
}

} // namespace

BracketResult bracket(const Pairing &p, const LocalField &a, const LocalField &b) {
  BracketResult out;
  for (const auto &[ma, ca] : a.quad_part())
    for (const auto &[mb, cb] : b.quad_part())
      bracket_mono(p, ma, mb, ca * cb, out);
  return out;
}

Coeff quad_pairing(const Pairing &p, const QuadMono &a, const QuadMono &b) {
  return -(p(a.u, b.u) * p(a.v, b.v)) + p(a.u, b.v) * p(a.v, b.u);
}

LocalField ad_power(const Pairing &p, const LocalField &x, const LocalField &y, int power,
                    NullMode mode) {
  if (power < 1)
    throw std::invalid_argument("ad_power requires a positive power");
  LocalField z = mode == NullMode::Strict ? mod_null(y) : y;
  const LocalField xx = mode == NullMode::Strict ? mod_null(x) : x;
  for (int i = 0; i < power; ++i) {
    z = bracket(p, xx, z).delta_part;
    if (mode == NullMode::Strict)
      z = mod_null(z);
  }
  return z;
}

bool is_null(const LocalField &a) {
  if (!a.id_part().is_zero())
    return false;
  return std::all_of(a.quad_part().begin(), a.quad_part().end(), [](const auto &kv) {
    return kv.first.u.is_null() || kv.first.v.is_null();
  });
}

LocalField mod_null(const LocalField &a) {
  LocalField r = LocalField::identity(a.id_part());
  for (const auto &[m, c] : a.quad_part())
    if (!m.u.is_null() && !m.v.is_null())
      r.add_mono(m.u, m.v, c);
  return r;
}

} // namespace toroidal
