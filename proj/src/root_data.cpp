#include "toroidal/root_data.hpp"

#include <algorithm>
#include <sstream>

namespace toroidal {

char to_char(AlgType t) {
  switch (t) {
  case AlgType::A: return 'A';
  case AlgType::B: return 'B';
  case AlgType::C: return 'C';
  case AlgType::D: return 'D';
  }
  return '?';
}

AlgType parse_alg_type(std::string_view s) {
  if (s.size() == 1) {
    switch (s.front()) {
    case 'A': case 'a': return AlgType::A;
    case 'B': case 'b': return AlgType::B;
    case 'C': case 'c': return AlgType::C;
    case 'D': case 'd': return AlgType::D;
    default: break;
    }
  }
  throw ConfigError("unknown algebra type '" + std::string(s) + "' (expected A, B, C or D)");
}

// ---------------------------------------------------------------- labels

std::uint32_t AtomicLabel::order_key() const {
  std::uint32_t group = 0;
  switch (kind) {
  case Kind::CBar: case Kind::CBarStar: group = 0; break;
  case Kind::Eps: case Kind::EpsStar: group = 1; break;
  case Kind::EpsBar: case Kind::EpsBarStar: group = 2; break;
  case Kind::Ghost: group = 3; break;
  }
  return (group << 24) | (static_cast<std::uint32_t>(index) << 1) | (starred() ? 1u : 0u);
}

std::string AtomicLabel::str() const {
  const std::string i = std::to_string(index);
  switch (kind) {
  case Kind::CBar: return "cbar";
  case Kind::CBarStar: return "cbar*";
  case Kind::Eps: return "eps(" + i + ")";
  case Kind::EpsStar: return "eps*(" + i + ")";
  case Kind::EpsBar: return "epsbar(" + i + ")";
  case Kind::EpsBarStar: return "epsbar*(" + i + ")";
  case Kind::Ghost: return "e";
  }
  return "?";
}

std::string AtomicLabel::short_str() const {
  const std::string i = std::to_string(index);
  switch (kind) {
  case Kind::CBar: return "cbar";
  case Kind::CBarStar: return "cbar*";
  case Kind::Eps: return "eps" + i;
  case Kind::EpsStar: return "eps*" + i;
  case Kind::EpsBar: return "epsbar" + i;
  case Kind::EpsBarStar: return "epsbar*" + i;
  case Kind::Ghost: return "e";
  }
  return "?";
}

// -------------------------------------------------------- lattice vectors

LatticeVector LatticeVector::cbar() {
  LatticeVector v;
  v.add({Basis::Kind::CBar, 0}, 1);
  return v;
}

LatticeVector LatticeVector::dbar() {
  LatticeVector v;
  v.add({Basis::Kind::DBar, 0}, 1);
  return v;
}

LatticeVector LatticeVector::eps(int i) {
  LatticeVector v;
  v.add({Basis::Kind::Eps, i}, 1);
  return v;
}

LatticeVector LatticeVector::eps_bar(int i) {
  LatticeVector v;
  v.add({Basis::Kind::EpsBar, i}, 1);
  return v;
}

Coeff LatticeVector::coeff(Basis b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Coeff() : it->second;
}

void LatticeVector::add(Basis b, const Coeff &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

LatticeVector &LatticeVector::operator+=(const LatticeVector &o) {
  for (const auto &[b, c] : o.terms_)
    add(b, c);
  return *this;
}

LatticeVector &LatticeVector::operator-=(const LatticeVector &o) {
  for (const auto &[b, c] : o.terms_)
    add(b, -c);
  return *this;
}

LatticeVector &LatticeVector::operator*=(const Coeff &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[b, x] : terms_)
    x *= c;
  return *this;
}

std::string LatticeVector::str() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[b, c] : terms_) {
    std::string sym;
    switch (b.kind) {
    case Basis::Kind::CBar: sym = "cbar"; break;
    case Basis::Kind::DBar: sym = "dbar"; break;
    case Basis::Kind::Eps: sym = "eps(" + std::to_string(b.index) + ")"; break;
    case Basis::Kind::EpsBar: sym = "epsbar(" + std::to_string(b.index) + ")"; break;
    }
    const bool mixed = !c.rational_part().is_zero() && !c.sqrt2_part().is_zero();
    const bool neg = !mixed && (c.rational_part().sign() < 0 || c.sqrt2_part().sign() < 0);
    const Coeff mag = neg ? -c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (mag == Coeff(1))
      os << sym;
    else if (!mixed)
      os << mag.str() << "*" << sym;
    else
      os << "(" << mag.str() << ")*" << sym;
  }
  return os.str();
}

Coeff form(const LatticeVector &u, const LatticeVector &v) {
  using K = LatticeVector::Basis::Kind;
  Coeff s;
  for (const auto &[b, c] : u.terms()) {
    switch (b.kind) {
    case K::CBar: s += c * v.coeff({K::DBar, 0}); break;
    case K::DBar: s += c * v.coeff({K::CBar, 0}); break;
    case K::Eps:
    case K::EpsBar: s += c * v.coeff(b); break;
    }
  }
  return s;
}

// ----------------------------------------------------------- linear solve

std::optional<std::vector<Coeff>> solve_linear(std::vector<std::vector<Coeff>> m,
                                               std::vector<Coeff> rhs) {
  const std::size_t rows = m.size();
  if (rows == 0)
    return std::nullopt;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero())
      ++p;
    if (p == rows)
      return std::nullopt; // free column: not uniquely solvable
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    const Coeff inv = Coeff(1) / m[r][c];
    for (auto &x : m[r])
      x *= inv;
    rhs[r] *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || m[q][c].is_zero())
        continue;
      const Coeff f = m[q][c];
      for (std::size_t k = 0; k < cols; ++k)
        m[q][k] -= f * m[r][k];
      rhs[q] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() != cols)
    return std::nullopt;
  for (std::size_t q = r; q < rows; ++q)
    if (!rhs[q].is_zero())
      return std::nullopt;
  rhs.resize(cols);
  return rhs;
}

// ----------------------------------------------------------- construction

int min_rank(AlgType t) { return t == AlgType::D ? 4 : 2; }

bool LatticeContext::has_label(AtomicLabel l) const {
  return std::binary_search(alphabet_.begin(), alphabet_.end(), l);
}

LatticeVector LatticeContext::label_vector(AtomicLabel l) const {
  using K = AtomicLabel::Kind;
  switch (l.kind) {
  case K::CBar: case K::CBarStar: return LatticeVector::cbar();
  case K::Eps: case K::EpsStar: return LatticeVector::eps(l.index);
  case K::EpsBar: case K::EpsBarStar: return LatticeVector::eps_bar(l.index);
  case K::Ghost: break;
  }
  throw ConfigError("the ghost field has no lattice vector");
}

std::string LatticeContext::name() const {
  return std::string(1, to_char(type_)) + std::to_string(type_ == AlgType::A ? n_ - 1 : n_);
}

namespace {

std::vector<Coeff> expected_d_table(AlgType t, int k) {
  std::vector<Coeff> d(static_cast<std::size_t>(k + 1), Coeff(1));
  if (t == AlgType::B)
    d.back() = Rational(1, 2);
  if (t == AlgType::C)
    for (int i = 1; i < k; ++i)
      d[static_cast<std::size_t>(i)] = Rational(1, 2);
  return d;
}

} // namespace

LatticeContext build_lattice(AlgType type, int n) {
  if (n < min_rank(type)) {
    std::ostringstream os;
    os << "rank out of range: type " << to_char(type) << " requires n >= " << min_rank(type)
       << ", got n = " << n;
    throw ConfigError(os.str());
  }
  using LV = LatticeVector;
  LatticeContext ctx;
  ctx.type_ = type;
  ctx.n_ = n;
  const LV cbar = LV::cbar();
  const Coeff s2 = Coeff::sqrt2();

  switch (type) {
  case AlgType::A: ctx.alpha_max_ = LV::eps(1) - LV::eps(n); break;
  case AlgType::B:
  case AlgType::D: ctx.alpha_max_ = LV::eps(1) + LV::eps(2); break;
  case AlgType::C: ctx.alpha_max_ = s2 * LV::eps(1); break;
  }

  if (type == AlgType::C) {
    ctx.beta_ = LV::eps(1) - s2 * cbar;
    ctx.beta_bar_ = LV::eps_bar(1) - s2 * cbar;
  } else {
    ctx.beta_ = LV::eps(1) - cbar;
  }

  LV alpha0;
  switch (type) {
  case AlgType::A: alpha0 = LV::eps(n) - ctx.beta_; break;
  case AlgType::B:
  case AlgType::D: alpha0 = -ctx.beta_ - LV::eps(2); break;
  case AlgType::C: alpha0 = -(Coeff::inv_sqrt2() * (ctx.beta_ + LV::eps(1))); break;
  }
  if (alpha0 != cbar - ctx.alpha_max_)
    throw ConsistencyError("alpha_0 via beta disagrees with cbar - alpha_max for " + ctx.name());
  ctx.roots_.push_back(alpha0);

  const int k = type == AlgType::A ? n - 1 : n;
  for (int i = 1; i <= n - 1; ++i) {
    LV r = LV::eps(i) - LV::eps(i + 1);
    if (type == AlgType::C)
      r *= Coeff::inv_sqrt2();
    ctx.roots_.push_back(std::move(r));
  }
  switch (type) {
  case AlgType::A: break;
  case AlgType::B: ctx.roots_.push_back(LV::eps(n)); break;
  case AlgType::C: ctx.roots_.push_back(s2 * LV::eps(n)); break;
  case AlgType::D: ctx.roots_.push_back(LV::eps(n - 1) + LV::eps(n)); break;
  }
  if (ctx.top_node() != k)
    throw ConsistencyError("unexpected node count for " + ctx.name());

  // d-vector and Cartan matrix from the Gram matrix.
  const auto nodes = static_cast<std::size_t>(k + 1);
  ctx.d_.resize(nodes);
  for (std::size_t i = 0; i < nodes; ++i)
    ctx.d_[i] = form(ctx.roots_[i], ctx.roots_[i]) / Coeff(2);
  if (ctx.d_ != expected_d_table(type, k))
    throw ConsistencyError("root norms disagree with the d-table for " + ctx.name());

  ctx.cartan_.assign(nodes, std::vector<long long>(nodes, 0));
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = 0; j < nodes; ++j) {
      const Coeff g = form(ctx.roots_[i], ctx.roots_[j]);
      const Coeff a = Coeff(2) * g / form(ctx.roots_[i], ctx.roots_[i]);
      if (!a.is_integer())
        throw ConsistencyError("non-integer Cartan entry " + a.str() + " at (" + std::to_string(i) +
                               "," + std::to_string(j) + ") for " + ctx.name());
      const long long v = a.to_int64();
      if (i != j && v > 0)
        throw ConsistencyError("positive off-diagonal Cartan entry for " + ctx.name());
      if (g != ctx.d_[i] * Coeff(v))
        throw ConsistencyError("(alpha_i|alpha_j) != d_i a_ij for " + ctx.name());
      ctx.cartan_[i][j] = v;
    }
  }

  // Marks: a_0 = 1 and sum_{i>=1} a_i alpha_i = alpha_max.
  {
    std::vector<LV::Basis> basis;
    for (int i = 1; i <= n; ++i)
      basis.push_back({LV::Basis::Kind::Eps, i});
    std::vector<std::vector<Coeff>> m(basis.size(), std::vector<Coeff>(static_cast<std::size_t>(k)));
    std::vector<Coeff> rhs(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
      for (int c = 1; c <= k; ++c)
        m[r][static_cast<std::size_t>(c - 1)] = ctx.roots_[static_cast<std::size_t>(c)].coeff(basis[r]);
      rhs[r] = ctx.alpha_max_.coeff(basis[r]);
    }
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol)
      throw ConsistencyError("no null-root marks solve sum a_i alpha_i = cbar for " + ctx.name());
    ctx.marks_.push_back(1);
    for (const Coeff &a : *sol) {
      if (!a.is_integer() || a.to_int64() < 0)
        throw ConsistencyError("null-root mark " + a.str() + " is not a nonnegative integer");
      ctx.marks_.push_back(a.to_int64());
    }
    LV total;
    for (std::size_t i = 0; i < nodes; ++i)
      total += Coeff(ctx.marks_[i]) * ctx.roots_[i];
    if (total != cbar)
      throw ConsistencyError("sum of marks times simple roots is not cbar for " + ctx.name());
  }

  if (form(ctx.beta_, ctx.beta_) != Coeff(1))
    throw ConsistencyError("(beta|beta) != 1");
  for (int i = 1; i <= n; ++i)
    if (form(ctx.beta_, LV::eps(i)) != Coeff(i == 1 ? 1 : 0))
      throw ConsistencyError("(beta|eps_i) != delta_1i");

  auto &al = ctx.alphabet_;
  al.push_back(AtomicLabel::cbar());
  al.push_back(AtomicLabel::cbar_star());
  for (int i = 1; i <= n; ++i) {
    al.push_back(AtomicLabel::eps(i));
    al.push_back(AtomicLabel::eps_star(i));
  }
  if (type == AlgType::C)
    for (int i = 1; i <= n; ++i) {
      al.push_back(AtomicLabel::eps_bar(i));
      al.push_back(AtomicLabel::eps_bar_star(i));
    }
  if (type == AlgType::B)
    al.push_back(AtomicLabel::ghost());
  std::sort(al.begin(), al.end());
  return ctx;
}

const LatticeVector &simple_root(const LatticeContext &ctx, int i) {
  if (i < 0 || i > ctx.top_node())
    throw std::out_of_range("node index " + std::to_string(i) + " outside [0, " +
                            std::to_string(ctx.top_node()) + "]");
  return ctx.simple_roots()[static_cast<std::size_t>(i)];
}

long long cartan_entry(const LatticeContext &ctx, int i, int j) {
  simple_root(ctx, i);
  simple_root(ctx, j);
  return ctx.cartan_matrix()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::vector<long long> null_root_marks(const LatticeContext &ctx) { return ctx.marks(); }

std::vector<Coeff> d_vector(const LatticeContext &ctx) { return ctx.d_vector(); }

} // namespace toroidal
