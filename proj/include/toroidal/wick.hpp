#pragma once

#include <map>
#include <vector>

#include "toroidal/coeff.hpp"
#include "toroidal/root_data.hpp"

namespace toroidal {

/// Coeff-linear combination of atomic fermion labels.
class LinField {
public:
  LinField() = default;
  LinField(AtomicLabel l) { add(l, 1); } // NOLINT(google-explicit-constructor)

  /// Field attached to a lattice vector (c̄, eps_i, epsbar_i components),
  /// starred or not. d̄ components have no field and throw ConfigError.
  static LinField from_vector(const LatticeVector &v, bool starred);

  const std::map<AtomicLabel, Coeff> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LinField &operator+=(const LinField &o);
  LinField &operator-=(const LinField &o);
  LinField &operator*=(const Coeff &c);
  friend LinField operator+(LinField a, const LinField &b) { return a += b; }
  friend LinField operator-(LinField a, const LinField &b) { return a -= b; }
  friend LinField operator*(const Coeff &c, LinField f) { return f *= c; }

  friend bool operator==(const LinField &, const LinField &) = default;

private:
  void add(AtomicLabel l, const Coeff &c);
  std::map<AtomicLabel, Coeff> terms_;
};

/// beta, beta* (all types) and betabar, betabar* (type C), expanded.
LinField beta_field(const LatticeContext &ctx, bool starred);
LinField beta_bar_field(const LatticeContext &ctx, bool starred);

/// The symmetric form <.,.> on the label alphabet of one lattice context.
class Pairing {
public:
  explicit Pairing(const LatticeContext &ctx);

  const std::vector<AtomicLabel> &alphabet() const { return alphabet_; }
  bool contains(AtomicLabel l) const;
  /// Dense position of a label in the alphabet; throws ConfigError if absent.
  std::size_t index_of(AtomicLabel l) const;

  Coeff operator()(AtomicLabel a, AtomicLabel b) const;

private:
  std::vector<AtomicLabel> alphabet_;
  std::vector<std::vector<Coeff>> table_;
};

Coeff pair(const Pairing &p, const LinField &u, const LinField &v);

/// :u v: with u strictly before v in the label order.
struct QuadMono {
  AtomicLabel u;
  AtomicLabel v;
  friend bool operator==(const QuadMono &, const QuadMono &) = default;
  friend auto operator<=>(const QuadMono &, const QuadMono &) = default;
};

/// id_part * 1 + sum of coefficients times canonical :u v: monomials.
class LocalField {
public:
  LocalField() = default;
  static LocalField identity(const Coeff &c);
  /// Canonical monomial :a b: with coefficient c (sign absorbed, :a a: = 0).
  static LocalField mono(AtomicLabel a, AtomicLabel b, const Coeff &c = 1);

  const Coeff &id_part() const { return id_; }
  const std::map<QuadMono, Coeff> &quad_part() const { return quad_; }
  bool is_zero() const { return id_.is_zero() && quad_.empty(); }
  bool is_scalar() const { return quad_.empty(); }

  void add_mono(AtomicLabel a, AtomicLabel b, const Coeff &c);
  void add_identity(const Coeff &c) { id_ += c; }

  LocalField &operator+=(const LocalField &o);
  LocalField &operator-=(const LocalField &o);
  LocalField &operator*=(const Coeff &c);
  friend LocalField operator+(LocalField a, const LocalField &b) { return a += b; }
  friend LocalField operator-(LocalField a, const LocalField &b) { return a -= b; }
  friend LocalField operator*(const Coeff &c, LocalField f) { return f *= c; }
  LocalField operator-() const { return Coeff(-1) * *this; }

  friend bool operator==(const LocalField &, const LocalField &) = default;

  /// Every label used by a monomial.
  std::vector<AtomicLabel> labels() const;

private:
  Coeff id_;
  std::map<QuadMono, Coeff> quad_;
};

/// [A(z), B(w)] = delta_part(w) δ(z-w) + ddelta_part ∂_w δ(z-w).
struct BracketResult {
  LocalField delta_part;
  Coeff ddelta_part;
  bool is_zero() const { return delta_part.is_zero() && ddelta_part.is_zero(); }
  friend bool operator==(const BracketResult &, const BracketResult &) = default;
};

/// How null monomials (those containing c̄ or c̄*) are treated.
enum class NullMode {
  Strict, ///< quotient: null monomials are dropped after every bracket
  Full,   ///< null residues are kept and classified
};

const char *to_string(NullMode m);

/// Bilinear normal-ordered product :u v:.
LocalField normal_quad(const LinField &u, const LinField &v);

/// Wick bracket of two quadratic fields. Identity components bracket to zero.
BracketResult bracket(const Pairing &p, const LocalField &a, const LocalField &b);

/// <:r1 r2:, :s1 s2:> = -<r1,s1><r2,s2> + <r1,s2><r2,s1>.
Coeff quad_pairing(const Pairing &p, const QuadMono &a, const QuadMono &b);

/// (ad X)^power Y, feeding only the δ part forward at each step.
/// In strict mode mod_null is applied after every bracket.
LocalField ad_power(const Pairing &p, const LocalField &x, const LocalField &y, int power,
                    NullMode mode = NullMode::Full);

/// True iff id_part = 0 and every monomial contains c̄ or c̄*.
bool is_null(const LocalField &a);
/// Drops every monomial containing c̄ or c̄*.
LocalField mod_null(const LocalField &a);

} // namespace toroidal
