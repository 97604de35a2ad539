#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toroidal/coeff.hpp"

namespace toroidal {

/// Invalid user-supplied configuration (rank out of range, unknown label...).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Internal data disagrees with itself, e.g. a non-integer Cartan entry.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

enum class AlgType { A, B, C, D };

char to_char(AlgType t);
AlgType parse_alg_type(std::string_view s);

/// Mode-free fermion label. Total order:
/// cbar < cbar* < eps(1) < eps*(1) < ... < eps*(n) < epsbar(1) < ... < e.
struct AtomicLabel {
  enum class Kind : std::uint8_t { CBar, CBarStar, Eps, EpsStar, EpsBar, EpsBarStar, Ghost };

  Kind kind = Kind::CBar;
  int index = 0; // 1-based for the eps families, 0 otherwise

  static constexpr AtomicLabel cbar() { return {Kind::CBar, 0}; }
  static constexpr AtomicLabel cbar_star() { return {Kind::CBarStar, 0}; }
  static constexpr AtomicLabel eps(int i) { return {Kind::Eps, i}; }
  static constexpr AtomicLabel eps_star(int i) { return {Kind::EpsStar, i}; }
  static constexpr AtomicLabel eps_bar(int i) { return {Kind::EpsBar, i}; }
  static constexpr AtomicLabel eps_bar_star(int i) { return {Kind::EpsBarStar, i}; }
  static constexpr AtomicLabel ghost() { return {Kind::Ghost, 0}; }

  bool starred() const {
    return kind == Kind::CBarStar || kind == Kind::EpsStar || kind == Kind::EpsBarStar;
  }
  /// c̄ or c̄*: pairs to zero with everything.
  bool is_null() const { return kind == Kind::CBar || kind == Kind::CBarStar; }

  std::uint32_t order_key() const;

  /// Expression syntax: eps(1), eps*(1), epsbar(2), cbar*, e, ...
  std::string str() const;
  /// Compact form used in state dumps: eps1, eps*1, epsbar2, cbar*, e.
  std::string short_str() const;

  friend bool operator==(const AtomicLabel &, const AtomicLabel &) = default;
  friend std::strong_ordering operator<=>(const AtomicLabel &a, const AtomicLabel &b) {
    return a.order_key() <=> b.order_key();
  }
};

/// Finitely supported combination of c̄, d̄, eps_i and epsbar_i.
class LatticeVector {
public:
  struct Basis {
    enum class Kind : std::uint8_t { CBar, DBar, Eps, EpsBar };
    Kind kind;
    int index = 0;
    friend auto operator<=>(const Basis &, const Basis &) = default;
  };

  LatticeVector() = default;
  static LatticeVector cbar();
  static LatticeVector dbar();
  static LatticeVector eps(int i);
  static LatticeVector eps_bar(int i);

  const std::map<Basis, Coeff> &terms() const { return terms_; }
  Coeff coeff(Basis b) const;
  bool is_zero() const { return terms_.empty(); }

  LatticeVector &operator+=(const LatticeVector &o);
  LatticeVector &operator-=(const LatticeVector &o);
  LatticeVector &operator*=(const Coeff &c);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector &b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector &b) { return a -= b; }
  friend LatticeVector operator*(const Coeff &c, LatticeVector v) { return v *= c; }
  LatticeVector operator-() const { return Coeff(-1) * *this; }

  friend bool operator==(const LatticeVector &, const LatticeVector &) = default;

  std::string str() const;

private:
  void add(Basis b, const Coeff &c);
  std::map<Basis, Coeff> terms_;
};

/// Symmetric bilinear form: (eps_i|eps_j) = δ_ij, (epsbar_i|epsbar_j) = δ_ij,
/// (c̄|d̄) = 1, every other basis pair 0.
Coeff form(const LatticeVector &u, const LatticeVector &v);

/// Lattice data for the affine diagram of one (type, rank). Immutable.
class LatticeContext {
public:
  AlgType type() const { return type_; }
  int rank() const { return n_; }
  /// Index of the last node: n-1 for type A, n otherwise.
  int top_node() const { return static_cast<int>(roots_.size()) - 1; }
  int num_nodes() const { return static_cast<int>(roots_.size()); }

  const std::vector<LatticeVector> &simple_roots() const { return roots_; }
  const LatticeVector &beta() const { return beta_; }
  /// Present for type C only.
  const std::optional<LatticeVector> &beta_bar() const { return beta_bar_; }
  const LatticeVector &alpha_max() const { return alpha_max_; }
  const std::vector<long long> &marks() const { return marks_; }
  const std::vector<Coeff> &d_vector() const { return d_; }
  const std::vector<std::vector<long long>> &cartan_matrix() const { return cartan_; }
  const std::vector<AtomicLabel> &alphabet() const { return alphabet_; }

  bool has_label(AtomicLabel l) const;
  /// Lattice vector underlying a label (starred labels map to the same vector).
  /// Throws ConfigError for the ghost, which has no lattice vector.
  LatticeVector label_vector(AtomicLabel l) const;

  std::string name() const; // e.g. "B3"

private:
  friend LatticeContext build_lattice(AlgType, int);
  LatticeContext() = default;

  AlgType type_ = AlgType::A;
  int n_ = 0;
  std::vector<LatticeVector> roots_;
  LatticeVector beta_;
  std::optional<LatticeVector> beta_bar_;
  LatticeVector alpha_max_;
  std::vector<long long> marks_;
  std::vector<Coeff> d_;
  std::vector<std::vector<long long>> cartan_;
  std::vector<AtomicLabel> alphabet_;
};

/// Minimum rank accepted for each type.
int min_rank(AlgType t);

/// Throws ConfigError if the rank constraint is violated.
LatticeContext build_lattice(AlgType type, int n);

/// Throws std::out_of_range for i outside [0, top_node].
const LatticeVector &simple_root(const LatticeContext &ctx, int i);
inline Coeff form(const LatticeContext &, const LatticeVector &u, const LatticeVector &v) {
  return form(u, v);
}
long long cartan_entry(const LatticeContext &ctx, int i, int j);
std::vector<long long> null_root_marks(const LatticeContext &ctx);
std::vector<Coeff> d_vector(const LatticeContext &ctx);

/// Solves M x = rhs over Q(sqrt2) for a square or overdetermined system.
/// Returns nullopt if the system is inconsistent or underdetermined.
std::optional<std::vector<Coeff>> solve_linear(std::vector<std::vector<Coeff>> m,
                                               std::vector<Coeff> rhs);

} // namespace toroidal
