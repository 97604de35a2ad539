#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/coeff.hpp"
#include "toroidal/wick.hpp"

namespace toroidal {

/// Half-integer mode k = twice/2 with `twice` odd. k < 0 creates, k > 0 annihilates.
struct HalfMode {
  int twice = -1;
  static HalfMode from_twice(int t);
  bool creation() const { return twice < 0; }
  Rational value() const { return Rational(twice, 2); }
  friend auto operator<=>(const HalfMode &, const HalfMode &) = default;
};

/// Canonical fermionic basis state, stored as an occupation bitset over
/// (label, mode) slots. Slot order encodes the canonical factor order:
/// modes ascending (most negative first), then label order. Meaning of a
/// slot depends on the FockSpace that produced it.
class FockState {
public:
  static constexpr int kWords = 8;
  static constexpr int kSlots = 64 * kWords;

  bool test(int slot) const { return (w_[slot >> 6] >> (slot & 63)) & 1u; }
  void set(int slot) { w_[slot >> 6] |= std::uint64_t{1} << (slot & 63); }
  void reset(int slot) { w_[slot >> 6] &= ~(std::uint64_t{1} << (slot & 63)); }
  bool is_vacuum() const;
  int particle_count() const;

  /// Number of occupied slots that precede `slot` in canonical order.
  int count_before(int slot) const {
    const int w = slot >> 6;
    const int b = slot & 63;
    int c = b == 63 ? 0 : std::popcount(w_[w] >> (b + 1));
    for (int i = w + 1; i < kWords; ++i)
      c += std::popcount(w_[i]);
    return c;
  }

  /// Calls f(slot) for every occupied slot in canonical order.
  template <class F> void for_each_slot(F &&f) const {
    for (int i = kWords - 1; i >= 0; --i) {
      std::uint64_t x = w_[i];
      while (x) {
        const int b = 63 - std::countl_zero(x);
        f(i * 64 + b);
        x &= ~(std::uint64_t{1} << b);
      }
    }
  }

  friend bool operator==(const FockState &, const FockState &) = default;
  friend std::strong_ordering operator<=>(const FockState &a, const FockState &b) {
    for (int i = kWords - 1; i >= 0; --i)
      if (a.w_[i] != b.w_[i])
        return a.w_[i] <=> b.w_[i];
    return std::strong_ordering::equal;
  }

private:
  std::array<std::uint64_t, kWords> w_{};
};

/// Exact finite linear combination of basis states; sorted, no zero entries.
class StateVec {
public:
  using Term = std::pair<FockState, Coeff>;

  StateVec() = default;
  static StateVec basis(const FockState &s, const Coeff &c = 1);
  /// Sorts and merges arbitrary (possibly repeated, possibly zero) terms.
  static StateVec from_terms(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(const FockState &s) const;

  StateVec &operator+=(const StateVec &o);
  StateVec &operator-=(const StateVec &o);
  StateVec &operator*=(const Coeff &c);
  friend StateVec operator+(StateVec a, const StateVec &b) { return a += b; }
  friend StateVec operator-(StateVec a, const StateVec &b) { return a -= b; }
  friend StateVec operator*(const Coeff &c, StateVec v) { return v *= c; }

  friend bool operator==(const StateVec &, const StateVec &) = default;

private:
  std::vector<Term> terms_;
};

/// Fermionic Fock space over a label alphabet with half-integer modes.
class FockSpace {
public:
  /// `labels` must be a subset of the pairing's alphabet. Each label may pair
  /// nontrivially with at most one label of `labels`, with an integer value.
  FockSpace(const Pairing &pairing, std::vector<AtomicLabel> labels);

  /// Full alphabet, or the alphabet without c̄, c̄* in strict mode.
  static FockSpace for_context(const LatticeContext &ctx, NullMode mode);

  const Pairing &pairing() const { return pairing_; }
  const std::vector<AtomicLabel> &labels() const { return labels_; }
  int num_labels() const { return static_cast<int>(labels_.size()); }
  /// Largest level (mode -(level + 1/2)) a state can hold.
  int max_level() const { return FockState::kSlots / num_labels() - 1; }
  bool contains(AtomicLabel l) const;
  int label_index(AtomicLabel l) const;

  int slot(int label_idx, int level) const {
    return level * num_labels() + (num_labels() - 1 - label_idx);
  }
  int slot_label(int slot) const { return num_labels() - 1 - slot % num_labels(); }
  int slot_level(int slot) const { return slot / num_labels(); }

  /// Partner label index of `label_idx` under the pairing, or -1.
  int partner(int label_idx) const { return partner_[static_cast<std::size_t>(label_idx)]; }
  int partner_value(int label_idx) const { return partner_value_[static_cast<std::size_t>(label_idx)]; }

  /// 2 * energy, where energy = sum of -k over the occupied modes.
  int twice_energy(const FockState &s) const;
  std::vector<std::pair<AtomicLabel, HalfMode>> factors(const FockState &s) const;

  /// u_1(k_1) ... u_r(k_r)|0> for creation modes in any order, brought to
  /// canonical form (sign included; zero if a slot repeats).
  StateVec make_state(const std::vector<std::pair<AtomicLabel, HalfMode>> &factors) const;

  /// Applies one atomic mode operator. Returns 0 (false) or a signed,
  /// weighted basis state in `out`/`coeff`.
  bool apply_atomic(int label_idx, int twice_mode, const FockState &s, FockState &out,
                    int &coeff) const;

  /// Debug dump, e.g. "(1) eps1(-1/2) e(-3/2) |0> + (-1/2) |0>".
  std::string dump(const StateVec &v) const;
  std::string dump(const FockState &s) const;

private:
  Pairing pairing_;
  std::vector<AtomicLabel> labels_;
  std::vector<int> partner_;
  std::vector<int> partner_value_;
};

/// A LocalField compiled against a Fock space: monomials as label indices.
/// The identity component is not part of the mode expansion.
class FieldOperator {
public:
  FieldOperator(const FockSpace &space, const LocalField &field);

  const FockSpace &space() const { return *space_; }

  /// m-th mode sum_{r+s=m} :u(r) v(s): applied to a basis state.
  StateVec apply(int m, const FockState &s) const;
  StateVec apply(int m, const StateVec &v) const;

  /// Appends the terms of c * X_m s to `out` (unsorted).
  void accumulate(int m, const FockState &s, const Coeff &c, std::vector<StateVec::Term> &out) const;

private:
  struct Mono {
    int u;
    int v;
    Coeff c;
  };
  const FockSpace *space_;
  std::vector<Mono> monos_;
};

/// Single Clifford generator u(k) on a basis state.
StateVec apply_gen(const FockSpace &space, const LinField &u, HalfMode k, const FockState &s);
StateVec apply_gen(const FockSpace &space, const LinField &u, HalfMode k, const StateVec &v);

/// m-th mode of a quadratic field on a state (identity component excluded).
StateVec apply_quad_mode(const FockSpace &space, const LocalField &a, int m, const FockState &s);
StateVec apply_quad_mode(const FockSpace &space, const LocalField &a, int m, const StateVec &v);

/// All canonical states with 2*energy <= twice_max_energy, ordered by energy
/// and then by canonical state order.
std::vector<FockState> enumerate_states(const FockSpace &space, int twice_max_energy);

/// A_k B_m s - B_m A_k s.
StateVec mode_commutator(const FieldOperator &a, int k, const FieldOperator &b, int m,
                         const FockState &s);
StateVec mode_commutator(const FockSpace &space, const LocalField &a, int k, const LocalField &b,
                         int m, const FockState &s);

} // namespace toroidal
