#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/fock.hpp"
#include "toroidal/root_data.hpp"
#include "toroidal/wick.hpp"

namespace toroidal {

/// Generator fields of the fermionic realization for one (type, rank).
struct GeneratorTable {
  std::vector<LocalField> xplus;  ///< x(alpha_i, z)
  std::vector<LocalField> xminus; ///< x(-alpha_i, z)
  std::vector<LocalField> h;      ///< alpha_i(z)
  /// X(eps_k - eps_l) = :eps_k eps_l*: for k != l (types A, B, D only).
  std::map<std::pair<int, int>, LocalField> root_fields;

  int num_nodes() const { return static_cast<int>(h.size()); }
};

GeneratorTable build_generators(const LatticeContext &ctx);

/// The table as seen in the given null mode: strict applies mod_null to
/// every entry, full returns it unchanged.
GeneratorTable reduce(const GeneratorTable &table, NullMode mode);

enum class RelationId { R1, R2, R3, R4, Serre, NullRoot, Central, Level, Oracle, Jacobi };
const char *to_string(RelationId id);

enum class Status { Pass, PassModNull, Fail };
const char *to_string(Status s);

/// Which generator of the table a field is: X+_i, X-_i or H_i.
enum class GenKind { XPlus, XMinus, H };
struct GenRef {
  GenKind kind;
  int node;
  friend auto operator<=>(const GenRef &, const GenRef &) = default;
};
std::string to_string(const GenRef &g);
const LocalField &lookup(const GeneratorTable &t, const GenRef &g);
/// All 3 * num_nodes generators in a fixed order.
std::vector<GenRef> all_generators(const GeneratorTable &t);

/// One fully determined check.
struct RelationInstance {
  RelationId id = RelationId::R1;
  /// "field", "mode", "form", "state", "eps" ...
  std::string level = "field";
  std::vector<int> nodes;
  int sign = 0;
  std::optional<std::pair<int, int>> modes;
  /// Generators or expressions the instance refers to, when not captured by nodes.
  std::string subject;

  /// Stable sortable identifier, e.g. "R3/mode/0,1/+/k=-1,m=2".
  std::string key() const;
};

struct RelationEntry {
  RelationInstance instance;
  Status status = Status::Pass;
  /// Field-level residue (empty on pass). A nonzero id_part encodes a
  /// mismatch in the central (∂δ or scalar) coefficient.
  LocalField residue;
  /// Extra diagnostics for state-level failures (first failing state).
  std::string detail;
  std::size_t samples = 0;
  double millis = 0;
};

/// Classifies a residue: 0 -> pass, null -> pass_mod_null (full mode), else fail.
Status classify(const LocalField &residue, NullMode mode);

/// Field-level residue of a bracket against an expected value, folding the
/// ∂δ coefficient difference into the identity component.
LocalField bracket_residue(const BracketResult &actual, const BracketResult &expected);

/// Shared inputs for the relation checks of one (type, rank, mode).
class RepContext {
public:
  RepContext(const LatticeContext &ctx, NullMode mode);

  const LatticeContext &lattice() const { return ctx_; }
  const Pairing &pairing() const { return pairing_; }
  NullMode mode() const { return mode_; }
  /// Table reduced for the mode.
  const GeneratorTable &table() const { return table_; }
  const FockSpace &fock() const { return fock_; }

  /// bracket() followed by mod_null in strict mode.
  BracketResult bracket(const LocalField &a, const LocalField &b) const;
  /// (alpha_i|alpha_j)
  Coeff gram(int i, int j) const;

private:
  LatticeContext ctx_;
  Pairing pairing_;
  NullMode mode_;
  GeneratorTable table_;
  FockSpace fock_;
};

// Field-level checks.
RelationEntry check_R1(const RepContext &rep, int i, int j);
RelationEntry check_R2(const RepContext &rep, int i, int j, int sign);
/// [alpha_i(z), X(eps_k - eps_l, w)] = (alpha_i|eps_k - eps_l) X δ.
RelationEntry check_R2_root_field(const RepContext &rep, int i, int k, int l);
RelationEntry check_R3(const RepContext &rep, int i, int j);
/// R4 self-bracket (when i == j) or the Serre relation of power 1 - a_ij.
RelationEntry check_R4_and_serre(const RepContext &rep, int i, int j, int sign);
/// Central coefficient of [X+_i, X-_i] equals -2/(alpha_i|alpha_i).
RelationEntry check_level(const RepContext &rep, int i);
/// Centrality of sum a_i alpha_i(z), the form identity sum a_i (alpha_i|alpha_j) = 0,
/// and (given states) the vanishing of its zero mode.
std::vector<RelationEntry> check_null_root(const RepContext &rep, const std::vector<FockState> &states);
/// bracket(residue, G) = 0 for every generator G.
RelationEntry check_central(const RepContext &rep, const LocalField &residue);

/// Expected right-hand side of the relation governing [A, B], if any.
struct PairExpectation {
  RelationId id;
  std::vector<int> nodes;
  int sign = 0;
  BracketResult rhs;
};
std::optional<PairExpectation> expectation_for(const RepContext &rep, const GenRef &a, const GenRef &b);

/// Mode-level sweep for one ordered generator pair over all (k, m) in
/// [-K, K]^2 with |k + m| <= K and all given states. Produces one ORACLE
/// entry (engine/oracle equivalence) and, when the pair is governed by a
/// relation, one mode-level entry per (k, m).
std::vector<RelationEntry> sweep_pair(const RepContext &rep, const GenRef &a, const GenRef &b,
                                      int K, const std::vector<FockState> &states);

/// Cyclic Jacobi sum at mode level for `count` random generator triples.
std::vector<RelationEntry> check_jacobi(const RepContext &rep, int count, std::uint64_t seed,
                                        int K, const std::vector<FockState> &states);

struct VerifyOptions {
  NullMode mode = NullMode::Strict;
  int K = 3;
  int twice_E = 7;
  std::uint64_t seed = 0;
  int jacobi_triples = 10;
  bool mode_sweep = true;
  /// 0 = TOROIDAL_THREADS or hardware concurrency.
  unsigned threads = 0;
};

struct RelationReport {
  AlgType type = AlgType::A;
  int rank = 0;
  VerifyOptions options;
  std::vector<RelationEntry> entries; ///< sorted by instance key
  std::size_t count(Status s) const;
  std::size_t count(RelationId id, Status s) const;
};

RelationReport verify(const LatticeContext &ctx, const VerifyOptions &opts);

/// Number of worker threads: explicit value, else TOROIDAL_THREADS, else
/// hardware concurrency.
unsigned resolve_threads(unsigned requested);

} // namespace toroidal
