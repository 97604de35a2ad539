#include "toroidal/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toroidal {

HalfMode HalfMode::from_twice(int t) {
  if (t % 2 == 0)
    throw std::invalid_argument("half-integer mode needs an odd numerator, got " + std::to_string(t) + "/2");
  return HalfMode{t};
}

bool FockState::is_vacuum() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
}

int FockState::particle_count() const {
  int c = 0;
  for (auto x : w_)
    c += std::popcount(x);
  return c;
}

// ---------------------------------------------------------------- StateVec

StateVec StateVec::basis(const FockState &s, const Coeff &c) {
  StateVec v;
  if (!c.is_zero())
    v.terms_.emplace_back(s, c);
  return v;
}

StateVec StateVec::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term &a, const Term &b) { return a.first < b.first; });
  StateVec v;
  v.terms_.reserve(terms.size());
  for (auto &t : terms) {
    if (!v.terms_.empty() && v.terms_.back().first == t.first) {
      v.terms_.back().second += t.second;
      continue;
    }
    if (!v.terms_.empty() && v.terms_.back().second.is_zero())
      v.terms_.pop_back();
    v.terms_.push_back(std::move(t));
  }
  if (!v.terms_.empty() && v.terms_.back().second.is_zero())
    v.terms_.pop_back();
  return v;
}

Coeff StateVec::coeff(const FockState &s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term &t, const FockState &x) { return t.first < x; });
  return (it != terms_.end() && it->first == s) ? it->second : Coeff();
}

StateVec &StateVec::operator+=(const StateVec &o) {
  if (o.terms_.empty())
    return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Coeff c = a->second + b->second;
      if (!c.is_zero())
        merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

StateVec &StateVec::operator-=(const StateVec &o) { return *this += Coeff(-1) * o; }

StateVec &StateVec::operator*=(const Coeff &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &t : terms_)
    t.second *= c;
  return *this;
}

// --------------------------------------------------------------- FockSpace

FockSpace::FockSpace(const Pairing &pairing, std::vector<AtomicLabel> labels)
    : pairing_(pairing), labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  if (labels_.empty())
    throw ConfigError("Fock space needs at least one label");
  const auto n = labels_.size();
  partner_.assign(n, -1);
  partner_value_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Coeff p = pairing_(labels_[i], labels_[j]);
      if (p.is_zero())
        continue;
      if (partner_[i] >= 0)
        throw ConsistencyError("label " + labels_[i].str() + " pairs with more than one label");
      if (!p.is_integer())
        throw ConsistencyError("non-integer pairing for " + labels_[i].str());
      partner_[i] = static_cast<int>(j);
      partner_value_[i] = static_cast<int>(p.to_int64());
    }
  }
}

FockSpace FockSpace::for_context(const LatticeContext &ctx, NullMode mode) {
  Pairing p(ctx);
  std::vector<AtomicLabel> labels;
  for (const auto &l : ctx.alphabet())
    if (mode == NullMode::Full || !l.is_null())
      labels.push_back(l);
  return FockSpace(p, std::move(labels));
}

bool FockSpace::contains(AtomicLabel l) const {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

int FockSpace::label_index(AtomicLabel l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l)
    throw ConfigError("label " + l.str() + " is not in this Fock space");
  return static_cast<int>(it - labels_.begin());
}

int FockSpace::twice_energy(const FockState &s) const {
  int e = 0;
  s.for_each_slot([&](int slot) { e += 2 * slot_level(slot) + 1; });
  return e;
}

std::vector<std::pair<AtomicLabel, HalfMode>> FockSpace::factors(const FockState &s) const {
  std::vector<std::pair<AtomicLabel, HalfMode>> f;
  s.for_each_slot([&](int slot) {
    f.emplace_back(labels_[static_cast<std::size_t>(slot_label(slot))],
                   HalfMode{-(2 * slot_level(slot) + 1)});
  });
  return f;
}

bool FockSpace::apply_atomic(int label_idx, int twice_mode, const FockState &s, FockState &out,
                             int &coeff) const {
  if (twice_mode < 0) {
    const int level = (-twice_mode - 1) / 2;
    if (level > max_level())
      throw std::out_of_range("Fock state capacity exceeded at mode " + std::to_string(twice_mode) + "/2");
    const int sl = slot(label_idx, level);
    if (s.test(sl))
      return false;
    coeff = (s.count_before(sl) & 1) ? -1 : 1;
    out = s;
    out.set(sl);
    return true;
  }
  const int p = partner(label_idx);
  if (p < 0)
    return false;
  const int level = (twice_mode - 1) / 2;
  if (level > max_level())
    return false;
  const int sl = slot(p, level);
  if (!s.test(sl))
    return false;
  coeff = (s.count_before(sl) & 1) ? -partner_value(label_idx) : partner_value(label_idx);
  out = s;
  out.reset(sl);
  return true;
}

StateVec FockSpace::make_state(const std::vector<std::pair<AtomicLabel, HalfMode>> &factors) const {
  FockState s;
  int sign = 1;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!it->second.creation())
      throw std::invalid_argument("make_state takes creation modes only");
    FockState next;
    int c = 0;
    if (!apply_atomic(label_index(it->first), it->second.twice, s, next, c))
      return {};
    sign *= c;
    s = next;
  }
  return StateVec::basis(s, sign);
}

std::string FockSpace::dump(const FockState &s) const {
  std::ostringstream os;
  for (const auto &[l, k] : factors(s))
    os << l.short_str() << "(" << k.value().str() << ") ";
  os << "|0>";
  return os.str();
}

std::string FockSpace::dump(const StateVec &v) const {
  if (v.is_zero())
    return "0";
  std::string out;
  for (const auto &[s, c] : v.terms()) {
    if (!out.empty())
      out += " + ";
    out += "(" + c.str() + ") " + dump(s);
  }
  return out;
}

// ----------------------------------------------------------- FieldOperator

FieldOperator::FieldOperator(const FockSpace &space, const LocalField &field) : space_(&space) {
  for (const auto &[m, c] : field.quad_part())
    monos_.push_back({space.label_index(m.u), space.label_index(m.v), c});
}

void FieldOperator::accumulate(int m, const FockState &s, const Coeff &c,
                               std::vector<StateVec::Term> &out) const {
  const FockSpace &sp = *space_;
  if (m < -FockState::kSlots)
    throw std::out_of_range("mode " + std::to_string(m) + " exceeds Fock state capacity");
  const int tm = 2 * m;
  // Occupied slots, decoded once.
  int occ_label[FockState::kSlots];
  int occ_level[FockState::kSlots];
  int nocc = 0;
  s.for_each_slot([&](int slot) {
    occ_label[nocc] = sp.slot_label(slot);
    occ_level[nocc] = sp.slot_level(slot);
    ++nocc;
  });

  int cand[3 * FockState::kSlots];
  for (const Mono &mono : monos_) {
    int nc = 0;
    // Both creation: m < r < 0.
    for (int tr = tm + 1; tr < 0; tr += 2)
      cand[nc++] = tr;
    const int pu = sp.partner(mono.u);
    const int pv = sp.partner(mono.v);
    for (int i = 0; i < nocc; ++i) {
      // u(r), r > 0, removes its partner at mode -r.
      if (occ_label[i] == pu)
        cand[nc++] = 2 * occ_level[i] + 1;
      // v(m - r), m - r > 0, removes its partner while r < 0.
      if (occ_label[i] == pv) {
        const int tr = tm - (2 * occ_level[i] + 1);
        if (tr < 0)
          cand[nc++] = tr;
      }
    }
    if (nc == 0)
      continue;
    std::sort(cand, cand + nc);
    nc = static_cast<int>(std::unique(cand, cand + nc) - cand);

    const Coeff w = mono.c * c;
    for (int k = 0; k < nc; ++k) {
      const int tr = cand[k];
      const int ts = tm - tr;
      FockState mid;
      FockState fin;
      int c1 = 0;
      int c2 = 0;
      if (tr < 0) {
        // :u(r) v(s): = u(r) v(s)
        if (!sp.apply_atomic(mono.v, ts, s, mid, c1))
          continue;
        if (!sp.apply_atomic(mono.u, tr, mid, fin, c2))
          continue;
        out.emplace_back(fin, Coeff(c1 * c2) * w);
      } else {
        // :u(r) v(s): = -v(s) u(r)
        if (!sp.apply_atomic(mono.u, tr, s, mid, c1))
          continue;
        if (!sp.apply_atomic(mono.v, ts, mid, fin, c2))
          continue;
        out.emplace_back(fin, Coeff(-c1 * c2) * w);
      }
    }
  }
}

StateVec FieldOperator::apply(int m, const FockState &s) const {
  std::vector<StateVec::Term> out;
  accumulate(m, s, Coeff(1), out);
  return StateVec::from_terms(std::move(out));
}

StateVec FieldOperator::apply(int m, const StateVec &v) const {
  std::vector<StateVec::Term> out;
  for (const auto &[s, c] : v.terms())
    accumulate(m, s, c, out);
  return StateVec::from_terms(std::move(out));
}

// --------------------------------------------------------- free functions

StateVec apply_gen(const FockSpace &space, const LinField &u, HalfMode k, const FockState &s) {
  std::vector<StateVec::Term> out;
  for (const auto &[l, c] : u.terms()) {
    FockState t;
    int sign = 0;
    if (space.apply_atomic(space.label_index(l), k.twice, s, t, sign))
      out.emplace_back(t, Coeff(sign) * c);
  }
  return StateVec::from_terms(std::move(out));
}

StateVec apply_gen(const FockSpace &space, const LinField &u, HalfMode k, const StateVec &v) {
  StateVec r;
  for (const auto &[s, c] : v.terms())
    r += c * apply_gen(space, u, k, s);
  return r;
}

StateVec apply_quad_mode(const FockSpace &space, const LocalField &a, int m, const FockState &s) {
  return FieldOperator(space, a).apply(m, s);
}

StateVec apply_quad_mode(const FockSpace &space, const LocalField &a, int m, const StateVec &v) {
  return FieldOperator(space, a).apply(m, v);
}

std::vector<FockState> enumerate_states(const FockSpace &space, int twice_max_energy) {
  if (twice_max_energy < 0)
    throw std::invalid_argument("energy cutoff must be nonnegative");
  const int levels = (twice_max_energy + 1) / 2; // levels 0..levels-1 fit at least one particle
  if (levels - 1 > space.max_level())
    throw std::out_of_range("energy cutoff exceeds Fock state capacity");
  const int nslots = levels * space.num_labels();
  std::vector<std::pair<int, FockState>> found;
  // Depth-first over slots in increasing index; a slot at level l costs 2l+1.
  struct Frame {
    int next;
    int budget;
    FockState s;
  };
  std::vector<Frame> stack{{0, twice_max_energy, FockState{}}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    found.emplace_back(twice_max_energy - f.budget, f.s);
    for (int sl = f.next; sl < nslots; ++sl) {
      const int cost = 2 * space.slot_level(sl) + 1;
      if (cost > f.budget)
        break;
      FockState t = f.s;
      t.set(sl);
      stack.push_back({sl + 1, f.budget - cost, t});
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<FockState> out;
  out.reserve(found.size());
  for (auto &[e, s] : found)
    out.push_back(s);
  return out;
}

StateVec mode_commutator(const FieldOperator &a, int k, const FieldOperator &b, int m,
                         const FockState &s) {
  StateVec ab = a.apply(k, b.apply(m, s));
  StateVec ba = b.apply(m, a.apply(k, s));
  return ab -= ba;
}

StateVec mode_commutator(const FockSpace &space, const LocalField &a, int k, const LocalField &b,
                         int m, const FockState &s) {
  return mode_commutator(FieldOperator(space, a), k, FieldOperator(space, b), m, s);
}

} // namespace toroidal
