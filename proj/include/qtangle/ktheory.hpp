#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtangle/diagram.hpp"
#include "qtangle/laurent.hpp"

namespace qtangle {

/// A function delta: {1..n} -> {0..m-1} indexing the state-space basis.
/// For n=0 there is exactly one state (the empty function).
using BasisState = std::vector<uint8_t>;

inline std::string delta_string(const BasisState& delta) {
  if (delta.empty()) return "-";
  std::string s;
  for (uint8_t d : delta) {
    if (d < 10)
      s += static_cast<char>('0' + d);
    else if (d < 36)
      s += static_cast<char>('a' + (d - 10));
    else
      throw std::invalid_argument("delta entry too large to render");
  }
  return s;
}

struct EngineOptions {
  // Debug switch: negate every cap coefficient.  Used as a negative control
  // to show the relation battery actually detects errors.
  bool flip_cap_sign = false;
};

/// Finitely supported LaurentPoly-valued map on basis states over a strand
/// sequence.  Keys are ordered, so iteration is deterministic (lexicographic
/// in delta).
struct StateVector {
  StrandSeq seq;
  std::map<BasisState, LaurentPoly> terms;

  static StateVector scalar(int m, LaurentPoly value = LaurentPoly::one()) {
    StateVector v;
    v.seq = StrandSeq{m, {}};
    if (!value.is_zero()) v.terms[BasisState{}] = std::move(value);
    return v;
  }

  static StateVector basis(const StrandSeq& seq, const BasisState& delta) {
    StateVector v;
    v.seq = seq;
    v.terms[delta] = LaurentPoly::one();
    return v;
  }

  void add_term(const BasisState& delta, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(delta, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  /// The scalar value of a vector over the empty sequence.
  LaurentPoly scalar_value() const {
    if (!seq.labels.empty())
      throw std::logic_error("scalar_value: sequence is not empty");
    auto it = terms.find(BasisState{});
    return it == terms.end() ? LaurentPoly::zero() : it->second;
  }

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.seq == b.seq && a.terms == b.terms;
  }
};

namespace detail {

inline int cap_sign(int i, int m, int k) {
  // (-1)^{(i-1)(m-1)} * (-1)^k
  int s = (((i - 1) * (m - 1)) % 2) ^ (k % 2);
  return s ? -1 : 1;
}

inline int cup_sign(int i, int m, int a) {
  // (-1)^{i(m-1)} * (-1)^{a}   (from (-q)^{-a})
  int s = ((i * (m - 1)) % 2) ^ (a % 2);
  return s ? -1 : 1;
}

}  // namespace detail

/// Cap at slot i: each basis term picks up
///   (-1)^{(i-1)(m-1)} sum_k (-1)^k q^k  with delta(i)=m-1-k, delta(i+1)=k
/// inserted and later entries shifted up by two.
inline StateVector apply_cap(const StateVector& v, int i, CapOrder order,
                             const EngineOptions& opts = {}) {
  const int m = v.seq.m;
  StateVector out;
  out.seq = step(v.seq, Generator::cap(i, order));
  for (const auto& [delta, c] : v.terms) {
    for (int k = 0; k < m; ++k) {
      BasisState nd;
      nd.reserve(delta.size() + 2);
      nd.insert(nd.end(), delta.begin(), delta.begin() + (i - 1));
      nd.push_back(static_cast<uint8_t>(m - 1 - k));
      nd.push_back(static_cast<uint8_t>(k));
      nd.insert(nd.end(), delta.begin() + (i - 1), delta.end());
      int sign = detail::cap_sign(i, m, k);
      if (opts.flip_cap_sign) sign = -sign;
      LaurentPoly t = c;
      t.shift(k, sign);
      out.add_term(nd, t);
    }
  }
  return out;
}

/// Cup at slot i: terms with delta(i)+delta(i+1) != m-1 are dropped;
/// survivors lose the two slots and pick up (-1)^{i(m-1)} (-q)^{-delta(i)}.
inline StateVector apply_cup(const StateVector& v, int i,
                             const EngineOptions& opts = {}) {
  const int m = v.seq.m;
  StateVector out;
  out.seq = step(v.seq, Generator::cup(i));
  for (const auto& [delta, c] : v.terms) {
    const int a = delta[i - 1];
    const int b = delta[i];
    if (a + b != m - 1) continue;
    BasisState nd;
    nd.reserve(delta.size() - 2);
    nd.insert(nd.end(), delta.begin(), delta.begin() + (i - 1));
    nd.insert(nd.end(), delta.begin() + (i + 1), delta.end());
    LaurentPoly t = c;
    t.shift(-a, detail::cup_sign(i, m, a));
    out.add_term(nd, t);
  }
  return out;
}

inline StateVector apply_cross_like(const StateVector& v, int i, int type,
                                    const EngineOptions& opts = {});

/// Dumbbell [U] = [P][Q] at slot i between two label-1 strands, in the W
/// basis (the q-power bookkeeping of W_{i,k} = q^{(i-1)k}[.] is already
/// folded in; the coefficients below are slot-independent).  On
/// (a, b) = (delta(i), delta(i+1)):
///   a = b : 0
///   a < b : q (a,b) + (q - q^-1) sum_t q^t (a+t, b-t) - q^{b-a-1} (b,a)
///   a > b : q^-1 (a,b) - (q - q^-1) sum_t q^{b-a+t} (b+t, a-t) - q^{b-a+1} (b,a)
/// The tests reproduce this table from the E-monomial-basis composite.
/// Between two label-(m-1) strands the dumbbell is defined through the skein
/// identity, [U] = q^-1 id - q^-m [T(1)] (see apply_dumbbell below).
inline StateVector apply_dumbbell_light(const StateVector& v, int i,
                                        const EngineOptions& = {}) {
  StateVector out;
  out.seq = step(v.seq, Generator::dumbbell(i));
  const LaurentPoly qm1 = q_power(1) - q_power(-1);  // q - q^-1
  for (const auto& [delta, c] : v.terms) {
    const int a = delta[i - 1];
    const int b = delta[i];
    if (a == b) continue;
    auto with = [&](int x, int y) {
      BasisState nd = delta;
      nd[i - 1] = static_cast<uint8_t>(x);
      nd[i] = static_cast<uint8_t>(y);
      return nd;
    };
    if (a < b) {
      LaurentPoly t = c;
      out.add_term(with(a, b), t.shift(1));
      for (int s = 1; s <= b - a - 1; ++s) {
        LaurentPoly mid = c * qm1;
        out.add_term(with(a + s, b - s), mid.shift(s));
      }
      t = c;
      out.add_term(with(b, a), t.shift(b - a - 1, -1));
    } else {
      LaurentPoly t = c;
      out.add_term(with(a, b), t.shift(-1));
      for (int s = 1; s <= a - b - 1; ++s) {
        LaurentPoly mid = c * qm1;
        out.add_term(with(b + s, a - s), mid.shift(b - a + s, -1));
      }
      t = c;
      out.add_term(with(b, a), t.shift(b - a + 1, -1));
    }
  }
  return out;
}

/// Unlike-strand crossing via a rotation composite whose inner crossing
/// lands on two label-1 strands, with the opposite type:
///   labels (1, m-1): cap at i creating (m-1, 1), cross at i+1, cup at i+2
///   labels (m-1, 1): cap at i+2 creating (1, m-1), cross at i+1, cup at i
/// Sliding the crossing past the cap exchanges types, so the composite with
/// inner type 3-l realizes the unlike crossing of type l; the cap-sliding
/// identities then determine this operator uniquely.
inline StateVector apply_cross_unlike(const StateVector& v, int i, int type,
                                      const EngineOptions& opts = {}) {
  if (is_like_crossing(v.seq, i))
    throw DiagramError(-1, "apply_cross_unlike: labels at slot are equal");
  const int inner = unlike_inner_type(type);
  StateVector r;
  if (v.seq.labels[i - 1] == 1) {
    r = apply_cap(v, i, CapOrder::RL, opts);
    r = apply_cross_like(r, i + 1, inner, opts);
    r = apply_cup(r, i + 2, opts);
  } else {
    r = apply_cap(v, i + 2, CapOrder::LR, opts);
    r = apply_cross_like(r, i + 1, inner, opts);
    r = apply_cup(r, i, opts);
  }
  return r;
}

/// Like-strand crossing.  Between two label-1 strands it is defined through
/// the skein identities
///   [T(1)] = q^{m}(q^{-1} id - [U]),   [T(2)] = q^{-m}(q id - [U]);
/// between two label-(m-1) strands (m >= 3) through one more rotation:
/// cap at i+2 creating (1, m-1), unlike crossing of the opposite type at
/// i+1, cup at i.
inline StateVector apply_cross_like(const StateVector& v, int i, int type,
                                    const EngineOptions& opts) {
  if (!is_like_crossing(v.seq, i))
    throw DiagramError(-1, "apply_cross_like: labels at slot differ");
  const int m = v.seq.m;
  if (v.seq.labels[i - 1] != 1 && m > 2) {
    StateVector r = apply_cap(v, i + 2, CapOrder::LR, opts);
    r = apply_cross_unlike(r, i + 1, unlike_inner_type(type), opts);
    return apply_cup(r, i, opts);
  }
  StateVector u = apply_dumbbell_light(v, i, opts);
  StateVector out;
  out.seq = step(v.seq, Generator::cross(i, type));
  const int outer = type == 1 ? m : -m;
  const int inner = type == 1 ? -1 : 1;
  for (const auto& [delta, c] : v.terms) {
    LaurentPoly t = c;
    out.add_term(delta, t.shift(outer + inner));
  }
  for (const auto& [delta, c] : u.terms) {
    LaurentPoly t = c;
    out.add_term(delta, t.shift(outer, -1));
  }
  return out;
}

/// Dumbbell at slot i.  Between label-1 strands: the explicit W-basis table;
/// between label-(m-1) strands: inverted out of the crossing skein identity,
/// [U] = q^-1 id - q^-m [T(1)].
inline StateVector apply_dumbbell(const StateVector& v, int i,
                                  const EngineOptions& opts = {}) {
  if (v.seq.labels[i - 1] != v.seq.labels[i])
    throw DiagramError(-1, "apply_dumbbell: labels at slot differ");
  const int m = v.seq.m;
  if (v.seq.labels[i - 1] == 1 || m == 2) return apply_dumbbell_light(v, i, opts);
  StateVector t = apply_cross_like(v, i, 1, opts);
  StateVector out;
  out.seq = step(v.seq, Generator::dumbbell(i));
  for (const auto& [delta, c] : v.terms) {
    LaurentPoly s = c;
    out.add_term(delta, s.shift(-1));
  }
  for (const auto& [delta, c] : t.terms) {
    LaurentPoly s = c;
    out.add_term(delta, s.shift(-m, -1));
  }
  return out;
}

inline StateVector apply_generator(const StateVector& v, const Generator& g,
                                   const EngineOptions& opts = {}) {
  switch (g.kind) {
    case Generator::Kind::Cap:
      return apply_cap(v, g.slot, g.order, opts);
    case Generator::Kind::Cup:
      return apply_cup(v, g.slot, opts);
    case Generator::Kind::Dumbbell:
      return apply_dumbbell(v, g.slot, opts);
    case Generator::Kind::Cross:
      if (is_like_crossing(v.seq, g.slot))
        return apply_cross_like(v, g.slot, g.cross_type, opts);
      return apply_cross_unlike(v, g.slot, g.cross_type, opts);
  }
  throw std::logic_error("apply_generator: unknown kind");
}

inline StateVector apply_word(const StateVector& v0, const TangleWord& word,
                              const EngineOptions& opts = {}) {
  validate(word);
  if (v0.seq != word.bottom)
    throw DiagramError(-1, "apply_word: vector sequence does not match word bottom");
  StateVector v = v0;
  for (const auto& g : word.gens) v = apply_generator(v, g, opts);
  return v;
}

/// Evaluate a closed word: start from the scalar 1 on the empty sequence,
/// apply every generator, return the final scalar.
inline LaurentPoly evaluate_closed(const TangleWord& word,
                                   const EngineOptions& opts = {}) {
  auto chain = validate(word);
  if (!word.bottom.labels.empty() || !chain.back().labels.empty())
    throw DiagramError(-1, "evaluate_closed: word is not closed");
  StateVector v = StateVector::scalar(word.bottom.m);
  for (const auto& g : word.gens) v = apply_generator(v, g, opts);
  return v.scalar_value();
}

inline std::vector<BasisState> enumerate_basis(const StrandSeq& seq) {
  std::vector<BasisState> out;
  const int n = seq.size();
  const int m = seq.m;
  BasisState delta(n, 0);
  while (true) {
    out.push_back(delta);
    int j = n - 1;
    while (j >= 0 && delta[j] == m - 1) delta[j--] = 0;
    if (j < 0) break;
    ++delta[j];
  }
  return out;
}

class DimensionCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Materialization of a composite operator on the state-space basis.
struct OperatorMatrix {
  StrandSeq domain;
  StrandSeq codomain;
  std::map<std::pair<BasisState, BasisState>, LaurentPoly> entries;  // (row, col)

  void add(const BasisState& row, const BasisState& col, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(row, col);
    auto [it, inserted] = entries.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) entries.erase(it);
    }
  }

  static OperatorMatrix identity(const StrandSeq& seq) {
    OperatorMatrix r;
    r.domain = r.codomain = seq;
    for (const auto& delta : enumerate_basis(seq)) r.add(delta, delta, LaurentPoly::one());
    return r;
  }

  OperatorMatrix scaled(const LaurentPoly& c) const {
    OperatorMatrix r;
    r.domain = domain;
    r.codomain = codomain;
    for (const auto& [key, v] : entries) r.add(key.first, key.second, v * c);
    return r;
  }

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.domain != b.domain || a.codomain != b.codomain)
      throw std::logic_error("matrix sum: shape mismatch");
    OperatorMatrix r = a;
    for (const auto& [key, v] : b.entries) r.add(key.first, key.second, v);
    return r;
  }

  /// Composite a * b (apply b first).
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (b.codomain != a.domain)
      throw std::logic_error("matrix product: shape mismatch");
    OperatorMatrix r;
    r.domain = b.domain;
    r.codomain = a.codomain;
    // index a's entries by column
    std::map<BasisState, std::vector<std::pair<BasisState, const LaurentPoly*>>> by_col;
    for (const auto& [key, v] : a.entries) by_col[key.second].emplace_back(key.first, &v);
    for (const auto& [key, v] : b.entries) {
      auto it = by_col.find(key.first);
      if (it == by_col.end()) continue;
      for (const auto& [row, av] : it->second) r.add(row, key.second, *av * v);
    }
    return r;
  }

  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.domain == b.domain && a.codomain == b.codomain && a.entries == b.entries;
  }
  friend bool operator!=(const OperatorMatrix& a, const OperatorMatrix& b) {
    return !(a == b);
  }

  bool is_zero() const { return entries.empty(); }

  /// Stable dump: header "m n_bottom n_top", then one line per nonzero entry
  /// "row_delta col_delta laurent_string" in key order ("-" is the empty delta).
  std::string dump() const {
    std::ostringstream out;
    out << domain.m << " " << domain.size() << " " << codomain.size() << "\n";
    for (const auto& [key, v] : entries)
      out << delta_string(key.first) << " " << delta_string(key.second) << " "
          << v.str() << "\n";
    return out.str();
  }
};

constexpr long kDefaultMatrixCap = 1000000;

/// Matrix of the composite pipeline, columns indexed by the bottom basis.
inline OperatorMatrix operator_matrix(const std::vector<Generator>& gens,
                                      const StrandSeq& bottom,
                                      long matrix_cap = kDefaultMatrixCap,
                                      const EngineOptions& opts = {}) {
  TangleWord word{bottom, gens};
  auto chain = validate(word);
  const StrandSeq& top = chain.back();
  auto dim_capped = [&](int n) {
    long r = 1;
    for (int i = 0; i < n; ++i) {
      r *= bottom.m;
      if (r > matrix_cap) return matrix_cap + 1;
    }
    return r;
  };
  long dim_bottom = dim_capped(bottom.size());
  long dim_top = dim_capped(top.size());
  if (dim_bottom > matrix_cap / std::max(dim_top, 1L))
    throw DimensionCapError("operator_matrix: dimension cap exceeded (" +
                            std::to_string(dim_bottom) + " x " +
                            std::to_string(dim_top) + ")");
  OperatorMatrix mtx;
  mtx.domain = bottom;
  mtx.codomain = top;
  for (const auto& col : enumerate_basis(bottom)) {
    StateVector v = StateVector::basis(bottom, col);
    for (const auto& g : gens) v = apply_generator(v, g, opts);
    for (const auto& [row, c] : v.terms) mtx.add(row, col, c);
  }
  return mtx;
}

/// Anti-diagonal homology dimensions of a closed crossingless graph:
/// dim H^{i,-i} is the coefficient of q^i in the graph's evaluation.
/// A negative coefficient is a contract violation and throws.
inline std::map<int, long> poincare_table(const TangleWord& word) {
  if (!is_crossingless(word))
    throw DiagramError(-1, "poincare_table: word has crossings");
  LaurentPoly value = evaluate_closed(word);
  std::map<int, long> table;
  for (const auto& [e, c] : value.coeffs()) {
    if (c < 0)
      throw std::runtime_error("poincare_table: negative coefficient at q^" +
                               std::to_string(e));
    table[e] = static_cast<long>(c);
  }
  return table;
}

}  // namespace qtangle
