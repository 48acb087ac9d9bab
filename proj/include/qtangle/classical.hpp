#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtangle/diagram.hpp"
#include "qtangle/ktheory.hpp"

namespace qtangle {
namespace classical {

// Independent q=1 oracle.  Deliberately dense and naive: plain integer
// tensors over the basis v_{delta(1)} x ... x v_{delta(n)}, sharing no code
// with the sparse engine.

struct ClassicalVector {
  StrandSeq seq;
  std::vector<long long> coeffs;  // size m^n, delta(1) most significant
};

inline long dim_of(const StrandSeq& seq) {
  long d = 1;
  for (int j = 0; j < seq.size(); ++j) d *= seq.m;
  return d;
}

inline ClassicalVector zero_vector(const StrandSeq& seq) {
  return ClassicalVector{seq, std::vector<long long>(dim_of(seq), 0)};
}

inline ClassicalVector scalar_one(int m) {
  return ClassicalVector{StrandSeq{m, {}}, {1}};
}

inline long index_of(const StrandSeq& seq, const BasisState& delta) {
  long idx = 0;
  for (int j = 0; j < seq.size(); ++j) idx = idx * seq.m + delta[j];
  return idx;
}

inline BasisState delta_of(const StrandSeq& seq, long idx) {
  BasisState delta(seq.size());
  for (int j = seq.size() - 1; j >= 0; --j) {
    delta[j] = static_cast<uint8_t>(idx % seq.m);
    idx /= seq.m;
  }
  return delta;
}

/// cap: 1 -> sum_k (-1)^{(i-1)(m-1)} (-1)^k v_{m-1-k} x v_k at slots (i, i+1).
inline ClassicalVector classical_cap(const ClassicalVector& v, int i,
                                     CapOrder order = CapOrder::LR) {
  const int m = v.seq.m;
  ClassicalVector out = zero_vector(step(v.seq, Generator::cap(i, order)));
  for (long idx = 0; idx < static_cast<long>(v.coeffs.size()); ++idx) {
    if (v.coeffs[idx] == 0) continue;
    BasisState delta = delta_of(v.seq, idx);
    for (int k = 0; k < m; ++k) {
      BasisState nd;
      nd.insert(nd.end(), delta.begin(), delta.begin() + (i - 1));
      nd.push_back(static_cast<uint8_t>(m - 1 - k));
      nd.push_back(static_cast<uint8_t>(k));
      nd.insert(nd.end(), delta.begin() + (i - 1), delta.end());
      int sign = ((((i - 1) * (m - 1)) % 2) ^ (k % 2)) ? -1 : 1;
      out.coeffs[index_of(out.seq, nd)] += sign * v.coeffs[idx];
    }
  }
  return out;
}

/// cup: v_a x v_b -> (-1)^{i(m-1)} (-1)^a if a + b = m - 1, else 0.
inline ClassicalVector classical_cup(const ClassicalVector& v, int i) {
  const int m = v.seq.m;
  ClassicalVector out = zero_vector(step(v.seq, Generator::cup(i)));
  for (long idx = 0; idx < static_cast<long>(v.coeffs.size()); ++idx) {
    if (v.coeffs[idx] == 0) continue;
    BasisState delta = delta_of(v.seq, idx);
    const int a = delta[i - 1];
    const int b = delta[i];
    if (a + b != m - 1) continue;
    BasisState nd;
    nd.insert(nd.end(), delta.begin(), delta.begin() + (i - 1));
    nd.insert(nd.end(), delta.begin() + (i + 1), delta.end());
    int sign = (((i * (m - 1)) % 2) ^ (a % 2)) ? -1 : 1;
    out.coeffs[index_of(out.seq, nd)] += sign * v.coeffs[idx];
  }
  return out;
}

/// crossing at q=1: transposition of slots i, i+1 (either type).  Between
/// unlike labels the strand rotates once through a cap-cup pair, which
/// contributes the product of the cap and cup signs, (-1)^{m-1}; between
/// like labels the two rotations cancel and the sign is +1.
inline ClassicalVector classical_cross(const ClassicalVector& v, int i) {
  const int sign =
      (v.seq.labels[i - 1] != v.seq.labels[i] && (v.seq.m - 1) % 2) ? -1 : 1;
  ClassicalVector out = zero_vector(switch_at(v.seq, i));
  for (long idx = 0; idx < static_cast<long>(v.coeffs.size()); ++idx) {
    if (v.coeffs[idx] == 0) continue;
    BasisState delta = delta_of(v.seq, idx);
    std::swap(delta[i - 1], delta[i]);
    out.coeffs[index_of(out.seq, delta)] += sign * v.coeffs[idx];
  }
  return out;
}

/// dumbbell at q=1: identity minus transposition.
inline ClassicalVector classical_dumbbell(const ClassicalVector& v, int i) {
  ClassicalVector swapped = classical_cross(v, i);
  ClassicalVector out = v;
  for (size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] -= swapped.coeffs[j];
  return out;
}

inline ClassicalVector classical_apply(const ClassicalVector& v, const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Cap: return classical_cap(v, g.slot, g.order);
    case Generator::Kind::Cup: return classical_cup(v, g.slot);
    case Generator::Kind::Cross: return classical_cross(v, g.slot);
    case Generator::Kind::Dumbbell: return classical_dumbbell(v, g.slot);
  }
  throw std::logic_error("classical_apply: unknown kind");
}

// ---------------------------------------------------------------------------
// sl_m representation matrices (integer, dense, m x m in v-coordinates).

/// Chevalley generator action on the standard representation C^m:
/// e_r v_r = v_{r-1}, f_r v_{r-1} = v_r (r = 1..m-1).  Entry [row][col].
inline std::vector<std::vector<int>> standard_rep(int m, int r, bool lowering) {
  std::vector<std::vector<int>> mat(m, std::vector<int>(m, 0));
  if (lowering)
    mat[r][r - 1] = 1;
  else
    mat[r - 1][r] = 1;
  return mat;
}

/// Chevalley action on Lambda^{m-1} C^m, computed combinatorially over
/// (m-1)-element subsets of {0..m-1} and converted to the v-basis via
/// v_k = u_0 ^ ... ^ u_{m-1} with u_{m-1-k} omitted.
inline std::vector<std::vector<int>> wedge_top_rep(int m, int r, bool lowering) {
  std::vector<std::vector<int>> mat(m, std::vector<int>(m, 0));
  const int from = lowering ? r - 1 : r;  // index replaced in the subset
  const int to = lowering ? r : r - 1;
  for (int k = 0; k < m; ++k) {
    const unsigned full = (1u << m) - 1;
    const int missing = m - 1 - k;
    unsigned mask = full & ~(1u << missing);
    if (!(mask & (1u << from)) || (mask & (1u << to))) continue;
    unsigned nmask = (mask & ~(1u << from)) | (1u << to);
    // adjacent-index replacement keeps the increasing order; no sign.
    int nmissing = -1;
    for (int a = 0; a < m; ++a)
      if (!(nmask & (1u << a))) nmissing = a;
    mat[m - 1 - nmissing][k] = 1;
  }
  return mat;
}

inline std::vector<std::vector<int>> rep_matrix(int m, int label, int r, bool lowering) {
  return label == 1 ? standard_rep(m, r, lowering) : wedge_top_rep(m, r, lowering);
}

/// Apply a Chevalley generator to a tensor (sum over slots of per-slot action).
inline ClassicalVector chevalley_apply(const ClassicalVector& v, int r, bool lowering) {
  ClassicalVector out = zero_vector(v.seq);
  const int m = v.seq.m;
  for (int slot = 0; slot < v.seq.size(); ++slot) {
    auto mat = rep_matrix(m, v.seq.labels[slot], r, lowering);
    for (long idx = 0; idx < static_cast<long>(v.coeffs.size()); ++idx) {
      if (v.coeffs[idx] == 0) continue;
      BasisState delta = delta_of(v.seq, idx);
      const int col = delta[slot];
      for (int row = 0; row < m; ++row) {
        if (mat[row][col] == 0) continue;
        BasisState nd = delta;
        nd[slot] = static_cast<uint8_t>(row);
        out.coeffs[index_of(out.seq, nd)] += mat[row][col] * v.coeffs[idx];
      }
    }
  }
  return out;
}

inline bool is_zero(const ClassicalVector& v) {
  for (long long c : v.coeffs)
    if (c != 0) return false;
  return true;
}

/// Verify the cap image (both orientation variants) is annihilated by every
/// Chevalley generator e_r, f_r.  Returns a description of the first
/// violation, or nullopt on success.
inline std::optional<std::string> check_equivariance(int m) {
  for (CapOrder order : {CapOrder::LR, CapOrder::RL}) {
    ClassicalVector capped = classical_cap(scalar_one(m), 1, order);
    for (int r = 1; r <= m - 1; ++r) {
      for (bool lowering : {false, true}) {
        if (!is_zero(chevalley_apply(capped, r, lowering)))
          return std::string(lowering ? "f_" : "e_") + std::to_string(r) +
                 " does not annihilate the cap image (order " +
                 (order == CapOrder::LR ? "lr" : "rl") + ")";
      }
    }
  }
  return std::nullopt;
}

/// Push a word through both pipelines (sparse engine specialized at q=1
/// versus the dense classical maps) on every basis vector of the bottom
/// sequence.  Returns a report of the first differing coefficient, or
/// nullopt if they agree.
inline std::optional<std::string> compare_at_q1(const TangleWord& word) {
  validate(word);
  for (const auto& start : enumerate_basis(word.bottom)) {
    StateVector engine = StateVector::basis(word.bottom, start);
    ClassicalVector cls = zero_vector(word.bottom);
    cls.coeffs[index_of(word.bottom, start)] = 1;
    for (const auto& g : word.gens) {
      engine = apply_generator(engine, g);
      cls = classical_apply(cls, g);
    }
    std::vector<long long> dense(cls.coeffs.size(), 0);
    for (const auto& [delta, c] : engine.terms) {
      Coeff v = c.eval_q1();
      dense[index_of(engine.seq, delta)] = static_cast<long long>(v);
    }
    for (long idx = 0; idx < static_cast<long>(dense.size()); ++idx) {
      if (dense[idx] != cls.coeffs[idx])
        return "mismatch at start state " + delta_string(start) + ", output state " +
               delta_string(delta_of(engine.seq, idx)) + ": engine@q=1 " +
               std::to_string(dense[idx]) + " vs classical " +
               std::to_string(cls.coeffs[idx]);
    }
  }
  return std::nullopt;
}

}  // namespace classical
}  // namespace qtangle
