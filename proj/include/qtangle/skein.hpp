#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtangle/diagram.hpp"
#include "qtangle/ktheory.hpp"
#include "qtangle/laurent.hpp"

namespace qtangle {
namespace skein {

/// Evaluate a closed word by full skein expansion: rewrite unlike crossings,
/// expand every crossing into its two resolutions, evaluate each crossingless
/// branch and sum weight * value.  Branches are processed depth-first in
/// deterministic order.
inline LaurentPoly evaluate_by_resolution(const TangleWord& word) {
  auto chain = validate(word);
  if (!word.bottom.labels.empty() || !chain.back().labels.empty())
    throw DiagramError(-1, "evaluate_by_resolution: word is not closed");
  TangleWord rewritten = rewrite_unlike(word);
  LaurentPoly total;
  for (const auto& term : resolve_crossings(rewritten))
    total += term.weight * evaluate_closed(term.word);
  return total;
}

// ---------------------------------------------------------------------------
// Kauffman bracket oracle (m = 2 only).  Standard state sum, independent of
// the engine: smooth each crossing of a braid closure, count loops with a
// union-find over grid points, weight by A^{+-1} and loop value -A^2 - A^-2.

namespace detail {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
  std::vector<int> parent_;
};

}  // namespace detail

struct BracketOptions {
  int max_strands = 8;
  int max_crossings = 12;
};

namespace detail {

/// State sum over all smoothings of the braid closure.  Each state's loop
/// count is computed by a union-find over grid points (level, position);
/// min_loops loop factors are dropped from every state.
inline LaurentPoly bracket_sum(int k, const std::vector<int>& braid, int drop_loops,
                               const BracketOptions& opts) {
  if (k < 1 || k > opts.max_strands)
    throw std::invalid_argument("bracket: strand count out of range");
  const int c = static_cast<int>(braid.size());
  if (c > opts.max_crossings)
    throw std::invalid_argument("bracket: too many crossings");
  for (int letter : braid)
    if (letter == 0 || std::abs(letter) > k - 1)
      throw std::invalid_argument("bracket: bad braid letter");

  const LaurentPoly loop = -(q_power(2) + q_power(-2));  // -A^2 - A^-2
  LaurentPoly total;
  for (uint32_t state = 0; state < (1u << c); ++state) {
    UnionFind uf((c + 1) * k);
    int exponent = 0;
    for (int t = 0; t < c; ++t) {
      const int i = std::abs(braid[t]) - 1;  // 0-based position
      const bool positive = braid[t] > 0;
      // For a positive crossing the A-smoothing is the identity; for a
      // negative crossing it is the cup-cap.
      const bool pick_e = (state >> t) & 1u;
      exponent += positive == pick_e ? -1 : 1;
      for (int p = 0; p < k; ++p) {
        if (pick_e && (p == i || p == i + 1)) continue;
        uf.unite(t * k + p, (t + 1) * k + p);
      }
      if (pick_e) {
        uf.unite(t * k + i, t * k + i + 1);              // cup below
        uf.unite((t + 1) * k + i, (t + 1) * k + i + 1);  // cap above
      }
    }
    for (int p = 0; p < k; ++p) uf.unite(c * k + p, p);  // closure
    int loops = 0;
    for (int v = 0; v < (c + 1) * k; ++v)
      if (uf.find(v) == v) ++loops;
    LaurentPoly weight = q_power(exponent);
    for (int l = 0; l < loops - drop_loops; ++l) weight *= loop;
    total += weight;
  }
  return total;
}

}  // namespace detail

/// Unnormalized bracket of the closure of a braid on k strands, in the
/// bracket variable A; every loop counts -A^2 - A^-2, so the unknot
/// evaluates to -A^2 - A^-2.
inline LaurentPoly kauffman_bracket(int k, const std::vector<int>& braid,
                                    const BracketOptions& opts = {}) {
  return detail::bracket_sum(k, braid, 0, opts);
}

/// Writhe-normalized Jones polynomial of the braid closure in the bracket
/// variable: (-A^3)^{-w} times the bracket with one loop factor dropped
/// from every state; the unknot gives 1.
inline LaurentPoly kauffman_bracket_jones(int k, const std::vector<int>& braid,
                                          const BracketOptions& opts = {}) {
  LaurentPoly total = detail::bracket_sum(k, braid, 1, opts);
  const int w = writhe(braid);
  LaurentPoly norm = q_power(-3 * w);
  if (w % 2 != 0) norm = -norm;
  return norm * total;
}

// ---------------------------------------------------------------------------
// Convention matching between the m=2 engine and the bracket oracle.

struct ConventionReport {
  bool found = false;
  int sign = 0;          // q -> sign * A^stretch
  int stretch = 0;
  int writhe_sign = 0;   // per-writhe factor (writhe_sign * A^writhe_exp)^w
  int writhe_exp = 0;
  std::string summary;
};

struct BraidLink {
  std::string name;
  int k;
  std::vector<int> braid;
};

/// Determine the monomial substitution q -> sign*A^stretch and per-writhe
/// monomial mapping the m=2 engine output onto the unnormalized bracket,
/// scanning the finite candidate grid and accepting a candidate only when it
/// matches every corpus link with zero residual.  Throws if no candidate
/// fits the whole corpus.
inline ConventionReport match_convention_m2(const std::vector<BraidLink>& corpus) {
  if (corpus.size() < 2)
    throw std::invalid_argument("match_convention_m2: need at least two links");
  std::vector<LaurentPoly> engine_vals, bracket_vals;
  std::vector<int> writhes;
  for (const auto& link : corpus) {
    engine_vals.push_back(evaluate_closed(braid_closure(link.k, link.braid, 2)));
    bracket_vals.push_back(kauffman_bracket(link.k, link.braid));
    writhes.push_back(writhe(link.braid));
  }
  for (int sign : {1, -1})
    for (int stretch : {2, -2})
      for (int wsign : {1, -1})
        for (int wexp : {-3, 0, 3}) {
          auto matches = [&](size_t j) {
            LaurentPoly lhs = engine_vals[j].substitute_monomial(sign, stretch);
            LaurentPoly factor = q_power(wexp * writhes[j]);
            if (wsign == -1 && (((writhes[j] % 2) + 2) % 2) == 1) factor = -factor;
            return lhs == factor * bracket_vals[j];
          };
          bool all = true;
          for (size_t j = 0; j < corpus.size() && all; ++j) all = matches(j);
          if (!all) continue;
          ConventionReport report;
          report.found = true;
          report.sign = sign;
          report.stretch = stretch;
          report.writhe_sign = wsign;
          report.writhe_exp = wexp;
          report.summary = "q -> " + std::string(sign == 1 ? "" : "-") + "A^" +
                           std::to_string(stretch) + ", per-writhe factor " +
                           (wsign == 1 ? "" : "-") + "A^" + std::to_string(wexp);
          return report;
        }
  throw std::runtime_error("match_convention_m2: no consistent substitution found");
}

}  // namespace skein
}  // namespace qtangle
