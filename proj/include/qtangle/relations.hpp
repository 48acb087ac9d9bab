#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtangle/diagram.hpp"
#include "qtangle/ktheory.hpp"
#include "qtangle/laurent.hpp"

namespace qtangle {
namespace relations {

struct RelationResult {
  std::string name;
  int instances = 0;
  bool pass = true;
  std::string detail;  // first failing instance, if any
};

struct BatterySettings {
  int m = 2;
  int max_n = 3;
  long matrix_cap = kDefaultMatrixCap;
  EngineOptions engine;
};

namespace detail {

inline std::vector<int> label_choices(int m) {
  if (m == 2) return {1};
  return {1, m - 1};
}

inline std::vector<StrandSeq> all_seqs(int m, int n) {
  std::vector<StrandSeq> out;
  auto labels = label_choices(m);
  std::vector<int> cur(n);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      out.push_back(StrandSeq{m, cur});
      return;
    }
    for (int l : labels) {
      cur[pos] = l;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

inline std::string describe(const StrandSeq& seq, int slot) {
  std::string s = "m=" + std::to_string(seq.m) + " beta=(";
  for (int j = 0; j < seq.size(); ++j)
    s += (j ? "," : "") + std::to_string(seq.labels[j]);
  s += ") i=" + std::to_string(slot);
  return s;
}

class Checker {
public:
  Checker(RelationResult& result, const BatterySettings& settings)
      : result_(result), settings_(settings) {}

  OperatorMatrix mat(const StrandSeq& bottom, const std::vector<Generator>& gens) {
    return operator_matrix(gens, bottom, settings_.matrix_cap, settings_.engine);
  }

  /// Runs one instance; a DiagramError means the instance is not
  /// well-defined for these labels and is silently skipped.
  void instance(const std::string& what, const std::function<bool()>& check) {
    try {
      bool ok = check();
      ++result_.instances;
      if (!ok && result_.pass) {
        result_.pass = false;
        result_.detail = what;
      }
    } catch (const DiagramError&) {
      // invalid label combination; not an instance
    } catch (const DimensionCapError&) {
      // too large for the configured cap; not an instance
    }
  }

private:
  RelationResult& result_;
  const BatterySettings& settings_;
};

}  // namespace detail

/// Reidemeister 0: cup directly after an adjacent cap is the identity,
/// in both zig-zag shapes.
inline RelationResult check_r0(const BatterySettings& s) {
  RelationResult result{"R0"};
  detail::Checker c(result, s);
  for (int n = 1; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n; ++i)
        for (CapOrder order : {CapOrder::LR, CapOrder::RL}) {
          c.instance("R0a " + detail::describe(beta, i), [&] {
            auto lhs = c.mat(beta, {Generator::cap(i + 1, order), Generator::cup(i)});
            return lhs == OperatorMatrix::identity(beta);
          });
          c.instance("R0b " + detail::describe(beta, i), [&] {
            auto lhs = c.mat(beta, {Generator::cap(i, order), Generator::cup(i + 1)});
            return lhs == OperatorMatrix::identity(beta);
          });
          if (s.m == 2) break;  // orders coincide
        }
  return result;
}

/// Reidemeister I: a kink made from a cap, a like crossing of either type,
/// and a cup is the identity.
inline RelationResult check_r1(const BatterySettings& s) {
  RelationResult result{"R1"};
  detail::Checker c(result, s);
  for (int n = 1; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n; ++i)
        for (int type : {1, 2}) {
          const int x = beta.labels[i - 1];
          CapOrder match = (x == 1 || s.m == 2) ? CapOrder::LR : CapOrder::RL;
          CapOrder mirror = match == CapOrder::LR ? CapOrder::RL : CapOrder::LR;
          c.instance("R1a " + detail::describe(beta, i) + " type " + std::to_string(type), [&] {
            auto lhs = c.mat(beta, {Generator::cap(i + 1, match), Generator::cross(i, type),
                                    Generator::cup(i + 1)});
            return lhs == OperatorMatrix::identity(beta);
          });
          c.instance("R1b " + detail::describe(beta, i) + " type " + std::to_string(type), [&] {
            auto lhs = c.mat(beta, {Generator::cap(i, mirror), Generator::cross(i + 1, type),
                                    Generator::cup(i)});
            return lhs == OperatorMatrix::identity(beta);
          });
        }
  return result;
}

/// Reidemeister II: crossings of types 1 and 2 at the same slot are mutually
/// inverse, for like and unlike label pairs.
inline RelationResult check_r2(const BatterySettings& s, bool like) {
  RelationResult result{like ? "R2-like" : "R2-unlike"};
  detail::Checker c(result, s);
  for (int n = 2; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n - 1; ++i) {
        const bool is_like = beta.labels[i - 1] == beta.labels[i];
        if (is_like != like) continue;
        for (int first : {1, 2}) {
          c.instance("R2 " + detail::describe(beta, i) + " first type " + std::to_string(first), [&] {
            auto lhs = c.mat(beta, {Generator::cross(i, first), Generator::cross(i, 3 - first)});
            return lhs == OperatorMatrix::identity(beta);
          });
        }
      }
  return result;
}

/// Reidemeister III for the six crossing-type triples that are braid-group
/// identities: the middle type must match an outer type (the two mixed
/// triples, e.g. (1,2,1), already fail for the braid group itself and are
/// consequences of R2 instead).
inline RelationResult check_r3(const BatterySettings& s) {
  RelationResult result{"R3"};
  detail::Checker c(result, s);
  for (int n = 3; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n - 2; ++i)
        for (int l1 : {1, 2})
          for (int l2 : {1, 2})
            for (int l3 : {1, 2}) {
              if (l2 != l1 && l2 != l3) continue;
              c.instance("R3 " + detail::describe(beta, i) + " types (" +
                             std::to_string(l1) + "," + std::to_string(l2) + "," +
                             std::to_string(l3) + ")",
                         [&] {
                           auto lhs = c.mat(beta, {Generator::cross(i, l3),
                                                   Generator::cross(i + 1, l2),
                                                   Generator::cross(i, l1)});
                           auto rhs = c.mat(beta, {Generator::cross(i + 1, l1),
                                                   Generator::cross(i, l2),
                                                   Generator::cross(i + 1, l3)});
                           return lhs == rhs;
                         });
            }
  return result;
}

/// Height exchange: generators acting at disjoint slot pairs commute after
/// index bookkeeping (a cap below shifts later slots up by two, a cup down).
inline RelationResult check_height_exchange(const BatterySettings& s) {
  RelationResult result{"height-exchange"};
  detail::Checker c(result, s);
  std::vector<Generator> kinds;  // slot filled in per instance
  kinds.push_back(Generator::cap(1, CapOrder::LR));
  if (s.m > 2) kinds.push_back(Generator::cap(1, CapOrder::RL));
  kinds.push_back(Generator::cup(1));
  kinds.push_back(Generator::cross(1, 1));
  kinds.push_back(Generator::cross(1, 2));
  kinds.push_back(Generator::dumbbell(1));
  auto at = [](Generator g, int slot) {
    g.slot = slot;
    return g;
  };
  auto shift_of = [](const Generator& g) {
    switch (g.kind) {
      case Generator::Kind::Cap: return 2;
      case Generator::Kind::Cup: return -2;
      default: return 0;
    }
  };
  for (int n = 1; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (const auto& ga : kinds)
        for (const auto& gb : kinds)
          for (int i = 1; i <= n + 1; ++i)
            for (int j = i + 2; j <= n + 3; ++j) {
              c.instance("exchange " + detail::describe(beta, i) + " j=" + std::to_string(j), [&] {
                auto lhs = c.mat(beta, {at(ga, i), at(gb, j + shift_of(ga))});
                auto rhs = c.mat(beta, {at(gb, j), at(ga, i)});
                return lhs == rhs;
              });
            }
  return result;
}

/// Pitchfork: a strand crossing over (or under) a cap equals the cap on the
/// other side with the opposite crossing type.  The relation distinguishes
/// the two legs of the cap by their labels, so it is vacuous for m = 2.
inline RelationResult check_pitchfork(const BatterySettings& s) {
  RelationResult result{"pitchfork"};
  detail::Checker c(result, s);
  if (s.m == 2) return result;
  for (int n = 1; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n; ++i)
        for (CapOrder order : {CapOrder::LR, CapOrder::RL})
          for (int l : {1, 2}) {
            c.instance("pitchfork " + detail::describe(beta, i) + " type " + std::to_string(l), [&] {
              auto lhs = c.mat(beta, {Generator::cap(i + 1, order), Generator::cross(i, l)});
              auto rhs = c.mat(beta, {Generator::cap(i, order), Generator::cross(i + 1, 3 - l)});
              return lhs == rhs;
            });
            if (s.m == 2) break;
          }
  return result;
}

/// MOY (ia): cup after cap at the same slot scales by [m]_q.
inline RelationResult check_moy_ia(const BatterySettings& s) {
  RelationResult result{"MOY-ia"};
  detail::Checker c(result, s);
  const LaurentPoly qm = quantum_int(s.m);
  for (int n = 0; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n + 1; ++i)
        for (CapOrder order : {CapOrder::LR, CapOrder::RL}) {
          c.instance("MOY-ia " + detail::describe(beta, i), [&] {
            auto lhs = c.mat(beta, {Generator::cap(i, order), Generator::cup(i)});
            return lhs == OperatorMatrix::identity(beta).scaled(qm);
          });
          if (s.m == 2) break;
        }
  return result;
}

/// MOY (ib): cap, dumbbell on the adjacent like pair, cup scales by [m-1]_q.
inline RelationResult check_moy_ib(const BatterySettings& s) {
  RelationResult result{"MOY-ib"};
  detail::Checker c(result, s);
  const LaurentPoly qm1 = quantum_int(s.m - 1);
  for (int n = 1; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n; ++i) {
        const int x = beta.labels[i - 1];
        CapOrder match = (x == 1 || s.m == 2) ? CapOrder::LR : CapOrder::RL;
        CapOrder mirror = match == CapOrder::LR ? CapOrder::RL : CapOrder::LR;
        c.instance("MOY-ib-a " + detail::describe(beta, i), [&] {
          auto lhs = c.mat(beta, {Generator::cap(i + 1, match), Generator::dumbbell(i),
                                  Generator::cup(i + 1)});
          return lhs == OperatorMatrix::identity(beta).scaled(qm1);
        });
        c.instance("MOY-ib-b " + detail::describe(beta, i), [&] {
          auto lhs = c.mat(beta, {Generator::cap(i, mirror), Generator::dumbbell(i + 1),
                                  Generator::cup(i)});
          return lhs == OperatorMatrix::identity(beta).scaled(qm1);
        });
      }
  return result;
}

/// MOY (iia): the dumbbell squares to [2]_q times itself.
inline RelationResult check_moy_iia(const BatterySettings& s) {
  RelationResult result{"MOY-iia"};
  detail::Checker c(result, s);
  const LaurentPoly q2 = quantum_int(2);
  for (int n = 2; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n - 1; ++i) {
        if (beta.labels[i - 1] != beta.labels[i]) continue;
        c.instance("MOY-iia " + detail::describe(beta, i), [&] {
          auto u = c.mat(beta, {Generator::dumbbell(i)});
          return u * u == u.scaled(q2);
        });
      }
  return result;
}

/// MOY (iib): cap at i, dumbbells at i-1 and i+1, cup at i equals
/// cup-then-cap at slot i-1 plus [m-2]_q times the identity.
inline RelationResult check_moy_iib(const BatterySettings& s) {
  RelationResult result{"MOY-iib"};
  detail::Checker c(result, s);
  const LaurentPoly qm2 = quantum_int(s.m - 2);
  for (int n = 2; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 2; i <= n; ++i) {
        // need labels (y, m-y) at slots (i-1, i)
        const int y = beta.labels[i - 2];
        if (beta.labels[i - 1] + y != s.m) continue;
        CapOrder order = (y == 1 || s.m == 2) ? CapOrder::LR : CapOrder::RL;
        c.instance("MOY-iib " + detail::describe(beta, i), [&] {
          auto lhs = c.mat(beta, {Generator::cap(i, order), Generator::dumbbell(i - 1),
                                  Generator::dumbbell(i + 1), Generator::cup(i)});
          auto rhs = c.mat(beta, {Generator::cup(i - 1), Generator::cap(i - 1, order)});
          return lhs == rhs + OperatorMatrix::identity(beta).scaled(qm2);
        });
      }
  return result;
}

/// MOY (iii): the two triple-dumbbell sums agree on three equal labels.
inline RelationResult check_moy_iii(const BatterySettings& s) {
  RelationResult result{"MOY-iii"};
  detail::Checker c(result, s);
  for (int n = 3; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n - 2; ++i) {
        if (beta.labels[i - 1] != beta.labels[i] ||
            beta.labels[i] != beta.labels[i + 1])
          continue;
        c.instance("MOY-iii " + detail::describe(beta, i), [&] {
          auto lhs = c.mat(beta, {Generator::dumbbell(i + 1), Generator::dumbbell(i),
                                  Generator::dumbbell(i + 1)}) +
                     c.mat(beta, {Generator::dumbbell(i)});
          auto rhs = c.mat(beta, {Generator::dumbbell(i), Generator::dumbbell(i + 1),
                                  Generator::dumbbell(i)}) +
                     c.mat(beta, {Generator::dumbbell(i + 1)});
          return lhs == rhs;
        });
      }
  return result;
}

/// Hecke quadratic ([T(2)] - q^{1-m})([T(2)] + q^{-1-m}) = 0 and the braid
/// relation for type-2 crossings on like slots.
inline RelationResult check_hecke(const BatterySettings& s) {
  RelationResult result{"Hecke"};
  detail::Checker c(result, s);
  for (int n = 2; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n))
      for (int i = 1; i <= n - 1; ++i) {
        if (beta.labels[i - 1] != beta.labels[i]) continue;
        c.instance("Hecke-quadratic " + detail::describe(beta, i), [&] {
          auto t = c.mat(beta, {Generator::cross(i, 2)});
          auto id = OperatorMatrix::identity(beta);
          auto lhs = (t + id.scaled(-q_power(1 - s.m))) * (t + id.scaled(q_power(-1 - s.m)));
          return lhs.is_zero();
        });
        if (i <= n - 2 && beta.labels[i] == beta.labels[i + 1]) {
          c.instance("Hecke-braid " + detail::describe(beta, i), [&] {
            auto lhs = c.mat(beta, {Generator::cross(i, 2), Generator::cross(i + 1, 2),
                                    Generator::cross(i, 2)});
            auto rhs = c.mat(beta, {Generator::cross(i + 1, 2), Generator::cross(i, 2),
                                    Generator::cross(i + 1, 2)});
            return lhs == rhs;
          });
        }
      }
  return result;
}

/// Basis dimension: the state space over a length-n sequence has m^n states.
inline RelationResult check_basis_dimension(const BatterySettings& s) {
  RelationResult result{"basis-dimension"};
  detail::Checker c(result, s);
  for (int n = 0; n <= s.max_n; ++n)
    for (const auto& beta : detail::all_seqs(s.m, n)) {
      c.instance("basis-dimension n=" + std::to_string(n), [&] {
        long expected = 1;
        for (int j = 0; j < n; ++j) expected *= s.m;
        return static_cast<long>(enumerate_basis(beta).size()) == expected;
      });
    }
  return result;
}

inline std::vector<RelationResult> run_battery(const BatterySettings& s) {
  std::vector<RelationResult> results;
  results.push_back(check_r0(s));
  results.push_back(check_r1(s));
  results.push_back(check_r2(s, true));
  if (s.m > 2) results.push_back(check_r2(s, false));
  results.push_back(check_r3(s));
  results.push_back(check_height_exchange(s));
  results.push_back(check_pitchfork(s));
  results.push_back(check_moy_ia(s));
  results.push_back(check_moy_ib(s));
  results.push_back(check_moy_iia(s));
  results.push_back(check_moy_iib(s));
  results.push_back(check_moy_iii(s));
  results.push_back(check_hecke(s));
  results.push_back(check_basis_dimension(s));
  return results;
}

}  // namespace relations
}  // namespace qtangle
