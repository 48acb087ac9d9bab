#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtangle/laurent.hpp"

namespace qtangle {

/// Error raised when a diagram fails a structural precondition.  The message
/// names the first offending generator (0-based index in the word), or -1 for
/// errors not tied to a generator.
class DiagramError : public std::runtime_error {
public:
  DiagramError(int gen_index, const std::string& what)
      : std::runtime_error(what), gen_index_(gen_index) {}
  int gen_index() const { return gen_index_; }

private:
  int gen_index_;
};

/// Sequence of strand labels, each 1 or m-1.  For m=2 the two coincide and
/// are stored as 1.
struct StrandSeq {
  int m = 2;
  std::vector<int> labels;

  int size() const { return static_cast<int>(labels.size()); }

  bool valid() const {
    if (m < 2) return false;
    for (int l : labels)
      if (l != 1 && l != m - 1) return false;
    return true;
  }

  friend bool operator==(const StrandSeq& a, const StrandSeq& b) {
    return a.m == b.m && a.labels == b.labels;
  }
  friend bool operator!=(const StrandSeq& a, const StrandSeq& b) { return !(a == b); }
};

/// Transpose entries i, i+1 (1-based slot index).
inline StrandSeq switch_at(const StrandSeq& seq, int i) {
  if (i < 1 || i > seq.size() - 1)
    throw DiagramError(-1, "switch: slot " + std::to_string(i) + " out of range");
  StrandSeq r = seq;
  std::swap(r.labels[i - 1], r.labels[i]);
  return r;
}

/// Remove entries i, i+1; they must sum to m (the mod-m convention's zero
/// entry is elided immediately).
inline StrandSeq drop_at(const StrandSeq& seq, int i) {
  if (i < 1 || i > seq.size() - 1)
    throw DiagramError(-1, "drop: slot " + std::to_string(i) + " out of range");
  if (seq.labels[i - 1] + seq.labels[i] != seq.m)
    throw DiagramError(-1, "drop: labels at slot " + std::to_string(i) +
                               " do not sum to m");
  StrandSeq r = seq;
  r.labels.erase(r.labels.begin() + (i - 1), r.labels.begin() + (i + 1));
  return r;
}

/// Which label order a cap creates (or a cup consumes bookkeeping-wise):
/// LR = (1, m-1), RL = (m-1, 1).  Irrelevant for m=2.
enum class CapOrder { LR, RL };

struct Generator {
  enum class Kind { Cap, Cup, Cross, Dumbbell };

  Kind kind;
  int slot = 1;                     // 1-based
  int cross_type = 1;               // 1 or 2, Cross only
  CapOrder order = CapOrder::LR;    // Cap only

  static Generator cap(int i, CapOrder order = CapOrder::LR) {
    return Generator{Kind::Cap, i, 1, order};
  }
  static Generator cup(int i) { return Generator{Kind::Cup, i}; }
  static Generator cross(int i, int type) { return Generator{Kind::Cross, i, type}; }
  static Generator dumbbell(int i) { return Generator{Kind::Dumbbell, i}; }

  friend bool operator==(const Generator& a, const Generator& b) {
    if (a.kind != b.kind || a.slot != b.slot) return false;
    switch (a.kind) {
      case Kind::Cross: return a.cross_type == b.cross_type;
      case Kind::Cap: return a.order == b.order;
      default: return true;
    }
  }
  friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
};

/// Labels created by a cap with the given order.
inline std::pair<int, int> cap_labels(int m, CapOrder order) {
  return order == CapOrder::LR ? std::make_pair(1, m - 1) : std::make_pair(m - 1, 1);
}

/// Apply one generator to a strand sequence, checking its slot/label
/// precondition.  gen_index is only used for error reporting.
inline StrandSeq step(const StrandSeq& seq, const Generator& g, int gen_index = -1) {
  const int n = seq.size();
  const int i = g.slot;
  auto bad = [&](const std::string& why) -> DiagramError {
    return DiagramError(gen_index, "generator " + std::to_string(gen_index) + ": " + why);
  };
  switch (g.kind) {
    case Generator::Kind::Cap: {
      if (i < 1 || i > n + 1) throw bad("cap slot out of range");
      auto [a, b] = cap_labels(seq.m, g.order);
      StrandSeq r = seq;
      r.labels.insert(r.labels.begin() + (i - 1), {a, b});
      return r;
    }
    case Generator::Kind::Cup: {
      if (i < 1 || i > n - 1) throw bad("cup slot out of range");
      if (seq.labels[i - 1] + seq.labels[i] != seq.m)
        throw bad("cup labels do not sum to m");
      return drop_at(seq, i);
    }
    case Generator::Kind::Cross: {
      if (i < 1 || i > n - 1) throw bad("crossing slot out of range");
      if (g.cross_type != 1 && g.cross_type != 2) throw bad("crossing type must be 1 or 2");
      return switch_at(seq, i);
    }
    case Generator::Kind::Dumbbell: {
      if (i < 1 || i > n - 1) throw bad("dumbbell slot out of range");
      if (seq.labels[i - 1] != seq.labels[i])
        throw bad("dumbbell labels at slot differ");
      return seq;
    }
  }
  throw bad("unknown generator kind");
}

inline bool is_like_crossing(const StrandSeq& seq, int i) {
  return seq.labels[i - 1] == seq.labels[i];
}

/// A composable vertical stack of generators, applied bottom-to-top.
struct TangleWord {
  StrandSeq bottom;
  std::vector<Generator> gens;

  friend bool operator==(const TangleWord& a, const TangleWord& b) {
    return a.bottom == b.bottom && a.gens == b.gens;
  }
};

/// Validates a word and returns the full chain of sequences:
/// chain[0] = bottom, chain[k] = sequence after gens[k-1].
/// Throws DiagramError naming the first offending generator.
inline std::vector<StrandSeq> validate(const TangleWord& word) {
  if (!word.bottom.valid())
    throw DiagramError(-1, "bottom sequence has labels outside {1, m-1}");
  std::vector<StrandSeq> chain;
  chain.reserve(word.gens.size() + 1);
  chain.push_back(word.bottom);
  for (size_t k = 0; k < word.gens.size(); ++k)
    chain.push_back(step(chain.back(), word.gens[k], static_cast<int>(k)));
  return chain;
}

inline StrandSeq top_of(const TangleWord& word) { return validate(word).back(); }

inline bool is_closed(const TangleWord& word) {
  return word.bottom.labels.empty() && top_of(word).labels.empty();
}

inline bool is_crossingless(const TangleWord& word) {
  for (const auto& g : word.gens)
    if (g.kind == Generator::Kind::Cross) return false;
  return true;
}

/// Closure of a braid on k strands over beta(k) = (1,...,1, m-1,...,m-1):
/// k nested caps, one like crossing per letter (positive -> type 1,
/// negative -> type 2), k nested cups.
inline TangleWord braid_closure(int k, const std::vector<int>& braid, int m) {
  if (k < 1) throw DiagramError(-1, "braid closure needs k >= 1");
  TangleWord w;
  w.bottom = StrandSeq{m, {}};
  for (int i = 1; i <= k; ++i) w.gens.push_back(Generator::cap(i, CapOrder::LR));
  for (int letter : braid) {
    int i = std::abs(letter);
    if (i < 1 || i > k - 1)
      throw DiagramError(-1, "braid letter " + std::to_string(letter) + " out of range");
    w.gens.push_back(Generator::cross(i, letter > 0 ? 1 : 2));
  }
  for (int i = k; i >= 1; --i) w.gens.push_back(Generator::cup(i));
  return w;
}

inline int writhe(const std::vector<int>& braid) {
  int w = 0;
  for (int letter : braid) w += letter > 0 ? 1 : -1;
  return w;
}

/// The crossing type used inside the rotation composite for an unlike
/// crossing of outer type l.  Sliding a crossing past a cap exchanges the
/// two types, so the inner crossing carries the opposite type; pinned by a
/// golden test.
inline int unlike_inner_type(int l) { return 3 - l; }

/// Replace every unlike crossing by a rotation composite whose inner
/// crossing lands on two label-1 strands:
///   labels (1, m-1):  [cap at (i,i+1) creating (m-1,1), crossing at
///                      (i+1,i+2), cup at (i+2,i+3)]
///   labels (m-1, 1):  [cap at (i+2,i+3) creating (1,m-1), crossing at
///                      (i+1,i+2), cup at (i,i+1)]
/// The inner crossing has the opposite type.  Like crossings and all other
/// generators pass through unchanged.
inline TangleWord rewrite_unlike(const TangleWord& word) {
  auto chain = validate(word);
  TangleWord out;
  out.bottom = word.bottom;
  for (size_t k = 0; k < word.gens.size(); ++k) {
    const Generator& g = word.gens[k];
    const StrandSeq& seq = chain[k];
    if (g.kind == Generator::Kind::Cross && !is_like_crossing(seq, g.slot)) {
      const int i = g.slot;
      const int inner = unlike_inner_type(g.cross_type);
      if (seq.labels[i - 1] == 1) {
        out.gens.push_back(Generator::cap(i, CapOrder::RL));
        out.gens.push_back(Generator::cross(i + 1, inner));
        out.gens.push_back(Generator::cup(i + 2));
      } else {
        out.gens.push_back(Generator::cap(i + 2, CapOrder::LR));
        out.gens.push_back(Generator::cross(i + 1, inner));
        out.gens.push_back(Generator::cup(i));
      }
    } else {
      out.gens.push_back(g);
    }
  }
  return out;
}

/// One branch of the skein expansion of a word's crossings.
struct ResolutionTerm {
  LaurentPoly weight;
  TangleWord word;  // crossingless
};

/// Expand every like crossing per the skein rule
///   T(1) -> q^{m-1} id - q^m U,   T(2) -> q^{1-m} id - q^{-m} U.
/// Unlike crossings must be rewritten first (rewrite_unlike).
/// Returns 2^c terms in deterministic (binary-counter) order.
inline std::vector<ResolutionTerm> resolve_crossings(const TangleWord& word) {
  auto chain = validate(word);
  for (size_t k = 0; k < word.gens.size(); ++k) {
    const Generator& g = word.gens[k];
    if (g.kind == Generator::Kind::Cross && !is_like_crossing(chain[k], g.slot))
      throw DiagramError(static_cast<int>(k),
                         "resolve_crossings: unlike crossing present; apply rewrite_unlike first");
  }
  std::vector<ResolutionTerm> terms;
  terms.push_back(ResolutionTerm{LaurentPoly::one(), TangleWord{word.bottom, {}}});
  const int m = word.bottom.m;
  for (const auto& g : word.gens) {
    if (g.kind != Generator::Kind::Cross) {
      for (auto& t : terms) t.word.gens.push_back(g);
      continue;
    }
    const int sgn = g.cross_type == 1 ? 1 : -1;
    std::vector<ResolutionTerm> next;
    next.reserve(terms.size() * 2);
    for (const auto& t : terms) {
      // identity branch
      ResolutionTerm id_branch = t;
      id_branch.weight.shift(sgn * (m - 1));
      next.push_back(std::move(id_branch));
      // dumbbell branch
      ResolutionTerm u_branch = t;
      u_branch.weight.shift(sgn * m, -1);
      u_branch.word.gens.push_back(Generator::dumbbell(g.slot));
      next.push_back(std::move(u_branch));
    }
    terms = std::move(next);
  }
  return terms;
}

}  // namespace qtangle
