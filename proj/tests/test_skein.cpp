#include <catch2/catch_amalgamated.hpp>

#include "qtangle/dsl.hpp"
#include "qtangle/skein.hpp"

using namespace qtangle;
using namespace qtangle::skein;

namespace {

const std::vector<BraidLink>& corpus() {
  static const std::vector<BraidLink> links = {
      {"unknot", 1, {}},
      {"unknot-kink", 2, {1}},
      {"two-circles", 2, {}},
      {"hopf", 2, {1, 1}},
      {"trefoil", 2, {1, 1, 1}},
      {"fig8", 3, {1, -2, 1, -2}},
  };
  return links;
}

TangleWord mirror_of(const TangleWord& word) {
  TangleWord out = word;
  for (auto& g : out.gens)
    if (g.kind == Generator::Kind::Cross) g.cross_type = 3 - g.cross_type;
  return out;
}

}  // namespace

TEST_CASE("resolution equals direct evaluation on the corpus") {
  for (int m = 2; m <= 4; ++m)
    for (const auto& link : corpus()) {
      TangleWord w = braid_closure(link.k, link.braid, m);
      INFO(link.name << " m=" << m);
      CHECK(evaluate_by_resolution(w) == evaluate_closed(w));
    }
}

TEST_CASE("resolution equals direct evaluation with unlike crossings") {
  for (int m : {3, 4}) {
    TangleWord w{StrandSeq{m, {}},
                 {Generator::cap(1), Generator::cross(1, 1), Generator::cross(1, 2),
                  Generator::cup(1)}};
    CHECK(evaluate_by_resolution(w) == evaluate_closed(w));
    CHECK(evaluate_closed(w) == quantum_int(m));
  }
}

TEST_CASE("crossingless input reduces to direct evaluation trivially") {
  TangleWord w = braid_closure(2, {}, 3);
  CHECK(evaluate_by_resolution(w) == quantum_int(3) * quantum_int(3));
  TangleWord open{StrandSeq{2, {1}}, {}};
  CHECK_THROWS_AS(evaluate_by_resolution(open), DiagramError);
}

TEST_CASE("one-kink unknot evaluates to the unknot value") {
  // R1 kink: the crossing sits between the legs of two different caps
  // (closure of a one-letter two-strand braid)
  for (int m = 2; m <= 4; ++m)
    for (int letter : {1, -1}) {
      TangleWord w = braid_closure(2, {letter}, m);
      CHECK(evaluate_closed(w) == quantum_int(m));
      CHECK(evaluate_by_resolution(w) == quantum_int(m));
    }
}

TEST_CASE("a self-kink contributes the framing twist, not an R1 identity") {
  // crossing both of whose endpoints lie on the same cap: the value picks up
  // the twist monomial -q^{-3} (type 2, m=2) instead of staying the unknot
  TangleWord w{StrandSeq{2, {}},
               {Generator::cap(1), Generator::cross(1, 2), Generator::cup(1)}};
  LaurentPoly v = evaluate_closed(w);
  CHECK(v == -q_power(-3) * quantum_int(2));
  CHECK(evaluate_by_resolution(w) == v);
}

TEST_CASE("disjoint circle multiplies by the quantum dimension") {
  for (int m : {2, 3})
    for (const auto& link : {corpus()[3], corpus()[4], corpus()[5]}) {
      TangleWord base = braid_closure(link.k, link.braid, m);
      // append a disjoint circle after the closure
      TangleWord with_circle = base;
      with_circle.gens.push_back(Generator::cap(1));
      with_circle.gens.push_back(Generator::cup(1));
      CHECK(evaluate_closed(with_circle) == quantum_int(m) * evaluate_closed(base));
    }
}

TEST_CASE("Markov conjugation invariance") {
  for (int m : {2, 3})
    for (const auto& link : corpus()) {
      if (link.k > 3 || link.braid.size() > 4) continue;
      LaurentPoly base = evaluate_closed(braid_closure(link.k, link.braid, m));
      for (int g = 1; g <= link.k - 1; ++g)
        for (int sign : {1, -1}) {
          std::vector<int> conj;
          conj.push_back(sign * g);
          conj.insert(conj.end(), link.braid.begin(), link.braid.end());
          conj.push_back(-sign * g);
          INFO(link.name << " m=" << m << " conjugated by " << sign * g);
          CHECK(evaluate_closed(braid_closure(link.k, conj, m)) == base);
        }
    }
}

TEST_CASE("single-move invariance on DSL presentations") {
  // inserting a cancelling R2 pair, an R0 zig-zag, or an R1 kink anywhere in
  // the word leaves the value unchanged
  for (int m : {2, 3}) {
    TangleWord base = braid_closure(2, {1, 1}, m);
    LaurentPoly value = evaluate_closed(base);

    TangleWord r2 = base;
    r2.gens.insert(r2.gens.begin() + 2,
                   {Generator::cross(1, 1), Generator::cross(1, 2)});
    CHECK(evaluate_closed(r2) == value);

    TangleWord r0 = base;
    r0.gens.insert(r0.gens.begin() + 2,
                   {Generator::cap(2, CapOrder::RL), Generator::cup(1)});
    CHECK(evaluate_closed(r0) == value);

    TangleWord r1 = base;
    r1.gens.insert(r1.gens.begin() + 2,
                   {Generator::cap(1, CapOrder::RL), Generator::cross(2, 2),
                    Generator::cup(1)});
    CHECK(evaluate_closed(r1) == value);
  }
}

TEST_CASE("mirror sends the invariant to its bar image") {
  for (int m : {2, 3})
    for (const auto& link : corpus()) {
      TangleWord w = braid_closure(link.k, link.braid, m);
      INFO(link.name << " m=" << m);
      CHECK(evaluate_closed(mirror_of(w)) == evaluate_closed(w).bar());
    }
}

TEST_CASE("bracket oracle basics") {
  // unnormalized: every loop contributes -A^2 - A^-2
  CHECK(kauffman_bracket(1, {}) == -(q_power(2) + q_power(-2)));
  CHECK(kauffman_bracket_jones(1, {}) == LaurentPoly::one());
  CHECK(kauffman_bracket_jones(2, {1}) == LaurentPoly::one());  // R1 via normalization
  // trefoil: the standard four-term Jones polynomial (this oracle's smoothing
  // convention makes positive letters the A^{-1} chirality)
  CHECK(kauffman_bracket_jones(2, {1, 1, 1}) ==
        q_power(-4) + q_power(-12) - q_power(-16));
  // mirror braid gives the bar image
  CHECK(kauffman_bracket_jones(2, {-1, -1, -1}) ==
        kauffman_bracket_jones(2, {1, 1, 1}).bar());
  // the figure-eight knot is amphichiral: palindromic polynomial
  LaurentPoly f8 = kauffman_bracket_jones(3, {1, -2, 1, -2});
  CHECK(f8 == f8.bar());
  CHECK(f8 == q_power(8) - q_power(4) + LaurentPoly::one() - q_power(-4) + q_power(-8));
  CHECK_THROWS_AS(kauffman_bracket(9, {}), std::invalid_argument);
  CHECK_THROWS_AS(kauffman_bracket(2, {5}), std::invalid_argument);
}

TEST_CASE("engine and bracket agree under the matched convention") {
  auto report = match_convention_m2(corpus());
  CHECK(report.found);
  CHECK(report.sign == -1);
  CHECK(report.stretch == -2);
  CHECK(report.writhe_sign == -1);
  CHECK(report.writhe_exp == -3);
  CHECK(report.summary == "q -> -A^-2, per-writhe factor -A^-3");
}

TEST_CASE("convention match requires a consistent corpus") {
  // feeding the oracle an inconsistent pair (engine trefoil against bracket
  // values of other links) must fail: check by corrupting via mismatched
  // braids under the same name is not possible through the API, so instead
  // check the minimum-size guard
  CHECK_THROWS_AS(match_convention_m2({{"unknot", 1, {}}}), std::invalid_argument);
}
