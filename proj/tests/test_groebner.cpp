#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rees/ideal.hpp"

using namespace rees;

namespace {

RingSpec ring_p(int d, int m) { return make_ring(Field::prime(32003), d, m); }

Polynomial P(const RingSpec& R, const std::string& s) {
  return poly_parse(s, R);
}

Ideal I(const RingSpec& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* s : gens) v.push_back(P(R, s));
  return Ideal(R, std::move(v));
}

std::uint64_t rng_state = 0xdeadbeef;
std::uint64_t rng() {
  rng_state ^= rng_state << 13;
  rng_state ^= rng_state >> 7;
  rng_state ^= rng_state << 17;
  return rng_state;
}

const MonomialOrder kDrl = MonomialOrder::degrevlex();

// Exhaustive dimension of a monomial ideal straight from its generator
// list: the largest variable set containing no generator's support.
int monomial_dim_oracle(const RingSpec& R, const std::vector<Monomial>& gens) {
  int n = R.nvars();
  int best = -1;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (int v = 0; v < n; ++v)
        if (g.e[v] != 0 && !(mask & (1ull << v))) {
          inside = false;
          break;
        }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max<int>(best, __builtin_popcountll(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("groebner basis of a principal ideal is its monic generator") {
  RingSpec R = ring_p(2, 1);
  auto gb = groebner_basis(I(R, {"3*x1^2+6*x2"}), kDrl);
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == P(R, "x1^2+2*x2"));
}

TEST_CASE("textbook basis: x+y, x-y generates (x, y)") {
  RingSpec R = ring_p(2, 1);
  auto gb = groebner_basis(I(R, {"x1+x2", "x1-x2"}), kDrl);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == P(R, "x2"));
  CHECK(gb[1] == P(R, "x1"));
}

TEST_CASE("reduced basis is unique across generator presentations") {
  RingSpec R = ring_p(3, 1);
  Ideal a = I(R, {"x1^2-x2", "x1*x2-x3", "x1*x3-x2^2"});
  Ideal b = I(R, {"x1*x2-x3", "x1^2-x2", "x1*x3-x2^2", "x2^3-x3^2"});
  CHECK(ideal_equal(a, b));
  auto gb1 = groebner_basis(a, kDrl);
  auto gb2 = groebner_basis(b, kDrl);
  REQUIRE(gb1.size() == gb2.size());
  for (std::size_t i = 0; i < gb1.size(); ++i) CHECK(gb1[i] == gb2[i]);
}

TEST_CASE("normal form is zero exactly on members") {
  RingSpec R = ring_p(3, 1);
  Ideal twisted = I(R, {"x1^2-x2", "x1*x2-x3"});
  CHECK(ideal_contains(twisted, P(R, "x2^2-x1*x3")));
  CHECK(ideal_contains(twisted, P(R, "x1^3-x3")));
  CHECK_FALSE(ideal_contains(twisted, P(R, "x1")));
  CHECK_FALSE(ideal_contains(twisted, P(R, "x2^2")));
}

TEST_CASE("membership under random ideal combinations") {
  RingSpec R = ring_p(2, 2);
  Ideal base = I(R, {"x1^2*T1-x2", "x2^2*T2-x1", "x1*x2-T1*T2"});
  for (int trial = 0; trial < 20; ++trial) {
    // A random combination of the generators must reduce to zero.
    Polynomial acc = Polynomial::zero(R);
    for (const auto& g : base.generators()) {
      Monomial m = Monomial::one(R);
      for (int v = 0; v < R.nvars(); ++v)
        m.e[v] = static_cast<std::uint32_t>(rng() % 3);
      acc = acc + g.times_term(m, R.field.from_int(
                                      static_cast<long long>(rng() % 100) + 1));
    }
    CHECK(ideal_contains(base, acc));
  }
}

TEST_CASE("self check accepts valid runs and budget trips") {
  RingSpec R = ring_p(3, 1);
  GbOptions strict;
  strict.self_check = true;
  auto gb = buchberger(
      R, {P(R, "x1^2-x2"), P(R, "x1*x2-x3"), P(R, "x2^2-x1*x3")}, kDrl, strict);
  CHECK(gb.size() >= 3);
  GbOptions tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(
      buchberger(R,
                 {P(R, "x1^2-x2*x3"), P(R, "x1*x2-x3^2"), P(R, "x2^2-x1*x3")},
                 kDrl, tiny),
      ResourceLimitError);
}

TEST_CASE("intersection of monomial ideals is the lcm ideal") {
  RingSpec R = ring_p(3, 1);
  Ideal a = I(R, {"x1^2", "x2"});
  Ideal b = I(R, {"x1", "x3^2"});
  Ideal meet = ideal_intersect(a, b);
  Ideal expected = I(R, {"x1^2", "x1*x2", "x2*x3^2"});
  CHECK(ideal_equal(meet, expected));
}

TEST_CASE("intersection elements lie in both ideals") {
  RingSpec R = ring_p(2, 2);
  Ideal a = I(R, {"x1*T1-x2^2", "x2*T2"});
  Ideal b = I(R, {"x1+x2", "T1^2-T2"});
  Ideal meet = ideal_intersect(a, b);
  for (const auto& g : meet.generators()) {
    CHECK(ideal_contains(a, g));
    CHECK(ideal_contains(b, g));
  }
  // And the product, which lies in the intersection, is contained in it.
  Ideal prod = ideal_product(a, b);
  for (const auto& g : prod.generators()) CHECK(ideal_contains(meet, g));
}

TEST_CASE("colon ideal: textbook monomial example") {
  RingSpec R = ring_p(2, 1);
  // (x1^2 x2) : (x1) = (x1 x2)
  CHECK(ideal_equal(ideal_colon_poly(I(R, {"x1^2*x2"}), P(R, "x1")),
                    I(R, {"x1*x2"})));
  // (x1^2, x2^2) : (x1, x2) = (x1^2, x2^2, x1 x2)
  CHECK(ideal_equal(ideal_colon(I(R, {"x1^2", "x2^2"}), I(R, {"x1", "x2"})),
                    I(R, {"x1^2", "x2^2", "x1*x2"})));
}

TEST_CASE("colon law: I : f recovers the cofactor of a product") {
  RingSpec R = ring_p(2, 2);
  Polynomial f = P(R, "x1*T1+x2");
  Ideal J = I(R, {"x1^2-T2", "x2*T1"});
  std::vector<Polynomial> prod;
  for (const auto& g : J.generators()) prod.push_back(g * f);
  Ideal Jf(R, prod);
  Ideal quotient = ideal_colon_poly(Jf, f);
  CHECK(ideal_equal(quotient, J));
}

TEST_CASE("saturation ladder and index") {
  RingSpec R = ring_p(2, 1);
  // (x1^3) : (x1)^infinity = (1), reached in 3 steps.
  auto [unit, idx] = ideal_saturate(I(R, {"x1^3"}), I(R, {"x1"}));
  CHECK(idx == 3);
  CHECK_THROWS_AS(krull_dimension(unit), DomainError);  // improper
  // (x1^2*x2, x1*x2^2) : (x1)^infinity = (x2), reached in 2 steps.
  auto [sat, idx2] = ideal_saturate(I(R, {"x1^2*x2", "x1*x2^2"}), I(R, {"x1"}));
  CHECK(ideal_equal(sat, I(R, {"x2"})));
  CHECK(idx2 == 2);
  // Already saturated input has index 0.
  auto [same, idx3] = ideal_saturate(I(R, {"x1"}), I(R, {"x2"}));
  CHECK(idx3 == 0);
  CHECK(ideal_equal(same, I(R, {"x1"})));
}

TEST_CASE("exact division succeeds and fails as it should") {
  RingSpec R = ring_p(2, 2);
  Polynomial a = P(R, "x1^2*T1-x2*T2+3");
  Polynomial b = P(R, "x2+5*T1");
  CHECK(poly_exact_divide(a * b, b) == a);
  CHECK_THROWS_AS(poly_exact_divide(P(R, "x1^2+x2"), P(R, "x1")), DomainError);
}

TEST_CASE("krull dimension: hand-checked cases") {
  RingSpec R = ring_p(3, 1);  // 4 variables total
  CHECK(krull_dimension(Ideal::zero(R)) == 4);
  CHECK(krull_dimension(I(R, {"x1"})) == 3);
  CHECK(krull_dimension(I(R, {"x1*x2"})) == 3);
  CHECK(krull_dimension(I(R, {"x1", "x2", "x3", "T1"})) == 0);
  CHECK(krull_height(I(R, {"x1^2-x2"})) == 1);
  // Twisted cubic in the x-block: height 2.
  CHECK(krull_height(I(R, {"x1^2-x2", "x1*x2-x3", "x2^2-x1*x3"})) == 2);
}

TEST_CASE("krull dimension matches the exhaustive monomial oracle") {
  RingSpec R = ring_p(3, 2);  // 5 variables
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    std::vector<Monomial> monos;
    std::vector<Polynomial> gens;
    for (int i = 0; i < k; ++i) {
      Monomial m = Monomial::one(R);
      for (int v = 0; v < R.nvars(); ++v)
        m.e[v] = static_cast<std::uint32_t>(rng() % 3);
      if (m.is_one()) continue;
      monos.push_back(m);
      gens.push_back(Polynomial::term(R, m, R.field.one()));
    }
    Ideal mi(R, gens);
    int expected = monos.empty() ? R.nvars() : monomial_dim_oracle(R, monos);
    CHECK(krull_dimension(mi) == expected);
  }
}

TEST_CASE("minimal generators drop redundancies degree by degree") {
  RingSpec R = ring_p(2, 2);
  Ideal pad = I(R, {"x1*T1", "x2*T1", "x1^2*T1^2", "x1*T1+x2*T1",
                    "x1*x2*T1"});
  auto mins = minimal_generators(pad);
  REQUIRE(mins.size() == 2);
  CHECK(mins[0] == P(R, "x1*T1"));
  CHECK(mins[1] == P(R, "x2*T1"));
  CHECK_THROWS_AS(minimal_generators(I(R, {"x1+T1^2"})), DomainError);
}

TEST_CASE("groebner cache returns consistent bases per order") {
  RingSpec R = ring_p(2, 1);
  Ideal a = I(R, {"x1^2-x2", "x2^2-x1"});
  const auto& g1 = a.groebner(kDrl);
  const auto& g2 = a.groebner(kDrl);
  CHECK(&g1 == &g2);  // cached object, not a recomputation
  auto lexgb = a.groebner(MonomialOrder::lex());
  CHECK(!lexgb.empty());
}
