#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rees/poly.hpp"

using namespace rees;

namespace {

RingSpec ring_p(int d, int m, std::uint64_t p = 32003) {
  return make_ring(Field::prime(p), d, m);
}

Polynomial P(const RingSpec& R, const std::string& s) {
  return poly_parse(s, R);
}

// Tiny deterministic generator for property checks.
std::uint64_t rng_state = 0x12345678;
std::uint64_t rng() {
  rng_state ^= rng_state << 13;
  rng_state ^= rng_state >> 7;
  rng_state ^= rng_state << 17;
  return rng_state;
}

Polynomial random_poly(const RingSpec& R, int max_terms, int max_exp) {
  std::vector<Term> terms;
  int nt = static_cast<int>(rng() % (max_terms + 1));
  for (int i = 0; i < nt; ++i) {
    Monomial m = Monomial::one(R);
    for (int v = 0; v < R.nvars(); ++v)
      m.e[v] = static_cast<std::uint32_t>(rng() % (max_exp + 1));
    terms.push_back(Term{m, R.field.from_int(static_cast<long long>(
                                rng() % 2003) - 1001)});
  }
  return Polynomial(R, std::move(terms));
}

}  // namespace

TEST_CASE("field arithmetic mod p") {
  Field F = Field::prime(32003);
  Coeff a = F.from_int(-1);
  CHECK(F.eq(a, Coeff{std::uint64_t{32002}}));
  Coeff b = F.from_int(12345);
  CHECK(F.is_one(F.mul(b, F.inv(b))));
  CHECK(F.is_zero(F.add(b, F.neg(b))));
  CHECK_THROWS_AS(F.inv(F.zero()), DomainError);
  CHECK_THROWS_AS(Field::prime(32004), DomainError);  // composite
}

TEST_CASE("primality test spot checks") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(32003));
  CHECK(is_prime_u64(4294967291ull));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(32004));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime base 2,3,5,7
}

TEST_CASE("rational field is exact") {
  Field F = Field::rationals();
  Coeff h = F.from_ratio(1, 3);
  Coeff s = F.add(h, F.from_ratio(1, 6));
  CHECK(F.eq(s, F.from_ratio(1, 2)));
  CHECK(F.str(s) == "1/2");
}

TEST_CASE("parser round trips through str") {
  RingSpec R = ring_p(3, 4);
  for (const char* s :
       {"x1", "0", "7", "x1*T2+x2*T3+x3*T4", "x1^2*T3+x3^2*T4",
        "T3^5+T2^4*T4", "3*x1*x2-x3^2", "x1x2"}) {
    Polynomial f = P(R, s);
    CHECK(P(R, f.str()) == f);
  }
  RingSpec Q = make_ring(Field::rationals(), 2, 2);
  Polynomial g = P(Q, "1/2*x1^2-3/4*x2*T1+T2");
  CHECK(P(Q, g.str()) == g);
}

TEST_CASE("parser rejects malformed input with positions") {
  RingSpec R = ring_p(2, 2);
  CHECK_THROWS_AS(P(R, "x3"), ParseError);       // x out of range
  CHECK_THROWS_AS(P(R, "T9"), ParseError);       // T out of range
  CHECK_THROWS_AS(P(R, "x1+"), ParseError);      // dangling sign
  CHECK_THROWS_AS(P(R, "x1^"), ParseError);      // dangling exponent
  CHECK_THROWS_AS(P(R, "x1 & x2"), ParseError);  // stray character
  CHECK_THROWS_AS(P(R, ""), ParseError);
  CHECK_THROWS_AS(P(R, "1/2*x1"), ParseError);   // rationals need field=QQ
}

TEST_CASE("canonical form merges and drops terms") {
  RingSpec R = ring_p(2, 2);
  CHECK(P(R, "x1+x1") == P(R, "2*x1"));
  CHECK(P(R, "x1-x1").is_zero());
  CHECK(P(R, "x1+x2-x2+T1^2") == P(R, "T1^2+x1"));
}

TEST_CASE("ring arithmetic laws on random polynomials") {
  RingSpec R = ring_p(2, 3);
  for (int i = 0; i < 50; ++i) {
    Polynomial a = random_poly(R, 5, 3), b = random_poly(R, 5, 3),
               c = random_poly(R, 5, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).is_zero());
    CHECK(a * (b * c) == (a * b) * c);
  }
}

TEST_CASE("leading term respects degrevlex") {
  RingSpec R = ring_p(3, 1);
  MonomialOrder drl = MonomialOrder::degrevlex();
  // Classic degrevlex: x1*x3 < x2^2.
  Polynomial f = P(R, "x1*x3+x2^2");
  CHECK(f.leading(drl).mono == P(R, "x2^2").terms()[0].mono);
  // Higher total degree wins.
  Polynomial g = P(R, "x1^3+x2^2");
  CHECK(g.leading(drl).mono == P(R, "x1^3").terms()[0].mono);
}

TEST_CASE("lex and elimination orders") {
  RingSpec R = ring_p(3, 1);
  MonomialOrder lex = MonomialOrder::lex();
  CHECK(lex.cmp(P(R, "x1").terms()[0].mono, P(R, "x2^5").terms()[0].mono) > 0);
  MonomialOrder blk = MonomialOrder::block_elim({0});
  // Anything containing x1 beats anything x1-free.
  CHECK(blk.cmp(P(R, "x1").terms()[0].mono,
                P(R, "x2^9*x3^9").terms()[0].mono) > 0);
}

TEST_CASE("bidegree bookkeeping") {
  RingSpec R = ring_p(3, 4);
  Polynomial f = P(R, "x1*T2+x2*T3");
  REQUIRE(f.bidegree().has_value());
  CHECK(f.bidegree()->dx == 1);
  CHECK(f.bidegree()->dt == 1);
  CHECK(f.is_bihomogeneous());
  Polynomial g = P(R, "x1*T2+T3");
  CHECK_FALSE(g.bidegree().has_value());
  CHECK(P(R, "x1^2*T3^4").max_t_degree() == 4);
  CHECK(P(R, "x1^2*T3^4").max_x_degree() == 2);
  CHECK(P(R, "x1*T1+x2").all_terms_in_x());
  CHECK_FALSE(P(R, "x1*T1+T2").all_terms_in_x());
}

TEST_CASE("subst_x_zero kills mixed terms") {
  RingSpec R = ring_p(2, 2);
  CHECK(P(R, "x1*T1+T2^2").subst_x_zero() == P(R, "T2^2"));
  CHECK(P(R, "x1+x2^2").subst_x_zero().is_zero());
}

TEST_CASE("times_term and monic") {
  RingSpec R = ring_p(2, 2);
  MonomialOrder drl = MonomialOrder::degrevlex();
  Polynomial f = P(R, "3*x1^2+5*x2*T1");
  Monomial m = P(R, "x2").terms()[0].mono;
  CHECK(f.times_term(m, R.field.from_int(2)) == P(R, "6*x1^2*x2+10*x2^2*T1"));
  Polynomial g = f.monic(drl);
  CHECK(R.field.is_one(g.leading(drl).coeff));
}

TEST_CASE("ring mismatch is rejected") {
  RingSpec R = ring_p(2, 2), S = ring_p(2, 3);
  CHECK_THROWS_AS(P(R, "x1") + P(S, "x1"), RingMismatchError);
}

TEST_CASE("lift and contract are inverse on t-free elements") {
  RingSpec R = ring_p(2, 2);
  RingSpec E = R.extended();
  Polynomial f = P(R, "x1*T2+3*x2^2");
  CHECK(f.lifted(E).contracted(R) == f);
}
