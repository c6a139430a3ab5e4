#include "rees/field.hpp"

namespace rees {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

const u64& res(const Coeff& c) {
  if (!std::holds_alternative<u64>(c))
    throw DomainError("coefficient is not a prime-field residue");
  return std::get<u64>(c);
}

const mpq_class& rat(const Coeff& c) {
  if (!std::holds_alternative<mpq_class>(c))
    throw DomainError("coefficient is not a rational");
  return std::get<mpq_class>(c);
}

}  // namespace

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (p >= (1ull << 63)) throw DomainError("prime modulus must be < 2^63");
  if (!is_prime_u64(p))
    throw DomainError("modulus " + std::to_string(p) + " is not prime");
  return Field(FieldKind::prime, p);
}

Field Field::rationals() { return Field(FieldKind::rational, 0); }

Coeff Field::zero() const {
  if (kind_ == FieldKind::prime) return u64(0);
  return mpq_class(0);
}

Coeff Field::one() const {
  if (kind_ == FieldKind::prime) return u64(1 % p_);
  return mpq_class(1);
}

Coeff Field::from_int(long long v) const {
  if (kind_ == FieldKind::prime) {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<u64>(r);
  }
  return mpq_class(static_cast<long>(v));
}

Coeff Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DomainError("zero denominator");
  if (kind_ == FieldKind::prime) {
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class n = num % p;
    if (n < 0) n += p;
    mpz_class d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw DomainError("denominator not invertible mod p");
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (n * dinv) % p;
    return static_cast<u64>(r.get_ui());
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::prime) {
    u64 r = res(a) + res(b);
    if (r >= p_) r -= p_;
    return r;
  }
  return mpq_class(rat(a) + rat(b));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::prime) {
    u64 x = res(a), y = res(b);
    return x >= y ? x - y : x + p_ - y;
  }
  return mpq_class(rat(a) - rat(b));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::prime) return mulmod(res(a), res(b), p_);
  return mpq_class(rat(a) * rat(b));
}

Coeff Field::neg(const Coeff& a) const {
  if (kind_ == FieldKind::prime) {
    u64 x = res(a);
    return x == 0 ? 0 : p_ - x;
  }
  return mpq_class(-rat(a));
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) throw DomainError("division by zero");
  if (kind_ == FieldKind::prime) return powmod(res(a), p_ - 2, p_);
  return mpq_class(1 / rat(a));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const {
  return mul(a, inv(b));
}

bool Field::is_zero(const Coeff& a) const {
  if (kind_ == FieldKind::prime) return res(a) == 0;
  return rat(a) == 0;
}

bool Field::is_one(const Coeff& a) const {
  if (kind_ == FieldKind::prime) return res(a) == 1 % p_;
  return rat(a) == 1;
}

bool Field::eq(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::prime) return res(a) == res(b);
  return rat(a) == rat(b);
}

std::string Field::str(const Coeff& a) const {
  if (kind_ == FieldKind::prime) return std::to_string(res(a));
  return rat(a).get_str();
}

}  // namespace rees
