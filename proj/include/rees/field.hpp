#ifndef REES_FIELD_HPP
#define REES_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "rees/error.hpp"

namespace rees {

// A coefficient is either a residue mod p (prime mode) or an exact
// rational.  Which alternative is active is decided by the owning Field;
// mixing the two is a bug and trips an assertion-style DomainError.
using Coeff = std::variant<std::uint64_t, mpq_class>;

enum class FieldKind { prime, rational };

bool is_prime_u64(std::uint64_t n);

// F_p for a prime p < 2^63, or Q with arbitrary-precision values.
class Field {
 public:
  static Field prime(std::uint64_t p);
  static Field rationals();

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long long v) const;
  Coeff from_ratio(const mpz_class& num, const mpz_class& den) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool eq(const Coeff& a, const Coeff& b) const;

  std::string str(const Coeff& a) const;

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }

 private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;  // 0 in rational mode
};

}  // namespace rees

#endif
