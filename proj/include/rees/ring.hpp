#ifndef REES_RING_HPP
#define REES_RING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rees/field.hpp"

namespace rees {

// The ambient ring S = k[x_1..x_d, T_1..T_m].  A handful of internal
// operations (intersection, colon) work in an extension of S by `aux`
// trailing elimination variables; those rings never escape the public
// ideal API.
struct RingSpec {
  Field field;
  int d;        // x-block size
  int m;        // T-block size
  int aux = 0;  // internal elimination variables, appended last

  int nvars() const { return d + m + aux; }

  std::string var_name(int i) const;

  // Extension of this ring by one elimination variable.
  RingSpec extended() const;
  // Same ring without the elimination variables.
  RingSpec base() const;

  bool operator==(const RingSpec& o) const {
    return field == o.field && d == o.d && m == o.m && aux == o.aux;
  }
};

RingSpec make_ring(const Field& field, int d, int m);

// Exponent vector, x-block first, then T-block, then aux.
struct Monomial {
  std::vector<std::uint32_t> e;

  static Monomial one(const RingSpec& r) {
    return Monomial{std::vector<std::uint32_t>(r.nvars(), 0)};
  }

  long total_degree() const;
  long x_degree(const RingSpec& r) const;
  long t_degree(const RingSpec& r) const;
  bool is_one() const;

  bool operator==(const Monomial& o) const { return e == o.e; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, exact
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { degrevlex, lex, block_elim };

// Total multiplicative well-order on monomials.  block_elim compares the
// masked block first (degrevlex within it), then the rest, so the masked
// variables are eliminated.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex();
  static MonomialOrder lex();
  static MonomialOrder block_elim(std::vector<int> first_block_vars);

  OrderKind kind() const { return kind_; }
  const std::vector<int>& block() const { return block_; }

  // Three-way comparison: negative if a < b, 0 if equal, positive if a > b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) < 0;
  }

  // Stable identity for GB caching.
  std::string key() const;

 private:
  OrderKind kind_ = OrderKind::degrevlex;
  std::vector<int> block_;  // sorted variable indices, block_elim only
};

}  // namespace rees

#endif
