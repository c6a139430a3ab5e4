#ifndef REES_POLY_HPP
#define REES_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rees/ring.hpp"

namespace rees {

struct Term {
  Monomial mono;
  Coeff coeff;
};

struct Bidegree {
  long dx = 0;
  long dt = 0;
  bool operator==(const Bidegree& o) const = default;
};

// Sparse exact multivariate polynomial.  Terms are kept strictly
// descending in degrevlex with nonzero coefficients and no duplicate
// monomials; every constructor and operation restores this form.
class Polynomial {
 public:
  explicit Polynomial(const RingSpec& ring) : ring_(ring) {}
  Polynomial(const RingSpec& ring, std::vector<Term> terms);

  static Polynomial zero(const RingSpec& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingSpec& ring, const Coeff& c);
  static Polynomial variable(const RingSpec& ring, int var);
  static Polynomial term(const RingSpec& ring, Monomial m, Coeff c);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Leading term under an arbitrary order (linear scan).
  const Term& leading(const MonomialOrder& ord) const;

  std::optional<Bidegree> bidegree() const;
  bool is_bihomogeneous() const { return is_zero() || bidegree().has_value(); }
  long max_t_degree() const;
  long max_x_degree() const;
  // True iff every term has x-degree >= 1, i.e. membership in (x_1..x_d)
  // for this single polynomial.
  bool all_terms_in_x() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;

  Polynomial scaled(const Coeff& c) const;
  Polynomial times_term(const Monomial& m, const Coeff& c) const;
  Polynomial monic(const MonomialOrder& ord) const;

  // x_i -> 0 for every x-variable.
  Polynomial subst_x_zero() const;

  // Lift into / contract from a ring extended by elimination variables.
  Polynomial lifted(const RingSpec& ext) const;
  Polynomial contracted(const RingSpec& base) const;

  std::string str() const;

 private:
  void check_ring(const Polynomial& o) const;

  RingSpec ring_;
  std::vector<Term> terms_;
};

Polynomial poly_parse(const std::string& text, const RingSpec& ring);

}  // namespace rees

#endif
