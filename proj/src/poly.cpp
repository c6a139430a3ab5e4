#include "rees/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace rees {

namespace {

const MonomialOrder kCanonical = MonomialOrder::degrevlex();

struct MonoDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return kCanonical.cmp(a, b) > 0;
  }
};

}  // namespace

Polynomial::Polynomial(const RingSpec& ring, std::vector<Term> terms)
    : ring_(ring) {
  std::map<Monomial, Coeff, MonoDesc> acc;
  for (auto& t : terms) {
    if (static_cast<int>(t.mono.e.size()) != ring.nvars())
      throw RingMismatchError("term has wrong variable count");
    auto it = acc.find(t.mono);
    if (it == acc.end())
      acc.emplace(std::move(t.mono), std::move(t.coeff));
    else
      it->second = ring_.field.add(it->second, t.coeff);
  }
  terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!ring_.field.is_zero(c)) terms_.push_back(Term{m, c});
}

Polynomial Polynomial::constant(const RingSpec& ring, const Coeff& c) {
  if (ring.field.is_zero(c)) return zero(ring);
  return Polynomial(ring, {Term{Monomial::one(ring), c}});
}

Polynomial Polynomial::variable(const RingSpec& ring, int var) {
  if (var < 0 || var >= ring.nvars()) throw DomainError("variable out of range");
  Monomial m = Monomial::one(ring);
  m.e[var] = 1;
  return Polynomial(ring, {Term{m, ring.field.one()}});
}

Polynomial Polynomial::term(const RingSpec& ring, Monomial m, Coeff c) {
  return Polynomial(ring, {Term{std::move(m), std::move(c)}});
}

const Term& Polynomial::leading(const MonomialOrder& ord) const {
  if (is_zero()) throw DomainError("zero polynomial has no leading term");
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (ord.cmp(terms_[i].mono, terms_[best].mono) > 0) best = i;
  return terms_[best];
}

std::optional<Bidegree> Polynomial::bidegree() const {
  if (is_zero()) return std::nullopt;
  Bidegree b{terms_[0].mono.x_degree(ring_), terms_[0].mono.t_degree(ring_)};
  for (const auto& t : terms_) {
    if (t.mono.x_degree(ring_) != b.dx || t.mono.t_degree(ring_) != b.dt)
      return std::nullopt;
  }
  return b;
}

long Polynomial::max_t_degree() const {
  long r = 0;
  for (const auto& t : terms_) r = std::max(r, t.mono.t_degree(ring_));
  return r;
}

long Polynomial::max_x_degree() const {
  long r = 0;
  for (const auto& t : terms_) r = std::max(r, t.mono.x_degree(ring_));
  return r;
}

bool Polynomial::all_terms_in_x() const {
  if (is_zero()) return false;
  for (const auto& t : terms_)
    if (t.mono.x_degree(ring_) == 0) return false;
  return true;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatchError("polynomial ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = kCanonical.cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = ring_.field.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!ring_.field.is_zero(s)) out.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_.field.neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  std::map<Monomial, Coeff, MonoDesc> acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = mono_mul(a.mono, b.mono);
      Coeff c = ring_.field.mul(a.coeff, b.coeff);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second = ring_.field.add(it->second, c);
    }
  }
  Polynomial r(ring_);
  for (auto& [m, c] : acc)
    if (!ring_.field.is_zero(c)) r.terms_.push_back(Term{m, c});
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono)) return false;
    if (!ring_.field.eq(terms_[i].coeff, o.terms_[i].coeff)) return false;
  }
  return true;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  if (ring_.field.is_zero(c)) return zero(ring_);
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_.field.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Coeff& c) const {
  if (ring_.field.is_zero(c)) return zero(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{mono_mul(t.mono, m), ring_.field.mul(t.coeff, c)});
  // Multiplying by a fixed monomial preserves the degrevlex ordering.
  return r;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scaled(ring_.field.inv(leading(ord).coeff));
}

Polynomial Polynomial::subst_x_zero() const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.x_degree(ring_) == 0) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::lifted(const RingSpec& ext) const {
  if (!(ext.base() == ring_.base()) || ext.aux < ring_.aux)
    throw RingMismatchError("invalid ring extension");
  Polynomial r(ext);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    m.e.resize(ext.nvars(), 0);
    r.terms_.push_back(Term{std::move(m), t.coeff});
  }
  return r;
}

Polynomial Polynomial::contracted(const RingSpec& base) const {
  if (!(base.base() == ring_.base()) || base.aux > ring_.aux)
    throw RingMismatchError("invalid ring contraction");
  Polynomial r(base);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (int i = base.nvars(); i < ring_.nvars(); ++i)
      if (t.mono.e[i] != 0)
        throw DomainError("contraction of a term involving elimination vars");
    Monomial m = t.mono;
    m.e.resize(base.nvars());
    r.terms_.push_back(Term{std::move(m), t.coeff});
  }
  return r;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  const Field& F = ring_.field;
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Coeff c = t.coeff;
    std::string sep;
    if (i > 0) sep = "+";
    if (F.kind() == FieldKind::rational && std::get<mpq_class>(c) < 0) {
      sep = "-";
      c = F.neg(c);
    }
    std::string mono;
    for (std::size_t v = 0; v < t.mono.e.size(); ++v) {
      if (t.mono.e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.var_name(static_cast<int>(v));
      if (t.mono.e[v] > 1) mono += "^" + std::to_string(t.mono.e[v]);
    }
    std::string cs = F.str(c);
    std::string body;
    if (mono.empty())
      body = cs;
    else if (cs == "1")
      body = mono;
    else
      body = cs + "*" + mono;
    out += sep + body;
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const RingSpec& ring) : s_(s), ring_(ring) {}

  Polynomial run() {
    Polynomial acc = Polynomial::zero(ring_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      bool saw_sign = false;
      while (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -sign;
        saw_sign = true;
        ++pos_;
        skip_ws();
      }
      if (!first && !saw_sign)
        throw ParseError("expected '+' or '-' between terms", pos_);
      Polynomial t = parse_term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
      skip_ws();
    }
    return acc;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  unsigned long parse_uint() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", pos_);
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      digits += s_[pos_++];
    if (digits.size() > 9) throw ParseError("number too large", pos_);
    return std::stoul(digits);
  }

  mpz_class parse_bigint() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a number", pos_);
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      digits += s_[pos_++];
    return mpz_class(digits);
  }

  // [coeff][*]var[^exp][*var[^exp]]...
  Polynomial parse_term() {
    Coeff c = ring_.field.one();
    bool saw_coeff = false;
    skip_ws();
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      saw_coeff = true;
      mpz_class num = parse_bigint();
      mpz_class den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        if (ring_.field.kind() != FieldKind::rational)
          throw ParseError("fractional coefficients need the rational field",
                           pos_);
        ++pos_;
        skip_ws();
        den = parse_bigint();
        if (den == 0) throw ParseError("zero denominator", pos_);
      }
      c = ring_.field.from_ratio(num, den);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    Monomial m = Monomial::one(ring_);
    bool any_var = false;
    while (true) {
      skip_ws();
      if (at_end() || (peek() != 'x' && peek() != 'T')) break;
      std::size_t var_pos = pos_;
      char block = s_[pos_++];
      unsigned long idx = parse_uint();
      int var;
      if (block == 'x') {
        if (idx < 1 || static_cast<int>(idx) > ring_.d)
          throw ParseError("unknown variable x" + std::to_string(idx), var_pos);
        var = static_cast<int>(idx) - 1;
      } else {
        if (idx < 1 || static_cast<int>(idx) > ring_.m)
          throw ParseError("unknown variable T" + std::to_string(idx), var_pos);
        var = ring_.d + static_cast<int>(idx) - 1;
      }
      unsigned long exp = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        exp = parse_uint();
        if (exp > (1u << 20)) throw ParseError("exponent overflow", pos_);
      }
      m.e[var] += static_cast<std::uint32_t>(exp);
      if (m.e[var] >= (1u << 24)) throw ParseError("exponent overflow", pos_);
      any_var = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || (peek() != 'x' && peek() != 'T'))
          throw ParseError("expected a variable after '*'", pos_);
      }
    }
    if (!any_var) {
      if (!saw_coeff) throw ParseError("expected a term", pos_);
      // Constant term; reject stray garbage like "x0" or "y".
      if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) &&
          peek() != '+' && peek() != '-')
        throw ParseError(std::string("unexpected character '") + peek() + "'",
                         pos_);
    }
    return Polynomial::term(ring_, std::move(m), std::move(c));
  }

  const std::string& s_;
  RingSpec ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial poly_parse(const std::string& text, const RingSpec& ring) {
  Parser p(text, ring);
  return p.run();
}

}  // namespace rees
