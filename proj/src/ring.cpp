#include "rees/ring.hpp"

#include <algorithm>

namespace rees {

std::string RingSpec::var_name(int i) const {
  if (i < d) return "x" + std::to_string(i + 1);
  if (i < d + m) return "T" + std::to_string(i - d + 1);
  return "t" + std::to_string(i - d - m + 1);
}

RingSpec RingSpec::extended() const {
  RingSpec r = *this;
  r.aux += 1;
  return r;
}

RingSpec RingSpec::base() const {
  RingSpec r = *this;
  r.aux = 0;
  return r;
}

RingSpec make_ring(const Field& field, int d, int m) {
  if (d < 1 || m < 1) throw DomainError("ring needs d >= 1 and m >= 1");
  return RingSpec{field, d, m, 0};
}

long Monomial::total_degree() const {
  long s = 0;
  for (auto v : e) s += v;
  return s;
}

long Monomial::x_degree(const RingSpec& r) const {
  long s = 0;
  for (int i = 0; i < r.d; ++i) s += e[i];
  return s;
}

long Monomial::t_degree(const RingSpec& r) const {
  long s = 0;
  for (int i = r.d; i < r.d + r.m; ++i) s += e[i];
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

static constexpr std::uint32_t kExpCap = 1u << 24;

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] += b.e[i];
    if (r.e[i] >= kExpCap) throw DomainError("exponent overflow");
  }
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    if (a.e[i] > b.e[i]) throw DomainError("monomial division is not exact");
    r.e[i] -= a.e[i];
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i)
    r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder{}; }

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = OrderKind::lex;
  return o;
}

MonomialOrder MonomialOrder::block_elim(std::vector<int> first_block_vars) {
  MonomialOrder o;
  o.kind_ = OrderKind::block_elim;
  std::sort(first_block_vars.begin(), first_block_vars.end());
  o.block_ = std::move(first_block_vars);
  return o;
}

namespace {

// degrevlex over a subset of positions (all positions when subset empty
// flag is not used; callers pass explicit index lists for blocks).
int drl_cmp_subset(const Monomial& a, const Monomial& b,
                   const std::vector<int>& idx) {
  long da = 0, db = 0;
  for (int i : idx) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // Reverse lex: scan from the last variable; the monomial with the
  // smaller exponent at the last difference is the larger one.
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    if (a.e[*it] != b.e[*it]) return a.e[*it] > b.e[*it] ? -1 : 1;
  }
  return 0;
}

int drl_cmp_all(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::degrevlex:
      return drl_cmp_all(a, b);
    case OrderKind::lex:
      for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case OrderKind::block_elim: {
      int c = drl_cmp_subset(a, b, block_);
      if (c != 0) return c;
      std::vector<int> rest;
      rest.reserve(a.e.size());
      std::size_t bi = 0;
      for (int i = 0; i < static_cast<int>(a.e.size()); ++i) {
        while (bi < block_.size() && block_[bi] < i) ++bi;
        if (bi < block_.size() && block_[bi] == i) continue;
        rest.push_back(i);
      }
      return drl_cmp_subset(a, b, rest);
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  std::string k;
  switch (kind_) {
    case OrderKind::degrevlex:
      k = "drl";
      break;
    case OrderKind::lex:
      k = "lex";
      break;
    case OrderKind::block_elim:
      k = "blk";
      for (int i : block_) k += ":" + std::to_string(i);
      break;
  }
  return k;
}

}  // namespace rees
