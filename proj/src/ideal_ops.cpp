#include "rees/ideal.hpp"

#include <algorithm>

namespace rees {

namespace {
const MonomialOrder kDrl = MonomialOrder::degrevlex();
}

Ideal::Ideal(const RingSpec& ring, std::vector<Polynomial> gens)
    : ring_(ring), cache_(std::make_shared<Cache>()) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (!(g.ring() == ring)) throw RingMismatchError("generator ring mismatch");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord,
                                               const GbOptions& opts) const {
  const std::string key = ord.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
  }
  std::vector<Polynomial> gb = buchberger(ring_, gens_, ord, opts);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(key, std::move(gb));
  return it->second;
}

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                       const GbOptions& opts) {
  return I.groebner(ord, opts);
}

Polynomial normal_form(const Polynomial& f, const Ideal& I,
                       const MonomialOrder& ord, const GbOptions& opts) {
  if (!(f.ring() == I.ring())) throw RingMismatchError("ring mismatch");
  return reduce_full(f, I.groebner(ord, opts), ord);
}

bool ideal_contains(const Ideal& I, const Polynomial& f, const GbOptions& opts) {
  return normal_form(f, I, kDrl, opts).is_zero();
}

bool ideal_is_zero(const Ideal& I, const GbOptions& opts) {
  return I.groebner(kDrl, opts).empty();
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GbOptions& opts) {
  if (!(I.ring() == J.ring())) throw RingMismatchError("ring mismatch");
  // Reduced Groebner bases are unique per order, and ours come out
  // deterministically sorted.
  const auto& a = I.groebner(kDrl, opts);
  const auto& b = J.groebner(kDrl, opts);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw RingMismatchError("ring mismatch");
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw RingMismatchError("ring mismatch");
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J, const GbOptions& opts) {
  if (!(I.ring() == J.ring())) throw RingMismatchError("ring mismatch");
  const RingSpec& R = I.ring();
  if (I.has_no_generators() || J.has_no_generators()) return Ideal::zero(R);

  // Eliminate t from t*I + (1-t)*J.
  RingSpec ext = R.extended();
  const int tvar = ext.nvars() - 1;
  Polynomial t = Polynomial::variable(ext, tvar);
  Polynomial one_minus_t = Polynomial::constant(ext, ext.field.one()) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * f.lifted(ext));
  for (const auto& g : J.generators())
    gens.push_back(one_minus_t * g.lifted(ext));

  MonomialOrder elim = MonomialOrder::block_elim({tvar});
  std::vector<Polynomial> gb = buchberger(ext, gens, elim, opts);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    // In the elimination order an element is free of t iff its leading
    // term is.
    if (g.leading(elim).mono.e[tvar] == 0) out.push_back(g.contracted(R));
  }
  return Ideal(R, std::move(out));
}

Polynomial poly_exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("exact division by zero");
  const RingSpec& R = f.ring();
  const Field& F = R.field;
  const Term& gl = g.leading(kDrl);
  Polynomial r = f;
  Polynomial q = Polynomial::zero(R);
  while (!r.is_zero()) {
    const Term& rl = r.leading(kDrl);
    if (!mono_divides(gl.mono, rl.mono))
      throw DomainError("exact division failed");
    Monomial m = mono_div(rl.mono, gl.mono);
    Coeff c = F.div(rl.coeff, gl.coeff);
    q = q + Polynomial::term(R, m, c);
    r = r - g.times_term(m, c);
  }
  return q;
}

Ideal ideal_colon_poly(const Ideal& I, const Polynomial& f,
                       const GbOptions& opts) {
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  Ideal fid(I.ring(), {f});
  Ideal meet = ideal_intersect(I, fid, opts);
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators())
    gens.push_back(poly_exact_divide(h, f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J, const GbOptions& opts) {
  if (!(I.ring() == J.ring())) throw RingMismatchError("ring mismatch");
  if (J.has_no_generators()) throw DomainError("colon by the zero ideal");
  bool first = true;
  Ideal res = Ideal::zero(I.ring());
  for (const auto& f : J.generators()) {
    Ideal part = ideal_colon_poly(I, f, opts);
    res = first ? part : ideal_intersect(res, part, opts);
    first = false;
  }
  return res;
}

std::pair<Ideal, int> ideal_saturate(const Ideal& I, const Ideal& J,
                                     const GbOptions& opts) {
  Ideal cur = I;
  for (int idx = 0; idx < 64; ++idx) {
    Ideal nxt = ideal_colon(cur, J, opts);
    if (ideal_equal(nxt, cur, opts)) return {cur, idx};
    cur = nxt;
  }
  throw ResourceLimitError("saturation did not stabilize within 64 steps");
}

int krull_dimension(const Ideal& I, const GbOptions& opts) {
  const RingSpec& R = I.ring();
  const int n = R.nvars();
  const auto& gb = I.groebner(kDrl, opts);

  // Support masks of the minimal generators of the leading-term ideal.
  std::vector<Monomial> lts;
  for (const auto& g : gb) lts.push_back(g.leading(kDrl).mono);
  std::vector<std::uint64_t> supports;
  for (std::size_t i = 0; i < lts.size(); ++i) {
    if (lts[i].is_one()) throw DomainError("improper ideal (contains a unit)");
    bool redundant = false;
    for (std::size_t j = 0; j < lts.size(); ++j)
      if (i != j && mono_divides(lts[j], lts[i]) && !(lts[i] == lts[j])) {
        redundant = true;
        break;
      }
    if (redundant) continue;
    std::uint64_t s = 0;
    for (int v = 0; v < n; ++v)
      if (lts[i].e[v] != 0) s |= (1ull << v);
    supports.push_back(s);
  }
  if (supports.empty()) return n;  // zero ideal

  // Largest variable subset V containing the support of no generator.
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool independent = true;
    for (auto s : supports) {
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcountll(mask));
  }
  return best;
}

int krull_height(const Ideal& I, const GbOptions& opts) {
  return I.ring().nvars() - krull_dimension(I, opts);
}

std::vector<Polynomial> minimal_generators(const Ideal& I,
                                           const GbOptions& opts) {
  std::vector<Polynomial> gens = I.generators();
  for (const auto& g : gens)
    if (!g.is_bihomogeneous())
      throw DomainError("minimal_generators needs bihomogeneous generators");
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& a, const Polynomial& b) {
                     return a.terms()[0].mono.total_degree() <
                            b.terms()[0].mono.total_degree();
                   });
  std::vector<Polynomial> kept;
  for (const auto& g : gens) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    Ideal K(I.ring(), kept);
    if (!ideal_contains(K, g, opts)) kept.push_back(g);
  }
  return kept;
}

}  // namespace rees
