#include "rees/ideal.hpp"

#include <algorithm>
#include <set>

namespace rees {

std::atomic<bool> g_force_gb_self_check{false};

namespace {

// Working polynomial: terms sorted strictly descending under the active
// order.  Multiplying every term by a fixed monomial preserves the order,
// so times_term needs no re-sort.
struct OPoly {
  std::vector<Term> t;
  bool zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
};

OPoly to_opoly(const Polynomial& p, const MonomialOrder& ord) {
  OPoly r{p.terms()};
  std::sort(r.t.begin(), r.t.end(), [&](const Term& a, const Term& b) {
    return ord.cmp(a.mono, b.mono) > 0;
  });
  return r;
}

Polynomial to_poly(const RingSpec& ring, const OPoly& p) {
  return Polynomial(ring, p.t);
}

// a - (m, c) * b, merging sorted term lists.
OPoly sub_scaled(const Field& F, const MonomialOrder& ord, const OPoly& a,
                 const Monomial& m, const Coeff& c, const OPoly& b) {
  OPoly out;
  out.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    Monomial bm = mono_mul(b.t[j].mono, m);
    int cm = ord.cmp(a.t[i].mono, bm);
    if (cm > 0) {
      out.t.push_back(a.t[i++]);
    } else if (cm < 0) {
      out.t.push_back(Term{std::move(bm), F.neg(F.mul(b.t[j].coeff, c))});
      ++j;
    } else {
      Coeff s = F.sub(a.t[i].coeff, F.mul(b.t[j].coeff, c));
      if (!F.is_zero(s)) out.t.push_back(Term{a.t[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j)
    out.t.push_back(
        Term{mono_mul(b.t[j].mono, m), F.neg(F.mul(b.t[j].coeff, c))});
  return out;
}

void make_monic(const Field& F, OPoly& p) {
  if (p.zero()) return;
  Coeff inv = F.inv(p.lead().coeff);
  if (F.is_one(p.lead().coeff)) return;
  for (auto& t : p.t) t.coeff = F.mul(t.coeff, inv);
}

// Full (head and tail) reduction of f by the monic family G.
OPoly reduce_opoly(const Field& F, const MonomialOrder& ord, OPoly f,
                   const std::vector<OPoly>& G) {
  OPoly result;
  while (!f.zero()) {
    const Term& lt = f.lead();
    const OPoly* reducer = nullptr;
    for (const auto& g : G) {
      if (!g.zero() && mono_divides(g.lead().mono, lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      result.t.push_back(lt);
      f.t.erase(f.t.begin());
    } else {
      Monomial q = mono_div(lt.mono, reducer->lead().mono);
      // reducer is monic, so the cofactor is just the lead coefficient
      f = sub_scaled(F, ord, f, q, lt.coeff, *reducer);
    }
  }
  return result;
}

OPoly spoly(const Field& F, const MonomialOrder& ord, const OPoly& f,
            const OPoly& g) {
  Monomial l = mono_lcm(f.lead().mono, g.lead().mono);
  Monomial uf = mono_div(l, f.lead().mono);
  Monomial ug = mono_div(l, g.lead().mono);
  // both monic: S(f,g) = uf*f - ug*g
  OPoly ff;
  ff.t.reserve(f.t.size());
  for (const auto& t : f.t) ff.t.push_back(Term{mono_mul(t.mono, uf), t.coeff});
  return sub_scaled(F, ord, ff, ug, F.one(), g);
}

struct Pair {
  long deg;
  Monomial lcm;
  int i, j;
};

struct PairLess {
  const MonomialOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord->cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

void self_check_basis(const Field& F, const MonomialOrder& ord,
                      const std::vector<OPoly>& G) {
  // Re-verify Buchberger's criterion.  Both classical pair-pruning rules
  // are sound for a certificate too: coprime leading terms (first
  // criterion), and the chain criterion once the two side pairs of a
  // dividing third element have been confirmed earlier in the pass.
  const int n = static_cast<int>(G.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Monomial& li = G[i].t.front().mono;
      const Monomial& lj = G[j].t.front().mono;
      if (mono_coprime(li, lj)) continue;
      Monomial l = mono_lcm(li, lj);
      // Static chain criterion: a third leading term dividing the lcm
      // with both side lcms proper divisors lets induction over the lcm
      // order discharge this pair.
      bool chained = false;
      for (int k = 0; k < n && !chained; ++k) {
        if (k == i || k == j) continue;
        const Monomial& lk = G[k].t.front().mono;
        if (!mono_divides(lk, l)) continue;
        if (!(mono_lcm(li, lk) == l) && !(mono_lcm(lj, lk) == l))
          chained = true;
      }
      if (chained) continue;
      OPoly s = spoly(F, ord, G[i], G[j]);
      if (!reduce_opoly(F, ord, std::move(s), G).zero())
        throw Error("internal error: basis fails the Buchberger criterion");
    }
  }
}

}  // namespace

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord) {
  const Field& F = f.ring().field;
  std::vector<OPoly> gs;
  gs.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    OPoly og = to_opoly(g, ord);
    make_monic(F, og);
    gs.push_back(std::move(og));
  }
  OPoly r = reduce_opoly(F, ord, to_opoly(f, ord), gs);
  return to_poly(f.ring(), r);
}

std::vector<Polynomial> buchberger(const RingSpec& ring,
                                   const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord,
                                   const GbOptions& opts) {
  const Field& F = ring.field;
  std::vector<OPoly> G;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.ring() == ring)) throw RingMismatchError("generator ring mismatch");
    OPoly og = to_opoly(g, ord);
    make_monic(F, og);
    G.push_back(std::move(og));
  }

  PairLess pl{&ord};
  std::set<Pair, PairLess> queue(pl);
  std::set<std::pair<int, int>> pending;
  auto push_pair = [&](int i, int j) {
    Monomial l = mono_lcm(G[i].lead().mono, G[j].lead().mono);
    queue.insert(Pair{l.total_degree(), std::move(l), i, j});
    pending.insert({i, j});
  };
  for (int i = 0; i < static_cast<int>(G.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(G.size()); ++j) push_pair(i, j);

  long budget = opts.max_pairs;
  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    // Buchberger's first criterion: coprime leading terms.
    if (mono_coprime(G[p.i].lead().mono, G[p.j].lead().mono)) continue;
    // Second (chain) criterion: some g_k divides the lcm and both side
    // pairs have already been handled.
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()); ++k) {
      if (k == p.i || k == p.j || G[k].zero()) continue;
      if (!mono_divides(G[k].lead().mono, p.lcm)) continue;
      auto key = [&](int a, int b) {
        return std::pair<int, int>(std::min(a, b), std::max(a, b));
      };
      if (pending.count(key(p.i, k)) == 0 && pending.count(key(p.j, k)) == 0) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    if (--budget < 0)
      throw ResourceLimitError("Groebner pair budget exceeded (max_pairs=" +
                               std::to_string(opts.max_pairs) + ")");
    OPoly h =
        reduce_opoly(F, ord, spoly(F, ord, G[p.i], G[p.j]), G);
    if (h.zero()) continue;
    make_monic(F, h);
    G.push_back(std::move(h));
    int n = static_cast<int>(G.size()) - 1;
    for (int k = 0; k < n; ++k)
      if (!G[k].zero()) push_pair(k, n);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].zero()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || G[j].zero()) continue;
      if (mono_divides(G[j].lead().mono, G[i].lead().mono)) {
        if (!(G[i].lead().mono == G[j].lead().mono) || j < i) {
          redundant = true;
          break;
        }
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Tail-reduce each element against the others.
  std::vector<OPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    OPoly r = reduce_opoly(F, ord, minimal[i], others);
    make_monic(F, r);
    if (!r.zero()) reduced.push_back(std::move(r));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const OPoly& a, const OPoly& b) {
    return ord.cmp(a.lead().mono, b.lead().mono) < 0;
  });

  if (opts.self_check || g_force_gb_self_check.load())
    self_check_basis(F, ord, reduced);

  std::vector<Polynomial> out;
  out.reserve(reduced.size());
  for (const auto& g : reduced) out.push_back(to_poly(ring, g));
  return out;
}

}  // namespace rees
