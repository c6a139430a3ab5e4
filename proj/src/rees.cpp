#include "rees/rees.hpp"

#include <algorithm>

namespace rees {

namespace {

std::vector<Polynomial> t_row_vector(const RingSpec& ring) {
  std::vector<Polynomial> v;
  v.reserve(ring.m);
  for (int i = 0; i < ring.m; ++i)
    v.push_back(Polynomial::variable(ring, ring.d + i));
  return v;
}

std::vector<Polynomial> x_row_vector(const RingSpec& ring) {
  std::vector<Polynomial> v;
  v.reserve(ring.d);
  for (int i = 0; i < ring.d; ++i)
    v.push_back(Polynomial::variable(ring, i));
  return v;
}

Ideal minor_ideal_or_zero(const PolyMatrix& M, int r) {
  if (r < 1 || r > std::min(M.rows(), M.cols())) return Ideal::zero(M.ring());
  return minor_ideal(M, r);
}

}  // namespace

Ideal x_ideal(const RingSpec& ring) {
  return Ideal(ring, x_row_vector(ring));
}

Ideal symmetric_ideal(const RingSpec& ring, const PolyMatrix& phi) {
  if (phi.rows() != ring.m)
    throw DomainError("presentation matrix must have m rows");
  return Ideal(ring, row_vector_times(t_row_vector(ring), phi));
}

PresentationInput make_presentation(const RingSpec& ring,
                                    const PolyMatrix& phi) {
  const int m = ring.m;
  if (phi.rows() != m || phi.cols() != m - 1)
    throw DomainError("presentation matrix must be m x (m-1) with m = " +
                      std::to_string(m));
  for (int i = 0; i < phi.rows(); ++i) {
    for (int j = 0; j < phi.cols(); ++j) {
      const Polynomial& e = phi.at(i, j);
      if (e.is_zero()) continue;
      auto bd = e.bidegree();
      if (!bd || bd->dt != 0)
        throw DomainError("matrix entries must be homogeneous in the "
                          "x-variables only");
    }
  }
  // First m-2 columns linear, last column of one degree n >= 1.
  for (int j = 0; j + 1 < phi.cols(); ++j) {
    for (int i = 0; i < phi.rows(); ++i) {
      const Polynomial& e = phi.at(i, j);
      if (!e.is_zero() && e.bidegree()->dx != 1)
        throw DomainError("column " + std::to_string(j + 1) +
                          " must be linear");
    }
  }
  int n = 0;
  for (int i = 0; i < phi.rows(); ++i) {
    const Polynomial& e = phi.at(i, phi.cols() - 1);
    if (e.is_zero()) continue;
    long dx = e.bidegree()->dx;
    if (n == 0)
      n = static_cast<int>(dx);
    else if (n != dx)
      throw DomainError("last column entries must share one degree");
  }
  if (n == 0) throw DomainError("last column of the presentation is zero");
  return PresentationInput{ring, phi, n, m <= ring.d};
}

std::vector<Polynomial> x_decompose(const Polynomial& f, PivotRule rule) {
  const RingSpec& R = f.ring();
  std::vector<std::vector<Term>> rows(R.d);
  for (const auto& t : f.terms()) {
    int pivot = -1;
    if (rule == PivotRule::smallest_index) {
      for (int k = 0; k < R.d; ++k)
        if (t.mono.e[k] > 0) {
          pivot = k;
          break;
        }
    } else {
      for (int k = R.d - 1; k >= 0; --k)
        if (t.mono.e[k] > 0) {
          pivot = k;
          break;
        }
    }
    if (pivot < 0)
      throw DomainError("term outside (x_1..x_d) cannot be decomposed");
    Monomial q = t.mono;
    q.e[pivot] -= 1;
    rows[pivot].push_back(Term{std::move(q), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(R.d);
  for (auto& r : rows) out.push_back(Polynomial(R, std::move(r)));
  return out;
}

PolyMatrix jacobian_dual(const PolyMatrix& phi, PivotRule rule) {
  const RingSpec& R = phi.ring();
  std::vector<Polynomial> lrow = row_vector_times(t_row_vector(R), phi);
  PolyMatrix B(R, R.d, phi.cols());
  for (int j = 0; j < phi.cols(); ++j) {
    std::vector<Polynomial> col = x_decompose(lrow[j], rule);
    for (int k = 0; k < R.d; ++k) B.set(k, j, std::move(col[k]));
  }
  return B;
}

DualState iterated_dual_init(const RingSpec& ring, const PolyMatrix& phi,
                             const DualOptions& dopts, const GbOptions&) {
  PolyMatrix B1 = jacobian_dual(phi, dopts.pivot);
  Ideal L1(ring, row_vector_times(x_row_vector(ring), B1));
  Ideal dual = ideal_sum(L1, minor_ideal_or_zero(B1, ring.d));
  return DualState{1, std::move(B1), std::move(L1), std::move(dual), false};
}

namespace {

// Columns of candidate minors for the restricted variant: the first
// m-2 columns of B_i are the dual of the linear part phi'.
std::vector<Polynomial> restricted_candidates(const RingSpec& ring,
                                              const PolyMatrix& B,
                                              int linear_cols) {
  const int d = ring.d;
  std::vector<Polynomial> cands;
  if (linear_cols < d - 1) return cands;
  // choose d-1 columns among the linear duals, plus any column of B
  std::vector<int> sel(d - 1);
  for (int i = 0; i < d - 1; ++i) sel[i] = i;
  while (true) {
    for (int c = 0; c < B.cols(); ++c) {
      std::vector<int> cols(sel.begin(), sel.end());
      if (std::find(cols.begin(), cols.end(), c) == cols.end()) {
        cols.push_back(c);
        std::vector<int> rows(d);
        for (int r = 0; r < d; ++r) rows[r] = r;
        Polynomial det = determinant(B.submatrix(rows, cols));
        if (!det.is_zero() && det.all_terms_in_x())
          cands.push_back(std::move(det));
      }
    }
    int i = d - 2;
    while (i >= 0 && sel[i] == linear_cols - (d - 1) + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < d - 1; ++j) sel[j] = sel[j - 1] + 1;
  }
  return cands;
}

}  // namespace

DualState iterated_dual_step(const RingSpec& ring, const PolyMatrix& phi,
                             const DualState& state, const DualOptions& dopts,
                             const GbOptions& opts) {
  const int d = ring.d;
  Ideal L = symmetric_ideal(ring, phi);

  std::vector<Polynomial> candidates;
  if (dopts.method == DualMethod::general) {
    Ideal IdB = minor_ideal_or_zero(state.B, d);
    if (!IdB.has_no_generators()) {
      Ideal M = ideal_intersect(IdB, x_ideal(ring), opts);
      candidates = minimal_generators(M, opts);
    }
  } else {
    candidates = restricted_candidates(ring, state.B, ring.m - 2);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Polynomial& a, const Polynomial& b) {
                       return a.terms()[0].mono.total_degree() <
                              b.terms()[0].mono.total_degree();
                     });
  }
  if (dopts.gen_order == GenOrder::descending)
    std::reverse(candidates.begin(), candidates.end());

  std::vector<Polynomial> fresh;
  std::vector<Polynomial> known = state.L_level.generators();
  for (const auto& u : candidates) {
    Ideal chk(ring, known);
    if (!ideal_contains(chk, u, opts)) {
      fresh.push_back(u);
      known.push_back(u);
    }
  }

  PolyMatrix B = state.B;
  if (!fresh.empty()) {
    PolyMatrix C(ring, d, static_cast<int>(fresh.size()));
    for (std::size_t j = 0; j < fresh.size(); ++j) {
      std::vector<Polynomial> col = x_decompose(fresh[j], dopts.pivot);
      for (int k = 0; k < d; ++k)
        C.set(k, static_cast<int>(j), std::move(col[k]));
    }
    B = B.concat_cols(C);
  }

  std::vector<Polynomial> lgens = state.L_level.generators();
  for (const auto& u : fresh) lgens.push_back(u);
  Ideal L_next(ring, std::move(lgens));
  Ideal dual = ideal_sum(L, minor_ideal_or_zero(B, d));
  bool stab = ideal_equal(dual, state.dual_ideal, opts);
  return DualState{state.level + 1, std::move(B), std::move(L_next),
                   std::move(dual), stab};
}

std::pair<Ideal, int> rees_via_saturation(const PresentationInput& input,
                                          const GbOptions& opts) {
  Ideal L = symmetric_ideal(input.ring, input.phi);
  return ideal_saturate(L, x_ideal(input.ring), opts);
}

bool check_Gd(const RingSpec& ring, const PolyMatrix& phi,
              const GbOptions& opts) {
  const int m = ring.m;
  for (int i = 1; i <= ring.d - 1; ++i) {
    int r = m - i;
    if (r < 1) continue;  // I_0 is the unit ideal
    if (r > std::min(phi.rows(), phi.cols())) return false;  // zero ideal
    Ideal fitting = minor_ideal(phi, r);
    if (fitting.has_no_generators()) return false;
    if (krull_height(fitting, opts) < i + 1) return false;
  }
  return true;
}

FiberInfo special_fiber(const Ideal& A, const GbOptions& opts) {
  for (const auto& g : A.generators())
    if (!g.is_bihomogeneous())
      throw DomainError("special fiber needs a bihomogeneous ideal");
  Ideal sum = ideal_sum(A, x_ideal(A.ring()));
  std::vector<Polynomial> images;
  for (const auto& g : groebner_basis(sum, MonomialOrder::degrevlex(), opts)) {
    Polynomial h = g.subst_x_zero();
    if (!h.is_zero()) images.push_back(std::move(h));
  }
  FiberInfo info;
  if (images.empty()) return info;  // degenerate: fiber ideal is zero
  info.generators = minimal_generators(Ideal(A.ring(), images), opts);
  info.is_principal = info.generators.size() == 1;
  if (info.is_principal) info.degree = info.generators[0].max_t_degree();
  return info;
}

long relation_type(const Ideal& A, const GbOptions& opts) {
  long best = 0;
  for (const auto& g : minimal_generators(A, opts))
    best = std::max(best, g.max_t_degree());
  return best;
}

bool second_form_check(const PresentationInput& input, const GbOptions& opts) {
  auto [A, idx] = rees_via_saturation(input, opts);
  (void)idx;
  return second_form_check(input, A, opts);
}

bool second_form_check(const PresentationInput& input, const Ideal& A,
                       const GbOptions& opts) {
  const RingSpec& R = input.ring;
  const int d = R.d, m = R.m;
  if (m != d + 1)
    throw DomainError("second form check requires m = d+1");

  PolyMatrix phi_prime = input.phi.drop_col(input.phi.cols() - 1);
  Ideal L_prime = symmetric_ideal(R, phi_prime);
  PolyMatrix B_phi_prime = jacobian_dual(phi_prime);
  Ideal J = ideal_sum(L_prime, minor_ideal_or_zero(B_phi_prime, d));

  PolyMatrix B = B_phi_prime.drop_row(d - 1);
  Polynomial xd = Polynomial::variable(R, d - 1);
  Ideal K = ideal_sum(ideal_sum(L_prime, minor_ideal_or_zero(B, d - 1)),
                      Ideal(R, {xd}));

  std::vector<Polynomial> lrow =
      row_vector_times(t_row_vector(R), input.phi);
  Polynomial g = lrow.back();

  Ideal Kn = K;
  for (int i = 1; i < input.n; ++i) Kn = ideal_product(Kn, K);
  Ideal lhs = ideal_product(Ideal(R, {g}), Kn);
  lhs = ideal_sum(lhs, J);

  Polynomial xdn = xd;
  for (int i = 1; i < input.n; ++i) xdn = xdn * xd;
  Ideal quot = ideal_colon_poly(lhs, xdn, opts);
  return ideal_equal(quot, A, opts);
}

ReesReport run_full_report(const PresentationInput& input,
                           const DualOptions& dopts, const GbOptions& opts,
                           int level_cap) {
  const RingSpec& R = input.ring;
  const int d = R.d, m = R.m;
  if (level_cap <= 0) level_cap = std::max(2 * input.n, 2);

  ReesReport rep;
  rep.n = input.n;
  rep.linear_type = input.linear_type;
  rep.gd_ok = check_Gd(R, input.phi, opts);

  Ideal L = symmetric_ideal(R, input.phi);
  auto [A, sat_index] = rees_via_saturation(input, opts);
  rep.sat_index = sat_index;
  rep.A_sat = A;

  // Iterated dual ladder until the dual ideal stops growing.
  DualState s = iterated_dual_init(R, input.phi, dopts, opts);
  rep.dual_chain.push_back(s);
  while (s.level < level_cap + 1) {
    DualState nxt = iterated_dual_step(R, input.phi, s, dopts, opts);
    if (nxt.stabilized) {
      rep.stabilization_reached = true;
      break;
    }
    rep.dual_chain.push_back(nxt);
    s = std::move(nxt);
  }
  rep.stabilization_level = rep.dual_chain.back().level;

  rep.forms_equal = ideal_equal(A, rep.dual_chain.back().dual_ideal, opts);

  rep.ht_L = krull_height(L, opts);
  rep.ht_A = krull_height(A, opts);
  auto opt_height = [&](const Ideal& I) -> std::optional<int> {
    if (I.has_no_generators() || ideal_is_zero(I, opts)) return std::nullopt;
    return krull_height(I, opts);
  };
  rep.ht_IdB1 = opt_height(minor_ideal_or_zero(rep.dual_chain[0].B, d));
  PolyMatrix B_phi_prime = jacobian_dual(input.phi.drop_col(m - 2), dopts.pivot);
  rep.ht_IdBphi_prime = opt_height(minor_ideal_or_zero(B_phi_prime, d));
  rep.ht_Id1Bphi_prime = opt_height(minor_ideal_or_zero(B_phi_prime, d - 1));

  rep.fiber = special_fiber(A, opts);
  rep.A_min_gens = minimal_generators(A, opts);
  long rt = 0;
  for (const auto& g : rep.A_min_gens) rt = std::max(rt, g.max_t_degree());
  rep.relation_type_value = rt;
  return rep;
}

}  // namespace rees
