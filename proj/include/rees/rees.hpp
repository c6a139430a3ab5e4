#ifndef REES_REES_HPP
#define REES_REES_HPP

#include <optional>
#include <vector>

#include "rees/matrix.hpp"

namespace rees {

// Which x-variable absorbs each monomial when writing f = [x] . c.
enum class PivotRule { smallest_index, largest_index };
// Ordering of the intersection generators fed into a dual step.
enum class GenOrder { ascending, descending };
enum class DualMethod { general, restricted };

struct DualOptions {
  DualMethod method = DualMethod::general;
  PivotRule pivot = PivotRule::smallest_index;
  GenOrder gen_order = GenOrder::ascending;
};

// Validated problem instance: an m x (m-1) presentation matrix over
// k[x_1..x_d] whose first m-2 columns are linear and whose last column
// has entries of one degree n >= 1.
struct PresentationInput {
  RingSpec ring;
  PolyMatrix phi;
  int n;                 // degree of the last column, derived
  bool linear_type;      // m <= d: the G_infinity fallback
};

PresentationInput make_presentation(const RingSpec& ring,
                                    const PolyMatrix& phi);

// One rung of the iterated Jacobian dual ladder.
struct DualState {
  int level = 1;
  PolyMatrix B;      // d rows
  Ideal L_level;     // ((x) . B), the level ideal
  Ideal dual_ideal;  // L + I_d(B)
  bool stabilized = false;  // dual ideal equal to the previous level's
};

struct FiberInfo {
  bool is_principal = false;
  long degree = 0;
  std::vector<Polynomial> generators;  // minimal, x substituted to zero
};

struct ReesReport {
  int n = 0;
  bool gd_ok = false;
  bool linear_type = false;
  int ht_L = 0;
  int ht_A = 0;
  std::optional<int> ht_IdB1;          // nullopt: zero ideal
  std::optional<int> ht_IdBphi_prime;  // nullopt: zero ideal
  std::optional<int> ht_Id1Bphi_prime;
  int sat_index = 0;
  std::optional<Ideal> A_sat;
  std::vector<DualState> dual_chain;  // levels 1..stabilization_level
  int stabilization_level = 0;
  bool stabilization_reached = false;
  bool forms_equal = false;
  FiberInfo fiber;
  long relation_type_value = 0;
  std::vector<Polynomial> A_min_gens;
};

// Ideal (x_1, ..., x_d).
Ideal x_ideal(const RingSpec& ring);

// L = (entries of [T_1..T_m] . phi).
Ideal symmetric_ideal(const RingSpec& ring, const PolyMatrix& phi);

// Write f = sum_k x_k * c_k by assigning each monomial to the pivot
// x-variable dividing it; every monomial must have positive x-degree.
std::vector<Polynomial> x_decompose(const Polynomial& f,
                                    PivotRule rule = PivotRule::smallest_index);

// d x cols matrix B with [x] . B = [T] . phi exactly.
PolyMatrix jacobian_dual(const PolyMatrix& phi,
                         PivotRule rule = PivotRule::smallest_index);

DualState iterated_dual_init(const RingSpec& ring, const PolyMatrix& phi,
                             const DualOptions& dopts = {},
                             const GbOptions& opts = {});
DualState iterated_dual_step(const RingSpec& ring, const PolyMatrix& phi,
                             const DualState& state,
                             const DualOptions& dopts = {},
                             const GbOptions& opts = {});

// (A, sat_index) with A = L : (x)^infinity.
std::pair<Ideal, int> rees_via_saturation(const PresentationInput& input,
                                          const GbOptions& opts = {});

// Fitting-ideal criterion: ht I_{m-i}(phi) >= i+1 for 1 <= i <= d-1.
bool check_Gd(const RingSpec& ring, const PolyMatrix& phi,
              const GbOptions& opts = {});

// Image of A + (x) in k[T], minimalized.
FiberInfo special_fiber(const Ideal& A, const GbOptions& opts = {});

// Max T-degree over a minimal bihomogeneous generating set of A.
long relation_type(const Ideal& A, const GbOptions& opts = {});

// Ordinary-power surrogate of the symbolic-power description, valid for
// m = d+1: checks (g*K^n + J) : (x_d^n) == A.
bool second_form_check(const PresentationInput& input,
                       const GbOptions& opts = {});
bool second_form_check(const PresentationInput& input, const Ideal& A,
                       const GbOptions& opts = {});

// level_cap <= 0 means the default cap 2n (at least 2).
ReesReport run_full_report(const PresentationInput& input,
                           const DualOptions& dopts = {},
                           const GbOptions& opts = {}, int level_cap = 0);

}  // namespace rees

#endif
