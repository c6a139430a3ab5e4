#ifndef REES_IDEAL_HPP
#define REES_IDEAL_HPP

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "rees/poly.hpp"

namespace rees {

struct GbOptions {
  // Cap on S-pair reductions across one Buchberger run.
  long max_pairs = 2'000'000;
  // Re-verify Buchberger's criterion on every returned basis.
  bool self_check = false;
};

// Process-wide switch forcing self_check on (used by the verification
// suites); combined with per-call options by OR.
extern std::atomic<bool> g_force_gb_self_check;

// Reduced Groebner basis of `gens` w.r.t. `ord`.  Deterministic: normal
// pair selection with ties broken by generator index, output sorted by
// leading term.
std::vector<Polynomial> buchberger(const RingSpec& ring,
                                   const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord,
                                   const GbOptions& opts = {});

// Fully reduced remainder of f modulo the (not necessarily Groebner)
// basis G.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord);

// Generator list plus a per-order cache of reduced Groebner bases.  The
// cache has interior synchronization; copies share it.
class Ideal {
 public:
  Ideal(const RingSpec& ring, std::vector<Polynomial> gens);

  static Ideal zero(const RingSpec& ring) { return Ideal(ring, {}); }

  const RingSpec& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_no_generators() const { return gens_.empty(); }

  const std::vector<Polynomial>& groebner(const MonomialOrder& ord,
                                          const GbOptions& opts = {}) const;

 private:
  RingSpec ring_;
  std::vector<Polynomial> gens_;  // zero generators dropped

  struct Cache {
    std::mutex mu;
    std::map<std::string, std::vector<Polynomial>> bases;
  };
  std::shared_ptr<Cache> cache_;
};

std::vector<Polynomial> groebner_basis(const Ideal& I, const MonomialOrder& ord,
                                       const GbOptions& opts = {});
Polynomial normal_form(const Polynomial& f, const Ideal& I,
                       const MonomialOrder& ord, const GbOptions& opts = {});
bool ideal_contains(const Ideal& I, const Polynomial& f,
                    const GbOptions& opts = {});
bool ideal_is_zero(const Ideal& I, const GbOptions& opts = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const GbOptions& opts = {});

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J,
                      const GbOptions& opts = {});
Ideal ideal_colon_poly(const Ideal& I, const Polynomial& f,
                       const GbOptions& opts = {});
Ideal ideal_colon(const Ideal& I, const Ideal& J, const GbOptions& opts = {});

// Iterates I <- I : J to the fixpoint; second component is the number of
// colon steps after which the chain first stabilizes.
std::pair<Ideal, int> ideal_saturate(const Ideal& I, const Ideal& J,
                                     const GbOptions& opts = {});

// Krull dimension of S/I via the leading-term ideal and the largest
// variable subset supporting no minimal monomial generator.
int krull_dimension(const Ideal& I, const GbOptions& opts = {});
int krull_height(const Ideal& I, const GbOptions& opts = {});

// Graded-Nakayama minimalization of a bihomogeneous generator list,
// processed in increasing total degree (stable within a degree).
std::vector<Polynomial> minimal_generators(const Ideal& I,
                                           const GbOptions& opts = {});

// Exact quotient f / g; DomainError if the division leaves a remainder.
Polynomial poly_exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace rees

#endif
