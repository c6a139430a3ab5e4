#include "rees/harness.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "rees/matfile.hpp"

namespace rees {

void validate_spec(const InstanceSpec& spec) {
  if (spec.d < 2 || spec.d > 3) throw DomainError("d must be 2 or 3");
  if (spec.m < spec.d + 1 || spec.m > spec.d + 2)
    throw DomainError("m must be d+1 or d+2");
  if (spec.n < 1 || spec.n > 3) throw DomainError("n must be 1..3");
  if (spec.trials < 0) throw DomainError("trials must be nonnegative");
}

std::uint64_t harness_hash(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t attempt, std::uint64_t position) {
  // splitmix64 finalizer over a simple combination of the counters.
  std::uint64_t z = seed;
  for (std::uint64_t w : {index, attempt, position}) {
    z += 0x9e3779b97f4a7c15ull + w;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
  }
  return z;
}

namespace {

Coeff random_coeff(const Field& F, std::uint64_t h) {
  if (F.kind() == FieldKind::prime)
    return Coeff{h % F.modulus()};
  // Small integers keep rational batches tractable.
  return F.from_int(static_cast<long long>(h % 21) - 10);
}

// All monomials of degree deg in x_1..x_d, degrevlex-agnostic listing.
void monomials_of_degree(const RingSpec& ring, int deg,
                         std::vector<Monomial>& out, Monomial& cur, int var,
                         int left) {
  if (var == ring.d - 1) {
    cur.e[var] = static_cast<std::uint32_t>(left);
    out.push_back(cur);
    cur.e[var] = 0;
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur.e[var] = static_cast<std::uint32_t>(k);
    monomials_of_degree(ring, deg, out, cur, var + 1, left - k);
  }
  cur.e[var] = 0;
}

Polynomial random_form(const RingSpec& ring, int deg, const InstanceSpec& spec,
                       int index, int attempt, std::uint64_t& pos) {
  std::vector<Monomial> monos;
  Monomial cur = Monomial::one(ring);
  monomials_of_degree(ring, deg, monos, cur, 0, deg);
  std::vector<Term> terms;
  for (const auto& m : monos) {
    std::uint64_t h = harness_hash(spec.seed, static_cast<std::uint64_t>(index),
                                   static_cast<std::uint64_t>(attempt), pos++);
    Coeff c = random_coeff(ring.field, h);
    if (!ring.field.is_zero(c)) terms.push_back(Term{m, c});
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace

PresentationInput generate_instance(const InstanceSpec& spec, int index) {
  validate_spec(spec);
  RingSpec ring = make_ring(spec.field, spec.d, spec.m);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::uint64_t pos = 0;
    PolyMatrix phi(ring, spec.m, spec.m - 1);
    bool degenerate = false;
    for (int j = 0; j < spec.m - 1 && !degenerate; ++j) {
      int deg = (j + 1 < spec.m - 1) ? 1 : spec.n;
      for (int i = 0; i < spec.m; ++i) {
        Polynomial f = random_form(ring, deg, spec, index, attempt, pos);
        phi.set(i, j, std::move(f));
      }
      bool all_zero = true;
      for (int i = 0; i < spec.m; ++i)
        if (!phi.at(i, j).is_zero()) all_zero = false;
      if (all_zero) degenerate = true;
    }
    if (degenerate) continue;
    if (!check_Gd(ring, phi, spec.gb)) continue;
    return make_presentation(ring, phi);
  }
  throw DomainError("G_d retry budget exhausted for instance " +
                    std::to_string(index));
}

namespace {

struct InstanceResult {
  bool generated = false;
  bool budget_exceeded = false;
  bool gd_ok = false;
  bool forms_equal = false;
  int sat_index = -1;
  std::vector<std::string> violations;  // empty = all laws hold
  std::optional<PolyMatrix> phi;
};

InstanceResult run_one(const InstanceSpec& spec, int index) {
  InstanceResult res;
  PresentationInput input = generate_instance(spec, index);
  res.generated = true;
  res.phi = input.phi;
  try {
    ReesReport rep = run_full_report(input, {}, spec.gb);
    res.gd_ok = rep.gd_ok;
    res.forms_equal = rep.forms_equal;
    res.sat_index = rep.sat_index;
    auto flag = [&](const std::string& msg) { res.violations.push_back(msg); };

    if (!rep.gd_ok) flag("generated instance fails check_Gd");
    if (rep.ht_L != spec.d)
      flag("ht L = " + std::to_string(rep.ht_L) + ", expected " +
           std::to_string(spec.d));
    if (rep.ht_A != spec.m - 1)
      flag("ht A = " + std::to_string(rep.ht_A) + ", expected " +
           std::to_string(spec.m - 1));
    if (spec.m == spec.d + 1) {
      if (rep.ht_IdBphi_prime.has_value())
        flag("I_d(B(phi')) is nonzero");
      if (!rep.ht_Id1Bphi_prime || *rep.ht_Id1Bphi_prime != 2)
        flag("ht I_{d-1}(B(phi')) != 2");
    }
    if (rep.sat_index != spec.n)
      flag("sat_index = " + std::to_string(rep.sat_index) + ", expected " +
           std::to_string(spec.n));

    // First-colon law: L : (x) = L + I_d(B_1).
    Ideal L = symmetric_ideal(input.ring, input.phi);
    Ideal first_colon = ideal_colon(L, x_ideal(input.ring), spec.gb);
    if (!ideal_equal(first_colon, rep.dual_chain.front().dual_ideal, spec.gb))
      flag("L:(x) != L + I_d(B_1)");

    if (spec.m == spec.d + 1) {
      long expected = static_cast<long>(spec.n) * (spec.d - 1) + 1;
      if (!rep.forms_equal) flag("forms_equal = false");
      if (!rep.fiber.is_principal)
        flag("special fiber not principal");
      else if (rep.fiber.degree != expected)
        flag("fiber degree = " + std::to_string(rep.fiber.degree) +
             ", expected " + std::to_string(expected));
      if (rep.relation_type_value != expected)
        flag("relation type = " + std::to_string(rep.relation_type_value) +
             ", expected " + std::to_string(expected));
    }
  } catch (const ResourceLimitError&) {
    res.budget_exceeded = true;
  }
  return res;
}

}  // namespace

BatchSummary run_batch(const InstanceSpec& spec, int workers) {
  validate_spec(spec);
  BatchSummary sum;
  if (spec.trials == 0) return sum;

  if (workers <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    workers = hc ? static_cast<int>(hc) : 2;
  }
  workers = std::min(workers, spec.trials);

  std::vector<InstanceResult> results(spec.trials);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= spec.trials) break;
        try {
          results[i] = run_one(spec, i);
        } catch (const DomainError&) {
          // G_d retry budget exhausted: reported in the summary.
          results[i] = InstanceResult{};
        }
      }
    });
  }
  for (auto& t : pool) t.join();

  for (int i = 0; i < spec.trials; ++i) {
    const InstanceResult& r = results[i];
    if (!r.generated) {
      ++sum.generation_failures;
      continue;
    }
    ++sum.trials_run;
    if (r.budget_exceeded) {
      ++sum.budget_exceeded_count;
      continue;
    }
    if (r.gd_ok) ++sum.Gd_pass_count;
    if (r.forms_equal) ++sum.forms_equal_count;
    if (r.sat_index >= 0) ++sum.sat_index_histogram[r.sat_index];
    for (const auto& v : r.violations) {
      if (v.rfind("ht ", 0) == 0 || v.find("I_") != std::string::npos)
        ++sum.height_violation_count;
      else
        ++sum.law_violation_count;
      sum.violation_messages.push_back("instance " + std::to_string(i) + ": " +
                                       v);
    }
    if (!r.violations.empty() && !spec.dump_dir.empty() && r.phi) {
      std::filesystem::create_directories(spec.dump_dir);
      std::ostringstream name;
      name << "counterexample_d" << spec.d << "_m" << spec.m << "_n" << spec.n
           << "_seed" << spec.seed << "_i" << i << ".mat";
      std::filesystem::path p = std::filesystem::path(spec.dump_dir) / name.str();
      std::vector<std::string> header = {
          "spec d=" + std::to_string(spec.d) + " m=" + std::to_string(spec.m) +
              " n=" + std::to_string(spec.n) +
              " seed=" + std::to_string(spec.seed),
          "instance index " + std::to_string(i)};
      for (const auto& v : r.violations) header.push_back("violation: " + v);
      std::ofstream out(p);
      out << matfile_write(*r.phi, header);
      sum.counterexample_dumps.push_back(p.string());
    }
  }
  return sum;
}

}  // namespace rees
