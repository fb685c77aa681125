#pragma once
/**
 * @file verify.hpp
 * @brief Proposition suites, basis-theorem comparisons and field sweeps.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fqcoh/cohomology.hpp"
#include "fqcoh/generators.hpp"
#include "fqcoh/report.hpp"

namespace fqcoh {

namespace detail {

inline nlohmann::ordered_json element_list(const FieldSpec& F, std::span<const Code> v) {
  auto a = nlohmann::ordered_json::array();
  for (Code c : v) a.push_back(format_element(F, c));
  return a;
}

inline nlohmann::ordered_json index_json(std::span<const unsigned> idx) {
  return nlohmann::ordered_json(std::vector<unsigned>(idx.begin(), idx.end()));
}

inline VerificationReport base_report(const AlexanderFQuandle& Q, std::string subject) {
  VerificationReport r;
  r.subject = std::move(subject);
  r.field = Q.field().to_string();
  r.omega = Q.omega_text();
  r.beta = Q.beta_text();
  return r;
}

}  // namespace detail

/// A point where a nonzero cochain takes a nonzero value, as U- and
/// x-coordinates, with that value.
inline nlohmann::ordered_json nonzero_point(const UCochain& phi) {
  const FieldSpec& F = phi.field();
  const auto values = value_table(phi);
  for (std::uint64_t k = 0; k < values.size(); ++k) {
    if (values[k] == 0) continue;
    const auto digits = phi.codec().decode(k);
    std::vector<Code> u(digits.begin(), digits.end());
    nlohmann::ordered_json j;
    j["u"] = detail::element_list(F, u);
    j["x"] = detail::element_list(F, x_from_u(F, u));
    j["value"] = format_element(F, values[k]);
    return j;
  }
  return nullptr;
}

/**
 * Builds every family member whose hypothesis holds and checks δ = 0.
 * Tuples violating the hypothesis are built too; how many of those have
 * δ ≠ 0 is recorded as evidence, never asserted.
 */
inline VerificationReport verify_proposition(const AlexanderFQuandle& Q, std::string_view id) {
  const FamilyDef& def = find_family(id);
  VerificationReport r = detail::base_report(Q, "proposition:" + def.id);
  r.parameters["prop"] = def.id;
  r.parameters["index_names"] = def.index_names;

  std::size_t instances = 0, failures = 0, unchecked = 0, unchecked_nonzero = 0, unbuildable = 0;
  std::set<std::vector<unsigned>> index_sets;
  auto counterexamples = nlohmann::ordered_json::array();
  for_each_index(def, Q.field(), [&](std::span<const unsigned> idx) {
    const bool holds = def.condition(Q, idx);
    std::optional<UCochain> c;
    try {
      c = def.build(Q, idx);
    } catch (const Error&) {
      if (holds) throw;
      ++unbuildable;
      return;
    }
    const UCochain d = delta_poly(Q, *c);
    if (!holds) {
      ++unchecked;
      if (!d.is_zero()) ++unchecked_nonzero;
      return;
    }
    ++instances;
    std::vector<unsigned> sorted(idx.begin(), idx.end());
    std::sort(sorted.begin(), sorted.end());
    index_sets.insert(std::move(sorted));
    if (d.is_zero()) return;
    ++failures;
    if (counterexamples.size() < 8) {
      nlohmann::ordered_json ce;
      ce["indices"] = detail::index_json(idx);
      ce["cochain"] = to_text(*c);
      ce["delta_nonzero_at"] = nonzero_point(d);
      counterexamples.push_back(ce);
    }
  });
  r.status = failures ? Status::fail : Status::pass;
  r.details["instances"] = instances;
  r.details["distinct_index_sets"] = index_sets.size();
  r.details["failures"] = failures;
  if (failures) r.details["counterexamples"] = counterexamples;
  r.details["unchecked_instances"] = unchecked;
  r.details["unchecked_nonzero_delta"] = unchecked_nonzero;
  if (unbuildable) r.details["unchecked_unbuildable"] = unbuildable;
  return r;
}

struct BasisOptions {
  bool candidates_only = false;  // skip the full dim H comparison
  bool allow_big = false;
};

/**
 * Compares the candidate basis of H^n with the computed cohomology.
 *
 * (a) every candidate is a cocycle, (b) candidates are independent modulo
 * B^n, (c) their count equals dim H^n. A failing (a) is a fail; (b) or (c)
 * failing is a mismatch. For n ≥ 3 the run is marked skipped when
 * dim H² ≠ 0 or ω = −1, with every number still reported.
 */
inline VerificationReport verify_basis_theorem(const AlexanderFQuandle& Q, unsigned n,
                                               const BasisOptions& opt = {}) {
  if (n < 2 || n > 4) throw Error(Errc::ArityMismatch, "basis theorems exist for n = 2, 3, 4");
  const FieldSpec& F = Q.field();
  VerificationReport r = detail::base_report(Q, "basis-theorem:H" + std::to_string(n));
  r.parameters["n"] = n;
  r.parameters["candidates_only"] = opt.candidates_only;

  bool hypothesis = true;
  if (n >= 3) {
    HDimOptions h2opt;
    h2opt.allow_big = opt.allow_big;
    h2opt.representatives = false;
    const std::size_t h2 = h_dim(Q, 2, h2opt).dim_h;
    const bool omega_ok = Q.omega() != F.neg(1);
    hypothesis = h2 == 0 && omega_ok;
    r.details["hypothesis"] = {{"dimH2", h2}, {"omega_not_minus_one", omega_ok}, {"holds", hypothesis}};
  }

  const auto cands = candidates_for(Q, n);
  auto labels = nlohmann::ordered_json::array();
  for (const auto& c : cands) labels.push_back(c.label);
  r.details["candidates"] = labels;

  // (a)
  auto not_cocycles = nlohmann::ordered_json::array();
  for (const auto& c : cands) {
    const UCochain d = delta_poly(Q, c.cochain);
    if (!d.is_zero())
      not_cocycles.push_back({{"label", c.label}, {"cochain", to_text(c.cochain)}, {"delta_nonzero_at", nonzero_point(d)}});
  }
  r.details["cocycles"] = not_cocycles.empty();
  if (!not_cocycles.empty()) r.details["not_cocycles"] = not_cocycles;

  // (b): all weight blocks side by side in one coordinate space.
  const CochainSpaceBasis cn(F, n), cnm1(F, n - 1);
  std::vector<std::uint32_t> offset(F.q());
  std::vector<std::vector<std::uint64_t>> keys(F.q() - 1);
  for (unsigned w = 0; w + 1 < F.q(); ++w) {
    for (auto i : cn.block(w)) keys[w].push_back(cn.key(i));
    offset[w + 1] = offset[w] + static_cast<std::uint32_t>(keys[w].size());
  }
  SparseRowEchelon span(F, cn.size(), false, sparse_budget(opt.allow_big));
  std::size_t dim_b = 0;
  for (unsigned w = 0; w + 1 < F.q(); ++w) {
    const DeltaBlock b = delta_block(Q, cnm1, cn, w);
    for (auto col : b.columns) {
      for (auto& e : col) e.first += offset[w];
      if (span.insert(std::move(col))) ++dim_b;
    }
  }
  auto dependent = nlohmann::ordered_json::array();
  const unsigned q1 = F.q() - 1;
  for (const auto& c : cands) {
    SparseVector v;
    bool inside = true;
    for (const Term& t : c.cochain.terms()) {
      const unsigned w = c.cochain.codec().degree(t.key) % q1;
      auto it = std::lower_bound(keys[w].begin(), keys[w].end(), t.key);
      if (it == keys[w].end() || *it != t.key) {
        inside = false;
        break;
      }
      v.push_back({offset[w] + static_cast<std::uint32_t>(it - keys[w].begin()), t.coeff});
    }
    std::sort(v.begin(), v.end());
    if (!inside || !span.insert(std::move(v))) dependent.push_back(c.label);
  }
  r.details["independent_mod_coboundaries"] = dependent.empty();
  if (!dependent.empty()) r.details["dependent_candidates"] = dependent;
  r.details["dimB"] = dim_b;

  // (c)
  bool count_ok = true;
  if (!opt.candidates_only) {
    HDimOptions hopt;
    hopt.allow_big = opt.allow_big;
    hopt.representatives = false;
    const auto h = h_dim(Q, n, hopt);
    count_ok = h.dim_h == cands.size();
    r.details["dimZ"] = h.dim_cocycles;
    r.details["dimH"] = h.dim_h;
    r.details["candidate_count"] = cands.size();
    r.details["count_matches"] = count_ok;
  } else {
    r.details["candidate_count"] = cands.size();
  }

  if (!not_cocycles.empty())
    r.status = Status::fail;
  else if (!hypothesis)
    r.status = Status::skipped;
  else if (!dependent.empty() || !count_ok)
    r.status = Status::mismatch;
  else
    r.status = Status::pass;
  return r;
}

/// Admissible (ω, β) pairs of a field in code order: ω ∉ {0, 1}, β ≠ 0.
inline std::vector<std::pair<Code, Code>> admissible_parameters(const FieldSpec& F) {
  std::vector<std::pair<Code, Code>> out;
  for (unsigned w = 2; w < F.q(); ++w)
    for (unsigned b = 1; b < F.q(); ++b) out.push_back({static_cast<Code>(w), static_cast<Code>(b)});
  return out;
}

struct SweepOptions {
  bool candidates_only = false;
  bool allow_big = false;
  bool allow_large_field = false;  // lift the q ≤ 16, n ≤ 4 cap
  unsigned workers = 0;            // 0: hardware concurrency
};

struct SweepResult {
  std::vector<VerificationReport> reports;  // ordered by (ω, β, n)
  std::size_t pass = 0, fail = 0, mismatch = 0, skipped = 0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["summary"] = {{"instances", reports.size()}, {"pass", pass}, {"fail", fail},
                    {"mismatch", mismatch}, {"skipped", skipped}};
    auto a = nlohmann::ordered_json::array();
    for (const auto& r : reports) a.push_back(r.to_json());
    j["reports"] = a;
    return j;
  }
};

/// verify_basis_theorem for every admissible (ω, β) and every n, on a
/// bounded worker pool; results keep input order.
inline SweepResult sweep(const FieldSpec& F, const std::vector<unsigned>& ns, const SweepOptions& opt = {}) {
  for (unsigned n : ns) {
    if (n < 2 || n > 4) throw Error(Errc::ArityMismatch, "sweep n must lie in 2..4");
  }
  if (!opt.allow_large_field && F.q() > 16)
    throw Error(Errc::ResourceLimit, "sweeps are capped at q <= 16 without an explicit override");

  struct Job {
    Code omega, beta;
    unsigned n;
  };
  std::vector<Job> jobs;
  for (auto [w, b] : admissible_parameters(F))
    for (unsigned n : ns) jobs.push_back({w, b, n});

  SweepResult res;
  res.reports.resize(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        const AlexanderFQuandle Q(F, jobs[i].omega, jobs[i].beta);
        res.reports[i] = verify_basis_theorem(Q, jobs[i].n, {opt.candidates_only, opt.allow_big});
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned nw = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  nw = static_cast<unsigned>(std::min<std::size_t>(nw, jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < nw; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (const auto& r : res.reports) {
    switch (r.status) {
      case Status::pass: ++res.pass; break;
      case Status::fail: ++res.fail; break;
      case Status::mismatch: ++res.mismatch; break;
      case Status::skipped: ++res.skipped; break;
    }
  }
  return res;
}

}  // namespace fqcoh
