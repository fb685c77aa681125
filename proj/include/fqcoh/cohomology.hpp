#pragma once
/**
 * @file cohomology.hpp
 * @brief δ-matrices on monomial bases, cocycle/coboundary spaces, dim H^n.
 *
 * Scaling all U_i by λ ∈ F_q^* commutes with δ, so δ preserves total degree
 * mod (q−1). Every matrix here is split into those q−1 weight blocks and
 * each block is handled independently.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fqcoh/cochain.hpp"
#include "fqcoh/generators.hpp"
#include "fqcoh/linalg.hpp"

namespace fqcoh {

/// Ordered monomial basis of the quandle cochain space in arity n: exponents
/// in [0, q−1], positive on U_2..U_{n−1}, constant monomial excluded.
class CochainSpaceBasis {
 public:
  CochainSpaceBasis(const FieldSpec& F, unsigned arity) : field_(F), codec_(F.q(), arity) {
    const unsigned q = F.q();
    std::vector<unsigned> ex(arity);
    for (std::uint64_t key = 1; key < codec_.size(); ++key) {
      bool ok = true;
      for (unsigned i = 1; i + 1 < arity && ok; ++i) ok = codec_.exponent(key, i) != 0;
      if (!ok) continue;
      keys_.push_back(key);
      weights_.push_back(codec_.degree(key) % (q - 1));
    }
  }

  const FieldSpec& field() const noexcept { return field_; }
  unsigned arity() const noexcept { return codec_.arity(); }
  const MonomialCodec& codec() const noexcept { return codec_; }
  std::size_t size() const noexcept { return keys_.size(); }
  std::uint64_t key(std::size_t i) const noexcept { return keys_[i]; }
  const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }
  unsigned weight(std::size_t i) const noexcept { return weights_[i]; }
  std::vector<unsigned> exponents(std::size_t i) const { return codec_.decode(keys_[i]); }
  UCochain monomial_at(std::size_t i) const {
    return UCochain::from_terms(field_, arity(), {{keys_[i], 1}});
  }

  std::optional<std::size_t> index_of(std::uint64_t key) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - keys_.begin());
  }

  /// Basis indices of weight w, ascending.
  std::vector<std::size_t> block(unsigned w) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (weights_[i] == w) out.push_back(i);
    return out;
  }

 private:
  FieldSpec field_;
  MonomialCodec codec_;
  std::vector<std::uint64_t> keys_;
  std::vector<unsigned> weights_;
};

inline CochainSpaceBasis space_basis(const FieldSpec& F, unsigned n) { return CochainSpaceBasis(F, n); }
inline CochainSpaceBasis space_basis(const AlexanderFQuandle& Q, unsigned n) {
  return CochainSpaceBasis(Q.field(), n);
}

/// Weight (total degree mod q−1) of a homogeneous cochain, or nullopt when it
/// is zero or mixes weights.
inline std::optional<unsigned> cochain_weight(const UCochain& phi) {
  std::optional<unsigned> w;
  const unsigned q1 = phi.field().q() - 1;
  for (const Term& t : phi.terms()) {
    const unsigned tw = phi.codec().degree(t.key) % q1;
    if (w && *w != tw) return std::nullopt;
    w = tw;
  }
  return w;
}

/// Coordinates of phi in a sub-basis given as sorted keys; nullopt if some
/// term lies outside.
inline std::optional<SparseVector> sparse_coordinates(const UCochain& phi,
                                                      const std::vector<std::uint64_t>& keys) {
  SparseVector v;
  v.reserve(phi.size());
  for (const Term& t : phi.terms()) {
    auto it = std::lower_bound(keys.begin(), keys.end(), t.key);
    if (it == keys.end() || *it != t.key) return std::nullopt;
    v.push_back({static_cast<std::uint32_t>(it - keys.begin()), t.coeff});
  }
  return v;
}

inline std::vector<Code> densify(const SparseVector& v, std::size_t len) {
  std::vector<Code> d(len, 0);
  for (auto [i, c] : v) d[i] = c;
  return d;
}

/// δ^n restricted to one weight block: column j is δ(src_keys[j]) in
/// coordinates of dst_keys.
struct DeltaBlock {
  unsigned weight = 0;
  std::vector<std::uint64_t> src_keys;
  std::vector<std::uint64_t> dst_keys;
  std::vector<SparseVector> columns;
};

inline DeltaBlock delta_block(const AlexanderFQuandle& Q, const CochainSpaceBasis& src,
                              const CochainSpaceBasis& dst, unsigned w) {
  if (dst.arity() != src.arity() + 1) throw Error(Errc::ArityMismatch, "dst arity must be src arity + 1");
  DeltaBlock b;
  b.weight = w;
  for (auto i : src.block(w)) b.src_keys.push_back(src.key(i));
  for (auto i : dst.block(w)) b.dst_keys.push_back(dst.key(i));
  b.columns.reserve(b.src_keys.size());
  for (auto key : b.src_keys) {
    const UCochain image = delta_poly(Q, UCochain::from_terms(Q.field(), src.arity(), {{key, 1}}));
    auto coords = sparse_coordinates(image, b.dst_keys);
    if (!coords) throw Error(Errc::NotQuandleCochain, "δ left the quandle subcomplex");
    b.columns.push_back(std::move(*coords));
  }
  return b;
}

/// Full matrix of δ^n : C^n → C^{n+1} in space_basis order.
inline GFqMatrix delta_matrix(const AlexanderFQuandle& Q, unsigned n) {
  const CochainSpaceBasis src(Q.field(), n), dst(Q.field(), n + 1);
  GFqMatrix M(Q.field(), dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const UCochain image = delta_poly(Q, src.monomial_at(j));
    for (const Term& t : image.terms()) {
      auto i = dst.index_of(t.key);
      if (!i) throw Error(Errc::NotQuandleCochain, "δ left the quandle subcomplex");
      M.set(*i, j, t.coeff);
    }
  }
  return M;
}

/// Count of basis monomials whose δ has a term outside the quandle basis.
inline std::size_t closure_violations(const AlexanderFQuandle& Q, unsigned n) {
  const CochainSpaceBasis src(Q.field(), n), dst(Q.field(), n + 1);
  std::size_t bad = 0;
  for (std::size_t j = 0; j < src.size(); ++j) {
    const UCochain image = delta_poly(Q, src.monomial_at(j));
    for (const Term& t : image.terms())
      if (!dst.index_of(t.key)) {
        ++bad;
        break;
      }
  }
  return bad;
}

/// Rank of a block, feeding its columns to a sparse eliminator.
inline std::size_t block_rank(const FieldSpec& F, const DeltaBlock& b,
                              std::uint64_t max_entries = ~std::uint64_t{0}) {
  SparseRowEchelon e(F, b.dst_keys.size(), false, max_entries);
  for (const auto& c : b.columns) {
    if (e.rank() == b.dst_keys.size()) break;
    e.insert(c);
  }
  return e.rank();
}

/// Kernel basis of a block (vectors over src_keys), one vector per column
/// that is dependent on the columns before it.
inline std::vector<SparseVector> block_kernel(const FieldSpec& F, const DeltaBlock& b,
                                              std::uint64_t max_entries = ~std::uint64_t{0}) {
  SparseRowEchelon e(F, b.dst_keys.size(), true, max_entries);
  std::vector<SparseVector> out;
  for (const auto& c : b.columns)
    if (!e.insert(c)) out.push_back(e.dependency());
  return out;
}

// ---------------------------------------------------------------------------
// Resource estimate

struct ResourceEstimate {
  std::uint64_t bytes = 0;  // basis tables plus a dense bound on one block's echelon
  std::uint64_t work = 0;   // dense bound on row-word updates, summed over blocks
};

inline constexpr std::uint64_t kMemoryCeiling = std::uint64_t{4} << 30;

/// Upper bounds for h_dim(n), computed from block sizes alone.
inline ResourceEstimate estimate_h_dim(const FieldSpec& F, unsigned n) {
  const std::uint64_t q = F.q(), q1 = q - 1;
  // |C^k| = q^2 (q−1)^{k−2} for k ≥ 2 (q^k − 1 below that), split evenly
  // enough across q−1 weights for an estimate.
  auto space = [&](unsigned k) -> std::uint64_t {
    if (k <= 2) {
      std::uint64_t r = 1;
      for (unsigned i = 0; i < k; ++i) r *= q;
      return r - 1;
    }
    std::uint64_t r = q * q;
    for (unsigned i = 2; i < k; ++i) r *= q1;
    return r;
  };
  ResourceEstimate est;
  const std::uint64_t rows = (space(n) + q1 - 1) / q1, len = (space(n + 1) + q1 - 1) / q1;
  const std::uint64_t piv = std::min(rows, len);
  est.bytes = 12 * (space(n + 1) + space(n) + (n > 1 ? space(n - 1) : 0)) + echelon_bytes(F, piv, len);
  const std::uint64_t row_words = F.p() == 2 ? F.m() * ((len + 63) / 64) : len;
  est.work = q1 * rows * piv * row_words / 2;
  return est;
}

// ---------------------------------------------------------------------------
// Cohomology

struct Representative {
  std::string label;  // candidate label or "kernel"
  UCochain cochain;
};

struct CohomologyReport {
  std::string field;
  std::string omega;
  std::string beta;
  unsigned n = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_h = 0;
  std::vector<Representative> representatives;
  double elapsed_ms = 0;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["field"] = field;
    j["omega"] = omega;
    j["beta"] = beta;
    j["n"] = n;
    j["dimZ"] = dim_cocycles;
    j["dimB"] = dim_coboundaries;
    j["dimH"] = dim_h;
    auto reps = nlohmann::ordered_json::array();
    for (const auto& r : representatives) reps.push_back({{"label", r.label}, {"cochain", to_text(r.cochain)}});
    j["representatives"] = reps;
    j["elapsed_ms"] = elapsed_ms;
    return j;
  }
};

struct HDimOptions {
  bool allow_big = false;
  bool representatives = true;
  std::vector<Candidate> candidates;  // tried first, in order
  bool use_default_candidates = true;
};

inline void check_resources(const FieldSpec& F, unsigned n, bool allow_big) {
  if (allow_big) return;
  const auto est = estimate_h_dim(F, n);
  if (est.bytes > kMemoryCeiling)
    throw Error(Errc::ResourceLimit, "estimated " + std::to_string(est.bytes >> 20) + " MiB for n = " +
                                         std::to_string(n) + "; rerun with --allow-big");
}

/// Entry budget for sparse elimination when the memory ceiling applies.
inline std::uint64_t sparse_budget(bool allow_big) {
  return allow_big ? ~std::uint64_t{0} : kMemoryCeiling / sizeof(std::pair<std::uint32_t, Code>);
}

/// dim Z^n, dim B^n and dim H^n, with representatives completing B^n to Z^n:
/// paper candidates first, then kernel vectors.
inline CohomologyReport h_dim(const AlexanderFQuandle& Q, unsigned n, const HDimOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const FieldSpec& F = Q.field();
  if (n == 0 || n + 1 > kMaxArity) throw Error(Errc::ArityMismatch, "n out of range");
  check_resources(F, n, opt.allow_big);

  CohomologyReport rep;
  rep.field = F.to_string();
  rep.omega = Q.omega_text();
  rep.beta = Q.beta_text();
  rep.n = n;

  std::vector<Candidate> cands = opt.candidates;
  if (opt.use_default_candidates && opt.candidates.empty()) cands = candidates_for(Q, n);

  const CochainSpaceBasis cn(F, n), cn1(F, n + 1);
  std::optional<CochainSpaceBasis> cnm1;
  if (n >= 2) cnm1.emplace(F, n - 1);

  for (unsigned w = 0; w + 1 < F.q(); ++w) {
    const DeltaBlock out = delta_block(Q, cn, cn1, w);
    const std::uint64_t budget = sparse_budget(opt.allow_big);
    const std::size_t zw = out.src_keys.size() - block_rank(F, out, budget);
    std::optional<DeltaBlock> in;
    std::size_t bw = 0;
    if (cnm1) {
      in = delta_block(Q, *cnm1, cn, w);
      bw = block_rank(F, *in, budget);
    }
    if (zw < bw) throw Error(Errc::DimensionMismatch, "rank δ^{n-1} exceeds dim Z^n");
    rep.dim_cocycles += zw;
    rep.dim_coboundaries += bw;
    const std::size_t hw = zw - bw;
    if (!opt.representatives || hw == 0) continue;

    const std::size_t len = out.src_keys.size();
    SparseRowEchelon span(F, len, false, budget);
    if (in)
      for (const auto& c : in->columns) span.insert(c);
    std::size_t found = 0;
    for (const auto& cand : cands) {
      if (found == hw) break;
      if (cochain_weight(cand.cochain) != w) continue;
      if (!delta_poly(Q, cand.cochain).is_zero()) continue;
      auto coords = sparse_coordinates(cand.cochain, out.src_keys);
      if (!coords) continue;
      if (span.insert(std::move(*coords))) {
        rep.representatives.push_back({cand.label, cand.cochain});
        ++found;
      }
    }
    if (found < hw) {
      for (const auto& v : block_kernel(F, out, budget)) {
        if (found == hw) break;
        if (!span.insert(v)) continue;
        std::vector<Term> terms;
        for (auto [k, c] : v) terms.push_back({out.src_keys[k], c});
        rep.representatives.push_back({"kernel", UCochain::from_terms(F, n, std::move(terms))});
        ++found;
      }
    }
  }
  rep.dim_h = rep.dim_cocycles - rep.dim_coboundaries;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline bool is_cocycle(const AlexanderFQuandle& Q, const UCochain& phi) {
  check_field(Q, phi);
  if (!is_quandle_cochain(phi)) throw Error(Errc::NotQuandleCochain, "cochain is not a quandle cochain");
  const UCochain d = delta_poly(Q, phi);
#ifdef FQCOH_CROSSCHECK
  if (!(d == delta_pointwise(Q, phi))) throw Error(Errc::DimensionMismatch, "polynomial and pointwise δ differ");
#endif
  return d.is_zero();
}

/// Some ψ of arity n−1 with δψ = φ, verified by re-applying δ; nullopt when
/// φ is not a coboundary. Works block by block.
inline std::optional<UCochain> is_coboundary(const AlexanderFQuandle& Q, const UCochain& phi) {
  const FieldSpec& F = Q.field();
  const unsigned n = phi.arity();
  if (n < 2) throw Error(Errc::ArityMismatch, "coboundaries start in arity 2");
  if (!is_cocycle(Q, phi)) return std::nullopt;
  const CochainSpaceBasis cn(F, n), cnm1(F, n - 1);
  std::vector<Term> witness;
  std::vector<bool> seen(F.q() - 1, false);
  const unsigned q1 = F.q() - 1;
  for (const Term& t : phi.terms()) seen[phi.codec().degree(t.key) % q1] = true;
  for (unsigned w = 0; w < q1; ++w) {
    if (!seen[w]) continue;
    const DeltaBlock b = delta_block(Q, cnm1, cn, w);
    std::vector<Term> part;
    for (const Term& t : phi.terms())
      if (phi.codec().degree(t.key) % q1 == w) part.push_back(t);
    const auto coords = sparse_coordinates(UCochain::from_terms(F, n, part), b.dst_keys);
    if (!coords) return std::nullopt;  // a constant term
    SparseRowEchelon e(F, b.dst_keys.size(), true);
    for (const auto& c : b.columns) e.insert(c);
    if (e.insert(*coords)) return std::nullopt;
    // dependency = target + Σ c_j col_j, so the witness is −c_j.
    for (auto [j, c] : e.dependency())
      if (j < b.src_keys.size()) witness.push_back({b.src_keys[j], F.neg(c)});
  }
  UCochain psi_w = UCochain::from_terms(F, n - 1, std::move(witness));
  if (!(delta_poly(Q, psi_w) == phi)) throw Error(Errc::DimensionMismatch, "coboundary witness failed re-check");
  return psi_w;
}

inline bool classes_equal(const AlexanderFQuandle& Q, const UCochain& a, const UCochain& b) {
  if (!is_cocycle(Q, a) || !is_cocycle(Q, b)) throw Error(Errc::NotQuandleCochain, "classes_equal needs cocycles");
  const UCochain d = a - b;
  if (d.is_zero()) return true;
  return is_coboundary(Q, d).has_value();
}

}  // namespace fqcoh
