#pragma once
/**
 * @file generators.hpp
 * @brief Named cocycle families, their unity conditions, and the candidate
 *        basis sets for H^2, H^3 and H^4.
 *
 * Index conventions: every family is parameterized by Frobenius indices
 * (v, u, t, s, ...) so that an exponent p^v is passed as the index v. Shifted
 * exponents p^{k+1} may reach p^m = q; such generators are built with
 * reduced exponents and flagged `reduced`.
 */

#include <array>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fqcoh/cochain.hpp"

namespace fqcoh {

/// base^e == 1, with e = 0 always true and a zero base failing otherwise.
inline bool cond_unity(const AlexanderFQuandle& Q, Code base, std::uint64_t exponent_sum) {
  if (exponent_sum == 0) return true;
  if (base == 0) return false;
  return Q.field().pow(base, exponent_sum) == 1;
}

/// ω^e = 1 and (ω+β)^e = 1.
inline bool unity_pair(const AlexanderFQuandle& Q, std::uint64_t e) {
  return cond_unity(Q, Q.omega(), e) && cond_unity(Q, Q.f_coeff(), e);
}

namespace detail {

inline std::uint64_t ppow(const FieldSpec& F, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r *= F.p();
  return r;
}

inline bool is_p_power(const FieldSpec& F, std::uint64_t a, unsigned* k = nullptr) {
  unsigned e = 0;
  while (a > 1 && a % F.p() == 0) a /= F.p(), ++e;
  if (k) *k = e;
  return a == 1;
}

/// h(c1·U_slot, c2·U_{slot+1}) inside arity n (slot is 0-based).
inline UCochain place2(const UCochain& h, unsigned n, unsigned slot, Code c1, Code c2) {
  std::vector<LinearForm> forms(2, LinearForm(n, 0));
  forms[0][slot] = c1;
  forms[1][slot + 1] = c2;
  return substitute_linear(h, forms, n);
}

inline UCochain var_power(const FieldSpec& F, unsigned n, unsigned slot, std::uint64_t e) {
  std::vector<unsigned> ex(n, 0);
  ex[slot] = static_cast<unsigned>(reduce_exponent(F.q(), e));
  return monomial(F, n, ex, 1);
}

}  // namespace detail

/// φ^{p^k}: coefficients go through Frobenius and exponents scale by p^k.
inline UCochain frobenius_power(const UCochain& phi, unsigned k) {
  const FieldSpec& F = phi.field();
  const auto& codec = phi.codec();
  const std::uint64_t pk = detail::ppow(F, k);
  std::vector<Term> out;
  std::vector<unsigned> ex(phi.arity());
  for (const Term& t : phi.terms()) {
    for (unsigned i = 0; i < phi.arity(); ++i)
      ex[i] = static_cast<unsigned>(reduce_exponent(F.q(), codec.exponent(t.key, i) * pk));
    out.push_back({codec.encode(ex), F.frobenius(t.coeff, k % F.m())});
  }
  return UCochain::from_terms(F, phi.arity(), std::move(out));
}

/// φ^a, using the Frobenius shortcut when a is a power of p.
inline UCochain power_of(const UCochain& phi, std::uint64_t a) {
  unsigned k = 0;
  if (a >= 1 && detail::is_p_power(phi.field(), a, &k)) return frobenius_power(phi, k);
  return power(phi, a);
}

/// μ_a(x, y) = (x+y)^a − x^a − y^a.
inline UCochain mu(const FieldSpec& F, std::uint64_t a) {
  const UCochain xa = monomial(F, {static_cast<unsigned>(reduce_exponent(F.q(), a))});
  const std::array<LinearForm, 1> sum{LinearForm{1, 1}};
  return substitute_linear(xa, sum, 2) - detail::var_power(F, 2, 0, a) - detail::var_power(F, 2, 1, a);
}

/// χ(x, y) = Σ_{i=1}^{p−1} (−1)^{i−1} i^{−1} x^{p−i} y^i.
inline UCochain chi(const FieldSpec& F) {
  const unsigned p = F.p();
  std::vector<Term> terms;
  MonomialCodec codec(F.q(), 2);
  for (unsigned i = 1; i < p; ++i) {
    Code c = F.inv(F.from_int(static_cast<std::int64_t>(i)));
    if ((i - 1) % 2 == 1) c = F.neg(c);
    const std::array<unsigned, 2> ex{p - i, i};
    terms.push_back({codec.encode(ex), c});
  }
  return UCochain::from_terms(F, 2, std::move(terms));
}

/// ψ(a, b) = (μ_a(U1, U2) − (ω+β)^b μ_a(ωU1, (ω+β)U2)) · U3^b.
///
/// The (ω+β)^b weight mirrors E₀; without it ψ(a, p^s) is not closed once
/// ω+β ≠ 1 (see psi_printed).
inline UCochain psi(const AlexanderFQuandle& Q, std::uint64_t a, std::uint64_t b) {
  const FieldSpec& F = Q.field();
  const UCochain m = mu(F, a);
  const Code w = F.pow(Q.f_coeff(), b);
  const UCochain h = detail::place2(m, 3, 0, 1, 1) - w * detail::place2(m, 3, 0, Q.omega(), Q.f_coeff());
  return h * detail::var_power(F, 3, 2, b);
}

/// (μ_a(U1, U2) − μ_a(ωU1, (ω+β)U2)) · U3^b, with no weight on the twisted term.
inline UCochain psi_printed(const AlexanderFQuandle& Q, std::uint64_t a, std::uint64_t b) {
  const FieldSpec& F = Q.field();
  const UCochain m = mu(F, a);
  const UCochain h = detail::place2(m, 3, 0, 1, 1) - detail::place2(m, 3, 0, Q.omega(), Q.f_coeff());
  return h * detail::var_power(F, 3, 2, b);
}

namespace detail {

/// χ(U_slot, U_{slot+1})^a − c · χ(ωU_slot, (ω+β)U_{slot+1})^a in arity n.
inline UCochain chi_difference(const AlexanderFQuandle& Q, unsigned n, unsigned slot, std::uint64_t a,
                               Code c) {
  const FieldSpec& F = Q.field();
  const UCochain x = power_of(chi(F), a);
  return place2(x, n, slot, 1, 1) - c * place2(x, n, slot, Q.omega(), Q.f_coeff());
}

}  // namespace detail

/// E₀(a·p, b) = (χ(U1,U2)^a − (ω+β)^b χ(ωU1,(ω+β)U2)^a) · U3^b.
inline UCochain e0(const AlexanderFQuandle& Q, std::uint64_t a_times_p, std::uint64_t b) {
  const FieldSpec& F = Q.field();
  if (a_times_p == 0 || a_times_p % F.p() != 0)
    throw Error(Errc::NotDivisibleByP, "E0 first argument must be a positive multiple of p");
  const std::uint64_t a = a_times_p / F.p();
  return detail::chi_difference(Q, 3, 0, a, F.pow(Q.f_coeff(), b)) * detail::var_power(F, 3, 2, b);
}

/// E₁(a, b·p) = U1^a · (χ(U2,U3)^b − ω^a χ(ωU2,(ω+β)U3)^b).
inline UCochain e1(const AlexanderFQuandle& Q, std::uint64_t a, std::uint64_t b_times_p) {
  const FieldSpec& F = Q.field();
  if (b_times_p == 0 || b_times_p % F.p() != 0)
    throw Error(Errc::NotDivisibleByP, "E1 second argument must be a positive multiple of p");
  const std::uint64_t b = b_times_p / F.p();
  return detail::var_power(F, 3, 0, a) * detail::chi_difference(Q, 3, 1, b, F.pow(Q.omega(), a));
}

inline UCochain f_monomial(const FieldSpec& F, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  const std::array<unsigned, 3> ex{static_cast<unsigned>(reduce_exponent(F.q(), a)),
                                   static_cast<unsigned>(reduce_exponent(F.q(), b)),
                                   static_cast<unsigned>(reduce_exponent(F.q(), c))};
  return monomial(F, 3, ex, 1);
}

inline UCochain f4_monomial(const FieldSpec& F, std::uint64_t a, std::uint64_t b, std::uint64_t c,
                            std::uint64_t d) {
  const std::array<unsigned, 4> ex{static_cast<unsigned>(reduce_exponent(F.q(), a)),
                                   static_cast<unsigned>(reduce_exponent(F.q(), b)),
                                   static_cast<unsigned>(reduce_exponent(F.q(), c)),
                                   static_cast<unsigned>(reduce_exponent(F.q(), d))};
  return monomial(F, 4, ex, 1);
}

// ---------------------------------------------------------------------------
// Q-set and Γ

enum class GammaCase { I, II, III, IV, V };

inline const char* gamma_case_name(GammaCase c) noexcept {
  switch (c) {
    case GammaCase::I: return "I";
    case GammaCase::II: return "II";
    case GammaCase::III: return "III";
    case GammaCase::IV: return "IV";
    case GammaCase::V: return "V";
  }
  return "?";
}

struct QTuple {
  unsigned v, u, t, s;  // Frobenius indices of (p^v, p^u, p^t, p^s)
  GammaCase tag;
};

/// Case of (v, u, t, s), or nullopt when the tuple is not in Q.
inline std::optional<GammaCase> classify_q_tuple(const AlexanderFQuandle& Q, unsigned v, unsigned u,
                                                 unsigned t, unsigned s) {
  const FieldSpec& F = Q.field();
  const bool p2 = F.p() == 2;
  if (!(v < t && u < s && u <= t)) return std::nullopt;
  if (p2 && !(u < t)) return std::nullopt;
  auto P = [&](unsigned k) { return detail::ppow(F, k); };
  if (!unity_pair(Q, P(v) + P(t)) || !unity_pair(Q, P(u) + P(s))) return std::nullopt;
  const bool w1 = cond_unity(Q, Q.omega(), P(v) + P(u));
  const bool f1 = cond_unity(Q, Q.f_coeff(), P(v) + P(u));
  if (w1 && f1) return GammaCase::I;
  if (w1 || f1) return std::nullopt;
  const bool equal_powers = F.pow(Q.omega(), P(v)) == F.pow(Q.omega(), P(u)) &&
                            F.pow(Q.f_coeff(), P(v)) == F.pow(Q.f_coeff(), P(u));
  if (t > s) return GammaCase::II;
  if (t == s && !p2) return GammaCase::III;
  if (!p2 && u <= v && v < t && t < s && equal_powers) return GammaCase::IV;
  if (p2 && u < v && v < t && t <= s && equal_powers) return GammaCase::V;
  return std::nullopt;
}

/// All tuples of Q in lexicographic (v, u, t, s) order.
inline std::vector<QTuple> q_set(const AlexanderFQuandle& Q) {
  const unsigned m = Q.field().m();
  std::vector<QTuple> out;
  for (unsigned v = 0; v < m; ++v)
    for (unsigned u = 0; u < m; ++u)
      for (unsigned t = 0; t < m; ++t)
        for (unsigned s = 0; s < m; ++s)
          if (auto c = classify_q_tuple(Q, v, u, t, s)) out.push_back({v, u, t, s, *c});
  return out;
}

inline UCochain gamma(const AlexanderFQuandle& Q, const QTuple& x) {
  const FieldSpec& F = Q.field();
  const auto pv = detail::ppow(F, x.v), pu = detail::ppow(F, x.u);
  const auto pt = detail::ppow(F, x.t), ps = detail::ppow(F, x.s);
  switch (x.tag) {
    case GammaCase::I: return f_monomial(F, pv, pu + pt, ps);
    case GammaCase::II: {
      const Code w = Q.omega(), f = Q.f_coeff();
      const Code k = F.sub(F.mul(F.pow(w, pu), F.pow(f, ps)), 1);
      if (k == 0)
        throw Error(Errc::CaseIICoefficientSingular, "omega^{p^u}(omega+beta)^{p^s} = 1");
      const Code num = F.sub(1, F.mul(F.pow(w, pu + pv), F.pow(f, pt + ps)));
      const Code c = F.mul(F.inv(k), num);
      // The coefficient multiplies both F(p^v, p^u, p^t+p^s) and F(p^v+p^u, p^s, p^t).
      return f_monomial(F, pv, pu + pt, ps) - f_monomial(F, pu, pv + ps, pt) -
             c * (f_monomial(F, pv, pu, pt + ps) - f_monomial(F, pv + pu, ps, pt));
    }
    case GammaCase::III: return f_monomial(F, pv, pt + ps, pu);
    case GammaCase::IV:
    case GammaCase::V: return f_monomial(F, pt, pv + pu, ps);
  }
  throw Error(Errc::ConditionViolation, "unknown case");
}

// ---------------------------------------------------------------------------
// Four-variable families

/// (χ(U1,U2)^{p^u} − (ω+β)^{p^t+p^s} χ(ωU1,(ω+β)U2)^{p^u}) U3^{p^t} U4^{p^s}
inline UCochain b_family(const AlexanderFQuandle& Q, unsigned u, unsigned t, unsigned s) {
  const FieldSpec& F = Q.field();
  const auto pt = detail::ppow(F, t), ps = detail::ppow(F, s);
  return detail::chi_difference(Q, 4, 0, detail::ppow(F, u), F.pow(Q.f_coeff(), pt + ps)) *
         detail::var_power(F, 4, 2, pt) * detail::var_power(F, 4, 3, ps);
}

/// U1^{p^v} (χ(U2,U3)^{p^t} − ω^{p^v}(ω+β)^{p^s} χ(ωU2,(ω+β)U3)^{p^t}) U4^{p^s}
inline UCochain c_family(const AlexanderFQuandle& Q, unsigned v, unsigned t, unsigned s) {
  const FieldSpec& F = Q.field();
  const auto pv = detail::ppow(F, v), ps = detail::ppow(F, s);
  const Code c = F.mul(F.pow(Q.omega(), pv), F.pow(Q.f_coeff(), ps));
  return detail::var_power(F, 4, 0, pv) * detail::chi_difference(Q, 4, 1, detail::ppow(F, t), c) *
         detail::var_power(F, 4, 3, ps);
}

/// U1^{p^v} U2^{p^u} (χ(U3,U4)^{p^s} − ω^{p^v+p^u} χ(ωU3,(ω+β)U4)^{p^s})
inline UCochain d_family(const AlexanderFQuandle& Q, unsigned v, unsigned u, unsigned s) {
  const FieldSpec& F = Q.field();
  const auto pv = detail::ppow(F, v), pu = detail::ppow(F, u);
  return detail::var_power(F, 4, 0, pv) * detail::var_power(F, 4, 1, pu) *
         detail::chi_difference(Q, 4, 2, detail::ppow(F, s), F.pow(Q.omega(), pv + pu));
}

/// U1^{p^i} U2^{p^j+p^u} U3^{p^t} U4^{p^s}
inline UCochain p5m1_family(const FieldSpec& F, unsigned i, unsigned j, unsigned u, unsigned t, unsigned s) {
  using detail::ppow;
  return f4_monomial(F, ppow(F, i), ppow(F, j) + ppow(F, u), ppow(F, t), ppow(F, s));
}

/// (χ(U1,U2)^{p^u} − (ω+β)^{p^{s+1}} χ(ωU1,(ω+β)U2)^{p^u})
///   · (χ(U3,U4)^{p^s} − ω^{p^{u+1}} χ(ωU3,(ω+β)U4)^{p^s})
inline UCochain p5xx_family(const AlexanderFQuandle& Q, unsigned u, unsigned s) {
  const FieldSpec& F = Q.field();
  using detail::ppow;
  return detail::chi_difference(Q, 4, 0, ppow(F, u), F.pow(Q.f_coeff(), ppow(F, s + 1))) *
         detail::chi_difference(Q, 4, 2, ppow(F, s), F.pow(Q.omega(), ppow(F, u + 1)));
}

/// U1^{p^i} U2^{p^j+p^u} (χ(U3,U4)^{p^s} − ω^{p^i+p^j+p^u} χ(ωU3,(ω+β)U4)^{p^s})
inline UCochain p5mx_family(const AlexanderFQuandle& Q, unsigned i, unsigned j, unsigned u, unsigned s) {
  const FieldSpec& F = Q.field();
  using detail::ppow;
  const Code c = F.pow(Q.omega(), ppow(F, i) + ppow(F, j) + ppow(F, u));
  return detail::var_power(F, 4, 0, ppow(F, i)) * detail::var_power(F, 4, 1, ppow(F, j) + ppow(F, u)) *
         detail::chi_difference(Q, 4, 2, ppow(F, s), c);
}

/// U1^{p^i} U2^{p^j+p^v} U3^{p^u+p^t} U4^{p^s}
inline UCochain p5m2_family(const FieldSpec& F, unsigned i, unsigned j, unsigned v, unsigned u, unsigned t,
                            unsigned s) {
  using detail::ppow;
  return f4_monomial(F, ppow(F, i), ppow(F, j) + ppow(F, v), ppow(F, u) + ppow(F, t), ppow(F, s));
}

// ---------------------------------------------------------------------------
// Family catalog

/// A named family: index ranges, its hypothesis, and its constructor.
struct FamilyDef {
  std::string id;
  unsigned arity;
  std::vector<std::string> index_names;
  std::function<std::vector<std::pair<unsigned, unsigned>>(const FieldSpec&)> ranges;  // inclusive
  std::function<bool(const AlexanderFQuandle&, std::span<const unsigned>)> condition;
  std::function<UCochain(const AlexanderFQuandle&, std::span<const unsigned>)> build;
  /// Largest exponent (before reduction) appearing in the construction.
  std::function<std::uint64_t(const FieldSpec&, std::span<const unsigned>)> max_exponent;
};

namespace detail {

inline std::optional<GammaCase> gamma_case_from_id(std::string_view id) {
  if (id == "GAMMA:I") return GammaCase::I;
  if (id == "GAMMA:II") return GammaCase::II;
  if (id == "GAMMA:III") return GammaCase::III;
  if (id == "GAMMA:IV") return GammaCase::IV;
  if (id == "GAMMA:V") return GammaCase::V;
  return std::nullopt;
}

}  // namespace detail

inline const std::vector<FamilyDef>& family_catalog() {
  using detail::ppow;
  using Idx = std::span<const unsigned>;
  static const std::vector<FamilyDef> catalog = [] {
    std::vector<FamilyDef> c;
    auto frob = [](unsigned count, std::initializer_list<unsigned> shifted = {}) {
      std::vector<unsigned> sh(shifted);
      return [count, sh](const FieldSpec& F) {
        std::vector<std::pair<unsigned, unsigned>> r(count, {0u, F.m() - 1});
        for (unsigned k : sh) r[k] = {1u, F.m()};
        return r;
      };
    };
    c.push_back({"M2", 2, {"t", "s"}, frob(2),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0]) + ppow(F, x[1]));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   const std::array<unsigned, 2> ex{static_cast<unsigned>(ppow(F, x[0])),
                                                    static_cast<unsigned>(ppow(F, x[1]))};
                   return monomial(F, 2, ex, 1);
                 },
                 [](const FieldSpec& F, Idx x) { return std::max(ppow(F, x[0]), ppow(F, x[1])); }});
    c.push_back({"PSI", 3, {"a", "s"},
                 [](const FieldSpec& F) {
                   return std::vector<std::pair<unsigned, unsigned>>{{1u, F.q() - 1}, {0u, F.m() - 1}};
                 },
                 [](const AlexanderFQuandle& Q, Idx x) { return unity_pair(Q, x[0] + ppow(Q.field(), x[1])); },
                 [](const AlexanderFQuandle& Q, Idx x) { return psi(Q, x[0], ppow(Q.field(), x[1])); },
                 [](const FieldSpec& F, Idx x) { return std::max<std::uint64_t>(x[0], ppow(F, x[1])); }});
    c.push_back({"E0", 3, {"s", "h"}, frob(2, {0}),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0]) + ppow(F, x[1]));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return e0(Q, ppow(F, x[0]), ppow(F, x[1]));
                 },
                 [](const FieldSpec& F, Idx x) { return std::max(ppow(F, x[0]), ppow(F, x[1])); }});
    c.push_back({"E1", 3, {"t", "s"}, frob(2, {1}),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0]) + ppow(F, x[1]));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return e1(Q, ppow(F, x[0]), ppow(F, x[1]));
                 },
                 [](const FieldSpec& F, Idx x) { return std::max(ppow(F, x[0]), ppow(F, x[1])); }});
    c.push_back({"F", 3, {"v", "u", "t"}, frob(3),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0]) + ppow(F, x[1]) + ppow(F, x[2]));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return f_monomial(F, ppow(F, x[0]), ppow(F, x[1]), ppow(F, x[2]));
                 },
                 [](const FieldSpec& F, Idx x) { return ppow(F, std::max({x[0], x[1], x[2]})); }});
    c.push_back({"F0", 3, {"v", "u"}, frob(2),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0]) + ppow(F, x[1]));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return f_monomial(F, ppow(F, x[0]), ppow(F, x[1]), 0);
                 },
                 [](const FieldSpec& F, Idx x) { return ppow(F, std::max(x[0], x[1])); }});
    for (const char* gid : {"GAMMA", "GAMMA:I", "GAMMA:II", "GAMMA:III", "GAMMA:IV", "GAMMA:V"}) {
      const std::string id = gid;
      const auto only = detail::gamma_case_from_id(id);
      c.push_back({id, 3, {"v", "u", "t", "s"}, frob(4),
                   [only](const AlexanderFQuandle& Q, Idx x) {
                     const auto k = classify_q_tuple(Q, x[0], x[1], x[2], x[3]);
                     return k.has_value() && (!only || *k == *only);
                   },
                   [](const AlexanderFQuandle& Q, Idx x) {
                     const auto k = classify_q_tuple(Q, x[0], x[1], x[2], x[3]);
                     if (!k) throw Error(Errc::ConditionViolation, "tuple is not in Q");
                     return gamma(Q, {x[0], x[1], x[2], x[3], *k});
                   },
                   [](const FieldSpec& F, Idx x) {
                     std::uint64_t best = 0;
                     for (unsigned a = 0; a < 4; ++a)
                       for (unsigned b = a + 1; b < 4; ++b) best = std::max(best, ppow(F, x[a]) + ppow(F, x[b]));
                     return best;
                   }});
    }
    c.push_back({"A", 4, {"v", "u", "t", "s"}, frob(4),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0]) + ppow(F, x[1]) + ppow(F, x[2]) + ppow(F, x[3]));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return f4_monomial(F, ppow(F, x[0]), ppow(F, x[1]), ppow(F, x[2]), ppow(F, x[3]));
                 },
                 [](const FieldSpec& F, Idx x) { return ppow(F, std::max({x[0], x[1], x[2], x[3]})); }});
    c.push_back({"B", 4, {"u", "t", "s"}, frob(3),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0] + 1) + ppow(F, x[1]) + ppow(F, x[2]));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) { return b_family(Q, x[0], x[1], x[2]); },
                 [](const FieldSpec& F, Idx x) { return std::max({ppow(F, x[0] + 1), ppow(F, x[1]), ppow(F, x[2])}); }});
    c.push_back({"C", 4, {"v", "t", "s"}, frob(3),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0]) + ppow(F, x[1] + 1) + ppow(F, x[2]));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) { return c_family(Q, x[0], x[1], x[2]); },
                 [](const FieldSpec& F, Idx x) { return std::max({ppow(F, x[0]), ppow(F, x[1] + 1), ppow(F, x[2])}); }});
    c.push_back({"D", 4, {"v", "u", "s"}, frob(3),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0]) + ppow(F, x[1]) + ppow(F, x[2] + 1));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) { return d_family(Q, x[0], x[1], x[2]); },
                 [](const FieldSpec& F, Idx x) { return std::max({ppow(F, x[0]), ppow(F, x[1]), ppow(F, x[2] + 1)}); }});
    c.push_back({"E", 4, {"v", "u", "t"}, frob(3),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0]) + ppow(F, x[1]) + ppow(F, x[2]));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return f4_monomial(F, ppow(F, x[0]), ppow(F, x[1]), ppow(F, x[2]), 0);
                 },
                 [](const FieldSpec& F, Idx x) { return ppow(F, std::max({x[0], x[1], x[2]})); }});
    c.push_back({"P5M1", 4, {"i", "j", "u", "t", "s"}, frob(5),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   const Code w = Q.omega(), f = Q.f_coeff();
                   const auto pi = ppow(F, x[0]), pj = ppow(F, x[1]), pu = ppow(F, x[2]);
                   const auto pt = ppow(F, x[3]), ps = ppow(F, x[4]);
                   return unity_pair(Q, pi + pj + pu + pt + ps) && cond_unity(Q, w, pi + pj) &&
                          cond_unity(Q, w, pi + pu) && cond_unity(Q, f, pu + pt + ps) &&
                          cond_unity(Q, f, pj + pt + ps);
                 },
                 [](const AlexanderFQuandle& Q, Idx x) { return p5m1_family(Q.field(), x[0], x[1], x[2], x[3], x[4]); },
                 [](const FieldSpec& F, Idx x) {
                   return std::max({ppow(F, x[0]), ppow(F, x[1]) + ppow(F, x[2]), ppow(F, x[3]), ppow(F, x[4])});
                 }});
    c.push_back({"P5XX", 4, {"u", "s"}, frob(2),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   return unity_pair(Q, ppow(F, x[0] + 1) + ppow(F, x[1] + 1));
                 },
                 [](const AlexanderFQuandle& Q, Idx x) { return p5xx_family(Q, x[0], x[1]); },
                 [](const FieldSpec& F, Idx x) { return std::max(ppow(F, x[0] + 1), ppow(F, x[1] + 1)); }});
    c.push_back({"P5MX", 4, {"i", "j", "u", "s"}, frob(4),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   const Code w = Q.omega(), f = Q.f_coeff();
                   const auto pi = ppow(F, x[0]), pj = ppow(F, x[1]), pu = ppow(F, x[2]);
                   const auto ps1 = ppow(F, x[3] + 1);
                   return unity_pair(Q, pi + pj + pu + ps1) && cond_unity(Q, w, pi + pj) &&
                          cond_unity(Q, w, pi + pu) && cond_unity(Q, f, pu + ps1) && cond_unity(Q, f, pj + ps1);
                 },
                 [](const AlexanderFQuandle& Q, Idx x) { return p5mx_family(Q, x[0], x[1], x[2], x[3]); },
                 [](const FieldSpec& F, Idx x) {
                   return std::max({ppow(F, x[0]), ppow(F, x[1]) + ppow(F, x[2]), ppow(F, x[3] + 1)});
                 }});
    c.push_back({"P5M2", 4, {"i", "j", "v", "u", "t", "s"}, frob(6),
                 [](const AlexanderFQuandle& Q, Idx x) {
                   const auto& F = Q.field();
                   const Code w = Q.omega(), f = Q.f_coeff();
                   const auto pi = ppow(F, x[0]), pj = ppow(F, x[1]), pv = ppow(F, x[2]);
                   const auto pu = ppow(F, x[3]), pt = ppow(F, x[4]), ps = ppow(F, x[5]);
                   return unity_pair(Q, pi + pj + pv + pu + pt + ps) && cond_unity(Q, w, pi + pj) &&
                          cond_unity(Q, w, pi + pv) && cond_unity(Q, w, pv + pu) && cond_unity(Q, w, pv + pt) &&
                          cond_unity(Q, f, ps + pt) && cond_unity(Q, f, ps + pu) && cond_unity(Q, f, pv + pu) &&
                          cond_unity(Q, f, pj + pu);
                 },
                 [](const AlexanderFQuandle& Q, Idx x) {
                   return p5m2_family(Q.field(), x[0], x[1], x[2], x[3], x[4], x[5]);
                 },
                 [](const FieldSpec& F, Idx x) {
                   return std::max({ppow(F, x[0]), ppow(F, x[1]) + ppow(F, x[2]), ppow(F, x[3]) + ppow(F, x[4]),
                                    ppow(F, x[5])});
                 }});
    return c;
  }();
  return catalog;
}

inline const FamilyDef& find_family(std::string_view id) {
  for (const auto& f : family_catalog())
    if (f.id == id) return f;
  throw Error(Errc::UnknownProposition, "unknown proposition id: " + std::string(id));
}

/// Builds a family member; with `checked`, the hypothesis must hold.
inline UCochain build_family(const AlexanderFQuandle& Q, std::string_view id, std::span<const unsigned> idx,
                             bool checked = true) {
  const FamilyDef& def = find_family(id);
  if (idx.size() != def.index_names.size())
    throw Error(Errc::ArityMismatch, std::string(id) + " takes " + std::to_string(def.index_names.size()) +
                                         " indices");
  const auto ranges = def.ranges(Q.field());
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k] < ranges[k].first || idx[k] > ranges[k].second)
      throw Error(Errc::ConditionViolation, "index " + def.index_names[k] + " out of range");
  if (checked && !def.condition(Q, idx))
    throw Error(Errc::ConditionViolation, std::string(id) + " hypothesis fails for the given indices");
  return def.build(Q, idx);
}

/// The four extra four-variable families (P5M1, P5XX, P5MX, P5M2).
inline UCochain prop5_extras(const AlexanderFQuandle& Q, std::string_view id, std::span<const unsigned> idx) {
  if (id != "P5M1" && id != "P5XX" && id != "P5MX" && id != "P5M2")
    throw Error(Errc::UnknownProposition, "not an extra four-variable family: " + std::string(id));
  return build_family(Q, id, idx, true);
}

inline UCochain prop5_extras_unchecked(const AlexanderFQuandle& Q, std::string_view id,
                                       std::span<const unsigned> idx) {
  if (id != "P5M1" && id != "P5XX" && id != "P5MX" && id != "P5M2")
    throw Error(Errc::UnknownProposition, "not an extra four-variable family: " + std::string(id));
  return build_family(Q, id, idx, false);
}

/// Calls fn(indices) for every index tuple in the family's ranges, in
/// lexicographic order.
template <class Fn>
void for_each_index(const FamilyDef& def, const FieldSpec& F, Fn&& fn) {
  const auto ranges = def.ranges(F);
  std::vector<unsigned> idx(ranges.size());
  for (std::size_t k = 0; k < ranges.size(); ++k) idx[k] = ranges[k].first;
  while (true) {
    fn(std::span<const unsigned>(idx));
    std::size_t k = idx.size();
    while (k > 0) {
      --k;
      if (idx[k] < ranges[k].second) {
        ++idx[k];
        for (std::size_t r = k + 1; r < idx.size(); ++r) idx[r] = ranges[r].first;
        break;
      }
      if (k == 0) return;
    }
    if (idx.empty()) return;
  }
}

// ---------------------------------------------------------------------------
// Candidate basis sets

struct Candidate {
  std::string family;
  std::vector<unsigned> indices;
  std::string label;  // family with exponent values, e.g. F(1,2,4)
  UCochain cochain;
  bool reduced = false;  // built with some exponent ≥ q
};

namespace detail {

inline Candidate make_candidate(const AlexanderFQuandle& Q, std::string family, std::vector<unsigned> idx,
                                std::vector<std::uint64_t> shown) {
  const FamilyDef& def = find_family(family);
  std::ostringstream os;
  os << family << '(';
  for (std::size_t k = 0; k < shown.size(); ++k) os << (k ? "," : "") << shown[k];
  os << ')';
  UCochain c = def.build(Q, idx);
  const bool reduced = def.max_exponent(Q.field(), idx) >= Q.field().q();
  return {std::move(family), std::move(idx), os.str(), std::move(c), reduced};
}

}  // namespace detail

inline std::vector<Candidate> h2_candidates(const AlexanderFQuandle& Q) {
  const FieldSpec& F = Q.field();
  const unsigned m = F.m();
  using detail::ppow;
  std::vector<Candidate> out;
  for (unsigned v = 0; v < m; ++v)
    for (unsigned u = v + 1; u < m; ++u)
      if (unity_pair(Q, ppow(F, v) + ppow(F, u)))
        out.push_back(detail::make_candidate(Q, "M2", {v, u}, {ppow(F, v), ppow(F, u)}));
  return out;
}

inline std::vector<Candidate> h3_candidates(const AlexanderFQuandle& Q) {
  const FieldSpec& F = Q.field();
  const unsigned m = F.m();
  using detail::ppow;
  std::vector<Candidate> out;
  for (unsigned v = 0; v < m; ++v)
    for (unsigned u = v + 1; u < m; ++u)
      for (unsigned t = u + 1; t < m; ++t)
        if (unity_pair(Q, ppow(F, v) + ppow(F, u) + ppow(F, t)))
          out.push_back(detail::make_candidate(Q, "F", {v, u, t}, {ppow(F, v), ppow(F, u), ppow(F, t)}));
  for (unsigned v = 0; v < m; ++v)
    for (unsigned u = v + 1; u < m; ++u)
      if (unity_pair(Q, ppow(F, v) + ppow(F, u)))
        out.push_back(detail::make_candidate(Q, "F0", {v, u}, {ppow(F, v), ppow(F, u), 0}));
  for (unsigned v = 0; v < m; ++v)
    for (unsigned u = v + 1; u < m; ++u)
      if (unity_pair(Q, ppow(F, v + 1) + ppow(F, u)))
        out.push_back(detail::make_candidate(Q, "E0", {v + 1, u}, {ppow(F, v + 1), ppow(F, u)}));
  for (unsigned v = 0; v < m; ++v)
    for (unsigned u = v; u < m; ++u)
      if (unity_pair(Q, ppow(F, v) + ppow(F, u + 1)))
        out.push_back(detail::make_candidate(Q, "E1", {v, u + 1}, {ppow(F, v), ppow(F, u + 1)}));
  for (const QTuple& x : q_set(Q))
    out.push_back(detail::make_candidate(Q, std::string("GAMMA:") + gamma_case_name(x.tag), {x.v, x.u, x.t, x.s},
                                         {ppow(F, x.v), ppow(F, x.u), ppow(F, x.t), ppow(F, x.s)}));
  return out;
}

inline std::vector<Candidate> h4_candidates(const AlexanderFQuandle& Q) {
  const FieldSpec& F = Q.field();
  const unsigned m = F.m();
  using detail::ppow;
  std::vector<Candidate> out;
  for (unsigned v = 0; v < m; ++v)
    for (unsigned u = v + 1; u < m; ++u)
      for (unsigned t = u + 1; t < m; ++t)
        for (unsigned s = t + 1; s < m; ++s)
          if (unity_pair(Q, ppow(F, v) + ppow(F, u) + ppow(F, t) + ppow(F, s)))
            out.push_back(detail::make_candidate(Q, "A", {v, u, t, s},
                                                 {ppow(F, v), ppow(F, u), ppow(F, t), ppow(F, s)}));
  for (unsigned u = 0; u < m; ++u)
    for (unsigned t = u + 1; t < m; ++t)
      for (unsigned s = t + 1; s < m; ++s)
        if (unity_pair(Q, ppow(F, u + 1) + ppow(F, t) + ppow(F, s)))
          out.push_back(detail::make_candidate(Q, "B", {u, t, s}, {ppow(F, u), ppow(F, t), ppow(F, s)}));
  for (unsigned v = 0; v < m; ++v)
    for (unsigned t = v; t < m; ++t)
      for (unsigned s = t + 1; s < m; ++s)
        if (unity_pair(Q, ppow(F, v) + ppow(F, t + 1) + ppow(F, s)))
          out.push_back(detail::make_candidate(Q, "C", {v, t, s}, {ppow(F, v), ppow(F, t), ppow(F, s)}));
  for (unsigned v = 0; v < m; ++v)
    for (unsigned u = v + 1; u < m; ++u)
      for (unsigned s = u; s < m; ++s)
        if (unity_pair(Q, ppow(F, v) + ppow(F, u) + ppow(F, s + 1)))
          out.push_back(detail::make_candidate(Q, "D", {v, u, s}, {ppow(F, v), ppow(F, u), ppow(F, s)}));
  for (unsigned v = 0; v < m; ++v)
    for (unsigned u = v + 1; u < m; ++u)
      for (unsigned t = u + 1; t < m; ++t)
        if (unity_pair(Q, ppow(F, v) + ppow(F, u) + ppow(F, t)))
          out.push_back(detail::make_candidate(Q, "E", {v, u, t}, {ppow(F, v), ppow(F, u), ppow(F, t)}));
  return out;
}

inline std::vector<Candidate> candidates_for(const AlexanderFQuandle& Q, unsigned n) {
  switch (n) {
    case 2: return h2_candidates(Q);
    case 3: return h3_candidates(Q);
    case 4: return h4_candidates(Q);
    default: return {};
  }
}

}  // namespace fqcoh
