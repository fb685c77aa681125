#pragma once
/**
 * @file cochain.hpp
 * @brief Cochains X^n -> F_q as reduced polynomials in difference coordinates.
 *
 * For an n-tuple (x_1, ..., x_n) the U-coordinates are U_i = x_i - x_{i+1}
 * for i < n and U_n = x_n. A cochain is stored as the unique polynomial in
 * U_1..U_n with every exponent below q that agrees with it as a function, so
 * two cochains are equal exactly when their term lists are equal.
 *
 * Two coboundary operators are provided. delta_pointwise() evaluates the
 * defining sum of faces on every (n+1)-tuple and interpolates the result; it
 * is the reference. delta_poly() composes the polynomial with the linear
 * substitutions that the faces induce in U-coordinates and is what the rest
 * of the library uses. They agree exactly.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fqcoh/gfq.hpp"
#include "fqcoh/quandle.hpp"

namespace fqcoh {

inline constexpr unsigned kMaxArity = 8;

/// Smallest exponent giving the same function x ↦ x^e on F_q (0 stays 0).
inline std::uint64_t reduce_exponent(std::uint64_t q, std::uint64_t e) noexcept {
  if (e < q) return e;
  return (e - 1) % (q - 1) + 1;
}

struct Term {
  std::uint64_t key;
  Code coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Mixed-radix packing of exponent vectors with U_1 most significant, so key
/// order is lexicographic order on (e_1, ..., e_n).
class MonomialCodec {
 public:
  MonomialCodec(unsigned q, unsigned arity) : q_(q), arity_(arity) {
    if (arity == 0 || arity > kMaxArity)
      throw Error(Errc::ArityMismatch, "arity must be in [1, " + std::to_string(kMaxArity) + "]");
    stride_.assign(arity, 1);
    for (unsigned i = arity - 1; i-- > 0;) stride_[i] = stride_[i + 1] * q;
    size_ = stride_[0] * q;
  }

  unsigned q() const noexcept { return q_; }
  unsigned arity() const noexcept { return arity_; }
  /// q^arity: the number of monomials, and of points of F_q^arity.
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t stride(unsigned i) const noexcept { return stride_[i]; }

  unsigned exponent(std::uint64_t key, unsigned i) const noexcept {
    return static_cast<unsigned>((key / stride_[i]) % q_);
  }
  std::uint64_t encode(std::span<const unsigned> e) const {
    if (e.size() != arity_) throw Error(Errc::ArityMismatch, "exponent vector length");
    std::uint64_t k = 0;
    for (unsigned i = 0; i < arity_; ++i) k += stride_[i] * reduce_exponent(q_, e[i]);
    return k;
  }
  std::vector<unsigned> decode(std::uint64_t key) const {
    std::vector<unsigned> e(arity_);
    for (unsigned i = 0; i < arity_; ++i) e[i] = exponent(key, i);
    return e;
  }
  /// Key of the pointwise product of two monomials.
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t k = 0;
    for (unsigned i = 0; i < arity_; ++i)
      k += stride_[i] * reduce_exponent(q_, exponent(a, i) + exponent(b, i));
    return k;
  }
  /// Total degree of the reduced monomial.
  unsigned degree(std::uint64_t key) const noexcept {
    unsigned d = 0;
    for (unsigned i = 0; i < arity_; ++i) d += exponent(key, i);
    return d;
  }

 private:
  unsigned q_;
  unsigned arity_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t size_ = 0;
};

/// Sorts by key, merges duplicates and drops zero coefficients.
inline void canonicalize(const FieldSpec& F, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term t = terms[i++];
    while (i < terms.size() && terms[i].key == t.key) t.coeff = F.add(t.coeff, terms[i++].coeff);
    if (t.coeff != 0) terms[out++] = t;
  }
  terms.resize(out);
}

class UCochain {
 public:
  /// The zero cochain of the given arity.
  UCochain(FieldSpec field, unsigned arity)
      : field_(std::move(field)), codec_(field_.q(), arity) {}

  /// Builds from arbitrary (key, coeff) pairs; keys must already be reduced.
  static UCochain from_terms(FieldSpec field, unsigned arity, std::vector<Term> terms) {
    UCochain c(std::move(field), arity);
    canonicalize(c.field_, terms);
    c.terms_ = std::move(terms);
    return c;
  }

  static UCochain constant(FieldSpec field, unsigned arity, Code value) {
    UCochain c(std::move(field), arity);
    if (value != 0) c.terms_.push_back({0, value});
    return c;
  }

  const FieldSpec& field() const noexcept { return field_; }
  const MonomialCodec& codec() const noexcept { return codec_; }
  unsigned arity() const noexcept { return codec_.arity(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::vector<unsigned> exponents(const Term& t) const { return codec_.decode(t.key); }

  Code coefficient(std::span<const unsigned> exps) const {
    const auto key = codec_.encode(exps);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, std::uint64_t k) { return t.key < k; });
    return (it != terms_.end() && it->key == key) ? it->coeff : Code{0};
  }

  friend bool operator==(const UCochain& a, const UCochain& b) {
    return a.arity() == b.arity() && a.field_.same_as(b.field_) && a.terms_ == b.terms_;
  }

 private:
  FieldSpec field_;
  MonomialCodec codec_;
  std::vector<Term> terms_;
};

inline void check_compatible(const UCochain& a, const UCochain& b) {
  if (!a.field().same_as(b.field())) throw Error(Errc::FieldMismatch, "cochains over different fields");
  if (a.arity() != b.arity())
    throw Error(Errc::ArityMismatch, "arity " + std::to_string(a.arity()) + " vs " +
                                         std::to_string(b.arity()));
}

/// Single-term cochain coeff * U_1^{e_1} ... U_n^{e_n}; exponents are reduced.
inline UCochain monomial(const FieldSpec& field, unsigned arity, std::span<const unsigned> exps,
                         Code coeff = 1) {
  UCochain base(field, arity);
  if (exps.size() != arity)
    throw Error(Errc::ArityMismatch, "expected " + std::to_string(arity) + " exponents");
  if (coeff == 0) return base;
  return UCochain::from_terms(field, arity, {{base.codec().encode(exps), coeff}});
}
inline UCochain monomial(const FieldSpec& field, std::initializer_list<unsigned> exps,
                         Code coeff = 1) {
  return monomial(field, static_cast<unsigned>(exps.size()),
                  std::span<const unsigned>(exps.begin(), exps.size()), coeff);
}

inline UCochain add_cochains(const UCochain& a, const UCochain& b) {
  check_compatible(a, b);
  std::vector<Term> t(a.terms().begin(), a.terms().end());
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return UCochain::from_terms(a.field(), a.arity(), std::move(t));
}

inline UCochain scale(const UCochain& a, Code c) {
  std::vector<Term> t;
  if (c != 0) {
    t.reserve(a.size());
    for (const Term& x : a.terms()) t.push_back({x.key, a.field().mul(c, x.coeff)});
  }
  return UCochain::from_terms(a.field(), a.arity(), std::move(t));
}

inline UCochain neg(const UCochain& a) { return scale(a, a.field().neg(1)); }

inline UCochain sub_cochains(const UCochain& a, const UCochain& b) {
  return add_cochains(a, neg(b));
}

inline UCochain operator+(const UCochain& a, const UCochain& b) { return add_cochains(a, b); }
inline UCochain operator-(const UCochain& a, const UCochain& b) { return sub_cochains(a, b); }
inline UCochain operator*(Code c, const UCochain& a) { return scale(a, c); }

namespace detail {

inline std::vector<Term> mul_terms(const FieldSpec& F, const MonomialCodec& codec,
                                   std::span<const Term> a, std::span<const Term> b) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const Term& x : a)
    for (const Term& y : b) out.push_back({codec.multiply(x.key, y.key), F.mul(x.coeff, y.coeff)});
  canonicalize(F, out);
  return out;
}

}  // namespace detail

/// Pointwise product, as a reduced polynomial.
inline UCochain mul_cochains(const UCochain& a, const UCochain& b) {
  check_compatible(a, b);
  return UCochain::from_terms(a.field(), a.arity(),
                              detail::mul_terms(a.field(), a.codec(), a.terms(), b.terms()));
}
inline UCochain operator*(const UCochain& a, const UCochain& b) { return mul_cochains(a, b); }

/// a^k by repeated squaring; a^0 = 1.
inline UCochain power(const UCochain& a, std::uint64_t k) {
  UCochain result = UCochain::constant(a.field(), a.arity(), 1);
  UCochain base = a;
  while (k > 0) {
    if (k & 1) result = mul_cochains(result, base);
    k >>= 1;
    if (k > 0) base = mul_cochains(base, base);
  }
  return result;
}

/// Coefficients of a linear form in the new variables V_1..V_N.
using LinearForm = std::vector<Code>;

/**
 * φ(L_1(V), ..., L_n(V)) for linear forms L_i in new_arity variables.
 *
 * Powers of forms are expanded digit by digit in base p, using
 * L^{p^k} = Σ a_j^{p^k} V_j^{p^k}, and cached per (variable, exponent).
 */
inline UCochain substitute_linear(const UCochain& phi, std::span<const LinearForm> forms,
                                  unsigned new_arity) {
  const FieldSpec& F = phi.field();
  if (forms.size() != phi.arity())
    throw Error(Errc::ArityMismatch, "need one linear form per variable");
  for (const auto& form : forms)
    if (form.size() != new_arity) throw Error(Errc::ArityMismatch, "linear form length");
  MonomialCodec codec(F.q(), new_arity);
  const unsigned p = F.p();
  const unsigned q = F.q();

  std::map<std::pair<unsigned, unsigned>, std::vector<Term>> cache;
  auto form_power = [&](unsigned var, unsigned e) -> const std::vector<Term>& {
    auto [it, inserted] = cache.try_emplace({var, e});
    if (!inserted) return it->second;
    std::vector<Term> acc{{0, 1}};
    unsigned rest = e;
    for (unsigned k = 0; rest > 0; ++k, rest /= p) {
      const unsigned digit = rest % p;
      if (digit == 0) continue;
      const auto pk = static_cast<unsigned>(F.p_pow(k));
      std::vector<Term> frob;
      for (unsigned j = 0; j < new_arity; ++j) {
        const Code a = forms[var][j];
        if (a == 0) continue;
        frob.push_back({codec.stride(j) * reduce_exponent(q, pk), F.frobenius(a, k)});
      }
      canonicalize(F, frob);
      for (unsigned d = 0; d < digit; ++d) acc = detail::mul_terms(F, codec, acc, frob);
    }
    it->second = std::move(acc);
    return it->second;
  };

  std::vector<Term> out;
  for (const Term& t : phi.terms()) {
    std::vector<Term> acc{{0, t.coeff}};
    for (unsigned i = 0; i < phi.arity() && !acc.empty(); ++i) {
      const unsigned e = phi.codec().exponent(t.key, i);
      if (e == 0) continue;
      acc = detail::mul_terms(F, codec, acc, form_power(i, e));
    }
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return UCochain::from_terms(F, new_arity, std::move(out));
}

inline Code eval_u(const UCochain& phi, std::span<const Code> point) {
  if (point.size() != phi.arity()) throw Error(Errc::ArityMismatch, "point length");
  const FieldSpec& F = phi.field();
  Code acc = 0;
  for (const Term& t : phi.terms()) {
    Code v = t.coeff;
    for (unsigned i = 0; i < phi.arity() && v != 0; ++i)
      v = F.mul(v, F.pow_small(point[i], phi.codec().exponent(t.key, i)));
    acc = F.add(acc, v);
  }
  return acc;
}

/// U_i = x_i - x_{i+1} for i < n, U_n = x_n.
inline std::vector<Code> u_from_x(const FieldSpec& F, std::span<const Code> x) {
  if (x.empty()) throw Error(Errc::ArityMismatch, "empty tuple");
  std::vector<Code> u(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) u[i] = F.sub(x[i], x[i + 1]);
  u.back() = x.back();
  return u;
}

inline std::vector<Code> x_from_u(const FieldSpec& F, std::span<const Code> u) {
  if (u.empty()) throw Error(Errc::ArityMismatch, "empty tuple");
  std::vector<Code> x(u.size());
  x.back() = u.back();
  for (std::size_t i = u.size() - 1; i-- > 0;) x[i] = F.add(u[i], x[i + 1]);
  return x;
}

namespace detail {

/// Applies the q×q matrix M (row-major, M[out * q + in]) along every axis of a
/// q^n tensor stored with axis 0 most significant.
inline void transform_axes(const FieldSpec& F, std::vector<Code>& data, unsigned n,
                           const std::vector<Code>& M) {
  const unsigned q = F.q();
  std::vector<Code> in(q);
  std::uint64_t stride = 1;
  for (unsigned axis = 0; axis < n; ++axis, stride *= q) {
    const std::uint64_t block = stride * q;
    for (std::uint64_t base = 0; base < data.size(); base += block)
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (unsigned k = 0; k < q; ++k) in[k] = data[base + off + k * stride];
        for (unsigned x = 0; x < q; ++x) {
          const Code* row = &M[std::size_t{x} * q];
          Code acc = 0;
          for (unsigned k = 0; k < q; ++k)
            if (in[k] != 0 && row[k] != 0) acc = F.add(acc, F.mul(row[k], in[k]));
          data[base + off + x * stride] = acc;
        }
      }
  }
}

/// V[x][e] = x^e with 0^0 = 1.
inline std::vector<Code> evaluation_matrix(const FieldSpec& F) {
  const unsigned q = F.q();
  std::vector<Code> V(std::size_t{q} * q);
  for (unsigned x = 0; x < q; ++x)
    for (unsigned e = 0; e < q; ++e) V[std::size_t{x} * q + e] = F.pow_small(static_cast<Code>(x), e);
  return V;
}

/// Inverse of evaluation_matrix(): from g(x) = Σ_a g(a)(1 - (x - a)^{q-1})
/// and (x - a)^{q-1} = Σ_k a^{q-1-k} x^k, c_0 = g(0) and
/// c_k = -Σ_a a^{q-1-k} g(a) for k >= 1.
inline std::vector<Code> interpolation_matrix(const FieldSpec& F) {
  const unsigned q = F.q();
  std::vector<Code> W(std::size_t{q} * q, 0);
  W[0] = 1;
  const Code minus_one = F.neg(1);
  for (unsigned k = 1; k < q; ++k)
    for (unsigned a = 0; a < q; ++a)
      W[std::size_t{k} * q + a] = F.mul(minus_one, F.pow_small(static_cast<Code>(a), q - 1 - k));
  return W;
}

}  // namespace detail

/// Values of φ on every U-point, indexed like monomial keys (U_1 most significant).
inline std::vector<Code> value_table(const UCochain& phi) {
  std::vector<Code> data(phi.codec().size(), 0);
  for (const Term& t : phi.terms()) data[t.key] = t.coeff;
  detail::transform_axes(phi.field(), data, phi.arity(), detail::evaluation_matrix(phi.field()));
  return data;
}

/// The unique reduced cochain with the given values on every U-point.
inline UCochain interpolate(const FieldSpec& F, unsigned arity, std::span<const Code> values) {
  MonomialCodec codec(F.q(), arity);
  if (values.size() != codec.size())
    throw Error(Errc::IncompleteValueTable, "expected " + std::to_string(codec.size()) +
                                                " values, got " + std::to_string(values.size()));
  std::vector<Code> data(values.begin(), values.end());
  detail::transform_axes(F, data, arity, detail::interpolation_matrix(F));
  std::vector<Term> terms;
  for (std::uint64_t k = 0; k < data.size(); ++k)
    if (data[k] != 0) terms.push_back({k, data[k]});
  return UCochain::from_terms(F, arity, std::move(terms));
}

inline void check_field(const AlexanderFQuandle& Q, const UCochain& phi) {
  if (!Q.field().same_as(phi.field()))
    throw Error(Errc::FieldMismatch, "cochain and quandle over different fields");
}

/**
 * Reference coboundary: for every (x_1..x_{n+1}),
 *   δφ = (-1)^{n+1} Σ_{i=2}^{n+1} (-1)^i [φ(x_1..x̂_i..x_{n+1})
 *          - φ(x_1*x_i, ..., x_{i-1}*x_i, f(x_{i+1}), ..., f(x_{n+1}))],
 * evaluated on the full value table and interpolated back.
 */
inline UCochain delta_pointwise(const AlexanderFQuandle& Q, const UCochain& phi) {
  check_field(Q, phi);
  const FieldSpec& F = Q.field();
  const unsigned n = phi.arity();
  const unsigned q = F.q();
  const auto values = value_table(phi);
  MonomialCodec in_codec(q, n);
  MonomialCodec out_codec(q, n + 1);
  std::vector<Code> out(out_codec.size(), 0);

  std::vector<Code> u(n + 1), x(n + 1), face(n);
  auto index_of = [&](std::span<const Code> tuple_x) {
    // U-coordinates of an n-tuple, packed.
    std::uint64_t k = 0;
    for (unsigned i = 0; i < n; ++i) {
      const Code ui = (i + 1 < n) ? F.sub(tuple_x[i], tuple_x[i + 1]) : tuple_x[i];
      k += in_codec.stride(i) * ui;
    }
    return k;
  };

  for (std::uint64_t idx = 0; idx < out_codec.size(); ++idx) {
    for (unsigned i = 0; i <= n; ++i) u[i] = static_cast<Code>(out_codec.exponent(idx, i));
    x.back() = u.back();
    for (unsigned i = n; i-- > 0;) x[i] = F.add(u[i], x[i + 1]);
    Code acc = 0;
    for (unsigned i = 2; i <= n + 1; ++i) {
      // 1-indexed x_i is x[i - 1].
      unsigned w = 0;
      for (unsigned j = 0; j <= n; ++j)
        if (j != i - 1) face[w++] = x[j];
      Code term = values[index_of(face)];
      w = 0;
      for (unsigned j = 0; j <= n; ++j) {
        if (j < i - 1) face[w++] = Q.star(x[j], x[i - 1]);
        else if (j > i - 1) face[w++] = Q.f(x[j]);
      }
      term = F.sub(term, values[index_of(face)]);
      const bool negative = ((n + 1 + i) % 2) == 1;
      acc = negative ? F.sub(acc, term) : F.add(acc, term);
    }
    out[idx] = acc;
  }
  return interpolate(F, n + 1, out);
}

/**
 * Coboundary by substitution in U-coordinates: for slots j = 1..n,
 *   δφ += (-1)^{n+j} [φ(U_1, .., U_j + U_{j+1}, U_{j+2}, .., U_{n+1})
 *          - φ(ωU_1, .., ωU_{j-1}, ωU_j + (ω+β)U_{j+1}, (ω+β)U_{j+2}, .., (ω+β)U_{n+1})].
 */
inline UCochain delta_poly(const AlexanderFQuandle& Q, const UCochain& phi) {
  check_field(Q, phi);
  const FieldSpec& F = Q.field();
  const unsigned n = phi.arity();
  std::vector<Term> out;
  std::vector<LinearForm> merged(n, LinearForm(n + 1, 0));
  std::vector<LinearForm> twisted(n, LinearForm(n + 1, 0));
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned k = 0; k < n; ++k) {
      std::fill(merged[k].begin(), merged[k].end(), Code{0});
      std::fill(twisted[k].begin(), twisted[k].end(), Code{0});
      if (k < j) {
        merged[k][k] = 1;
        twisted[k][k] = Q.omega();
      } else if (k == j) {
        merged[k][k] = 1;
        merged[k][k + 1] = 1;
        twisted[k][k] = Q.omega();
        twisted[k][k + 1] = Q.f_coeff();
      } else {
        merged[k][k + 1] = 1;
        twisted[k][k + 1] = Q.f_coeff();
      }
    }
    const bool negative = ((n + j + 1) % 2) == 1;  // slot j is 1-indexed j + 1
    const Code plus = negative ? F.neg(1) : Code{1};
    const Code minus = F.neg(plus);
    const UCochain a = substitute_linear(phi, merged, n + 1);
    const UCochain b = substitute_linear(phi, twisted, n + 1);
    for (const Term& t : a.terms()) out.push_back({t.key, F.mul(plus, t.coeff)});
    for (const Term& t : b.terms()) out.push_back({t.key, F.mul(minus, t.coeff)});
  }
  return UCochain::from_terms(F, n + 1, std::move(out));
}

/// Vanishes on every tuple with x_i = x_{i+1} for some 2 <= i <= n-1, i.e.
/// every monomial has a positive exponent on each of U_2..U_{n-1}.
inline bool is_quandle_cochain(const UCochain& phi) {
  const unsigned n = phi.arity();
  for (const Term& t : phi.terms())
    for (unsigned i = 1; i + 1 < n; ++i)
      if (phi.codec().exponent(t.key, i) == 0) return false;
  return true;
}

// Text form: "c*U1^e1*U2^e2*...*Un^en" joined by " + ", "0" for the zero cochain.

inline std::string to_text(const UCochain& phi) {
  if (phi.is_zero()) return "0";
  std::string s;
  for (const Term& t : phi.terms()) {
    if (!s.empty()) s += " + ";
    s += format_element(phi.field(), t.coeff);
    for (unsigned i = 0; i < phi.arity(); ++i)
      s += "*U" + std::to_string(i + 1) + "^" + std::to_string(phi.codec().exponent(t.key, i));
  }
  return s;
}

/// Parses the text form. Variables may be omitted (exponent 0) and a missing
/// coefficient means 1; exponents are reduced.
inline UCochain parse_cochain(const FieldSpec& F, unsigned arity, std::string_view text) {
  MonomialCodec codec(F.q(), arity);
  std::vector<Term> terms;
  text = detail::trim(text);
  if (text == "0" || text.empty()) return UCochain(F, arity);
  for (auto raw_term : detail::split(text, '+')) {
    auto term = detail::trim(raw_term);
    if (term.empty()) throw Error(Errc::ParseError, "empty term in '" + std::string(text) + "'");
    Code coeff = 1;
    bool have_coeff = false;
    std::vector<std::uint64_t> exps(arity, 0);
    for (auto raw_factor : detail::split(term, '*')) {
      auto factor = detail::trim(raw_factor);
      if (!factor.empty() && factor[0] == 'U') {
        const auto caret = factor.find('^');
        const unsigned var = detail::parse_uint(factor.substr(1, caret == std::string_view::npos
                                                                     ? std::string_view::npos
                                                                     : caret - 1),
                                                "variable index");
        if (var == 0 || var > arity)
          throw Error(Errc::ArityMismatch, "variable U" + std::to_string(var) + " outside arity " +
                                               std::to_string(arity));
        const unsigned e = caret == std::string_view::npos
                               ? 1u
                               : detail::parse_uint(factor.substr(caret + 1), "exponent");
        exps[var - 1] += e;
      } else {
        if (have_coeff) throw Error(Errc::ParseError, "two coefficients in '" + std::string(term) + "'");
        coeff = parse_element(F, factor);
        have_coeff = true;
      }
    }
    std::uint64_t key = 0;
    for (unsigned i = 0; i < arity; ++i) key += codec.stride(i) * reduce_exponent(F.q(), exps[i]);
    terms.push_back({key, coeff});
  }
  return UCochain::from_terms(F, arity, std::move(terms));
}

/// JSON form: [{"exponents": [..], "coeff": [c_0, .., c_{m-1}]}, ...].
inline nlohmann::ordered_json to_json(const UCochain& phi) {
  auto arr = nlohmann::ordered_json::array();
  for (const Term& t : phi.terms()) {
    nlohmann::ordered_json j;
    j["exponents"] = phi.exponents(t);
    j["coeff"] = phi.field().coeffs(t.coeff);
    arr.push_back(j);
  }
  return arr;
}

inline UCochain cochain_from_json(const FieldSpec& F, unsigned arity,
                                  const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "cochain JSON must be an array");
  MonomialCodec codec(F.q(), arity);
  std::vector<Term> terms;
  for (const auto& item : j) {
    if (!item.contains("exponents") || !item.contains("coeff"))
      throw Error(Errc::ParseError, "cochain JSON term needs exponents and coeff");
    const auto exps = item["exponents"].get<std::vector<unsigned>>();
    const auto coeff = item["coeff"].get<std::vector<unsigned>>();
    terms.push_back({codec.encode(exps), F.from_coeffs(coeff)});
  }
  return UCochain::from_terms(F, arity, std::move(terms));
}

}  // namespace fqcoh
