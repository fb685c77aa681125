#pragma once
/**
 * @file gfq.hpp
 * @brief Exact arithmetic in F_{p^m} = F_p[x]/(modulus).
 *
 * Elements are identified with a packed code: the coefficient sequence
 * (c_0, ..., c_{m-1}) read as the base-p integer sum c_i p^i. The canonical
 * element ordering is the numeric order of codes, i.e. lexicographic order on
 * (c_{m-1}, ..., c_0). All tables are built once per FieldSpec and shared
 * between copies; a FieldSpec is immutable after construction.
 */

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqcoh/error.hpp"

namespace fqcoh {

/// Packed element code, in [0, q).
using Code = std::uint16_t;

inline constexpr unsigned kMaxFieldOrder = 1024;

namespace detail {

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Remainder of a modulo b over F_p; b monic. Little-endian coefficient vectors.
inline std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& b,
                                      unsigned p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = (a[shift + i] + p * p - lead * b[i] % p) % p;
    }
    a.pop_back();
  }
  return a;
}

/// Exhaustive trial division by every monic polynomial of degree 1..m/2.
inline bool is_irreducible(const std::vector<unsigned>& modulus, unsigned p) {
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  for (unsigned d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<unsigned> div(d + 1);
      std::uint64_t v = idx;
      for (unsigned i = 0; i < d; ++i) {
        div[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      div[d] = 1;
      auto r = poly_mod(modulus, div, p);
      if (std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; })) return false;
    }
  }
  return true;
}

struct FieldTables {
  unsigned p = 0;
  unsigned m = 0;
  unsigned q = 0;
  std::vector<unsigned> modulus;  // little-endian, m + 1 entries, monic
  std::vector<Code> add;          // q * q
  std::vector<Code> mul;          // q * q
  std::vector<Code> neg;          // q
  std::vector<Code> inv;          // q, inv[0] unused
  std::vector<Code> exp;          // exp[k] = g^k, k in [0, q-1)
  std::vector<unsigned> log;      // log[x] for x != 0
  std::vector<Code> pow;          // q * q, pow[x * q + e] = x^e for e < q (0^0 = 1)
  Code primitive = 1;             // smallest element of order q - 1
  std::uint64_t p_pow[32] = {};   // p^i, saturated
};

inline std::vector<unsigned> decode_coeffs(unsigned code, unsigned p, unsigned m) {
  std::vector<unsigned> c(m);
  for (unsigned i = 0; i < m; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

inline unsigned encode_coeffs(std::span<const unsigned> c, unsigned p) {
  unsigned code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

inline std::shared_ptr<const FieldTables> build_tables(unsigned p, unsigned m,
                                                       std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeP, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");
  if (modulus.size() != m + 1)
    throw Error(Errc::DegreeMismatch, "modulus must have m + 1 = " + std::to_string(m + 1) +
                                          " coefficients, got " + std::to_string(modulus.size()));
  for (unsigned c : modulus)
    if (c >= p) throw Error(Errc::DegreeMismatch, "modulus coefficient out of range [0, p)");
  if (modulus.back() != 1) throw Error(Errc::DegreeMismatch, "modulus must be monic");
  std::uint64_t q64 = 1;
  for (unsigned i = 0; i < m; ++i) {
    q64 *= p;
    if (q64 > kMaxFieldOrder)
      throw Error(Errc::FieldTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  if (!is_irreducible(modulus, p))
    throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));

  auto t = std::make_shared<FieldTables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<unsigned>(q64);
  t->modulus = std::move(modulus);
  const unsigned q = t->q;
  t->p_pow[0] = 1;
  for (int i = 1; i < 32; ++i)
    t->p_pow[i] = t->p_pow[i - 1] > (std::uint64_t{1} << 40) ? t->p_pow[i - 1]
                                                             : t->p_pow[i - 1] * p;

  t->add.resize(std::size_t{q} * q);
  t->neg.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    auto ca = decode_coeffs(a, p, m);
    std::vector<unsigned> cn(m);
    for (unsigned i = 0; i < m; ++i) cn[i] = (p - ca[i]) % p;
    t->neg[a] = static_cast<Code>(encode_coeffs(cn, p));
    for (unsigned b = 0; b < q; ++b) {
      auto cb = decode_coeffs(b, p, m);
      std::vector<unsigned> cs(m);
      for (unsigned i = 0; i < m; ++i) cs[i] = (ca[i] + cb[i]) % p;
      t->add[std::size_t{a} * q + b] = static_cast<Code>(encode_coeffs(cs, p));
    }
  }

  // Schoolbook product reduced by the modulus; used only to find a generator.
  auto slow_mul = [&](unsigned a, unsigned b) {
    auto ca = decode_coeffs(a, p, m);
    auto cb = decode_coeffs(b, p, m);
    std::vector<unsigned> prod(2 * m - 1, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    auto r = poly_mod(std::move(prod), t->modulus, p);
    r.resize(m, 0);
    return encode_coeffs(r, p);
  };

  for (unsigned g = 1; g < q; ++g) {
    unsigned order = 1;
    for (unsigned x = g; x != 1; x = slow_mul(x, g)) ++order;
    if (order == q - 1) {
      t->primitive = static_cast<Code>(g);
      break;
    }
  }
  t->exp.resize(q - 1);
  t->log.assign(q, 0);
  unsigned x = 1;
  for (unsigned k = 0; k + 1 < q; ++k) {
    t->exp[k] = static_cast<Code>(x);
    t->log[x] = k;
    x = slow_mul(x, t->primitive);
  }

  t->mul.assign(std::size_t{q} * q, 0);
  t->inv.assign(q, 0);
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b)
      t->mul[std::size_t{a} * q + b] = t->exp[(t->log[a] + t->log[b]) % (q - 1)];
    t->inv[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];
  }

  t->pow.assign(std::size_t{q} * q, 0);
  for (unsigned a = 0; a < q; ++a)
    for (unsigned e = 0; e < q; ++e) {
      Code v;
      if (e == 0) v = 1;
      else if (a == 0) v = 0;
      else v = t->exp[(std::uint64_t{t->log[a]} * e) % (q - 1)];
      t->pow[std::size_t{a} * q + e] = v;
    }
  return t;
}

}  // namespace detail

class FieldElement;

/**
 * F_{p^m} with a fixed monic irreducible modulus. Copies share tables.
 *
 * Arithmetic on raw codes lives here (add, mul, ...); FieldElement wraps a
 * code together with its field for the checked public API.
 */
class FieldSpec {
 public:
  /// Validates p, the degree and irreducibility. Modulus is little-endian, c_0 first.
  FieldSpec(unsigned p, unsigned m, std::vector<unsigned> modulus)
      : t_(detail::build_tables(p, m, std::move(modulus))) {}

  /// Prime field F_p with modulus x.
  static FieldSpec prime(unsigned p) { return FieldSpec(p, 1, {0, 1}); }

  /// Built-in moduli: the paper's choices for q = 4, 8, 16; Conway polynomials elsewhere.
  static FieldSpec default_for(unsigned q);

  /// "p^m/c_m,...,c_0" (big-endian modulus), "p^m" or "q" for the default table.
  static FieldSpec parse(std::string_view text);

  unsigned p() const noexcept { return t_->p; }
  unsigned m() const noexcept { return t_->m; }
  unsigned q() const noexcept { return t_->q; }
  const std::vector<unsigned>& modulus() const noexcept { return t_->modulus; }

  /// Inverse of parse(); always the explicit form.
  std::string to_string() const {
    std::string s = std::to_string(p()) + "^" + std::to_string(m()) + "/";
    for (std::size_t i = t_->modulus.size(); i-- > 0;) {
      s += std::to_string(t_->modulus[i]);
      if (i != 0) s += ",";
    }
    return s;
  }

  bool same_as(const FieldSpec& o) const noexcept {
    return t_ == o.t_ || (p() == o.p() && m() == o.m() && modulus() == o.modulus());
  }
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept { return a.same_as(b); }

  Code add(Code a, Code b) const noexcept { return t_->add[std::size_t{a} * t_->q + b]; }
  Code sub(Code a, Code b) const noexcept { return add(a, t_->neg[b]); }
  Code neg(Code a) const noexcept { return t_->neg[a]; }
  Code mul(Code a, Code b) const noexcept { return t_->mul[std::size_t{a} * t_->q + b]; }
  Code inv(Code a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return t_->inv[a];
  }
  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  Code pow(Code a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const unsigned n = t_->q - 1;
    return t_->exp[(std::uint64_t{t_->log[a]} * (e % n)) % n];
  }
  /// a^e for e < q, by table lookup.
  Code pow_small(Code a, unsigned e) const noexcept { return t_->pow[std::size_t{a} * t_->q + e]; }

  /// a^{p^e}; e is taken modulo m since a^{p^m} = a.
  Code frobenius(Code a, std::uint64_t e) const noexcept {
    return pow(a, t_->p_pow[e % t_->m]);
  }

  /// Least n >= 1 with a^n = 1.
  unsigned order(Code a) const {
    if (a == 0) throw Error(Errc::ZeroElement, "zero has no multiplicative order");
    const unsigned n = t_->q - 1;
    return n / std::gcd(t_->log[a], n);
  }

  Code primitive() const noexcept { return t_->primitive; }
  /// Discrete log with respect to primitive().
  unsigned log(Code a) const {
    if (a == 0) throw Error(Errc::ZeroElement, "log of zero");
    return t_->log[a];
  }
  Code from_int(long long k) const noexcept {
    const long long pp = static_cast<long long>(t_->p);
    return static_cast<Code>(((k % pp) + pp) % pp);
  }
  /// p^i, saturated near 2^40.
  std::uint64_t p_pow(unsigned i) const noexcept { return t_->p_pow[std::min(i, 31u)]; }

  std::vector<unsigned> coeffs(Code a) const { return detail::decode_coeffs(a, p(), m()); }
  Code from_coeffs(std::span<const unsigned> c) const {
    if (c.size() != m())
      throw Error(Errc::DegreeMismatch, "element needs exactly m = " + std::to_string(m()) +
                                            " coefficients");
    for (unsigned x : c)
      if (x >= p()) throw Error(Errc::DegreeMismatch, "coefficient out of range [0, p)");
    return static_cast<Code>(detail::encode_coeffs(c, p()));
  }

  /// Row of the multiplication table for a fixed left factor.
  const Code* mul_row(Code a) const noexcept { return t_->mul.data() + std::size_t{a} * t_->q; }
  const Code* add_row(Code a) const noexcept { return t_->add.data() + std::size_t{a} * t_->q; }

  FieldElement element(Code a) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// The class of x in F_p[x]/(modulus).
  FieldElement root() const;
  std::vector<FieldElement> elements() const;

 private:
  std::shared_ptr<const detail::FieldTables> t_;
};

/// A field element that remembers its field; mixing fields raises FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldSpec field, Code code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_.q()) throw Error(Errc::DegreeMismatch, "element code out of range");
  }

  const FieldSpec& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  /// Little-endian coefficients in the modulus root.
  std::vector<unsigned> coeffs() const { return field_.coeffs(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.field_.same_as(b.field_);
  }
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.code_ < b.code_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.add(a.code_, b.code_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.sub(a.code_, b.code_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.mul(a.code_, b.code_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.div(a.code_, b.code_)};
  }
  FieldElement operator-() const { return {field_, field_.neg(code_)}; }

 private:
  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field_.same_as(b.field_))
      throw Error(Errc::FieldMismatch, "operands belong to different fields");
  }

  FieldSpec field_;
  Code code_;
};

inline FieldElement FieldSpec::element(Code a) const { return {*this, a}; }
inline FieldElement FieldSpec::zero() const { return {*this, 0}; }
inline FieldElement FieldSpec::one() const { return {*this, 1}; }
inline FieldElement FieldSpec::root() const {
  if (m() == 1) return {*this, from_int(-static_cast<long long>(modulus()[0]))};
  return {*this, static_cast<Code>(p())};
}
inline std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q());
  for (unsigned a = 0; a < q(); ++a) out.emplace_back(*this, static_cast<Code>(a));
  return out;
}

// Free-function forms of the element operations.

inline FieldSpec field_new(unsigned p, unsigned m, std::vector<unsigned> modulus) {
  return FieldSpec(p, m, std::move(modulus));
}
inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement neg(const FieldElement& a) { return -a; }
inline FieldElement inv(const FieldElement& a) { return {a.field(), a.field().inv(a.code())}; }
inline FieldElement pow(const FieldElement& a, std::uint64_t e) {
  return {a.field(), a.field().pow(a.code(), e)};
}
inline FieldElement frobenius(const FieldElement& a, std::uint64_t e) {
  return {a.field(), a.field().frobenius(a.code(), e)};
}
inline unsigned element_order(const FieldElement& a) { return a.field().order(a.code()); }
inline FieldElement primitive_element(const FieldSpec& f) { return f.element(f.primitive()); }
inline std::vector<FieldElement> enumerate_elements(const FieldSpec& f) { return f.elements(); }

namespace detail {

inline unsigned parse_uint(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(Errc::ParseError, "bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline FieldSpec FieldSpec::default_for(unsigned q) {
  switch (q) {
    case 4: return FieldSpec(2, 2, {1, 1, 1});           // x^2+x+1
    case 8: return FieldSpec(2, 3, {1, 0, 1, 1});        // x^3+x^2+1
    case 16: return FieldSpec(2, 4, {1, 1, 0, 0, 1});    // x^4+x+1
    case 32: return FieldSpec(2, 5, {1, 0, 1, 0, 0, 1}); // x^5+x^2+1
    case 9: return FieldSpec(3, 2, {2, 2, 1});           // x^2+2x+2
    case 27: return FieldSpec(3, 3, {1, 2, 0, 1});       // x^3+2x+1
    case 25: return FieldSpec(5, 2, {2, 4, 1});          // x^2+4x+2
    default:
      if (detail::is_prime(q)) return prime(q);
      throw Error(Errc::DegreeMismatch, "no built-in modulus for q = " + std::to_string(q));
  }
}

inline FieldSpec FieldSpec::parse(std::string_view text) {
  text = detail::trim(text);
  const auto slash = text.find('/');
  const std::string_view head = text.substr(0, slash);
  const auto caret = head.find('^');
  unsigned p = 0;
  unsigned m = 1;
  if (caret == std::string_view::npos) {
    p = detail::parse_uint(head, "field order");
  } else {
    p = detail::parse_uint(head.substr(0, caret), "characteristic");
    m = detail::parse_uint(head.substr(caret + 1), "extension degree");
  }
  if (slash == std::string_view::npos) {
    if (caret == std::string_view::npos) return default_for(p);
    if (!detail::is_prime(p)) throw Error(Errc::NonPrimeP, std::to_string(p) + " is not prime");
    if (m == 1) return prime(p);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m && q <= kMaxFieldOrder; ++i) q *= p;
    return default_for(static_cast<unsigned>(q));
  }
  auto parts = detail::split(text.substr(slash + 1), ',');
  std::vector<unsigned> big_endian;
  for (auto part : parts) big_endian.push_back(detail::parse_uint(detail::trim(part), "coefficient"));
  std::vector<unsigned> little(big_endian.rbegin(), big_endian.rend());
  return FieldSpec(p, m, std::move(little));
}

}  // namespace fqcoh
