#pragma once
/**
 * @file quandle.hpp
 * @brief The Alexander f-quandle (F_q, *, f) with x*y = ωx + βy and f(x) = (ω+β)x.
 */

#include <string>

#include "fqcoh/gfq.hpp"
#include "fqcoh/report.hpp"

namespace fqcoh {

/// Element text form: "g^k" for powers of the canonical primitive element, a
/// signed integer for prime-field elements, otherwise a little-endian
/// coefficient list "c_0,...,c_{m-1}".
inline std::string format_element(const FieldSpec& f, Code a) {
  if (a == 0) return "0";
  if (a < f.p()) return std::to_string(a);
  return "g^" + std::to_string(f.log(a));
}

inline Code parse_element(const FieldSpec& f, std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw Error(Errc::ParseError, "empty element");
  if (text.size() > 2 && text[0] == 'g' && text[1] == '^') {
    const unsigned k = detail::parse_uint(text.substr(2), "generator exponent");
    return f.pow(f.primitive(), k);
  }
  if (text == "g") return f.primitive();
  if (text.find(',') != std::string_view::npos) {
    std::vector<unsigned> c;
    for (auto part : detail::split(text, ',')) c.push_back(detail::parse_uint(detail::trim(part), "coefficient"));
    return f.from_coeffs(c);
  }
  const bool negative = text[0] == '-';
  const unsigned v = detail::parse_uint(negative ? text.substr(1) : text, "element");
  return f.from_int(negative ? -static_cast<long long>(v) : static_cast<long long>(v));
}

class AlexanderFQuandle {
 public:
  /// Rejects ω ∈ {0, 1} and β = 0 with InvalidQuandle. ω = 0 is rejected
  /// because the left-division axiom needs ω invertible.
  AlexanderFQuandle(FieldSpec field, Code omega, Code beta)
      : field_(std::move(field)), omega_(omega), beta_(beta) {
    if (omega_ >= field_.q() || beta_ >= field_.q())
      throw Error(Errc::DegreeMismatch, "parameter code out of range");
    if (omega_ == 0)
      throw Error(Errc::InvalidQuandle, "omega = 0: x*y is not left-invertible");
    if (omega_ == 1) throw Error(Errc::InvalidQuandle, "omega = 1 is excluded");
    if (beta_ == 0) throw Error(Errc::InvalidQuandle, "beta = 0 is excluded");
    f_coeff_ = field_.add(omega_, beta_);
    omega_inv_ = field_.inv(omega_);
  }

  AlexanderFQuandle(const FieldElement& omega, const FieldElement& beta)
      : AlexanderFQuandle(checked_field(omega, beta), omega.code(), beta.code()) {}

  const FieldSpec& field() const noexcept { return field_; }
  Code omega() const noexcept { return omega_; }
  Code beta() const noexcept { return beta_; }
  /// ω + β, the scalar of f.
  Code f_coeff() const noexcept { return f_coeff_; }

  Code star(Code x, Code y) const noexcept {
    return field_.add(field_.mul(omega_, x), field_.mul(beta_, y));
  }
  Code f(Code x) const noexcept { return field_.mul(f_coeff_, x); }
  /// The unique z with z * y = f(x).
  Code solve_left(Code x, Code y) const noexcept {
    return field_.mul(omega_inv_, field_.sub(f(x), field_.mul(beta_, y)));
  }

  FieldElement star(const FieldElement& x, const FieldElement& y) const {
    check(x);
    check(y);
    return field_.element(star(x.code(), y.code()));
  }
  FieldElement f_map(const FieldElement& x) const {
    check(x);
    return field_.element(f(x.code()));
  }
  FieldElement solve_left(const FieldElement& x, const FieldElement& y) const {
    check(x);
    check(y);
    return field_.element(solve_left(x.code(), y.code()));
  }

  std::string omega_text() const { return format_element(field_, omega_); }
  std::string beta_text() const { return format_element(field_, beta_); }

 private:
  static FieldSpec checked_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field().same_as(b.field()))
      throw Error(Errc::FieldMismatch, "omega and beta belong to different fields");
    return a.field();
  }
  void check(const FieldElement& x) const {
    if (!x.field().same_as(field_)) throw Error(Errc::FieldMismatch, "element of another field");
  }

  FieldSpec field_;
  Code omega_;
  Code beta_;
  Code f_coeff_ = 0;
  Code omega_inv_ = 0;
};

/**
 * Exhaustive check of x*x = f(x), unique left division z*y = f(x), and
 * (x*y)*f(z) = (x*z)*(y*z). Violations are listed, at most 16 per axiom.
 */
inline VerificationReport verify_axioms(const AlexanderFQuandle& Q) {
  const FieldSpec& F = Q.field();
  const unsigned q = F.q();
  VerificationReport r;
  r.subject = "f-quandle-axioms";
  r.field = F.to_string();
  r.omega = Q.omega_text();
  r.beta = Q.beta_text();
  auto violations = nlohmann::ordered_json::array();
  std::size_t idempotence = 0, division = 0, distributivity = 0;
  auto note = [&](const char* axiom, std::vector<Code> tuple) {
    if (violations.size() >= 16) return;
    nlohmann::ordered_json v;
    v["axiom"] = axiom;
    auto t = nlohmann::ordered_json::array();
    for (Code c : tuple) t.push_back(format_element(F, c));
    v["tuple"] = t;
    violations.push_back(v);
  };
  for (unsigned x = 0; x < q; ++x) {
    const Code cx = static_cast<Code>(x);
    if (Q.star(cx, cx) != Q.f(cx)) {
      ++idempotence;
      note("x*x=f(x)", {cx});
    }
    for (unsigned y = 0; y < q; ++y) {
      const Code cy = static_cast<Code>(y);
      unsigned solutions = 0;
      for (unsigned z = 0; z < q; ++z)
        if (Q.star(static_cast<Code>(z), cy) == Q.f(cx)) ++solutions;
      if (solutions != 1) {
        ++division;
        note("unique z with z*y=f(x)", {cx, cy});
      }
      for (unsigned z = 0; z < q; ++z) {
        const Code cz = static_cast<Code>(z);
        if (Q.star(Q.star(cx, cy), Q.f(cz)) != Q.star(Q.star(cx, cz), Q.star(cy, cz))) {
          ++distributivity;
          note("(x*y)*f(z)=(x*z)*(y*z)", {cx, cy, cz});
        }
      }
    }
  }
  r.details["checked_elements"] = q;
  r.details["idempotence_violations"] = idempotence;
  r.details["division_violations"] = division;
  r.details["distributivity_violations"] = distributivity;
  r.details["violations"] = violations;
  r.status = (idempotence + division + distributivity == 0) ? Status::pass : Status::fail;
  return r;
}

}  // namespace fqcoh
