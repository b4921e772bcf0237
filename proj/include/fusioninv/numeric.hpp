#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <string_view>

namespace fusioninv {

using Real = boost::multiprecision::mpfr_float;

/// Working precision and tolerances shared by every numeric comparison.
struct NumericPolicy {
  unsigned precision = 50;  // significant decimal digits
  double tol = 1e-9;        // absolute equality tolerance
  double zero_tol = 1e-9;   // |x| below this counts as zero
};

/// Sets the default MPFR precision (decimal digits) for Real values created afterwards
/// on this thread.
void set_working_precision(unsigned digits);
unsigned working_precision();

/// RAII guard that applies a policy's precision and restores the previous one.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

class Complex {
 public:
  Complex() : re_(0), im_(0) {}
  Complex(Real re) : re_(std::move(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(int re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)

  /// Parses decimal strings at the current working precision.
  static Complex parse(std::string_view re, std::string_view im);
  static Complex from_rational(const mpq_class& q);

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }

  Real abs() const;
  Real norm() const { return re_ * re_ + im_ * im_; }
  Complex conj() const { return {re_, -im_}; }
  Complex inverse() const;
  /// Integer power by repeated squaring; negative exponents invert first.
  Complex pow(const mpz_class& exponent) const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re_, -im_}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

  /// Fixed-format decimal strings with `digits` significant digits (default: working
  /// precision). Output is deterministic for a given value and digit count.
  std::string re_string(unsigned digits = 0) const;
  std::string im_string(unsigned digits = 0) const;
  std::string to_string(unsigned digits = 0) const;

 private:
  Real re_;
  Real im_;
};

/// |a - b| <= tol, so tol = 0 demands exact equality.
bool approx_equal(const Complex& a, const Complex& b, double tol);
bool is_zero(const Complex& a, double zero_tol);

std::string format_real(const Real& x, unsigned digits = 0);

/// Closest rational with denominator <= max_denominator from the continued fraction
/// expansion of x (best approximations of the first and second kind).
mpq_class best_rational(const Real& x, const mpz_class& max_denominator);

}  // namespace fusioninv
