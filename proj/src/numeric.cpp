#include "fusioninv/numeric.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "fusioninv/errors.hpp"

namespace fusioninv {

namespace {

// The MPFR backend defaults to 20 digits; start every program at the policy default.
struct DefaultPrecision {
  DefaultPrecision() { Real::default_precision(NumericPolicy{}.precision); }
};
__attribute__((init_priority(101))) const DefaultPrecision kDefaultPrecision;

}  // namespace

void set_working_precision(unsigned digits) {
  if (digits < 10) throw ArgumentError("precision must be at least 10 digits");
  Real::default_precision(digits);
}

unsigned working_precision() { return Real::default_precision(); }

PrecisionScope::PrecisionScope(unsigned digits) : saved_(working_precision()) { set_working_precision(digits); }

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Complex Complex::parse(std::string_view re, std::string_view im) {
  try {
    return {Real(std::string(re)), Real(std::string(im))};
  } catch (const std::runtime_error&) {
    throw ParseError("malformed decimal '" + std::string(re) + "', '" + std::string(im) + "'");
  }
}

Complex Complex::from_rational(const mpq_class& q) {
  Real num(q.get_num().get_str());
  Real den(q.get_den().get_str());
  return {num / den, Real(0)};
}

Real Complex::abs() const { return boost::multiprecision::sqrt(norm()); }

Complex Complex::inverse() const {
  Real n = norm();
  if (n == 0) throw ArgumentError("division by zero");
  return {re_ / n, -im_ / n};
}

Complex Complex::pow(const mpz_class& exponent) const {
  Complex base = exponent < 0 ? inverse() : *this;
  mpz_class e = exponent < 0 ? mpz_class(-exponent) : exponent;
  Complex result(1);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) { return *this *= o.inverse(); }

std::string Complex::re_string(unsigned digits) const { return format_real(re_, digits); }
std::string Complex::im_string(unsigned digits) const { return format_real(im_, digits); }

std::string Complex::to_string(unsigned digits) const {
  std::string out = re_string(digits);
  if (im_ == 0) return out;
  std::string im = im_string(digits);
  if (im.front() == '-') return out + " - " + im.substr(1) + "i";
  return out + " + " + im + "i";
}

bool approx_equal(const Complex& a, const Complex& b, double tol) { return (a - b).abs() <= tol; }

bool is_zero(const Complex& a, double zero_tol) { return a.abs() < zero_tol; }

std::string format_real(const Real& x, unsigned digits) {
  if (digits == 0) digits = working_precision();
  if (x == 0) return "0";
  std::string s = x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
  return s == "-0" ? "0" : s;
}

namespace {

mpz_class floor_to_integer(const Real& x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDD);
  return z;
}

Real to_real(const mpq_class& q) { return Complex::from_rational(q).re(); }

}  // namespace

mpq_class best_rational(const Real& x, const mpz_class& max_denominator) {
  if (max_denominator < 1) throw ArgumentError("max_denominator must be positive");
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Real y = x;
  // Enough terms to exhaust any denominator below 2^4096.
  for (int step = 0; step < 6000; ++step) {
    mpz_class a = floor_to_integer(y);
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > max_denominator) {
      mpz_class k = (max_denominator - q0) / q1;
      mpq_class semi(p0 + k * p1, q0 + k * q1);
      mpq_class conv(p1, q1);
      semi.canonicalize();
      conv.canonicalize();
      using boost::multiprecision::abs;
      return abs(to_real(semi) - x) < abs(to_real(conv) - x) ? semi : conv;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Real frac = y - Real(a.get_str());
    if (frac == 0) break;
    y = 1 / frac;
  }
  mpq_class out(p1, q1);
  out.canonicalize();
  return out;
}

}  // namespace fusioninv
