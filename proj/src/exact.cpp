#include "ks/exact.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ks {

std::string unit_token(GaussInt z) {
  if (z.is_zero()) return "0";
  if (z == GaussInt{1, 0}) return "1";
  if (z == GaussInt{-1, 0}) return "-1";
  if (z == GaussInt{0, 1}) return "i";
  if (z == GaussInt{0, -1}) return "-i";
  std::ostringstream os;
  os << "component " << z << " is not in {0, +-1, +-i}";
  throw std::invalid_argument(os.str());
}

GaussInt parse_unit_token(const std::string &token) {
  if (token == "0") return {0, 0};
  if (token == "1" || token == "+1") return {1, 0};
  if (token == "-1") return {-1, 0};
  if (token == "i" || token == "+i") return {0, 1};
  if (token == "-i") return {0, -1};
  throw std::invalid_argument("bad ray component token '" + token + "'");
}

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = reduce(num, den);
}

Rational Rational::reduce(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational operator+(const Rational &a, const Rational &b) {
  if (a.den_ == b.den_) return Rational::reduce(__int128(a.num_) + b.num_, a.den_);
  return Rational::reduce(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                          __int128(a.den_) * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }

Rational operator*(const Rational &a, const Rational &b) {
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  return Rational::reduce(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational::reduce(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
}

ExactScalar ExactScalar::inv_sqrt(std::int64_t n) {
  switch (n) {
  case 1: return ExactScalar(GaussInt{1});
  case 2: return {0, 0, Rational(1, 2), 0};
  case 4: return {Rational(1, 2), 0, 0, 0};
  default: throw std::invalid_argument("inv_sqrt supports norms 1, 2, 4 only");
  }
}

bool ExactScalar::is_zero() const {
  return a_re_.is_zero() && a_im_.is_zero() && b_re_.is_zero() && b_im_.is_zero();
}

bool ExactScalar::is_gauss_int() const {
  return b_re_.is_zero() && b_im_.is_zero() && a_re_.den() == 1 && a_im_.den() == 1;
}

bool ExactScalar::is_gauss_unit() const { return is_gauss_int() && to_gauss().is_unit(); }

GaussInt ExactScalar::to_gauss() const { return {a_re_.num(), a_im_.num()}; }

ExactScalar operator+(const ExactScalar &x, const ExactScalar &y) {
  return {x.a_re_ + y.a_re_, x.a_im_ + y.a_im_, x.b_re_ + y.b_re_, x.b_im_ + y.b_im_};
}

ExactScalar operator-(const ExactScalar &x, const ExactScalar &y) { return x + (-y); }

namespace {

struct GaussQ {
  Rational re, im;
};

GaussQ mul(const GaussQ &p, const GaussQ &q) {
  return {p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re};
}

GaussQ add(const GaussQ &p, const GaussQ &q) { return {p.re + q.re, p.im + q.im}; }

} // namespace

ExactScalar operator*(const ExactScalar &x, const ExactScalar &y) {
  // (A + B s)(C + D s) = (AC + 2BD) + (AD + BC) s, with s = sqrt2.
  GaussQ A{x.a_re_, x.a_im_}, B{x.b_re_, x.b_im_};
  GaussQ C{y.a_re_, y.a_im_}, D{y.b_re_, y.b_im_};
  GaussQ bd = mul(B, D);
  GaussQ rational_part = add(mul(A, C), {bd.re * Rational(2), bd.im * Rational(2)});
  GaussQ sqrt2_part = add(mul(A, D), mul(B, C));
  return {rational_part.re, rational_part.im, sqrt2_part.re, sqrt2_part.im};
}

ExactScalar operator/(const ExactScalar &x, const ExactScalar &y) {
  if (y.is_zero()) throw std::domain_error("ExactScalar division by zero");
  // y * conj(y) = p + q sqrt2 is real; multiply through by p - q sqrt2.
  ExactScalar yc = y.conj();
  ExactScalar n = y * yc;
  ExactScalar galois(n.a_re_, 0, -n.b_re_, 0);
  Rational denom = n.a_re_ * n.a_re_ - Rational(2) * n.b_re_ * n.b_re_;
  ExactScalar num = x * yc * galois;
  return {num.a_re_ / denom, num.a_im_ / denom, num.b_re_ / denom, num.b_im_ / denom};
}

std::string ExactScalar::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream &operator<<(std::ostream &os, GaussInt z) {
  return os << '(' << z.re << (z.im < 0 ? "" : "+") << z.im << "i)";
}

namespace {
void put(std::ostream &os, const Rational &r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
}
} // namespace

std::ostream &operator<<(std::ostream &os, const ExactScalar &x) {
  os << '[';
  put(os, x.a_re());
  os << " + ";
  put(os, x.a_im());
  os << "i + (";
  put(os, x.b_re());
  os << " + ";
  put(os, x.b_im());
  os << "i)sqrt2]";
  return os;
}

} // namespace ks
