#pragma once

// Exact scalars for ray arithmetic: Gaussian integers for ray components and
// the field Q(i, sqrt2) for normalized unitaries.

#include <cstdint>
#include <ostream>
#include <string>

namespace ks {

struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  constexpr std::int64_t norm() const { return re * re + im * im; }
  constexpr GaussInt conj() const { return {re, -im}; }
  constexpr bool is_unit() const { return norm() == 1; }

  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt &operator+=(GaussInt o) { return *this = *this + o; }
  GaussInt &operator-=(GaussInt o) { return *this = *this - o; }
  GaussInt &operator*=(GaussInt o) { return *this = *this * o; }
  friend constexpr bool operator==(GaussInt, GaussInt) = default;
};

inline constexpr GaussInt kI{0, 1};

/// Component token used by the text form of rays: 0, 1, -1, i, -i.
/// Throws std::invalid_argument for anything that is not a unit or zero.
std::string unit_token(GaussInt z);
GaussInt parse_unit_token(const std::string &token);

class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a, const Rational &b);
  friend Rational operator*(const Rational &a, const Rational &b);
  friend Rational operator/(const Rational &a, const Rational &b);
  friend Rational operator-(const Rational &a) { return Rational(-a.num_, a.den_); }
  friend bool operator==(const Rational &, const Rational &) = default;

private:
  static Rational reduce(__int128 num, __int128 den);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Element (a_re + a_im i) + (b_re + b_im i) sqrt2 of Q(i, sqrt2).
class ExactScalar {
public:
  ExactScalar() = default;
  ExactScalar(GaussInt z) : a_re_(z.re), a_im_(z.im) {}
  ExactScalar(Rational a_re, Rational a_im, Rational b_re, Rational b_im)
      : a_re_(a_re), a_im_(a_im), b_re_(b_re), b_im_(b_im) {}

  static ExactScalar sqrt2() { return {0, 0, 1, 0}; }
  /// 1 / sqrt(n) for n in {1, 2, 4}; the norms that occur for rays here.
  static ExactScalar inv_sqrt(std::int64_t n);

  bool is_zero() const;
  /// True when the value is one of 1, -1, i, -i.
  bool is_gauss_unit() const;
  bool is_gauss_int() const;
  /// Valid only when is_gauss_int().
  GaussInt to_gauss() const;

  ExactScalar conj() const { return {a_re_, -a_im_, b_re_, -b_im_}; }

  friend ExactScalar operator+(const ExactScalar &x, const ExactScalar &y);
  friend ExactScalar operator-(const ExactScalar &x, const ExactScalar &y);
  friend ExactScalar operator-(const ExactScalar &x) { return {-x.a_re_, -x.a_im_, -x.b_re_, -x.b_im_}; }
  friend ExactScalar operator*(const ExactScalar &x, const ExactScalar &y);
  /// Throws std::domain_error on division by zero.
  friend ExactScalar operator/(const ExactScalar &x, const ExactScalar &y);
  friend bool operator==(const ExactScalar &, const ExactScalar &) = default;

  const Rational &a_re() const { return a_re_; }
  const Rational &a_im() const { return a_im_; }
  const Rational &b_re() const { return b_re_; }
  const Rational &b_im() const { return b_im_; }

  std::string str() const;

private:
  Rational a_re_, a_im_, b_re_, b_im_;
};

std::ostream &operator<<(std::ostream &os, GaussInt z);
std::ostream &operator<<(std::ostream &os, const ExactScalar &x);

} // namespace ks
