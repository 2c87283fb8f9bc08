#pragma once

// Projective 4-vectors with components in {0, +-1, +-i}.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "ks/exact.hpp"

namespace ks {

inline constexpr int kDim = 4;

/// A ray in canonical form: components in {0, +-1, +-i}, first nonzero
/// component equal to +1. Construct through canonicalize() or parse_ray().
class Ray {
public:
  Ray() = default;

  const std::array<GaussInt, kDim> &components() const { return c_; }
  GaussInt operator[](int k) const { return c_[k]; }

  /// Squared norm; 1, 2 or 4 for a canonical ray (number of nonzero entries).
  std::int64_t norm2() const;
  bool is_real() const;

  /// Text form "1,i,i,-1".
  std::string str() const;
  /// Compact table form "1ii-1", as in printed ray listings.
  std::string compact() const;

  friend bool operator==(const Ray &, const Ray &) = default;
  friend std::strong_ordering operator<=>(const Ray &a, const Ray &b);

private:
  friend Ray make_canonical_unchecked(const std::array<GaussInt, kDim> &v);
  std::array<GaussInt, kDim> c_{};
};

/// Hermitian product sum_k conj(r_k) s_k. Exact; rays have Gaussian-integer
/// components so the value is a Gaussian integer.
GaussInt inner_product(const Ray &r, const Ray &s);

bool is_orthogonal(const Ray &r, const Ray &s);
/// |<r,s>|^2 * 4 == |r|^2 |s|^2, i.e. normalized squared overlap 1/4.
bool is_unbiased(const Ray &r, const Ray &s);

/// Projective representative with first nonzero component +1. Throws
/// std::invalid_argument when v is zero or not projectively equal to a
/// vector over {0, +-1, +-i}.
Ray canonicalize(const std::array<ExactScalar, kDim> &v);
Ray canonicalize(const std::array<GaussInt, kDim> &v);

/// Rank of the 3x4 component matrix is at most 2.
bool is_dependent_triple(const Ray &r, const Ray &s, const Ray &t);

/// Parses "1,i,i,-1" (whitespace tolerated). Result is canonicalized.
Ray parse_ray(const std::string &text);

} // namespace ks
