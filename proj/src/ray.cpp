#include "ks/ray.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ks {

Ray make_canonical_unchecked(const std::array<GaussInt, kDim> &v) {
  Ray r;
  r.c_ = v;
  return r;
}

std::int64_t Ray::norm2() const {
  std::int64_t n = 0;
  for (auto z : c_) n += z.norm();
  return n;
}

bool Ray::is_real() const {
  for (auto z : c_)
    if (z.im != 0) return false;
  return true;
}

std::string Ray::str() const {
  std::string out;
  for (int k = 0; k < kDim; ++k) {
    if (k) out += ',';
    out += unit_token(c_[k]);
  }
  return out;
}

std::string Ray::compact() const {
  std::string out;
  for (auto z : c_) out += unit_token(z);
  return out;
}

namespace {
int code(GaussInt z) {
  // 0 < 1 < -1 < i < -i, the order used for listing.
  if (z.is_zero()) return 0;
  if (z == GaussInt{1}) return 1;
  if (z == GaussInt{-1}) return 2;
  if (z == GaussInt{0, 1}) return 3;
  return 4;
}
} // namespace

std::strong_ordering operator<=>(const Ray &a, const Ray &b) {
  for (int k = 0; k < kDim; ++k) {
    if (auto c = code(a.c_[k]) <=> code(b.c_[k]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

GaussInt inner_product(const Ray &r, const Ray &s) {
  GaussInt acc;
  for (int k = 0; k < kDim; ++k) acc += r[k].conj() * s[k];
  return acc;
}

bool is_orthogonal(const Ray &r, const Ray &s) { return inner_product(r, s).is_zero(); }

bool is_unbiased(const Ray &r, const Ray &s) {
  return inner_product(r, s).norm() * 4 == r.norm2() * s.norm2();
}

Ray canonicalize(const std::array<ExactScalar, kDim> &v) {
  int lead = -1;
  for (int k = 0; k < kDim; ++k) {
    if (!v[k].is_zero()) {
      lead = k;
      break;
    }
  }
  if (lead < 0) throw std::invalid_argument("cannot canonicalize the zero vector");
  std::array<GaussInt, kDim> out{};
  for (int k = 0; k < kDim; ++k) {
    if (v[k].is_zero()) continue;
    ExactScalar q = k == lead ? ExactScalar(GaussInt{1}) : v[k] / v[lead];
    if (!q.is_gauss_unit()) {
      std::ostringstream os;
      os << "vector is not projectively a {0,+-1,+-i} ray (component " << k << " ratio "
         << q << ")";
      throw std::invalid_argument(os.str());
    }
    out[k] = q.to_gauss();
  }
  return make_canonical_unchecked(out);
}

Ray canonicalize(const std::array<GaussInt, kDim> &v) {
  int lead = -1;
  for (int k = 0; k < kDim; ++k) {
    if (!v[k].is_zero()) {
      lead = k;
      break;
    }
  }
  if (lead < 0) throw std::invalid_argument("cannot canonicalize the zero vector");
  const GaussInt f = v[lead];
  const std::int64_t n = f.norm();
  std::array<GaussInt, kDim> out{};
  for (int k = 0; k < kDim; ++k) {
    if (v[k].is_zero()) continue;
    // v_k / f = v_k conj(f) / |f|^2 must be a unit.
    GaussInt p = v[k] * f.conj();
    if (p.re % n != 0 || p.im % n != 0 || !GaussInt(p.re / n, p.im / n).is_unit()) {
      std::ostringstream os;
      os << "vector is not projectively a {0,+-1,+-i} ray (component " << k << " = " << v[k]
         << ")";
      throw std::invalid_argument(os.str());
    }
    out[k] = {p.re / n, p.im / n};
  }
  return make_canonical_unchecked(out);
}

namespace {
GaussInt det3(GaussInt a, GaussInt b, GaussInt c, GaussInt d, GaussInt e, GaussInt f,
              GaussInt g, GaussInt h, GaussInt i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}
} // namespace

bool is_dependent_triple(const Ray &r, const Ray &s, const Ray &t) {
  // All four 3x3 minors of the 3x4 matrix vanish.
  for (int skip = 0; skip < kDim; ++skip) {
    int cols[3];
    for (int k = 0, j = 0; k < kDim; ++k)
      if (k != skip) cols[j++] = k;
    GaussInt m = det3(r[cols[0]], r[cols[1]], r[cols[2]], s[cols[0]], s[cols[1]], s[cols[2]],
                      t[cols[0]], t[cols[1]], t[cols[2]]);
    if (!m.is_zero()) return false;
  }
  return true;
}

Ray parse_ray(const std::string &text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == ',') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  tokens.push_back(cur);
  if (tokens.size() != kDim)
    throw std::invalid_argument("ray text must have 4 comma-separated components: '" + text + "'");
  std::array<GaussInt, kDim> v{};
  for (int k = 0; k < kDim; ++k) v[k] = parse_unit_token(tokens[k]);
  return canonicalize(v);
}

} // namespace ks
