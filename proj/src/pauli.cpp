#include "ks/pauli.hpp"

#include <algorithm>
#include <stdexcept>

namespace ks {

namespace {

using Mat2 = std::array<std::array<GaussInt, 2>, 2>;

Mat2 single(Pauli p) {
  switch (p) {
  case Pauli::I: return {{{GaussInt{1}, GaussInt{0}}, {GaussInt{0}, GaussInt{1}}}};
  case Pauli::X: return {{{GaussInt{0}, GaussInt{1}}, {GaussInt{1}, GaussInt{0}}}};
  case Pauli::Y: return {{{GaussInt{0}, GaussInt{0, -1}}, {GaussInt{0, 1}, GaussInt{0}}}};
  case Pauli::Z: return {{{GaussInt{1}, GaussInt{0}}, {GaussInt{0}, GaussInt{-1}}}};
  }
  throw std::logic_error("bad Pauli");
}

char letter(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

bool mat_equal(const Mat4 &a, const Mat4 &b) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!(a[r][c] == b[r][c])) return false;
  return true;
}

Mat4 scaled(const Mat4 &m, GaussInt s) {
  Mat4 out = m;
  for (auto &row : out)
    for (auto &z : row) z *= s;
  return out;
}

Mat4 add(const Mat4 &a, const Mat4 &b) {
  Mat4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[r][c] = a[r][c] + b[r][c];
  return out;
}

// Unsigned Pauli P and sign s with a*b == s*P (a, b commuting, so s = +-1).
PauliObservable product(const PauliObservable &a, const PauliObservable &b) {
  Mat4 ab = mat_mul(a.matrix(), b.matrix());
  for (int f = 0; f < 4; ++f) {
    for (int g = 0; g < 4; ++g) {
      PauliObservable p{static_cast<Pauli>(f), static_cast<Pauli>(g), 1};
      Mat4 pm = p.matrix();
      if (mat_equal(ab, pm)) return p;
      if (mat_equal(ab, scaled(pm, GaussInt{-1}))) return {p.first, p.second, -1};
    }
  }
  throw std::logic_error("product of commuting Paulis is not a signed Pauli");
}

int observable_index(const PauliObservable &p) {
  const auto &obs = enumerate_observables();
  auto it = std::find(obs.begin(), obs.end(), p.unsigned_part());
  if (it == obs.end()) throw std::logic_error("unknown observable " + p.name());
  return static_cast<int>(it - obs.begin());
}

// Leading two members of each triad; the third member is their product.
constexpr std::array<std::array<std::array<Pauli, 2>, 2>, 15> kTriadLeads = {{
    {{{Pauli::Z, Pauli::I}, {Pauli::I, Pauli::Z}}},
    {{{Pauli::X, Pauli::I}, {Pauli::I, Pauli::X}}},
    {{{Pauli::Y, Pauli::I}, {Pauli::I, Pauli::Y}}},
    {{{Pauli::Z, Pauli::I}, {Pauli::I, Pauli::X}}},
    {{{Pauli::X, Pauli::I}, {Pauli::I, Pauli::Y}}},
    {{{Pauli::Y, Pauli::I}, {Pauli::I, Pauli::Z}}},
    {{{Pauli::Z, Pauli::I}, {Pauli::I, Pauli::Y}}},
    {{{Pauli::X, Pauli::I}, {Pauli::I, Pauli::Z}}},
    {{{Pauli::Y, Pauli::I}, {Pauli::I, Pauli::X}}},
    {{{Pauli::Z, Pauli::X}, {Pauli::X, Pauli::Z}}},
    {{{Pauli::X, Pauli::Y}, {Pauli::Y, Pauli::X}}},
    {{{Pauli::Y, Pauli::Z}, {Pauli::Z, Pauli::Y}}},
    {{{Pauli::Z, Pauli::Z}, {Pauli::X, Pauli::X}}},
    {{{Pauli::Z, Pauli::X}, {Pauli::X, Pauli::Y}}},
    {{{Pauli::Z, Pauli::Y}, {Pauli::X, Pauli::Z}}},
}};

} // namespace

std::string PauliObservable::name() const {
  std::string out = sign < 0 ? "-" : "";
  if (first != Pauli::I) {
    out += letter(first);
    out += '1';
  }
  if (second != Pauli::I) {
    out += letter(second);
    out += '2';
  }
  if (is_identity()) out += "I";
  return out;
}

Mat4 PauliObservable::matrix() const {
  Mat2 a = single(first), b = single(second);
  Mat4 m{};
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 2; ++r2)
      for (int c1 = 0; c1 < 2; ++c1)
        for (int c2 = 0; c2 < 2; ++c2) m[2 * r1 + r2][2 * c1 + c2] = a[r1][c1] * b[r2][c2];
  return sign < 0 ? scaled(m, GaussInt{-1}) : m;
}

Mat4 mat_mul(const Mat4 &a, const Mat4 &b) {
  Mat4 out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) out[r][c] += a[r][k] * b[k][c];
  return out;
}

Mat4 mat_identity() {
  Mat4 m{};
  for (int k = 0; k < 4; ++k) m[k][k] = GaussInt{1};
  return m;
}

bool commutes(const PauliObservable &a, const PauliObservable &b) {
  Mat4 ma = a.matrix(), mb = b.matrix();
  return mat_equal(mat_mul(ma, mb), mat_mul(mb, ma));
}

std::string Triad::name() const {
  return members[0].name() + ", " + members[1].name() + ", " + members[2].name();
}

bool Triad::contains_observable(int observable_id) const {
  return std::find(observable_ids.begin(), observable_ids.end(), observable_id) !=
         observable_ids.end();
}

const std::vector<Triad> &enumerate_triads() {
  static const std::vector<Triad> triads = [] {
    std::vector<Triad> out;
    for (const auto &lead : kTriadLeads) {
      PauliObservable a{lead[0][0], lead[0][1], 1};
      PauliObservable b{lead[1][0], lead[1][1], 1};
      if (!commutes(a, b)) throw std::logic_error("triad leads do not commute");
      Triad t;
      t.members = {a, b, product(a, b)};
      for (int k = 0; k < 3; ++k) t.observable_ids[k] = observable_index(t.members[k]);
      out.push_back(t);
    }
    return out;
  }();
  return triads;
}

const std::vector<PauliObservable> &enumerate_observables() {
  static const std::vector<PauliObservable> obs = [] {
    std::vector<PauliObservable> out;
    for (const auto &lead : kTriadLeads) {
      PauliObservable a{lead[0][0], lead[0][1], 1};
      PauliObservable b{lead[1][0], lead[1][1], 1};
      for (const auto &p : {a, b, product(a, b).unsigned_part()})
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
  }();
  return obs;
}

std::array<EigenRay, 4> triad_eigenbasis(const Triad &t) {
  static constexpr std::array<std::array<int, 2>, 4> kSignatures = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  const Mat4 id = mat_identity();
  const Mat4 a = t.members[0].matrix(), b = t.members[1].matrix();
  std::array<EigenRay, 4> out;
  for (int s = 0; s < 4; ++s) {
    auto [s1, s2] = kSignatures[s];
    Mat4 proj = mat_mul(add(id, scaled(a, GaussInt{s1})), add(id, scaled(b, GaussInt{s2})));
    bool found = false;
    for (int c = 0; c < 4 && !found; ++c) {
      std::array<GaussInt, 4> col{};
      bool nonzero = false;
      for (int r = 0; r < 4; ++r) {
        col[r] = proj[r][c];
        nonzero = nonzero || !col[r].is_zero();
      }
      if (!nonzero) continue;
      out[s] = {canonicalize(col), {s1, s2}};
      found = true;
    }
    if (!found) throw std::logic_error("empty joint eigenspace for triad " + t.name());
  }
  return out;
}

int shared_observables(const Triad &a, const Triad &b) {
  int n = 0;
  for (int id : a.observable_ids) n += b.contains_observable(id) ? 1 : 0;
  return n;
}

int observable_eigenvalue(const PauliObservable &p, const Ray &r) {
  const Mat4 m = p.matrix();
  bool plus = true, minus = true;
  for (int row = 0; row < 4; ++row) {
    GaussInt v;
    for (int k = 0; k < 4; ++k) v += m[row][k] * r[k];
    plus = plus && v == r[row];
    minus = minus && v == -r[row];
  }
  return plus ? 1 : minus ? -1 : 0;
}

bool eigenbases_unbiased(const Triad &a, const Triad &b) {
  auto ea = triad_eigenbasis(a), eb = triad_eigenbasis(b);
  for (const auto &x : ea)
    for (const auto &y : eb)
      if (!is_unbiased(x.ray, y.ray)) return false;
  return true;
}

const std::vector<std::array<int, 5>> &mub_partitions() {
  static const std::vector<std::array<int, 5>> rows = [] {
    const auto &triads = enumerate_triads();
    const int n = static_cast<int>(triads.size());
    std::vector<std::array<int, 5>> out;
    std::array<int, 5> cur{};
    // Depth-first over increasing triad indices with pairwise-disjoint
    // observables; five such triads cover all 15 observables.
    auto rec = [&](auto &&self, int depth, int start) -> void {
      if (depth == 5) {
        out.push_back(cur);
        return;
      }
      for (int t = start; t < n; ++t) {
        bool ok = true;
        for (int d = 0; d < depth && ok; ++d) ok = shared_observables(triads[cur[d]], triads[t]) == 0;
        if (!ok) continue;
        cur[depth] = t;
        self(self, depth + 1, t + 1);
      }
    };
    rec(rec, 0, 0);
    return out;
  }();
  return rows;
}

} // namespace ks
