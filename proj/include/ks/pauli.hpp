#pragma once

// Two-qubit Pauli observables, commuting triads, their eigenbases and the
// maximal sets of mutually unbiased triads.

#include <array>
#include <string>
#include <vector>

#include "ks/exact.hpp"
#include "ks/ray.hpp"

namespace ks {

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

using Mat4 = std::array<std::array<GaussInt, 4>, 4>;

struct PauliObservable {
  Pauli first = Pauli::I;
  Pauli second = Pauli::I;
  int sign = 1;

  bool is_identity() const { return first == Pauli::I && second == Pauli::I; }
  PauliObservable unsigned_part() const { return {first, second, 1}; }
  /// "Z1", "X2", "Y1Y2", "-Y1Z2".
  std::string name() const;
  Mat4 matrix() const;

  friend bool operator==(const PauliObservable &, const PauliObservable &) = default;
};

Mat4 mat_mul(const Mat4 &a, const Mat4 &b);
Mat4 mat_identity();
bool commutes(const PauliObservable &a, const PauliObservable &b);

struct Triad {
  std::array<PauliObservable, 3> members;
  /// Indices of the unsigned members in enumerate_observables() order.
  std::array<int, 3> observable_ids{};

  std::string name() const;
  bool contains_observable(int observable_id) const;
};

struct EigenSignature {
  int s1 = 1;
  int s2 = 1;
  int s3() const { return s1 * s2; }
};

struct EigenRay {
  Ray ray;
  EigenSignature signature;
};

/// The 15 unsigned nontrivial observables, in order of first appearance in
/// the triad listing: Z1, Z2, Z1Z2, X1, X2, X1X2, Y1, Y2, Y1Y2, Z1X2, ...
const std::vector<PauliObservable> &enumerate_observables();

/// The 15 commuting triads {A, B, +-AB} with signed product +I.
const std::vector<Triad> &enumerate_triads();

/// Simultaneous eigenrays of a triad, columns ordered by the (A, B)
/// signatures ++, +-, -+, --. Obtained by projecting with (I+s1 A)(I+s2 B).
std::array<EigenRay, 4> triad_eigenbasis(const Triad &t);

/// Every way of splitting the 15 triads' observables into 5 disjoint triads,
/// each row sorted and rows in lexicographic order of triad indices.
const std::vector<std::array<int, 5>> &mub_partitions();

/// Every normalized cross overlap between the two eigenbases has squared
/// modulus 1/4.
bool eigenbases_unbiased(const Triad &a, const Triad &b);

/// Number of observables two triads share.
int shared_observables(const Triad &a, const Triad &b);

/// +1 or -1 when r is an eigenvector of p, 0 otherwise.
int observable_eigenvalue(const PauliObservable &p, const Ray &r);

} // namespace ks
