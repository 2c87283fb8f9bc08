#pragma once

// GF(2) incidence matrices and their kernels. Rows are rays, columns are
// bases; a column subset lies in the kernel exactly when every ray is
// covered an even number of times.

#include <vector>

#include "ks/bitset.hpp"

namespace ks {

class IncidenceMatrixGF2 {
public:
  IncidenceMatrixGF2(int rows, int cols);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  void set(int row, int col);
  bool get(int row, int col) const { return rows_[row].test(col); }
  const BasisSet &row(int r) const { return rows_[r]; }
  int column_weight(int col) const;

  /// Rows hit an odd number of times by the column subset.
  RayMask parity(const BasisSet &columns) const;
  int rank() const;

private:
  int cols_;
  std::vector<BasisSet> rows_;
};

struct KernelBasis {
  int columns = 0;
  std::vector<BasisSet> vectors;
  int dimension() const { return static_cast<int>(vectors.size()); }
};

/// Nullspace of the column-subset -> row-parity map by Gauss-Jordan
/// elimination; one basis vector per free column.
KernelBasis kernel_basis(const IncidenceMatrixGF2 &m);

} // namespace ks
