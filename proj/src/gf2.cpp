#include "ks/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace ks {

IncidenceMatrixGF2::IncidenceMatrixGF2(int rows, int cols) : cols_(cols), rows_(rows) {
  if (cols < 0 || cols > BasisSet::kCapacity)
    throw std::invalid_argument("GF(2) matrix supports at most 128 columns");
  if (rows > kMaxRays) throw std::invalid_argument("GF(2) matrix supports at most 64 rows");
}

void IncidenceMatrixGF2::set(int row, int col) {
  if (col < 0 || col >= cols_) throw std::out_of_range("column out of range");
  rows_.at(row).set(col);
}

int IncidenceMatrixGF2::column_weight(int col) const {
  int w = 0;
  for (const auto &r : rows_) w += r.test(col) ? 1 : 0;
  return w;
}

RayMask IncidenceMatrixGF2::parity(const BasisSet &columns) const {
  RayMask out = 0;
  for (int r = 0; r < rows(); ++r)
    if ((rows_[r] & columns).count() & 1) out |= RayMask{1} << r;
  return out;
}

namespace {

struct Echelon {
  std::vector<BasisSet> rows;  // reduced, one per pivot
  std::vector<int> pivots;     // pivot column of each row
};

Echelon reduce(std::vector<BasisSet> rows, int cols) {
  Echelon e;
  int next = 0;
  for (int c = 0; c < cols && next < static_cast<int>(rows.size()); ++c) {
    int pick = -1;
    for (int r = next; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r].test(c)) {
        pick = r;
        break;
      }
    }
    if (pick < 0) continue;
    std::swap(rows[next], rows[pick]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != next && rows[r].test(c)) rows[r] ^= rows[next];
    e.pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

} // namespace

int IncidenceMatrixGF2::rank() const { return static_cast<int>(reduce(rows_, cols_).pivots.size()); }

KernelBasis kernel_basis(const IncidenceMatrixGF2 &m) {
  std::vector<BasisSet> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const Echelon e = reduce(std::move(rows), m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;

  KernelBasis k;
  k.columns = m.cols();
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BasisSet v;
    v.set(free);
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if (e.rows[i].test(free)) v.set(e.pivots[i]);
    k.vectors.push_back(v);
  }
  return k;
}

} // namespace ks
