#include "multireg/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace multireg {

bool RowEchelon::add_row(std::vector<std::uint32_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  if (full()) {
    // rank cannot grow further; skip the elimination work
    return false;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint32_t c = row[pivots_[i]];
    if (c == 0) continue;
    const auto& piv = rows_[i];
    std::uint64_t cc = field_.neg(c);
    for (std::size_t j = pivots_[i]; j < cols_; ++j) {
      if (piv[j] != 0) {
        row[j] = static_cast<std::uint32_t>(
            (row[j] + cc * piv[j]) % field_.p());
      }
    }
  }
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (row[j] != 0) {
      lead = j;
      break;
    }
  }
  if (lead == cols_) return false;
  std::uint32_t inv = field_.inv(row[lead]);
  for (std::size_t j = lead; j < cols_; ++j) {
    if (row[j] != 0) row[j] = field_.mul(row[j], inv);
  }
  // keep rows ordered by pivot column so reduction scans stay one-pass
  std::size_t pos = rows_.size();
  while (pos > 0 && pivots_[pos - 1] > lead) --pos;
  rows_.insert(rows_.begin() + pos, std::move(row));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

std::vector<std::uint32_t> RowEchelon::residual(
    std::vector<std::uint32_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("row width mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint32_t c = v[pivots_[i]];
    if (c == 0) continue;
    std::uint64_t cc = field_.neg(c);
    const auto& piv = rows_[i];
    for (std::size_t j = pivots_[i]; j < cols_; ++j) {
      if (piv[j] != 0) {
        v[j] =
            static_cast<std::uint32_t>((v[j] + cc * piv[j]) % field_.p());
      }
    }
  }
  return v;
}

std::size_t rank_of(const std::vector<std::vector<std::uint32_t>>& rows,
                    std::size_t cols, const PrimeField& field) {
  RowEchelon ech(field, cols);
  for (const auto& r : rows) {
    ech.add_row(r);
    if (ech.full()) break;
  }
  return ech.rank();
}

std::vector<std::vector<std::uint32_t>> kernel_basis(
    const std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols,
    const PrimeField& field) {
  // reduced row echelon form, then read the kernel off the free columns
  std::vector<std::vector<std::uint32_t>> m = rows;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    std::uint32_t inv = field.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = field.mul(m[r][j], inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t cc = field.neg(m[i][c]);
      for (std::size_t j = c; j < cols; ++j) {
        if (m[r][j] != 0) {
          m[i][j] = static_cast<std::uint32_t>(
              (m[i][j] + cc * m[r][j]) % field.p());
        }
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = field.neg(m[i][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace multireg
