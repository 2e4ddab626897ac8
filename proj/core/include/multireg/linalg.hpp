#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "multireg/fp.hpp"

namespace multireg {

/// Incremental row-echelon form over F_p. Rows are fed one at a time;
/// the structure keeps a monic echelonized copy of the independent ones,
/// so rank growth is observable after each insertion. Entries are dense.
class RowEchelon {
 public:
  RowEchelon(const PrimeField& field, std::size_t cols)
      : field_(field), cols_(cols) {}

  /// Reduces `row` against the stored pivots and absorbs it if independent.
  /// Returns true when the rank grew.
  bool add_row(std::vector<std::uint32_t> row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }

  /// Reduces a copy of `v` against the pivots; the result is zero iff
  /// v lies in the row span.
  std::vector<std::uint32_t> residual(std::vector<std::uint32_t> v) const;

 private:
  PrimeField field_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;  // monic, echelonized
  std::vector<std::size_t> pivots_;               // pivot column per row
};

/// Rank of a dense row-major matrix.
std::size_t rank_of(const std::vector<std::vector<std::uint32_t>>& rows,
                    std::size_t cols, const PrimeField& field);

/// Basis of the right kernel {x : A x = 0} of a dense rows x cols matrix.
std::vector<std::vector<std::uint32_t>> kernel_basis(
    const std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols,
    const PrimeField& field);

}  // namespace multireg
