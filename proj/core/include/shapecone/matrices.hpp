#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "shapecone/exactnum.hpp"
#include "shapecone/generators.hpp"

namespace shapecone {

/// Exact structural summary of a square matrix. Indices are 1-based.
struct StructureReport {
  bool is_centrally_symmetric = true;
  /// max(i − j) and max(j − i) over nonzero entries (0 for a zero matrix).
  long band_lower = 0;
  long band_upper = 0;
  /// Offsets j − i that carry at least one nonzero entry, ascending.
  std::vector<long> diagonals;
  ShapeVector column_sums;
  ShapeVector row_sums;
  /// Most frequent column / row sum. On a tie, 0 wins if it is among the
  /// most frequent values; otherwise the earliest such value.
  Rational modal_column_sum;
  Rational modal_row_sum;
  std::vector<std::size_t> exceptional_columns;
  std::vector<std::size_t> exceptional_rows;

  /// At most three adjacent diagonals carry nonzeros.
  bool almost_diagonal() const;
  /// Row sums constant except for at most one row, and likewise columns.
  bool constant_sums_but_one() const;
};

StructureReport structure_report(const RMatrix& a);

/// Rows c⁽¹⁾..c⁽ⁿ⁾.
RMatrix matrix_M(std::size_t n);
/// Tridiagonal closed form: diagonal 1 at the ends and 2(i−1)(n−i)/(n−1)
/// inside; for 1 < j < n the neighbours above and below (j, j) are minus
/// half the diagonal entry.
RMatrix matrix_M_inverse(std::size_t n);
/// Rows 𝟏, a⁽¹⁾..a⁽ⁿ⁻¹⁾.
RMatrix matrix_N(std::size_t n);
/// Exact inverse of N, checked against the known structure (diagonal
/// reciprocals, band 0 ≤ j−i ≤ 2, zero row and column sums except the
/// first column and last row). Throws StructuralViolation otherwise.
RMatrix matrix_N_inverse(std::size_t n);
/// Rows are the step vectors.
RMatrix matrix_Z(std::size_t n);
/// Exact inverse of Z, checked to be upper bidiagonal with zero column sums
/// except the first. Throws StructuralViolation otherwise.
RMatrix matrix_Z_inverse(std::size_t n);

/// Generator matrix of a simplicial kind (rows in generators() order).
RMatrix generator_matrix(ConeKind kind, std::size_t n);

enum class MatrixId { M, Minv, N, Ninv, Z, Zinv };

std::optional<MatrixId> parse_matrix_id(std::string_view name);
std::string_view to_string(MatrixId id);
RMatrix named_matrix(MatrixId id, std::size_t n);

}  // namespace shapecone
