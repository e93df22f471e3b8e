#include "shapecone/matrices.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace shapecone {

namespace {

constexpr std::array<std::string_view, 6> kMatrixNames = {
    "M", "Minv", "N", "Ninv", "Z", "Zinv"};

Rational modal_value(const ShapeVector& sums) {
  std::map<Rational, std::size_t> counts;
  for (const auto& s : sums) ++counts[s];
  std::size_t best = 0;
  for (const auto& [value, count] : counts) best = std::max(best, count);
  if (auto zero = counts.find(Rational()); zero != counts.end() &&
                                           zero->second == best) {
    return Rational();
  }
  for (const auto& s : sums) {
    if (counts[s] == best) return s;
  }
  return Rational();
}

std::vector<std::size_t> deviating(const ShapeVector& sums,
                                   const Rational& modal) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] != modal) out.push_back(i + 1);
  }
  return out;
}

[[noreturn]] void violation(std::string_view name, std::size_t n,
                            std::string_view what) {
  throw StructuralViolation(std::string(name) + " for n=" + std::to_string(n) +
                            ": " + std::string(what));
}

}  // namespace

bool StructureReport::almost_diagonal() const {
  if (diagonals.empty()) return true;
  return diagonals.back() - diagonals.front() <= 2;
}

bool StructureReport::constant_sums_but_one() const {
  return exceptional_rows.size() <= 1 && exceptional_columns.size() <= 1;
}

StructureReport structure_report(const RMatrix& a) {
  if (!a.square()) throw DimensionMismatch(a.rows(), a.cols());
  const std::size_t n = a.rows();
  StructureReport r;
  r.column_sums.assign(n, Rational());
  r.row_sums.assign(n, Rational());
  bool any_nonzero = false;
  std::vector<bool> on_diagonal(n == 0 ? 0 : 2 * n - 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a(i, j);
      if (x != a(n - 1 - i, n - 1 - j)) r.is_centrally_symmetric = false;
      if (x.is_zero()) continue;
      r.row_sums[i] += x;
      r.column_sums[j] += x;
      const long offset = static_cast<long>(j) - static_cast<long>(i);
      on_diagonal[static_cast<std::size_t>(offset + static_cast<long>(n) - 1)] = true;
      if (!any_nonzero) {
        r.band_lower = -offset;
        r.band_upper = offset;
        any_nonzero = true;
      } else {
        r.band_lower = std::max(r.band_lower, -offset);
        r.band_upper = std::max(r.band_upper, offset);
      }
    }
  }
  for (std::size_t k = 0; k < on_diagonal.size(); ++k) {
    if (on_diagonal[k]) r.diagonals.push_back(static_cast<long>(k) - static_cast<long>(n) + 1);
  }
  r.modal_column_sum = modal_value(r.column_sums);
  r.modal_row_sum = modal_value(r.row_sums);
  r.exceptional_columns = deviating(r.column_sums, r.modal_column_sum);
  r.exceptional_rows = deviating(r.row_sums, r.modal_row_sum);
  return r;
}

RMatrix matrix_M(std::size_t n) {
  return generator_matrix(ConeKind::positive_concave, n);
}

RMatrix matrix_M_inverse(std::size_t n) {
  if (n == 0) throw IndexOutOfRange("dimension must be at least 1");
  RMatrix m(n, n);
  m(0, 0) = 1;
  m(n - 1, n - 1) = 1;
  for (std::size_t j = 2; j < n; ++j) {
    const Rational diag(static_cast<long long>(2 * (j - 1) * (n - j)),
                        static_cast<long long>(n - 1));
    m(j - 1, j - 1) = diag;
    m(j - 2, j - 1) = Rational(-1, 2) * diag;
    m(j, j - 1) = Rational(-1, 2) * diag;
  }
  return m;
}

RMatrix matrix_N(std::size_t n) {
  return generator_matrix(ConeKind::increasing_convex, n);
}

RMatrix matrix_N_inverse(std::size_t n) {
  const RMatrix forward = matrix_N(n);
  RMatrix inv = invert(forward);
  for (std::size_t i = 0; i < n; ++i) {
    if (inv(i, i) != Rational(1) / forward(i, i)) {
      violation("N^-1", n, "diagonal entry is not the reciprocal of N's");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const bool in_band = j >= i && j - i <= 2;
      if (!in_band && !inv(i, j).is_zero()) {
        violation("N^-1", n, "nonzero entry outside 0 <= j-i <= 2");
      }
    }
  }
  const StructureReport r = structure_report(inv);
  for (std::size_t j = 1; j < n; ++j) {
    if (!r.column_sums[j].is_zero()) violation("N^-1", n, "nonzero column sum");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!r.row_sums[i].is_zero()) violation("N^-1", n, "nonzero row sum");
  }
  return inv;
}

RMatrix matrix_Z(std::size_t n) {
  return generator_matrix(ConeKind::positive_increasing, n);
}

RMatrix matrix_Z_inverse(std::size_t n) {
  RMatrix inv = invert(matrix_Z(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool in_band = j == i || j == i + 1;
      if (!in_band && !inv(i, j).is_zero()) {
        violation("Z^-1", n, "nonzero entry outside j-i in {0,1}");
      }
    }
  }
  const StructureReport r = structure_report(inv);
  for (std::size_t j = 1; j < n; ++j) {
    if (!r.column_sums[j].is_zero()) violation("Z^-1", n, "nonzero column sum");
  }
  return inv;
}

RMatrix generator_matrix(ConeKind kind, std::size_t n) {
  if (!simplicial(kind) && n > 2) {
    throw Error(std::string(to_string(kind)) + " is not simplicial for n=" +
                std::to_string(n));
  }
  return generators(kind, n).matrix();
}

std::optional<MatrixId> parse_matrix_id(std::string_view name) {
  for (std::size_t i = 0; i < kMatrixNames.size(); ++i) {
    if (kMatrixNames[i] == name) return static_cast<MatrixId>(i);
  }
  return std::nullopt;
}

std::string_view to_string(MatrixId id) {
  return kMatrixNames[static_cast<std::size_t>(id)];
}

RMatrix named_matrix(MatrixId id, std::size_t n) {
  switch (id) {
    case MatrixId::M: return matrix_M(n);
    case MatrixId::Minv: return matrix_M_inverse(n);
    case MatrixId::N: return matrix_N(n);
    case MatrixId::Ninv: return matrix_N_inverse(n);
    case MatrixId::Z: return matrix_Z(n);
    case MatrixId::Zinv: return matrix_Z_inverse(n);
  }
  return {};
}

}  // namespace shapecone
