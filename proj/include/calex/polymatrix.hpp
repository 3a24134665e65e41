#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "calex/error.hpp"
#include "calex/laurent.hpp"

namespace calex {

/// Matrix over Lambda. The column count is stored separately so that a
/// matrix with no rows still knows its width.
struct PolyMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<LaurentPoly>> rows;

  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t ncols) : cols(ncols) {}
  PolyMatrix(std::size_t ncols, std::vector<std::vector<LaurentPoly>> r) : cols(ncols), rows(std::move(r)) {
    for (const auto& row : rows) {
      if (row.size() != cols) throw Error(ErrorKind::InvalidArgument, "row length does not match column count");
    }
  }

  std::size_t row_count() const noexcept { return rows.size(); }

  void add_row(std::vector<LaurentPoly> row) {
    if (row.size() != cols) throw Error(ErrorKind::InvalidArgument, "row length does not match column count");
    rows.push_back(std::move(row));
  }

  /// Copy without column `col`.
  PolyMatrix without_column(std::size_t col) const {
    if (col >= cols) throw Error(ErrorKind::IndexOutOfRange, "column index out of range");
    PolyMatrix out(cols - 1);
    for (const auto& row : rows) {
      std::vector<LaurentPoly> r;
      r.reserve(cols - 1);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j != col) r.push_back(row[j]);
      }
      out.rows.push_back(std::move(r));
    }
    return out;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

inline std::vector<std::vector<std::string>> to_strings(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m.rows) {
    std::vector<std::string> r;
    for (const auto& p : row) r.push_back(to_string(p));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace calex
