#pragma once

#include <vector>

#include "monocat/ring.hpp"

namespace monocat {

using Vec = std::vector<Int>;

/// Dense row-major integer matrix. Shapes may be zero in either dimension.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  Int& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Int operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows, int cols);

  Vec row(int i) const;
  Vec col(int j) const;
  void set_col(int j, const Vec& v);
  void append_row(const Vec& v);
  Mat transpose() const;
  bool is_zero() const;

  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mul(const Ring& R, const Mat& A, const Mat& B);
Mat hcat(const Mat& A, const Mat& B);
Mat vcat(const Mat& A, const Mat& B);
/// Columns as a matrix with the given number of rows.
Mat from_cols(const std::vector<Vec>& cols, int rows);

}  // namespace monocat
