#include "monocat/matrix.hpp"

namespace monocat {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != cols) fail_input("matrix: ragged rows");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(int i) const { return Vec(a.begin() + static_cast<std::ptrdiff_t>(i) * cols, a.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols); }

Vec Mat::col(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_col(int j, const Vec& v) {
  for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

void Mat::append_row(const Vec& v) {
  if (rows == 0 && cols == 0) cols = static_cast<int>(v.size());
  if (static_cast<int>(v.size()) != cols) fail_input("matrix: row length mismatch");
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

Mat mul(const Ring& R, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) fail_input("matrix: product shape mismatch");
  Mat C(A.rows, B.cols);
  const Int m = R.modulus();
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int x = A(i, k) % m;
      if (x == 0) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) = (C(i, j) + x * (B(k, j) % m)) % m;
    }
  for (auto& x : C.a) x = R.reduce(x);
  return C;
}

Mat hcat(const Mat& A, const Mat& B) {
  if (A.rows != B.rows) fail_input("matrix: hcat row mismatch");
  Mat C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C(i, j) = A(i, j);
    for (int j = 0; j < B.cols; ++j) C(i, A.cols + j) = B(i, j);
  }
  return C;
}

Mat vcat(const Mat& A, const Mat& B) {
  if (A.cols != B.cols) fail_input("matrix: vcat column mismatch");
  Mat C(A.rows + B.rows, A.cols);
  std::copy(A.a.begin(), A.a.end(), C.a.begin());
  std::copy(B.a.begin(), B.a.end(), C.a.begin() + static_cast<std::ptrdiff_t>(A.a.size()));
  return C;
}

Mat from_cols(const std::vector<Vec>& cols, int rows) {
  Mat m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (static_cast<int>(cols[j].size()) != rows) fail_input("matrix: column length mismatch");
    m.set_col(j, cols[j]);
  }
  return m;
}

}  // namespace monocat
