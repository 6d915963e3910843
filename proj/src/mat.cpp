#include "eqrl/mat.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace eqrl {

namespace {
using ERow = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CMap = Eigen::Map<const ERow>;
using MMap = Eigen::Map<ERow>;
}  // namespace

Mat matmul(const Mat& a, const Mat& b) {
  assert(a.cols == b.rows);
  Mat y(a.rows, b.cols);
  MMap(y.d.data(), y.rows, y.cols) =
      CMap(a.d.data(), a.rows, a.cols) * CMap(b.d.data(), b.rows, b.cols);
  return y;
}

Mat matmul_tn(const Mat& a, const Mat& b) {
  assert(a.rows == b.rows);
  Mat y(a.cols, b.cols);
  MMap(y.d.data(), y.rows, y.cols) =
      CMap(a.d.data(), a.rows, a.cols).transpose() * CMap(b.d.data(), b.rows, b.cols);
  return y;
}

Mat matmul_nt(const Mat& a, const Mat& b) {
  assert(a.cols == b.cols);
  Mat y(a.rows, b.rows);
  MMap(y.d.data(), y.rows, y.cols) =
      CMap(a.d.data(), a.rows, a.cols) * CMap(b.d.data(), b.rows, b.cols).transpose();
  return y;
}

Mat transpose(const Mat& a) {
  Mat y(a.cols, a.rows);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) y(c, r) = a(r, c);
  return y;
}

Mat col_sums(const Mat& a) {
  Mat y(1, a.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) y.d[c] += a(r, c);
  return y;
}

Mat row_sums(const Mat& a) {
  Mat y(a.rows, 1);
  for (int r = 0; r < a.rows; ++r) {
    double s = 0.0;
    for (int c = 0; c < a.cols; ++c) s += a(r, c);
    y.d[r] = s;
  }
  return y;
}

void add_inplace(Mat& dst, const Mat& src) {
  assert(dst.same_shape(src));
  for (size_t i = 0; i < dst.d.size(); ++i) dst.d[i] += src.d[i];
}

void axpy_inplace(Mat& dst, double alpha, const Mat& src) {
  assert(dst.same_shape(src));
  for (size_t i = 0; i < dst.d.size(); ++i) dst.d[i] += alpha * src.d[i];
}

Mat random_normal(int rows, int cols, Rng& rng) {
  Mat y(rows, cols);
  for (auto& v : y.d) v = rng.normal();
  return y;
}

Mat orthogonal_init(int rows, int cols, double gain, Rng& rng) {
  int big = std::max(rows, cols), small = std::min(rows, cols);
  Mat g = random_normal(big, small, rng);
  Eigen::MatrixXd gm(big, small);
  for (int r = 0; r < big; ++r)
    for (int c = 0; c < small; ++c) gm(r, c) = g(r, c);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gm);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(big, small);
  Eigen::MatrixXd rmat = qr.matrixQR().topRows(small).triangularView<Eigen::Upper>();
  // Fix signs so the factorization (and hence the init) is unique.
  for (int c = 0; c < small; ++c)
    if (rmat(c, c) < 0) q.col(c) = -q.col(c);
  Mat y(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) y(r, c) = gain * (rows >= cols ? q(r, c) : q(c, r));
  return y;
}

bool all_finite(const Mat& a) {
  for (double v : a.d)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace eqrl
