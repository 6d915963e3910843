#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "eqrl/rng.hpp"

namespace eqrl {

// Dense row-major matrix of doubles. Rows index batch elements throughout.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> d;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c, 0.0) {}
  Mat(int r, int c, double fill) : rows(r), cols(c), d(static_cast<size_t>(r) * c, fill) {}

  static Mat scalar(double v) {
    Mat m(1, 1);
    m.d[0] = v;
    return m;
  }

  double& operator()(int r, int c) { return d[static_cast<size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return d[static_cast<size_t>(r) * cols + c]; }

  size_t size() const { return d.size(); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

// y = a * b
Mat matmul(const Mat& a, const Mat& b);
// y = a^T * b
Mat matmul_tn(const Mat& a, const Mat& b);
// y = a * b^T
Mat matmul_nt(const Mat& a, const Mat& b);

Mat transpose(const Mat& a);
Mat col_sums(const Mat& a);  // 1 x cols
Mat row_sums(const Mat& a);  // rows x 1

void add_inplace(Mat& dst, const Mat& src);
void axpy_inplace(Mat& dst, double alpha, const Mat& src);

Mat random_normal(int rows, int cols, Rng& rng);
// Orthogonal(-ish) init: QR of a Gaussian matrix, sign-fixed, times gain.
Mat orthogonal_init(int rows, int cols, double gain, Rng& rng);

bool all_finite(const Mat& a);

}  // namespace eqrl
