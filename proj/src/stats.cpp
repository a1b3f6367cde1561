// Copyright 2026 The bcel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bcel/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "bcel/errors.hpp"

namespace bcel {

SpdMatrix::SpdMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) throw NumericError("SpdMatrix: not square");
  m_ = 0.5 * (m_ + m_.transpose()).eval();
  const int d = static_cast<int>(m_.rows());
  const double tr = m_.trace();
  double eps = 1e-8 * (tr > 0.0 ? tr / d : 1.0);
  for (int attempt = 0; attempt < 8; ++attempt) {
    llt_.compute(m_);
    if (llt_.info() == Eigen::Success) {
      // Eigen may still accept nearly singular inputs; require positive pivots.
      if (llt_.matrixLLT().diagonal().minCoeff() > 0.0) return;
    }
    m_ += eps * Eigen::MatrixXd::Identity(d, d);
    eps *= 100.0;
  }
  throw NumericError("SpdMatrix: matrix not positive definite after regularization");
}

double SpdMatrix::log_det() const {
  return 2.0 * llt_.matrixLLT().diagonal().array().log().sum();
}

double SpdMatrix::inv_quad(const Eigen::VectorXd& x) const {
  return x.dot(llt_.solve(x));
}

std::pair<Eigen::VectorXd, SpdMatrix> weighted_mean_cov(const Eigen::MatrixXd& points,
                                                        std::span<const double> weights) {
  const auto n = points.rows();
  const auto d = points.cols();
  if (n == 0 || d == 0) throw NumericError("weighted_mean_cov: empty input");
  if (static_cast<std::size_t>(n) != weights.size())
    throw NumericError("weighted_mean_cov: points/weights size mismatch");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw NumericError("weighted_mean_cov: invalid weight");
    total += w;
  }
  if (!(total > 0.0)) throw NumericError("weighted_mean_cov: all weights zero");

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  for (Eigen::Index i = 0; i < n; ++i) mean += (weights[i] / total) * points.row(i).transpose();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::VectorXd c = points.row(i).transpose() - mean;
    cov.noalias() += (weights[i] / total) * (c * c.transpose());
  }
  return {std::move(mean), SpdMatrix(std::move(cov))};
}

double weighted_quantile(std::span<const double> values, std::span<const double> weights, double q) {
  if (values.empty() || values.size() != weights.size())
    throw NumericError("weighted_quantile: empty input or size mismatch");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("weighted_quantile: q must be in [0,1]");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw NumericError("weighted_quantile: invalid weight");
    total += w;
  }
  if (!(total > 0.0)) throw NumericError("weighted_quantile: all weights zero");

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  double cum = 0.0;
  for (std::size_t idx : order) {
    cum += weights[idx] / total;
    if (cum >= q - 1e-15) return values[idx];
  }
  return values[order.back()];
}

}  // namespace bcel
