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

#ifndef BCEL_STATS_HPP
#define BCEL_STATS_HPP

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <span>
#include <utility>

namespace bcel {

/// Symmetric positive definite matrix with a cached Cholesky factor.
///
/// Construction symmetrizes the input and, if the factorization fails,
/// retries with an escalating ridge eps * I, eps = 1e-8 * trace/dim.
/// Throws NumericError when no reasonable ridge makes the matrix SPD.
class SpdMatrix {
 public:
  explicit SpdMatrix(Eigen::MatrixXd m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  const Eigen::LLT<Eigen::MatrixXd>& llt() const { return llt_; }
  /// log determinant of the matrix.
  double log_det() const;
  /// x^T M^{-1} x via the cached factor.
  double inv_quad(const Eigen::VectorXd& x) const;

 private:
  Eigen::MatrixXd m_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

/// Weighted mean and weighted covariance of a set of points.
///
/// Weights are normalized internally; the covariance uses the normalized
/// weights with no small-sample correction and is regularized into an SPD
/// matrix. Throws NumericError unless at least one weight is positive and
/// finite.
std::pair<Eigen::VectorXd, SpdMatrix> weighted_mean_cov(const Eigen::MatrixXd& points,
                                                        std::span<const double> weights);

/// Smallest value whose cumulative normalized weight reaches q, with values
/// sorted ascending. Requires at least one positive weight and q in [0, 1].
double weighted_quantile(std::span<const double> values, std::span<const double> weights, double q);

}  // namespace bcel

#endif
