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

#include "bcel/student_t.hpp"

#include <cmath>

#include "bcel/errors.hpp"

namespace bcel {

namespace {
constexpr double kNu = 3.0;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double student_t3_logpdf(const Eigen::VectorXd& x, const Eigen::VectorXd& m, const SpdMatrix& sigma) {
  const auto d = x.size();
  if (m.size() != d || sigma.dim() != d) throw DomainError("student_t3_logpdf: dimension mismatch");
  const double quad = sigma.inv_quad(x - m);
  return std::lgamma(0.5 * (kNu + d)) - std::lgamma(0.5 * kNu) - 0.5 * d * std::log(kNu * kPi) -
         0.5 * sigma.log_det() - 0.5 * (kNu + d) * std::log1p(quad / kNu);
}

Eigen::VectorXd student_t3_sample(RngStream& rng, const Eigen::VectorXd& m, const SpdMatrix& sigma) {
  const auto d = m.size();
  if (sigma.dim() != d) throw DomainError("student_t3_sample: dimension mismatch");
  Eigen::VectorXd z(d);
  for (Eigen::Index i = 0; i < d; ++i) z[i] = rng.normal();
  const double chi2 = 2.0 * rng.gamma(0.5 * kNu);  // chi-squared with nu dof
  const double scale = std::sqrt(kNu / chi2);
  return m + scale * (sigma.llt().matrixL() * z);
}

}  // namespace bcel
