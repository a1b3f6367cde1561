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

#ifndef BCEL_STUDENT_T_HPP
#define BCEL_STUDENT_T_HPP

#include <Eigen/Core>

#include "bcel/rng.hpp"
#include "bcel/stats.hpp"

namespace bcel {

/// Log density of the multivariate Student-t with 3 degrees of freedom,
/// location m and scale matrix sigma (the covariance is 3 * sigma).
double student_t3_logpdf(const Eigen::VectorXd& x, const Eigen::VectorXd& m, const SpdMatrix& sigma);

/// Draw from t3(m, sigma).
Eigen::VectorXd student_t3_sample(RngStream& rng, const Eigen::VectorXd& m, const SpdMatrix& sigma);

}  // namespace bcel

#endif
