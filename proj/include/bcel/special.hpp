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

#ifndef BCEL_SPECIAL_HPP
#define BCEL_SPECIAL_HPP

#include <vector>

namespace bcel {

/// Exponentially scaled modified Bessel function of the first kind:
/// e^{-z} I_{|order|}(z), for integer order and z >= 0.
///
/// The scaled form stays bounded for large z, so products like
/// e^{-tau*theta} I_m(tau*theta) can be formed without overflow.
/// I_{-m}(z) = I_m(z) for integer orders.
double bessel_i_scaled(long order, double z);

/// All scaled orders 0..max_order at a single argument, in one pass.
///
/// Uses the power series for small z and Miller's downward recurrence
/// with normalization sum_m e^{-z} I_m(z) = 1 otherwise.
std::vector<double> bessel_i_scaled_table(double z, int max_order);

/// Standard normal quantile function (inverse of Phi) on (0, 1).
double normal_quantile(double p);

/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace bcel

#endif
