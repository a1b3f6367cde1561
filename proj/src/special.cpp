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

#include "bcel/special.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "bcel/errors.hpp"

namespace bcel {
namespace {

constexpr double kSeriesCutoff = 15.0;

// e^{-z} (z/2)^m / m! * sum_j (z^2/4)^j / (j! (m+j)!), leading factor in logs.
double scaled_series(int m, double z) {
  const double half = 0.5 * z;
  double log_lead = -z + m * std::log(half) - std::lgamma(m + 1.0);
  if (log_lead < -745.0) return 0.0;
  const double zz = half * half;
  double term = 1.0;
  double sum = 1.0;
  for (int j = 1; j < 200; ++j) {
    term *= zz / (static_cast<double>(j) * (m + j));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return std::exp(log_lead) * sum;
}

std::vector<double> table_by_series(double z, int max_order) {
  std::vector<double> out(max_order + 1);
  for (int m = 0; m <= max_order; ++m) out[m] = scaled_series(m, z);
  return out;
}

// Miller's algorithm: run I_{k-1} = I_{k+1} + (2k/z) I_k downward from a
// start order well above max(max_order, z), then normalize with
// I_0 + 2 sum_{k>=1} I_k = e^z (so the scaled values sum to 1).
std::vector<double> table_by_miller(double z, int max_order) {
  const int start = max_order + static_cast<int>(std::ceil(8.0 * std::sqrt(z))) + 60;
  std::vector<double> out(max_order + 1, 0.0);
  double above = 0.0;   // value at order k+1
  double current = 1.0; // arbitrary seed at order `start`
  double norm = 0.0;    // accumulates I_0 + 2 sum I_k over visited orders
  const double rescale_limit = 1e250;
  for (int k = start; k >= 0; --k) {
    if (k <= max_order) out[k] = current;
    norm += (k == 0) ? current : 2.0 * current;
    const double below = above + (2.0 * k / z) * current;
    above = current;
    current = below;
    if (std::abs(current) > rescale_limit) {
      const double inv = 1.0 / rescale_limit;
      current *= inv;
      above *= inv;
      norm *= inv;
      for (double& v : out) v *= inv;
    }
  }
  const double scale = 1.0 / norm;
  for (double& v : out) v *= scale;
  return out;
}

}  // namespace

std::vector<double> bessel_i_scaled_table(double z, int max_order) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("bessel_i_scaled: z must be finite and >= 0");
  if (max_order < 0) throw DomainError("bessel_i_scaled: negative table size");
  if (z == 0.0) {
    std::vector<double> out(max_order + 1, 0.0);
    out[0] = 1.0;
    return out;
  }
  if (z < kSeriesCutoff) return table_by_series(z, max_order);
  return table_by_miller(z, max_order);
}

double bessel_i_scaled(long order, double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("bessel_i_scaled: z must be finite and >= 0");
  const long m = std::labs(order);
  if (m > 1000000L) throw DomainError("bessel_i_scaled: order out of range");
  if (z == 0.0) return m == 0 ? 1.0 : 0.0;
  if (z < kSeriesCutoff) return scaled_series(static_cast<int>(m), z);
  return table_by_miller(z, static_cast<int>(m))[m];
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile: p must be in (0,1)");
  // Crude tail-aware start, then safeguarded Newton on Phi(x) - p.
  const double q = p < 0.5 ? p : 1.0 - p;
  double t = std::sqrt(-2.0 * std::log(q));
  double x = t - (2.30753 + 0.27061 * t) / (1.0 + t * (0.99229 + 0.04481 * t));
  if (p < 0.5) x = -x;

  double lo = -std::sqrt(std::numeric_limits<double>::max());
  double hi = -lo;
  for (int it = 0; it < 60; ++it) {
    const double err = normal_cdf(x) - p;
    if (err > 0.0) {
      hi = x;
    } else if (err < 0.0) {
      lo = x;
    } else {
      break;
    }
    const double pdf = 0.3989422804014326779 * std::exp(-0.5 * x * x);
    double step = pdf > 0.0 ? err / pdf : 0.0;
    double next = x - step;
    if (!(next > lo && next < hi) || step == 0.0) next = 0.5 * (lo + hi);
    if (next == x) break;
    x = next;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
  }
  return x;
}

}  // namespace bcel
