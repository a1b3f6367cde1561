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

#ifndef BCEL_RNG_HPP
#define BCEL_RNG_HPP

#include <cstdint>
#include <vector>

namespace bcel {

/// Counter-based splittable random stream.
///
/// A stream is fully determined by (seed, stream-id): the i-th output is a
/// bijective mix of `key + i * gamma`, so draws are reproducible under any
/// parallel schedule as long as each worker owns its own (sub)stream.
/// Substreams derived by index are statistically independent of the parent
/// and of each other. A single stream must not be drawn from concurrently.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  /// Next raw 64-bit word.
  std::uint64_t next_u64();

  /// Uniform draw in the open interval (0, 1).
  double uniform();
  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n). Requires n > 0.
  std::uint64_t uniform_int(std::uint64_t n);

  /// Standard normal deviate (Box-Muller, one spare cached).
  double normal();
  /// Exponential deviate with the given rate. Requires rate > 0.
  double exponential(double rate = 1.0);
  /// Gamma(shape, 1) deviate (Marsaglia-Tsang). Requires shape > 0.
  double gamma(double shape);
  /// Dirichlet draw; returns all k coordinates.
  std::vector<double> dirichlet(const std::vector<double>& concentration);
  /// Poisson deviate with the given mean (exact for any mean >= 0).
  long poisson(double mean);

  /// Independent child stream; deterministic in (this stream's identity, id).
  RngStream substream(std::uint64_t id) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bcel

#endif
