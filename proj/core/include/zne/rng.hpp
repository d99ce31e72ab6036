// Copyright 2026 The ZNE Bounds Authors
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

#pragma once

#include <array>
#include <cstdint>

namespace zne {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). The 64-bit
/// seed is the key; each call to `block()` encrypts the next counter value.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit Philox4x32(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  /// Stateless bijection used by the generator.
  static Block encrypt(Block counter, Key key) noexcept;

  Block block() noexcept;
  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;
  /// Uniform double in the open interval (0, 1) with 53 random bits.
  double uniform() noexcept;

 private:
  Key key_;
  Block counter_;
  Block buffer_{};
  int used_ = 4;
};

/// Child seed for task `index` of a run seeded with `master`. Independent of
/// scheduling order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Binomial(trials, p) draw. Geometric inversion when trials * min(p, 1-p) < 10,
/// Hormann's BTRD transformed rejection otherwise.
std::uint64_t sample_binomial(Philox4x32& rng, std::uint64_t trials, double p);

}  // namespace zne
