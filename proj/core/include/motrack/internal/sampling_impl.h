// Copyright 2026 The motrack Authors
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

#ifndef MOTRACK_INTERNAL_SAMPLING_IMPL_H_
#define MOTRACK_INTERNAL_SAMPLING_IMPL_H_

#include <random>

#include "motrack/error.h"

namespace motrack {

template <typename Rng>
std::vector<int> SampleClipsWith(std::span<const double> weights, int count,
                                 Rng& rng) {
  if (count < 1) throw ValidationError("sample count must be >= 1");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ValidationError("sampling weights must be >= 0");
    total += w;
  }
  if (!(total > 0.0)) throw ValidationError("sampling weights sum to zero");
  std::discrete_distribution<int> dist(weights.begin(), weights.end());
  std::vector<int> out(count);
  for (int& x : out) x = dist(rng);
  return out;
}

}  // namespace motrack

#endif  // MOTRACK_INTERNAL_SAMPLING_IMPL_H_
