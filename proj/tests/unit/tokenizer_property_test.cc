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

#include <random>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "motrack/tokenizer.h"

namespace motrack {
namespace {

Eigen::MatrixXd RandomMatrix(std::mt19937_64& rng, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = testing::Uniform(rng, -2.0, 2.0);
  }
  return m;
}

TEST(TokenizerPropertyTest, QuantizeIsIdempotent) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 64);
    const int d = 1 + static_cast<int>(rng() % 8);
    const Codebook codebook(RandomMatrix(rng, k, d));
    const Quantization first = Quantize(RandomMatrix(rng, 7, d), codebook);
    const Quantization second = Quantize(first.quantized, codebook);
    EXPECT_EQ(second.indices, first.indices);
    EXPECT_EQ(second.commit_sq_dist, 0.0);
  }
}

TEST(TokenizerPropertyTest, LossIsNonNegativeAndZeroOnlyForExactMatch) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const int frames = 1 + static_cast<int>(rng() % 6);
    const Eigen::MatrixXd gt = RandomMatrix(rng, frames, 69);
    Eigen::MatrixXd recon = gt;
    const bool perturb = trial % 2 == 0;
    if (perturb) recon(rng() % frames, rng() % 69) += 1e-3;
    const double commit = trial % 3 == 0 ? 0.0 : testing::Uniform(rng, 0.0, 1.0);
    const LossTerms t = VqVaeLoss(MotionTensor(gt), MotionTensor(recon), commit, 30.0);
    EXPECT_GE(t.total, 0.0);
    EXPECT_EQ(t.total == 0.0, !perturb && commit == 0.0);
  }
}

TEST(TokenizerPropertyTest, ScalingWeightsScalesTotal) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const MotionTensor gt(RandomMatrix(rng, 4, 69));
    const MotionTensor recon(RandomMatrix(rng, 4, 69));
    // Powers of two keep the scaling exact in floating point.
    const double s = std::ldexp(1.0, static_cast<int>(rng() % 9) - 4);
    const LossWeights w;
    const LossWeights ws{s * w.recons, s * w.commit, s * w.vel, s * w.root_rot,
                         s * w.root_pos};
    EXPECT_EQ(VqVaeLoss(gt, recon, 0.3, 30.0, ws).total,
              s * VqVaeLoss(gt, recon, 0.3, 30.0, w).total);
  }
}

TEST(TokenizerPropertyTest, EveryTermIsSymmetric) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const MotionTensor a(RandomMatrix(rng, 5, 69));
    const MotionTensor b(RandomMatrix(rng, 5, 69));
    const LossTerms ab = VqVaeLoss(a, b, 0.1, 25.0);
    const LossTerms ba = VqVaeLoss(b, a, 0.1, 25.0);
    EXPECT_EQ(ab.recons, ba.recons);
    EXPECT_EQ(ab.vel, ba.vel);
    EXPECT_EQ(ab.rot, ba.rot);
    EXPECT_EQ(ab.trans, ba.trans);
  }
}

}  // namespace
}  // namespace motrack
