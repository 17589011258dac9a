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

#ifndef MOTRACK_TOKENIZER_H_
#define MOTRACK_TOKENIZER_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "motrack/motion_clip.h"

namespace motrack {

inline constexpr int kDefaultCodebookSize = 2048;
inline constexpr int kDefaultLatentDim = 512;
inline constexpr int kDefaultDownsampleStages = 2;
inline constexpr int kMotionTensorWidth = kSmplPoseDims + kSmplTransDims;
inline constexpr int kRootOrientationDims = 3;

// K x D matrix of code vectors. Immutable after construction.
class Codebook {
 public:
  // Throws ShapeError when empty, ValidationError on non-finite entries.
  explicit Codebook(Eigen::MatrixXd entries);

  static Codebook Load(const std::filesystem::path& path);
  void Save(const std::filesystem::path& path) const;

  int size() const { return static_cast<int>(entries_.rows()); }
  int dim() const { return static_cast<int>(entries_.cols()); }
  const Eigen::MatrixXd& entries() const { return entries_; }

 private:
  Eigen::MatrixXd entries_;
};

struct Quantization {
  std::vector<int> indices;
  Eigen::MatrixXd quantized;
  // Mean over latents of the squared Euclidean distance to the chosen code.
  double commit_sq_dist = 0.0;
};

// Nearest-code assignment for each latent row; ties go to the lowest index.
Quantization Quantize(const Eigen::MatrixXd& latents, const Codebook& codebook);

// frames x 69 motion: 66 SMPL pose values (first 3 are the root orientation)
// followed by the 3-D root translation.
class MotionTensor {
 public:
  explicit MotionTensor(Eigen::MatrixXd values);
  // Stacks the frames of a human-space clip.
  static MotionTensor FromClip(const MotionClip& clip);

  Eigen::Index frames() const { return values_.rows(); }
  const Eigen::MatrixXd& values() const { return values_; }

 private:
  Eigen::MatrixXd values_;
};

struct LossWeights {
  double recons = 1.0;
  double commit = 0.02;
  double vel = 0.10;
  double root_rot = 0.5;
  double root_pos = 0.8;
};

enum class Reduction { kMean, kSum };

struct LossTerms {
  double recons = 0.0;
  double commit = 0.0;
  double vel = 0.0;
  double rot = 0.0;
  double trans = 0.0;
  double total = 0.0;

  std::map<std::string, double> Named() const;
};

// Five-term tokenizer objective. Velocities are forward differences scaled by
// fps; L1 terms are reduced with `reduction` over all their elements.
LossTerms VqVaeLoss(const MotionTensor& gt, const MotionTensor& recon,
                    double commit_sq_dist, double fps,
                    const LossWeights& weights = {},
                    Reduction reduction = Reduction::kMean);

// Latent sequence length after `n_down` stride-2 stages. Throws
// ValidationError unless n_frames is divisible by 2^n_down.
int DownsampleLength(int n_frames, int n_down);

}  // namespace motrack

#endif  // MOTRACK_TOKENIZER_H_
