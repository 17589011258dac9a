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

#include "motrack/tokenizer.h"

#include <cmath>
#include <limits>

#include "motrack/clip_io.h"
#include "motrack/error.h"

namespace motrack {
namespace {

double Reduce(double sum, Eigen::Index count, Reduction reduction) {
  if (reduction == Reduction::kSum) return sum;
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace

Codebook::Codebook(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.cols() < 1) {
    throw ShapeError("codebook must have at least one entry and one dim");
  }
  if (!entries_.allFinite()) {
    throw ValidationError("codebook has non-finite entries");
  }
}

Codebook Codebook::Load(const std::filesystem::path& path) {
  return Codebook(ReadMatrix(path));
}

void Codebook::Save(const std::filesystem::path& path) const {
  SaveMatrix(entries_, path);
}

Quantization Quantize(const Eigen::MatrixXd& latents,
                      const Codebook& codebook) {
  if (latents.cols() != codebook.dim()) {
    throw ShapeError("latent width " + std::to_string(latents.cols()) +
                     " does not match codebook width " +
                     std::to_string(codebook.dim()));
  }
  const Eigen::MatrixXd& codes = codebook.entries();
  Quantization out;
  out.indices.resize(latents.rows());
  out.quantized.resize(latents.rows(), latents.cols());
  double total = 0.0;
  for (Eigen::Index t = 0; t < latents.rows(); ++t) {
    const Eigen::VectorXd dist =
        (codes.rowwise() - latents.row(t)).rowwise().squaredNorm();
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < dist.size(); ++k) {
      if (dist[k] < dist[best]) best = k;
    }
    out.indices[t] = static_cast<int>(best);
    out.quantized.row(t) = codes.row(best);
    total += dist[best];
  }
  out.commit_sq_dist =
      latents.rows() == 0 ? 0.0 : total / static_cast<double>(latents.rows());
  return out;
}

MotionTensor::MotionTensor(Eigen::MatrixXd values)
    : values_(std::move(values)) {
  if (values_.cols() != kMotionTensorWidth) {
    throw ShapeError("motion tensor must be 69 wide, got " +
                     std::to_string(values_.cols()));
  }
  if (!values_.allFinite()) {
    throw ValidationError("motion tensor has non-finite values");
  }
}

MotionTensor MotionTensor::FromClip(const MotionClip& clip) {
  if (clip.layout.kind != ClipKind::kHuman) {
    throw ValidationError(clip.name + ": motion tensors need a human clip");
  }
  Eigen::MatrixXd m(clip.human_frames.size(), kMotionTensorWidth);
  for (std::size_t t = 0; t < clip.human_frames.size(); ++t) {
    const HumanMotionFrame& fr = clip.human_frames[t];
    for (int k = 0; k < kSmplPoseDims; ++k) m(t, k) = fr.pose[k];
    for (int k = 0; k < kSmplTransDims; ++k) {
      m(t, kSmplPoseDims + k) = fr.translation[k];
    }
  }
  return MotionTensor(std::move(m));
}

std::map<std::string, double> LossTerms::Named() const {
  return {{"recons", recons}, {"commit", commit}, {"vel", vel},
          {"rot", rot},       {"trans", trans}};
}

LossTerms VqVaeLoss(const MotionTensor& gt, const MotionTensor& recon,
                    double commit_sq_dist, double fps,
                    const LossWeights& weights, Reduction reduction) {
  if (gt.frames() != recon.frames()) {
    throw ShapeError("ground truth has " + std::to_string(gt.frames()) +
                     " frames, reconstruction has " +
                     std::to_string(recon.frames()));
  }
  if (!(fps > 0.0) || !std::isfinite(fps)) {
    throw ValidationError("fps must be positive");
  }
  if (!(commit_sq_dist >= 0.0) || !std::isfinite(commit_sq_dist)) {
    throw ValidationError("commitment distance must be finite and >= 0");
  }
  for (double w : {weights.recons, weights.commit, weights.vel,
                   weights.root_rot, weights.root_pos}) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ValidationError("loss weights must be finite and >= 0");
    }
  }
  const Eigen::MatrixXd& a = gt.values();
  const Eigen::MatrixXd& b = recon.values();
  const Eigen::Index t_count = a.rows();
  const Eigen::MatrixXd abs_diff = (a - b).cwiseAbs();

  LossTerms terms;
  terms.recons = Reduce(abs_diff.sum(), abs_diff.size(), reduction);
  terms.commit = commit_sq_dist;
  if (t_count >= 2) {
    const Eigen::MatrixXd da =
        (a.bottomRows(t_count - 1) - a.topRows(t_count - 1)) * fps;
    const Eigen::MatrixXd db =
        (b.bottomRows(t_count - 1) - b.topRows(t_count - 1)) * fps;
    terms.vel = Reduce((da - db).cwiseAbs().sum(), da.size(), reduction);
  }
  const auto rot = abs_diff.leftCols(kRootOrientationDims);
  terms.rot = Reduce(rot.sum(), rot.size(), reduction);
  const auto trans = abs_diff.rightCols(kSmplTransDims);
  terms.trans = Reduce(trans.sum(), trans.size(), reduction);

  terms.total = weights.recons * terms.recons + weights.commit * terms.commit +
                weights.vel * terms.vel + weights.root_rot * terms.rot +
                weights.root_pos * terms.trans;
  return terms;
}

int DownsampleLength(int n_frames, int n_down) {
  if (n_down < 0 || n_down > 30 || n_frames < 0) {
    throw ValidationError("invalid downsample arguments");
  }
  const int factor = 1 << n_down;
  if (n_frames % factor != 0) {
    throw ValidationError(std::to_string(n_frames) +
                          " frames is not divisible by 2^" +
                          std::to_string(n_down));
  }
  return n_frames / factor;
}

}  // namespace motrack
