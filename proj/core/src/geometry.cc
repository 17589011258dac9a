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

#include "motrack/geometry.h"

#include <cmath>

namespace motrack {

bool IsUnitQuaternion(const Quat& q, double tol) {
  const double n = q.coeffs().norm();
  return std::isfinite(n) && std::abs(n - 1.0) <= tol;
}

Eigen::Matrix3d RotationMatrix(const Quat& q) { return q.toRotationMatrix(); }

Vec3 ToBodyFrame(const Quat& body, const Vec3& world_vec) {
  return body * world_vec;
}

Vec3 AngularVelocityBetween(const Quat& from, const Quat& to, double fps) {
  // With world-to-body quaternions the body-to-world rotation advances as
  // R(to)^T = exp(dt [w]x) R(from)^T, so exp(dt [w]x) = R(to^-1 * from).
  Quat delta = to.conjugate() * from;
  if (delta.w() < 0.0) delta.coeffs() *= -1.0;
  const Vec3 v = delta.vec();
  const double s = v.norm();
  if (s < 1e-15) return 2.0 * v * fps;
  const double angle = 2.0 * std::atan2(s, delta.w());
  return v / s * angle * fps;
}

}  // namespace motrack
