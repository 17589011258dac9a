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

#ifndef MOTRACK_GEOMETRY_H_
#define MOTRACK_GEOMETRY_H_

#include <Eigen/Core>

#include "motrack/motion_clip.h"

namespace motrack {

bool IsUnitQuaternion(const Quat& q, double tol = kUnitNormTolerance);

// Rotation matrix of `q`; maps world vectors into the body frame.
Eigen::Matrix3d RotationMatrix(const Quat& q);

// Expresses a world-frame vector in the frame of a body with orientation
// `body`.
Vec3 ToBodyFrame(const Quat& body, const Vec3& world_vec);

// World-frame angular velocity that carries orientation `from` to `to` in
// 1/fps seconds (shortest path).
Vec3 AngularVelocityBetween(const Quat& from, const Quat& to, double fps);

}  // namespace motrack

#endif  // MOTRACK_GEOMETRY_H_
