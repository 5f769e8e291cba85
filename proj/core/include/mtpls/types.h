// Copyright 2026 The mtpls Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     https://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MTPLS_TYPES_H_
#define MTPLS_TYPES_H_

#include <Eigen/Core>

namespace mtpls {

// Largest supported state dimension. Vectors live on the stack.
inline constexpr int kMaxDim = 8;

using Time = double;

// A point of the state space (column vector).
using StateVec =
    Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
// A point of the conjugate space (row vector).
using Covec =
    Eigen::Matrix<double, 1, Eigen::Dynamic, Eigen::RowMajor, 1, kMaxDim>;
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                             Eigen::ColMajor, kMaxDim, kMaxDim>;

// p * s, the pairing of a covector with a state.
inline double Pair(const Covec& p, const StateVec& s) {
  return p.dot(s.transpose());
}

inline Covec Transposed(const StateVec& s) { return s.transpose(); }
inline StateVec Transposed(const Covec& p) { return p.transpose(); }

// Returns p / |p|. Throws std::invalid_argument on an exact zero vector.
Covec Normalized(const Covec& p);

// Throws std::invalid_argument("degenerate support vector") when p == 0.
void RequireSupportVector(const Covec& p);

}  // namespace mtpls

#endif  // MTPLS_TYPES_H_
