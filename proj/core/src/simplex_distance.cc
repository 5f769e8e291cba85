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

#include "mtpls/simplex_distance.h"

#include <Eigen/QR>
#include <stdexcept>

namespace mtpls {

namespace {

constexpr double kDuplicateTol = 1e-14;
constexpr double kRankTol = 1e-12;
constexpr double kMinWeight = 1e-12;
constexpr double kTieTol = 1e-12;

using EdgeMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::ColMajor, kMaxDim, kMaxDim>;
using Weights =
    Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim + 1, 1>;

struct Face {
  StateVec s;
  Weights w;
};

// Nearest point of the affine hull of the selected vertices, if it lies in
// their relative interior and the vertices are affinely independent.
bool SolveFace(const VertexSet& v, const int* idx, int k, Face& out) {
  const StateVec& base = v[idx[0]];
  out.w.resize(k);
  if (k == 1) {
    out.s = base;
    out.w(0) = 1.0;
    return true;
  }
  if (k - 1 > v.dim()) return false;
  EdgeMatrix e(v.dim(), k - 1);
  for (int j = 1; j < k; ++j) e.col(j - 1) = v[idx[j]] - base;
  Eigen::ColPivHouseholderQR<EdgeMatrix> qr(e);
  qr.setThreshold(kRankTol);
  if (qr.rank() < k - 1) return false;
  const StateVec neg_base = -base;
  const Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>
      mu = qr.solve(neg_base);
  double first = 1.0;
  for (int j = 0; j < k - 1; ++j) {
    out.w(j + 1) = mu(j);
    first -= mu(j);
  }
  out.w(0) = first;
  for (int j = 0; j < k; ++j) {
    if (!(out.w(j) >= kMinWeight)) return false;
  }
  out.s = base + e * mu;
  return true;
}

HullPoint Nearest(const VertexSet& v, int required) {
  const int m = v.size();
  if (m == 0) throw std::invalid_argument("empty vertex set");
  if (m > v.dim() + 1) throw std::invalid_argument("too many vertices");

  HullPoint best{StateVec(), VertexSet(v.dim()), {}, false};
  double best_norm = INFINITY;
  int best_mask = 0;
  Face face;
  Face best_face;
  int idx[kMaxDim + 1];
  // Faces by increasing cardinality so ties keep the smaller face.
  for (int card = 1; card <= m; ++card) {
    for (int mask = 1; mask < (1 << m); ++mask) {
      if (__builtin_popcount(mask) != card) continue;
      if (required >= 0 && !(mask & (1 << required))) continue;
      int k = 0;
      for (int i = 0; i < m; ++i) {
        if (mask & (1 << i)) idx[k++] = i;
      }
      if (!SolveFace(v, idx, k, face)) continue;
      const double norm = face.s.norm();
      if (best_mask == 0 || norm < best_norm - kTieTol * (1.0 + best_norm)) {
        best_norm = norm;
        best_mask = mask;
        best_face = face;
      }
    }
  }
  if (best_mask == 0) {
    // Singletons always qualify unless a vertex is not finite.
    if (required < 0) throw std::invalid_argument("non-finite vertex");
    return Nearest(v, -1);
  }
  best.s = best_face.s;
  int k = 0;
  for (int i = 0; i < m; ++i) {
    if (best_mask & (1 << i)) {
      best.kept.Insert(v[i]);
      best.weights.push_back(best_face.w(k++));
    }
  }
  if (best.kept.size() == v.dim() + 1) {
    // The affine hull is the whole space, so its nearest point is 0.
    best.s.setZero();
    best.encloses_origin = true;
  }
  return best;
}

}  // namespace

bool VertexSet::Insert(const StateVec& v) {
  if (v.size() != dim_) throw std::invalid_argument("dimension mismatch");
  for (const StateVec& p : points_) {
    if ((p - v).norm() <= kDuplicateTol) return false;
  }
  if (size() >= dim_ + 1) throw std::invalid_argument("too many vertices");
  points_.push_back(v);
  return true;
}

HullPoint NearestInHull(const VertexSet& v) { return Nearest(v, -1); }

HullPoint NearestInHull(const VertexSet& v, int required) {
  if (required < 0 || required >= v.size()) {
    throw std::out_of_range("required vertex index");
  }
  return Nearest(v, required);
}

}  // namespace mtpls
