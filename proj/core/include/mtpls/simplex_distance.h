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

#ifndef MTPLS_SIMPLEX_DISTANCE_H_
#define MTPLS_SIMPLEX_DISTANCE_H_

#include <vector>

#include "mtpls/types.h"

namespace mtpls {

// At most n + 1 pairwise distinct points of an n-dimensional space.
class VertexSet {
 public:
  explicit VertexSet(int dim) : dim_(dim) {}

  // Adds `v` unless a point within 1e-14 is already present. Returns false
  // for a merged duplicate. Throws when the set would exceed n + 1 points.
  bool Insert(const StateVec& v);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const StateVec& operator[](int i) const { return points_[i]; }
  const std::vector<StateVec>& points() const { return points_; }

 private:
  int dim_;
  std::vector<StateVec> points_;
};

struct HullPoint {
  StateVec s;
  VertexSet kept;
  std::vector<double> weights;  // convex weights of `kept`, summing to 1
  // True when the origin lies in the interior of a full-dimensional simplex.
  bool encloses_origin = false;
};

// Nearest point of conv(V) to the origin, by enumeration of all faces.
HullPoint NearestInHull(const VertexSet& v);

// Same, restricted to faces containing the vertex with index `required`.
// GJK uses this with the newly added vertex.
HullPoint NearestInHull(const VertexSet& v, int required);

}  // namespace mtpls

#endif  // MTPLS_SIMPLEX_DISTANCE_H_
