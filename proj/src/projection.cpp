// Copyright 2026 The NeighborDiv Authors.
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

#include "projection.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace ndiv {
namespace {

using DenseMatrix = Eigen::MatrixXd;

DenseMatrix orthonormal_basis(const DenseMatrix& y) {
  Eigen::HouseholderQR<DenseMatrix> qr(y);
  return qr.householderQ() * DenseMatrix::Identity(y.rows(), y.cols());
}

// Randomized range finder with power iterations; returns (U, sigma) for the
// leading `keep` components.
void randomized_svd(const DenseMatrix& x, Eigen::Index keep, std::uint64_t seed,
                    DenseMatrix& u, Eigen::VectorXd& sigma) {
  const Eigen::Index sketch = std::min<Eigen::Index>(keep + kOversampling,
                                                     std::min(x.rows(), x.cols()));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DenseMatrix omega(x.cols(), sketch);
  for (Eigen::Index j = 0; j < omega.cols(); ++j) {
    for (Eigen::Index i = 0; i < omega.rows(); ++i) omega(i, j) = gauss(rng);
  }

  DenseMatrix q = orthonormal_basis(x * omega);
  for (int it = 0; it < kPowerIterations; ++it) {
    const DenseMatrix z = orthonormal_basis(x.transpose() * q);
    q = orthonormal_basis(x * z);
  }

  const DenseMatrix b = q.transpose() * x;
  Eigen::BDCSVD<DenseMatrix> svd(b, Eigen::ComputeThinU);
  u = q * svd.matrixU().leftCols(keep);
  sigma = svd.singularValues().head(keep);
}

}  // namespace

Matrix truncated_svd(const Matrix& x, int rank, std::uint64_t seed) {
  if (x.rows() < 1 || x.cols() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "truncated_svd: empty matrix");
  }
  if (rank < 1) throw Error(ErrorCode::kInvalidArgument, "truncated_svd: rank must be >= 1");
  if (!x.allFinite()) throw Error(ErrorCode::kValidation, "truncated_svd: non-finite input");

  const Eigen::Index min_dim = std::min(x.rows(), x.cols());
  const Eigen::Index keep = std::min<Eigen::Index>(rank, min_dim);
  const DenseMatrix dense = x;

  DenseMatrix u;
  Eigen::VectorXd sigma;
  if (min_dim <= kExactSvdLimit) {
    Eigen::BDCSVD<DenseMatrix> svd(dense, Eigen::ComputeThinU);
    u = svd.matrixU().leftCols(keep);
    sigma = svd.singularValues().head(keep);
  } else {
    randomized_svd(dense, keep, seed, u, sigma);
  }

  Matrix out(x.rows(), keep);
  for (Eigen::Index j = 0; j < keep; ++j) {
    Eigen::Index arg = 0;
    u.col(j).cwiseAbs().maxCoeff(&arg);
    const double sign = u(arg, j) < 0.0 ? -1.0 : 1.0;
    out.col(j) = sign * sigma(j) * u.col(j);
  }
  return out;
}

Matrix l1_normalize_rows(const Matrix& p) {
  Matrix out = p;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double norm = out.row(i).lpNorm<1>();
    if (norm < kZeroRowThreshold) {
      out.row(i).setZero();
    } else {
      out.row(i) /= norm;
    }
  }
  return out;
}

Matrix unit_directions(const Matrix& p) {
  Matrix out = p;
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    const double norm = out.row(i).norm();
    if (norm < kZeroRowThreshold) {
      out.row(i).setZero();
    } else {
      out.row(i) /= norm;
    }
  }
  return out;
}

ProjectedFeatures make_projected(Matrix projected, std::uint64_t seed) {
  ProjectedFeatures pf;
  pf.rank_used = static_cast<int>(projected.cols());
  pf.seed = seed;
  pf.normalized = l1_normalize_rows(projected);
  pf.directions = unit_directions(pf.normalized);
  pf.projected = std::move(projected);
  return pf;
}

ProjectedFeatures project(const AttributedGraph& graph, int rank, std::uint64_t seed) {
  return make_projected(truncated_svd(graph.features(), rank, seed), seed);
}

}  // namespace ndiv
