// Copyright 2026 The spacetime-swap Authors
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

#include "spacetime/random.hpp"

namespace spacetime {

ComplexMatrix random_ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

ComplexMatrix random_isometry(Index rows, Index cols, Rng& rng) {
  if (rows < cols) {
    throw DimensionMismatch("random_isometry: target smaller than source");
  }
  const ComplexMatrix g = random_ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix q =
      qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix& r = qr.matrixQR();
  ComplexMatrix v = q;
  for (Index k = 0; k < cols; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) v.col(k) *= diag / mag;
  }
  return v;
}

ComplexMatrix random_unitary(Index d, Rng& rng) {
  return random_isometry(d, d, rng);
}

ComplexMatrix random_hermitian(Index d, Rng& rng) {
  const ComplexMatrix g = random_ginibre(d, d, rng);
  return (g + g.adjoint()) / 2.0;
}

ComplexMatrix random_pure_state(Index d, Rng& rng) {
  Eigen::VectorXcd psi = random_ginibre(d, 1, rng).col(0);
  psi.normalize();
  return psi * psi.adjoint();
}

ComplexMatrix random_density(Index d, Index env, Rng& rng) {
  const ComplexMatrix joint = random_pure_state(d * env, rng);
  ComplexMatrix rho = partial_trace_b(joint, BlockStructure{d, env});
  rho = (rho + rho.adjoint()) / 2.0;
  return rho / rho.trace().real();
}

Channel random_channel(Index dim_in, Index dim_out, Index dim_env, Rng& rng) {
  const ComplexMatrix v = random_isometry(dim_out * dim_env, dim_in, rng);
  const BlockStructure out_env{dim_out, dim_env};
  return channel_from_map(dim_in, dim_out, [&](const ComplexMatrix& e) {
    return partial_trace_b(ComplexMatrix(v * e * v.adjoint()), out_env);
  });
}

}  // namespace spacetime
