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

#include "spacetime/operators.hpp"

#include <cmath>

namespace spacetime {

DensityOperator::DensityOperator(ComplexMatrix m, double tol_zero)
    : matrix_(std::move(m)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw InvalidState("density operator must be a non-empty square matrix");
  }
  if (!matrix_.allFinite()) {
    throw InvalidState("density operator has non-finite entries");
  }
  const double scale = std::max(1.0, matrix_.norm());
  if (hermiticity_residual(matrix_) > kTolHerm * scale) {
    throw InvalidState("density operator is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0)) > 1e-10) {
    throw InvalidState("density operator trace is " +
                       std::to_string(tr.real()) + ", expected 1");
  }
  const double lo = min_eigenvalue(matrix_, kTolHerm * scale);
  if (lo < -tol_zero * scale) {
    throw InvalidState("density operator has negative eigenvalue " +
                       std::to_string(lo));
  }
}

PauliWord::PauliWord(std::vector<std::uint8_t> letters)
    : letters_(std::move(letters)) {
  for (auto l : letters_) {
    if (l > 3) throw std::invalid_argument("Pauli letter out of range");
  }
}

PauliWord PauliWord::parse(std::string_view text) {
  std::vector<std::uint8_t> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': case 'i': case '0': letters.push_back(0); break;
      case 'X': case 'x': case '1': letters.push_back(1); break;
      case 'Y': case 'y': case '2': letters.push_back(2); break;
      case 'Z': case 'z': case '3': letters.push_back(3); break;
      default:
        throw std::invalid_argument("bad Pauli letter '" + std::string(1, c) +
                                    "'");
    }
  }
  return PauliWord(std::move(letters));
}

PauliWord PauliWord::from_index(std::size_t index, int qubits) {
  std::vector<std::uint8_t> letters(static_cast<std::size_t>(qubits));
  for (int k = qubits - 1; k >= 0; --k) {
    letters[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(index % 4);
    index /= 4;
  }
  if (index != 0) throw std::invalid_argument("Pauli index out of range");
  return PauliWord(std::move(letters));
}

std::size_t PauliWord::index() const {
  std::size_t idx = 0;
  for (auto l : letters_) idx = idx * 4 + l;
  return idx;
}

std::string PauliWord::str() const {
  static constexpr char kNames[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (auto l : letters_) s.push_back(kNames[l]);
  return s;
}

bool PauliWord::is_identity() const {
  for (auto l : letters_)
    if (l != 0) return false;
  return true;
}

ComplexMatrix pauli(int k) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("Pauli index out of range");
  }
  return m;
}

ComplexMatrix pauli_matrix(const PauliWord& w) {
  ComplexMatrix m = ComplexMatrix::Identity(1, 1);
  for (auto l : w.letters()) m = kron(m, pauli(l));
  return m;
}

std::vector<PauliWord> all_pauli_words(int qubits) {
  const std::size_t count = std::size_t{1} << (2 * qubits);
  std::vector<PauliWord> words;
  words.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    words.push_back(PauliWord::from_index(k, qubits));
  return words;
}

DichotomicObservable::DichotomicObservable(ComplexMatrix m, double tol)
    : matrix_(std::move(m)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw NotDichotomic("observable must be a non-empty square matrix");
  }
  if (hermiticity_residual(matrix_) > tol) {
    throw NotDichotomic("observable is not Hermitian");
  }
  const Index d = matrix_.rows();
  if ((matrix_ * matrix_ - ComplexMatrix::Identity(d, d)).norm() > tol) {
    throw NotDichotomic("observable does not square to the identity");
  }
}

DichotomicObservable::DichotomicObservable(const PauliWord& w)
    : matrix_(pauli_matrix(w)) {}

Projectors projectors(const DichotomicObservable& obs) {
  const ComplexMatrix id = ComplexMatrix::Identity(obs.dim(), obs.dim());
  return {(id + obs.matrix()) / 2.0, (id - obs.matrix()) / 2.0};
}

int qubit_count(Index side) {
  if (side <= 0) return -1;
  int m = 0;
  while ((Index{1} << m) < side) ++m;
  return (Index{1} << m) == side ? m : -1;
}

RealVector pauli_basis_expand(const ComplexMatrix& x) {
  require_square(x, "pauli_basis_expand");
  const int m = qubit_count(x.rows());
  if (m < 0) {
    throw DimensionMismatch("pauli_basis_expand: side " +
                            std::to_string(x.rows()) +
                            " is not a power of two");
  }
  require_hermitian(x, kTolHerm, "pauli_basis_expand");
  const auto words = all_pauli_words(m);
  RealVector c(static_cast<Index>(words.size()));
  const double scale = static_cast<double>(x.rows());
  for (std::size_t k = 0; k < words.size(); ++k) {
    // Tr(X P) = sum_ij X_ij P_ji
    c(static_cast<Index>(k)) =
        (x.cwiseProduct(pauli_matrix(words[k]).transpose())).sum().real() /
        scale;
  }
  return c;
}

ComplexMatrix pauli_basis_reconstruct(const RealVector& coeffs, int qubits) {
  const Index count = Index{1} << (2 * qubits);
  if (coeffs.size() != count) {
    throw DimensionMismatch("pauli_basis_reconstruct: need 4^m coefficients");
  }
  const Index side = Index{1} << qubits;
  ComplexMatrix x = ComplexMatrix::Zero(side, side);
  for (Index k = 0; k < count; ++k) {
    if (coeffs(k) == 0.0) continue;
    x += coeffs(k) *
         pauli_matrix(PauliWord::from_index(static_cast<std::size_t>(k),
                                            qubits));
  }
  return x;
}

}  // namespace spacetime
