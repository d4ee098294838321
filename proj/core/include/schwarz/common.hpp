// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Core>

namespace schwarz {

/// Degree-of-freedom / element index type used across the library.
using Index = Eigen::Index;

using Real = double;
using Complex = std::complex<double>;

template <class S> inline constexpr bool is_complex_v = false;
template <class T> inline constexpr bool is_complex_v<std::complex<T>> = true;

template <class S> using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S> using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Real part of a possibly-complex scalar.
template <class S> double real_part(S v)
{
  if constexpr (is_complex_v<S>)
    return v.real();
  else
    return v;
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Cholesky-type factorization hit a nonpositive pivot.
struct NotPositiveDefinite : Error {
  using Error::Error;
};

/// An iterative solver exhausted its iteration budget.
struct MaxIterations : Error {
  using Error::Error;
};

/// The dense Woodbury core I + G^H A^{-1} G is numerically singular.
struct SingularCore : Error {
  using Error::Error;
};

/// An oversampled region contains no interior degrees of freedom.
struct EmptyRegion : Error {
  using Error::Error;
};

/// An assembled operator failed its Hermitian-symmetry check.
struct NonHermitian : Error {
  using Error::Error;
};

/// A dense-oracle routine was asked for a problem above its size cap.
struct TooLargeForOracle : Error {
  using Error::Error;
};

/// Not enough recorded data to produce an estimate.
struct InsufficientData : Error {
  using Error::Error;
};

/// PCG encountered p^H A p <= 0; the operator is not positive definite.
struct BreakdownNonpositiveCurvature : Error {
  using Error::Error;
};

/// Invalid or inconsistent experiment configuration.
struct ConfigError : Error {
  using Error::Error;
};

} // namespace schwarz
