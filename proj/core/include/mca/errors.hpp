#pragma once

#include <stdexcept>
#include <string>

#include "mca/types.hpp"

namespace mca {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested common dimension k exceeds min(r1, r2), so no pair of
/// matrices with orthonormal rows of that height exists.
class InfeasibleError : public Error {
 public:
  InfeasibleError(Index k, Index r1, Index r2)
      : Error("INFEASIBLE: k = " + std::to_string(k) +
              " exceeds min(r1, r2) = min(" + std::to_string(r1) + ", " +
              std::to_string(r2) + ")"),
        k(k),
        r1(r1),
        r2(r2) {}

  Index k, r1, r2;
};

/// Input matrix has no singular value above the rank threshold.
class RankZeroError : public Error {
 public:
  explicit RankZeroError(const std::string& what) : Error("rank zero: " + what) {}
};

/// Input violates the (1/n) Z Z^T = I precondition.
class NotWhitenedError : public Error {
 public:
  explicit NotWhitenedError(double deviation)
      : Error("input is not whitened: max |(1/n) Z Z^T - I| = " +
              std::to_string(deviation)),
        deviation(deviation) {}

  double deviation;
};

}  // namespace mca
