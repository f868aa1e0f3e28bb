#pragma once

#include <stdexcept>
#include <string>

namespace cfpoly {

// Mathematical domain violation (log of non-positive interval, division by an
// interval containing zero, derivative order past the supported two, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric procedure failed to reach its contract (subdivision blow-up,
// Newton non-convergence, ...).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// The (n+2)x(n+2) exchange system is singular or hopelessly ill-conditioned.
// Carries the index of the offending pivot; this is the Haar-condition
// failure signal for incomplete bases.
struct SingularSystem : std::runtime_error {
  SingularSystem(const std::string& what, int pivot_index_)
      : std::runtime_error(what), pivot_index(pivot_index_) {}
  int pivot_index;
};

// The exchange step could not exhibit n+2 alternating extrema.
struct ExchangeFailed : std::runtime_error {
  explicit ExchangeFailed(const std::string& what) : std::runtime_error(what) {}
};

// guessdegree hit its degree cap; the interval/target are likely mis-specified.
struct DegreeCapExceeded : std::runtime_error {
  explicit DegreeCapExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// Even a triple-double coefficient or operation cannot meet the error budget.
struct FormatOverflow : std::runtime_error {
  explicit FormatOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Rounding coefficients flipped a Horner-step verdict from free to cancelling.
struct CancellationReintroduced : std::runtime_error {
  explicit CancellationReintroduced(const std::string& what)
      : std::runtime_error(what) {}
};

// The certified norm contradicted the fast estimate the iteration relied on.
struct VerificationFailed : std::runtime_error {
  explicit VerificationFailed(const std::string& what)
      : std::runtime_error(what) {}
};

// Expression text does not conform to the grammar. Carries the byte offset.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position_)
      : std::runtime_error(what + " (at position " +
                           std::to_string(position_) + ")"),
        position(position_) {}
  std::size_t position;
};

}  // namespace cfpoly
