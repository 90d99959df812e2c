#pragma once

#include <stdexcept>
#include <string>

namespace tdflow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// anisotropy
struct NoRootError : Error { using Error::Error; };
struct NotWeakError : Error { using Error::Error; };
struct NoIntersectionError : Error { using Error::Error; };

// grid
struct GridMismatchError : Error { using Error::Error; };

// kernels
struct KernelGridMismatchError : Error { using Error::Error; };
struct StrongAnisotropyError : Error { using Error::Error; };
struct NegativeWeightError : Error { using Error::Error; };
struct NonpositiveSigmaError : Error { using Error::Error; };
struct ZeroLineMassError : Error { using Error::Error; };

// evolutions
struct ExtinctError : Error { using Error::Error; };
struct PastExtinctionError : Error { using Error::Error; };
struct InsufficientDomainError : Error { using Error::Error; };
struct NoContactError : Error { using Error::Error; };
struct MaxStepsError : Error { using Error::Error; };

// harness
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace tdflow
