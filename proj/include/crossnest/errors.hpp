#pragma once

#include <stdexcept>
#include <string>

namespace crossnest {

// Base for all domain errors thrown by the library.  The CLI maps these to
// exit code 1 (infeasible/invalid input) while argument-syntax problems get 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateEndpoint : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct EndpointClash : Error { using Error::Error; };
struct DuplicateEntry : Error { using Error::Error; };
struct NotATableau : Error { using Error::Error; };
struct NotAMatching : Error { using Error::Error; };
struct InvalidProfile : Error { using Error::Error; };
struct NotAPermutationPair : Error { using Error::Error; };
struct NotAnInflation : Error { using Error::Error; };
struct BoundsTooSmall : Error { using Error::Error; };
struct SequenceTooShort : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct ParseFailure : Error { using Error::Error; };

}  // namespace crossnest
