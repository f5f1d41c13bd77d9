#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace envelope {

/// Base of every error raised by the library. `name()` is the stable
/// identifier printed by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string_view name, const std::string& what)
      : std::runtime_error(what), name_(name) {}

  std::string_view name() const noexcept { return name_; }

 private:
  std::string_view name_;
};

#define ENVELOPE_DEFINE_ERROR(Type, Base)                                  \
  class Type : public Base {                                               \
   public:                                                                 \
    explicit Type(const std::string& what) : Base(#Type, what) {}         \
                                                                           \
   protected:                                                              \
    Type(std::string_view name, const std::string& what) : Base(name, what) {} \
  };

// Argument outside the mathematical domain of an operation.
ENVELOPE_DEFINE_ERROR(DomainError, Error)
// Quantum-number lists whose length does not match N - 1.
ENVELOPE_DEFINE_ERROR(ShapeError, Error)
// The envelope equations have no admissible root.
ENVELOPE_DEFINE_ERROR(NoSolution, Error)
// Special case of NoSolution for wells too shallow to bind.
ENVELOPE_DEFINE_ERROR(NoBoundState, NoSolution)
// Special case of NoSolution for a negative energy radicand.
ENVELOPE_DEFINE_ERROR(UnboundRegime, NoSolution)
ENVELOPE_DEFINE_ERROR(AmbiguousSolution, Error)
ENVELOPE_DEFINE_ERROR(NegativeStiffness, Error)
ENVELOPE_DEFINE_ERROR(DegenerateSlope, Error)
ENVELOPE_DEFINE_ERROR(PhiUndefined, Error)
ENVELOPE_DEFINE_ERROR(ConvergenceError, Error)

#undef ENVELOPE_DEFINE_ERROR

}  // namespace envelope
