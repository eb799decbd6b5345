#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcat {

// Base class for everything the kernel can throw.
struct KernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search or enumeration exceeded its configured cap.  Distinct from a
// negative verdict: the kernel refuses rather than guessing.
struct BudgetError : KernelError {
  using KernelError::KernelError;
};

// Input data violates a structural law (bad composition table, non-commuting
// square, ill-typed map).  The message names the offending datum.
struct ValidationError : KernelError {
  using KernelError::KernelError;
};

// An operation's stated precondition does not hold for the given input.
struct PreconditionError : KernelError {
  using KernelError::KernelError;
};

// Two routes that must agree disagreed.  Signals a kernel bug, never bad
// user input.
struct InternalError : KernelError {
  using KernelError::KernelError;
};

// Caps for the exhaustive searches.  The defaults are deliberately small;
// callers that know their instance raise them explicitly.  `steps` counts
// enumeration work deterministically (no wall-clock anywhere), so reports
// built from the same input are byte-identical.
struct Budget {
  std::size_t max_hom = 64;          // maps enumerated per hom computation
  std::size_t max_objects = 10;      // objects per category payload
  std::size_t max_candidates = 4096; // candidates per universal-property search
  std::size_t max_path_length = 8;   // path saturation length in pushouts
  mutable std::uint64_t steps = 0;

  void charge(std::size_t n = 1) const { steps += n; }

  void check_hom(std::size_t count, const std::string& what) const {
    if (count > max_hom)
      throw BudgetError("budget exceeded: " + what + " needs " +
                        std::to_string(count) + " > max_hom=" +
                        std::to_string(max_hom));
  }
  void check_objects(std::size_t count, const std::string& what) const {
    if (count > max_objects)
      throw BudgetError("budget exceeded: " + what + " needs " +
                        std::to_string(count) + " > max_objects=" +
                        std::to_string(max_objects));
  }
  void check_candidates(std::size_t count, const std::string& what) const {
    if (count > max_candidates)
      throw BudgetError("budget exceeded: " + what + " needs " +
                        std::to_string(count) + " > max_candidates=" +
                        std::to_string(max_candidates));
  }

  static Budget loose() {
    Budget b;
    b.max_hom = 1u << 20;
    b.max_objects = 256;
    b.max_candidates = 1u << 22;
    b.max_path_length = 12;
    return b;
  }
};

}  // namespace homcat
