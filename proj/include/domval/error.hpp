#pragma once

#include <stdexcept>
#include <string>

namespace domval {

// Every failure mode of the library maps to one of these codes. The CLI
// translates them to exit code 2 (input / structural errors); assertion
// failures inside commands use exit code 1 instead.
enum class Errc {
  cycle_detected,
  duplicate_element,
  duplicate_name,
  unknown_element,
  too_large,
  mass_exceeds_one,
  negative_weight,
  not_upper_set,
  poset_mismatch,
  not_monotone,
  chain_not_monotone,
  continuity_violation,
  syntax_error,
  resolution_error,
  recursion_error,
  name_not_found,
  invalid_value,
  overflow,
  division_by_zero,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::unknown_element: return "UnknownElement";
    case Errc::too_large: return "TooLarge";
    case Errc::mass_exceeds_one: return "MassExceedsOne";
    case Errc::negative_weight: return "NegativeWeight";
    case Errc::not_upper_set: return "NotUpperSet";
    case Errc::poset_mismatch: return "PosetMismatch";
    case Errc::not_monotone: return "NotMonotone";
    case Errc::chain_not_monotone: return "ChainNotMonotone";
    case Errc::continuity_violation: return "ContinuityViolation";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::resolution_error: return "ResolutionError";
    case Errc::recursion_error: return "RecursionError";
    case Errc::name_not_found: return "NameNotFound";
    case Errc::invalid_value: return "InvalidValue";
    case Errc::overflow: return "Overflow";
    case Errc::division_by_zero: return "DivisionByZero";
  }
  return "UnknownError";
}

}  // namespace domval
