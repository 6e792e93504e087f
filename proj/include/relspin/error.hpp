#ifndef RELSPIN_ERROR_HPP
#define RELSPIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace relspin {

enum class errc {
  invalid_input,
  nonpositive_mass,
  klein_regime,
  evanescent_incident,
  not_propagating,
  no_bound_state,
  no_convergence,
  stiff_failure,
};

inline const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_input: return "InvalidInput";
    case errc::nonpositive_mass: return "NonpositiveMass";
    case errc::klein_regime: return "KleinRegime";
    case errc::evanescent_incident: return "EvanescentIncident";
    case errc::not_propagating: return "NotPropagating";
    case errc::no_bound_state: return "NoBoundState";
    case errc::no_convergence: return "NoConvergence";
    case errc::stiff_failure: return "StiffFailure";
  }
  return "Unknown";
}

/// All library failures are reported through this exception; code() tells
/// callers which contract was violated.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace relspin

#endif
