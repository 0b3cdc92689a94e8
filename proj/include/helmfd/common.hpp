#ifndef HELMFD_COMMON_HPP
#define HELMFD_COMMON_HPP

#include <stdexcept>
#include <string>

namespace helmfd {

// Margins shared across modules.  All resonance checks are scale-relative
// where a natural scale (k^2) exists.
inline constexpr double kSigmaMargin = 1e-8;            // sigma_k acceptance margin
inline constexpr double kSinMargin = 1e-12;             // |sin k| floor for closed forms
inline constexpr double kDiscreteResonanceRel = 1e-10;  // reject |lambda^h| < rel * k^2
inline constexpr double kSymbolResonanceRel = 1e-12;    // flag rows with |symbol| < rel * k^2
inline constexpr double kPruneTol = 1e-15;              // drop transform coefficients below this
inline constexpr double kStrictSlack = 1e-13;           // slack on strict inequality checks

struct NearResonance : std::runtime_error {
  explicit NearResonance(const std::string& what) : std::runtime_error(what) {}
};

struct ResonantMode : std::runtime_error {
  explicit ResonantMode(const std::string& what) : std::runtime_error(what) {}
};

struct DiscreteResonance : std::runtime_error {
  explicit DiscreteResonance(const std::string& what) : std::runtime_error(what) {}
};

struct ResonantFrequency : std::runtime_error {
  explicit ResonantFrequency(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidCfl : std::runtime_error {
  explicit InvalidCfl(const std::string& what) : std::runtime_error(what) {}
};

struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

struct SearchExhausted : std::runtime_error {
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientData : std::runtime_error {
  explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateExact : std::runtime_error {
  explicit DegenerateExact(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace helmfd

#endif  // HELMFD_COMMON_HPP
