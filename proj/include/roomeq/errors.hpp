#ifndef ROOMEQ_ERRORS_HPP
#define ROOMEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace roomeq {

// Bad arguments or malformed input data.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// A linear system cannot be solved without regularization.
struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& msg) : std::runtime_error(msg) {}
};

// An impulse response has too little decay range for a reverberation fit.
struct InsufficientDecay : std::runtime_error {
  explicit InsufficientDecay(const std::string& msg) : std::runtime_error(msg) {}
};

// A feature sample has zero variance; thresholds cannot be fitted.
struct DegenerateDistribution : std::runtime_error {
  explicit DegenerateDistribution(const std::string& msg) : std::runtime_error(msg) {}
};

// A feature partition produced a group with no records.
struct EmptyGroup : std::runtime_error {
  EmptyGroup(const std::string& msg, int group) : std::runtime_error(msg), group_index(group) {}
  int group_index;
};

}  // namespace roomeq

#endif  // ROOMEQ_ERRORS_HPP
