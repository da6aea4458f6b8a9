#pragma once

#include <stdexcept>
#include <string>

namespace bockmas {

// Malformed or inconsistent input data.  CLI maps this to exit code 3.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

// A stated smallness/flatness hypothesis fails for the requested instance,
// so the computation is not attempted.  CLI maps this to exit code 2.
struct hypothesis_error : std::runtime_error {
  explicit hypothesis_error(const std::string& m) : std::runtime_error(m) {}
};

// An internal invariant or a verified identity failed.  CLI maps this to exit code 1.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

inline void require_input(bool cond, const std::string& m) {
  if (!cond) throw input_error(m);
}

inline void require_hypothesis(bool cond, const std::string& m) {
  if (!cond) throw hypothesis_error(m);
}

inline void require_internal(bool cond, const std::string& m) {
  if (!cond) throw internal_error(m);
}

}  // namespace bockmas
