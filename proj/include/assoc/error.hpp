#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace assoc {

enum class errc {
  empty_input,
  wrong_counts,
  prefix_violation,
  invalid_chord,
  invalid_triangulation,
  chord_not_present,
  size_mismatch,
  limit_exceeded,
  step_budget_exceeded,
  resource_guard,
  checkpoint_corrupt,
  incomplete_stream,
  parse_error,
  invalid_argument,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::empty_input: return "empty-input";
    case errc::wrong_counts: return "wrong-counts";
    case errc::prefix_violation: return "prefix-violation";
    case errc::invalid_chord: return "invalid-chord";
    case errc::invalid_triangulation: return "invalid-triangulation";
    case errc::chord_not_present: return "chord-not-present";
    case errc::size_mismatch: return "size-mismatch";
    case errc::limit_exceeded: return "limit-exceeded";
    case errc::step_budget_exceeded: return "step-budget-exceeded";
    case errc::resource_guard: return "resource-guard";
    case errc::checkpoint_corrupt: return "checkpoint-corrupt";
    case errc::incomplete_stream: return "incomplete-stream";
    case errc::parse_error: return "parse-error";
    case errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

// Every domain failure in the library is reported as an assoc::error.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace assoc
