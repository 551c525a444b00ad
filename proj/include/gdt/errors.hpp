#pragma once

#include <stdexcept>
#include <string>

namespace gdt {

enum class errc {
  odd_length,
  too_short,
  non_finite_sample,
  length_mismatch,
  bin_overflow,
  no_fundamental,
  duplicate_harmonic,
  unknown_name,
  frequency_out_of_range,
  gain_length_mismatch,
  not_power_of_two,
  bad_count,
  zero_candidate,
  bad_argument,
};

// Domain error with a machine-checkable code; the message is for humans.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

}  // namespace gdt
