#pragma once

#include <stdexcept>
#include <string>

namespace metanil {

enum class Errc {
  degree_mismatch,
  invalid_spec,
  parse_error,
  too_large,
  not_member,
  not_normal,
  not_soluble,
  not_coprime,
  not_perfect,
  not_metanilpotent,
  hypothesis_not_met,
  no_witness,
  unsupported_parameter,
  internal_inconsistency,
};

const char* to_string(Errc code);

/// Library failure carrying a machine-checkable code plus a human message.
/// The CLI maps codes to process exit codes (input errors -> 2, resource
/// caps -> 3, everything else -> 1).
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

}  // namespace metanil
