#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qplab {

enum class ErrorKind {
  ring_mismatch,
  field_mismatch,
  domain,
  invalid_coordinate_change,
  empty_variety,
  indeterminacy,
  no_sampler,
  sampling_failure,
  degenerate_input,
  bad_basepoint,
  non_embedding,
  precondition,
  genericity_failure,
  containment,
  rank,
  membership,
  nondegeneracy,
  extraction_failure,
  bad_container,
  totally_real_required,
  input_contract,
  parse,
  usage,
  unsupported,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qplab
