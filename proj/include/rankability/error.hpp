#pragma once

#include <stdexcept>
#include <string>

namespace rankability {

enum class Errc {
  non_square,
  self_loop,
  non_binary_entry,
  too_small,
  too_large,
  index_out_of_range,
  length_mismatch,
  timeout,
  empty_spectrum,
  no_convergence,
  bad_probability,
  bad_config,
  empty_training_set,
  vertex_count_mismatch,
  io_error,
  schema_version_mismatch,
  corrupt_model,
  malformed_row,
  missing_header,
  too_few_teams,
  unknown_season,
  model_missing,
  degenerate_input,
  invalid_input,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rankability
