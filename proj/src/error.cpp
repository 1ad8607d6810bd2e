#include "rankability/error.hpp"

namespace rankability {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_square: return "non_square";
    case Errc::self_loop: return "self_loop";
    case Errc::non_binary_entry: return "non_binary_entry";
    case Errc::too_small: return "too_small";
    case Errc::too_large: return "too_large";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::timeout: return "timeout";
    case Errc::empty_spectrum: return "empty_spectrum";
    case Errc::no_convergence: return "no_convergence";
    case Errc::bad_probability: return "bad_probability";
    case Errc::bad_config: return "bad_config";
    case Errc::empty_training_set: return "empty_training_set";
    case Errc::vertex_count_mismatch: return "vertex_count_mismatch";
    case Errc::io_error: return "io_error";
    case Errc::schema_version_mismatch: return "schema_version_mismatch";
    case Errc::corrupt_model: return "corrupt_model";
    case Errc::malformed_row: return "malformed_row";
    case Errc::missing_header: return "missing_header";
    case Errc::too_few_teams: return "too_few_teams";
    case Errc::unknown_season: return "unknown_season";
    case Errc::model_missing: return "model_missing";
    case Errc::degenerate_input: return "degenerate_input";
    case Errc::invalid_input: return "invalid_input";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace rankability
