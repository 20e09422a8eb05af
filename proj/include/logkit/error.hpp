#pragma once

#include <stdexcept>
#include <string>

namespace logkit {

enum class Errc {
  empty_input,
  malformed_line,
  duplicate_edge,
  duplicate_vertex,
  unknown_vertex,
  not_a_tree,
  invalid_parameter,
  not_compressed,
  not_cyclically_reduced,
  unknown_generator,
  invalid_exponent,
  not_in_kernel_map,
  degenerate,
  table_not_closed,
  missing_angle,
  bad_format,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace logkit
