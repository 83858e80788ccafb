#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace starspec {

enum class Errc {
  order_too_large,
  bad_edge,
  parse_error,
  empty_graph,
  disconnected,
  param_out_of_range,
  no_regular_graph,
  negative_discriminant,
  division_by_zero_k2,
  empty_class,
  io_error,
};

/// Stable identifier for an error kind, used in CLI messages and JSON.
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(Errc code, const std::string& message, std::size_t position = npos)
      : std::runtime_error(message), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }

  /// Byte offset for graph6 parse errors, line number for record files.
  std::size_t position() const noexcept { return position_; }

 private:
  Errc code_;
  std::size_t position_;
};

}  // namespace starspec
