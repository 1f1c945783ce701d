#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

enum class errc {
  invalid_parameter,
  invalid_input,
  invalid_granularity,
  invalid_support,
  invalid_function,
  precision_loss,
  unsupported_graph,
  parse_error,
  infeasible,
  timeout,
  arithmetic_overflow,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace chipfire
