#include "stconn/extended_real.hpp"

#include <cmath>
#include <cstdio>

#include "stconn/error.hpp"

namespace stconn {

TwoTerminalValue TwoTerminalValue::finite(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw Error(ErrorCode::BadInput, "finite two-terminal value must be a nonnegative real");
  }
  return TwoTerminalValue(false, value);
}

double TwoTerminalValue::value() const {
  if (infinite_) throw Error(ErrorCode::BadInput, "value() on an infinite quantity");
  return value_;
}

std::string TwoTerminalValue::to_string() const {
  if (infinite_) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

}  // namespace stconn
