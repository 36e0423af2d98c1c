#pragma once

#include <string>

namespace stconn {

// Nonnegative quantity that may be infinite (resistance, capacitance,
// witness sizes). Infinity is a tag, never a floating-point inf.
class TwoTerminalValue {
 public:
  static TwoTerminalValue finite(double value);
  static TwoTerminalValue infinite() { return TwoTerminalValue(true, 0.0); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  // Throws if infinite.
  double value() const;

  std::string to_string() const;

  friend bool operator==(const TwoTerminalValue&, const TwoTerminalValue&) = default;

 private:
  TwoTerminalValue(bool inf, double v) : infinite_(inf), value_(v) {}

  bool infinite_;
  double value_;
};

}  // namespace stconn
