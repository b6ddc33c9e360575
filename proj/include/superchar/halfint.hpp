#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace superchar {

// Exact rational with denominator 1 or 2, stored as twice its value.
// Weight entries are integers everywhere except bare rho for gl(m|n)
// with m+n even, so a dedicated type beats general rationals.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int v) : twice_(2 * static_cast<std::int64_t>(v)) {}
  constexpr HalfInt(long v) : twice_(2 * static_cast<std::int64_t>(v)) {}
  constexpr HalfInt(long long v) : twice_(2 * static_cast<std::int64_t>(v)) {}

  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  std::int64_t integer() const {
    if (!is_integer()) throw std::logic_error("HalfInt: " + str() + " is not an integer");
    return twice_ / 2;
  }

  friend constexpr HalfInt operator+(HalfInt x, HalfInt y) { return from_twice(x.twice_ + y.twice_); }
  friend constexpr HalfInt operator-(HalfInt x, HalfInt y) { return from_twice(x.twice_ - y.twice_); }
  friend constexpr HalfInt operator-(HalfInt x) { return from_twice(-x.twice_); }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt x) { return from_twice(k * x.twice_); }

  HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  std::int64_t twice_ = 0;
};

}  // namespace superchar
