#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "hnnforge/config.hpp"
#include "hnnforge/errors.hpp"

namespace hnnforge {

using BigInt = boost::multiprecision::cpp_int;

inline std::uint64_t bit_size(const BigInt& n) {
  if (n.is_zero()) return 0;
  return static_cast<std::uint64_t>(msb(abs(n))) + 1;
}

// n * 2^amount with amount >= 0, refusing to allocate past the bit cap.
inline BigInt checked_shl(const BigInt& n, const BigInt& amount) {
  if (n.is_zero() || amount.is_zero()) return n;
  const BigInt out_bits = amount + bit_size(n);
  if (out_bits > config::bit_cap())
    throw ResourceLimitError("dyadic numerator would exceed " +
                             std::to_string(config::bit_cap()) + " bits");
  return n << amount.convert_to<std::size_t>();
}

// Exact element of Z[1/2]: value = num / 2^exp.
// Invariants: exp >= 0; exp == 0 or num is odd; num == 0 implies exp == 0.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  explicit Dyadic(BigInt integer) : num_(std::move(integer)), exp_(0) { check_cap(); }
  explicit Dyadic(long long integer) : num_(integer), exp_(0) {}

  // value = num / 2^exp for any sign of exp; normalizes.
  static Dyadic make(BigInt num, BigInt exp) {
    Dyadic d;
    if (exp.sign() < 0) {
      num = checked_shl(num, -exp);
      exp = 0;
    }
    d.num_ = std::move(num);
    d.exp_ = std::move(exp);
    d.normalize();
    return d;
  }

  const BigInt& num() const { return num_; }
  const BigInt& exp() const { return exp_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return exp_.is_zero(); }

  // value * 2^s
  Dyadic scaled_pow2(const BigInt& s) const { return make(num_, exp_ - s); }

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y) {
    const BigInt& e = x.exp_ >= y.exp_ ? x.exp_ : y.exp_;
    return make(checked_shl(x.num_, e - x.exp_) + checked_shl(y.num_, e - y.exp_), e);
  }
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }
  Dyadic operator-() const {
    Dyadic d(*this);
    d.num_ = -d.num_;
    return d;
  }

  friend bool operator==(const Dyadic& x, const Dyadic& y) {
    return x.num_ == y.num_ && x.exp_ == y.exp_;
  }
  friend bool operator!=(const Dyadic& x, const Dyadic& y) { return !(x == y); }

  // "num" when integral, "num/2^exp" otherwise.
  std::string to_string() const {
    std::string s = num_.str();
    if (!exp_.is_zero()) s += "/2^" + exp_.str();
    return s;
  }

  void normalize() {
    if (num_.is_zero()) {
      exp_ = 0;
    } else if (!exp_.is_zero()) {
      BigInt twos(lsb(abs(num_)));  // trailing zero bits
      if (twos > exp_) twos = exp_;
      if (!twos.is_zero()) {
        num_ >>= twos.convert_to<std::size_t>();
        exp_ -= twos;
      }
    }
    check_cap();
  }

 private:
  void check_cap() const {
    if (bit_size(num_) > config::bit_cap())
      throw ResourceLimitError("dyadic numerator exceeds " +
                               std::to_string(config::bit_cap()) + " bits");
  }

  BigInt num_;
  BigInt exp_;
};

}  // namespace hnnforge
