#ifndef BRIDGECENSUS_FRACTION_HPP
#define BRIDGECENSUS_FRACTION_HPP

#include <compare>
#include <string>
#include <string_view>

#include "bridgecensus/integer.hpp"

namespace bridgecensus {

/// Exact rational q/p in lowest terms with p >= 1. Zero is 0/1.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}

  Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) fail(ErrorKind::UndefinedValue, "fraction with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  /// Parses "q/p" (also plain "q", meaning q/1).
  static Fraction parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::strong_ordering operator<=>(const Fraction& o) const {
    int c = cmp(Integer(num_ * o.den_), Integer(o.num_ * den_));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return num_.get_str() + "/" + den_.get_str(); }

 private:
  Integer num_;
  Integer den_;
};

}  // namespace bridgecensus

#endif  // BRIDGECENSUS_FRACTION_HPP
