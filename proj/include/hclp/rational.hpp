#ifndef HCLP_RATIONAL_HPP
#define HCLP_RATIONAL_HPP

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hclp/error.hpp"

namespace hclp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline u128 abs_u128(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

inline BigInt to_big_int(i128 v) {
  const u128 mag = abs_u128(v);
  BigInt r = static_cast<std::uint64_t>(mag >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(mag);
  return v < 0 ? BigInt(-r) : r;
}

// Small values exclude INT64_MIN so negation never overflows.
constexpr std::int64_t small_min = std::numeric_limits<std::int64_t>::min() + 1;
constexpr std::int64_t small_max = std::numeric_limits<std::int64_t>::max();

inline bool fits_small(i128 v) { return v >= small_min && v <= small_max; }

inline bool fits_small(const BigInt& v) { return v >= small_min && v <= small_max; }

}  // namespace detail

/// Exact rational number, always normalized (denominator > 0, lowest terms).
///
/// Values that fit in 64-bit numerator/denominator are stored inline and all
/// arithmetic on them goes through 128-bit intermediates, so the common case
/// never allocates. Anything larger is carried as a Boost.Multiprecision
/// rational. A value is held in big form only when it does not fit the small
/// form, which keeps equality a field comparison.
class Rational {
 public:
  Rational() noexcept = default;

  Rational(std::int64_t value) {  // NOLINT(google-explicit-constructor)
    if (value == std::numeric_limits<std::int64_t>::min()) {
      big_ = std::make_shared<const BigRational>(value);
    } else {
      num_ = value;
    }
  }

  Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
    *this = from_i128(numerator, denominator);
  }

  explicit Rational(const BigRational& value) { assign_big(value); }

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
    assign_big(BigRational(numerator, denominator));
  }

  /// Parses "n" or "n/d" with an optional leading '-'. No whitespace.
  static Rational parse(std::string_view text) {
    auto malformed = [&] {
      return Error(ErrorCode::MalformedRational,
                   "malformed rational \"" + std::string(text) + "\"");
    };
    if (text.empty()) throw malformed();
    bool negative = false;
    std::string_view body = text;
    if (body.front() == '-') {
      negative = true;
      body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num_text = body.substr(0, slash);
    std::string_view den_text =
        slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    auto all_digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char ch : s)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    if (!all_digits(num_text)) throw malformed();
    if (slash != std::string_view::npos && !all_digits(den_text)) throw malformed();

    auto parse_int = [](std::string_view digits) -> BigInt {
      if (digits.size() <= 18) {
        std::int64_t v = 0;
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
        return BigInt(v);
      }
      return BigInt(std::string(digits));
    };
    BigInt num = parse_int(num_text);
    BigInt den = den_text.empty() ? BigInt(1) : parse_int(den_text);
    if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator in \"" + std::string(text) + "\"");
    if (negative) num = -num;
    return Rational(num, den);
  }

  bool is_small() const noexcept { return !big_; }

  BigInt numerator() const { return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_); }
  BigInt denominator() const { return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_); }

  BigRational to_big() const { return big_ ? *big_ : BigRational(num_, den_); }

  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }

  std::string to_string() const {
    if (big_) {
      BigInt d = denominator();
      return d == 1 ? numerator().str() : numerator().str() + "/" + d.str();
    }
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_) return Rational(BigRational(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(a.to_big() + b.to_big());
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t sum = 0;
      if (!__builtin_add_overflow(a.num_, b.num_, &sum) && sum != std::numeric_limits<std::int64_t>::min())
        return Rational(sum);
    }
    using detail::i128;
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return Rational(a.to_big() * b.to_big());
    using detail::i128;
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw Error(ErrorCode::ZeroDenominator, "division by zero");
    if (a.big_ || b.big_) return Rational(a.to_big() / b.to_big());
    using detail::i128;
    i128 num = i128(a.num_) * b.den_;
    i128 den = i128(a.den_) * b.num_;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return from_i128(num, den);
  }

  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return a.num_ <=> b.num_;
      using detail::i128;
      const i128 lhs = i128(a.num_) * b.den_;
      const i128 rhs = i128(b.num_) * a.den_;
      return lhs < rhs ? std::strong_ordering::less
                       : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    const BigRational x = a.to_big();
    const BigRational y = b.to_big();
    return x < y ? std::strong_ordering::less
                 : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static Rational from_i128(detail::i128 num, detail::i128 den) {
    using namespace detail;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return Rational();
    const u128 g = gcd_u128(abs_u128(num), u128(den));
    if (g > 1) {
      num /= i128(g);
      den /= i128(g);
    }
    Rational r;
    if (fits_small(num) && den <= small_max) {
      r.num_ = static_cast<std::int64_t>(num);
      r.den_ = static_cast<std::int64_t>(den);
    } else {
      r.big_ = std::make_shared<const BigRational>(to_big_int(num), to_big_int(den));
    }
    return r;
  }

  void assign_big(const BigRational& value) {
    const BigInt n = boost::multiprecision::numerator(value);
    const BigInt d = boost::multiprecision::denominator(value);
    if (detail::fits_small(n) && detail::fits_small(d)) {
      num_ = n.convert_to<std::int64_t>();
      den_ = d.convert_to<std::int64_t>();
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_shared<const BigRational>(value);
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;
};

}  // namespace hclp

#endif  // HCLP_RATIONAL_HPP
