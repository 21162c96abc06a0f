#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace acr {

using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative rational num / 2^exp, kept normalized (num odd or exp 0).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(BigInt num, unsigned exp);
    static Dyadic integer(std::int64_t k);
    /// 2^{-k}.
    static Dyadic pow2_inverse(unsigned k);

    const BigInt& num() const noexcept { return num_; }
    unsigned exp() const noexcept { return exp_; }
    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return exp_ == 0; }

    /// Largest integer not above the value.
    BigInt floor() const;
    /// value - floor(value).
    Dyadic frac() const;
    /// value * 2^k.
    Dyadic scaled(int k) const;

    Dyadic operator+(const Dyadic& o) const;
    /// Throws DomainError when the result would be negative.
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

    /// "p/d" in lowest terms ("25/16"), or just "p" for integers.
    std::string to_string() const;
    /// "p/2^q" ("25/2^4"); integers as "p/2^0".
    std::string to_pow2_string() const;
    /// Exact terminating decimal ("1.5625").
    std::string to_decimal() const;
    double to_double() const;

    /// Accepts "p/2^q", "p/d" with d a power of two, and plain integers.
    static Dyadic parse(std::string_view text);

private:
    BigInt num_ = 0;
    unsigned exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

}  // namespace acr
