#include "acr/dyadic.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "acr/error.hpp"

namespace acr {

namespace {

BigInt pow2(unsigned k) {
    BigInt r = 1;
    r <<= k;
    return r;
}

}  // namespace

Dyadic::Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) {
    if (num_ < 0) throw DomainError("Dyadic: negative numerator");
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    const unsigned tz = static_cast<unsigned>(boost::multiprecision::lsb(num_));
    const unsigned shift = std::min(tz, exp_);
    num_ >>= shift;
    exp_ -= shift;
}

Dyadic Dyadic::integer(std::int64_t k) { return Dyadic(BigInt(k), 0); }

Dyadic Dyadic::pow2_inverse(unsigned k) { return Dyadic(BigInt(1), k); }

BigInt Dyadic::floor() const { return num_ >> exp_; }

Dyadic Dyadic::frac() const { return Dyadic(num_ & (pow2(exp_) - 1), exp_); }

Dyadic Dyadic::scaled(int k) const {
    if (k >= 0) {
        const unsigned uk = static_cast<unsigned>(k);
        if (uk <= exp_) return Dyadic(num_, exp_ - uk);
        return Dyadic(num_ << (uk - exp_), 0);
    }
    return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    const unsigned e = std::max(exp_, o.exp_);
    return Dyadic((num_ << (e - exp_)) + (o.num_ << (e - o.exp_)), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
    const unsigned e = std::max(exp_, o.exp_);
    BigInt d = (num_ << (e - exp_)) - (o.num_ << (e - o.exp_));
    if (d < 0) throw DomainError("Dyadic: subtraction result is negative");
    return Dyadic(std::move(d), e);
}

Dyadic Dyadic::operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, exp_ + o.exp_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const unsigned e = std::max(a.exp_, b.exp_);
    const BigInt x = a.num_ << (e - a.exp_);
    const BigInt y = b.num_ << (e - b.exp_);
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + pow2(exp_).str();
}

std::string Dyadic::to_pow2_string() const { return num_.str() + "/2^" + std::to_string(exp_); }

std::string Dyadic::to_decimal() const {
    std::string out = floor().str();
    if (exp_ == 0) return out;
    // p/2^q = p * 5^q / 10^q, so the fraction has exactly q digits.
    BigInt f = frac().num_ << (exp_ - frac().exp_);
    BigInt five = 1;
    for (unsigned i = 0; i < exp_; ++i) five *= 5;
    std::string digits = BigInt(f * five).str();
    if (digits.size() < exp_) digits.insert(0, exp_ - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    return out + "." + digits;
}

double Dyadic::to_double() const { return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_)); }

namespace {

BigInt parse_big(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ParseError("dyadic: expected digits in '" + std::string(whole) + "'", 0);
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("dyadic: invalid character in '" + std::string(whole) + "'", 0);
    }
    return BigInt(std::string(s));
}

}  // namespace

Dyadic Dyadic::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Dyadic(parse_big(text, whole), 0);
    const BigInt p = parse_big(text.substr(0, slash), whole);
    std::string_view den = text.substr(slash + 1);
    if (den.starts_with("2^")) {
        den.remove_prefix(2);
        unsigned q = 0;
        auto [ptr, ec] = std::from_chars(den.data(), den.data() + den.size(), q);
        if (ec != std::errc{} || ptr != den.data() + den.size() || q > 100000) {
            throw ParseError("dyadic: invalid exponent in '" + std::string(whole) + "'", slash + 3);
        }
        return Dyadic(p, q);
    }
    const BigInt d = parse_big(den, whole);
    if (d == 0 || (d & (d - 1)) != 0) {
        throw ParseError("dyadic: denominator is not a power of two in '" + std::string(whole) + "'", slash + 1);
    }
    return Dyadic(p, static_cast<unsigned>(boost::multiprecision::msb(d)));
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

}  // namespace acr
