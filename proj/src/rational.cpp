#include "circhi/rational.hpp"

#include <charconv>
#include <climits>
#include <ostream>

namespace circhi {

void Rational::normalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (num_ == LLONG_MIN || den_ == LLONG_MIN) throw OverflowError("rational magnitude too large");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

namespace {

long long parse_ll(std::string_view text) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("invalid integer '" + std::string(text) + "'");
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_ll(text));
    return Rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational rational_mod(const Rational& value, const Rational& modulus) {
    if (modulus <= Rational(0)) throw DomainError("modulus must be positive");
    // floor(value / modulus) fits easily in 128 bits.
    __int128 n = static_cast<__int128>(value.num()) * modulus.den();
    __int128 d = static_cast<__int128>(value.den()) * modulus.num();
    __int128 q = n / d;
    if (n % d != 0 && (n < 0) != (d < 0)) --q;
    if (q > LLONG_MAX || q < LLONG_MIN) throw OverflowError("rational_mod quotient overflow");
    return value - Rational(static_cast<long long>(q)) * modulus;
}

}  // namespace circhi
