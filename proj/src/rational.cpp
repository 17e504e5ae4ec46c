#include "setupprob/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace setupprob {

namespace {

using wide = __int128;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(wide v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational Rational::from_wide(wide n, wide d) {
    if (d == 0) throw std::domain_error("rational: division by zero");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational{};
    wide g = wide_gcd(n, d);
    n /= g;
    d /= g;
    if (!fits(n) || !fits(d)) throw std::overflow_error("rational: value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
    *this = from_wide(static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_,
                      static_cast<wide>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    *this = from_wide(static_cast<wide>(num_) * rhs.den_ - static_cast<wide>(rhs.num_) * den_,
                      static_cast<wide>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    // Cross-reduce first so products of reduced operands stay small.
    wide g1 = wide_gcd(num_, rhs.den_);
    wide g2 = wide_gcd(rhs.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    *this = from_wide((static_cast<wide>(num_) / g1) * (static_cast<wide>(rhs.num_) / g2),
                      (static_cast<wide>(den_) / g2) * (static_cast<wide>(rhs.den_) / g1));
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational: division by zero");
    *this = from_wide(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    wide lhs = static_cast<wide>(a.num_) * b.den_;
    wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::from_string(std::string_view text) {
    auto parse_int = [](std::string_view s, std::int64_t& out) {
        if (s.empty()) return false;
        std::size_t start = (s.front() == '-') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && ptr == s.data() + s.size();
    };
    std::int64_t n = 0;
    std::int64_t d = 1;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!parse_int(text, n)) return std::nullopt;
        return Rational(n);
    }
    std::string_view dtext = text.substr(slash + 1);
    if (!parse_int(text.substr(0, slash), n) || dtext.empty() || dtext.front() == '-' ||
        !parse_int(dtext, d) || d == 0)
        return std::nullopt;
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace setupprob
