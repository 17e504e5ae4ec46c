#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace setupprob {

/**
 * Exact fraction on 64-bit integers.
 *
 * Always stored reduced with a positive denominator; zero is 0/1.
 * Intermediate products are formed in 128 bits and the result must fit
 * back into int64, otherwise std::overflow_error is thrown.
 */
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }

    constexpr bool is_zero() const noexcept { return num_ == 0; }

    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "a/b", or "a" when the denominator is 1.
    std::string to_string() const;

    // Inverse of to_string. Accepts "a", "-a", "a/b", "-a/b" with b > 0;
    // the input need not be reduced. Returns nullopt on anything else,
    // including values that overflow.
    static std::optional<Rational> from_string(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

private:
    static Rational from_wide(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace setupprob
