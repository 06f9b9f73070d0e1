#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace permstat {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Equality and ordering never round.
class ExactRatio {
public:
    ExactRatio() = default;
    ExactRatio(std::int64_t value);  // NOLINT: implicit from integers is intended
    ExactRatio(std::int64_t numerator, std::int64_t denominator);
    ExactRatio(const BigInt& numerator, const BigInt& denominator);
    explicit ExactRatio(mpq_class value);

    /// Parses "p/q", an integer, or a finite decimal such as "0.125".
    /// Decimals are converted exactly (0.1 becomes 1/10).
    static ExactRatio parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& value() const { return value_; }

    double to_double() const { return value_.get_d(); }

    /// Always "p/q", including integers ("2/1") and zero ("0/1").
    std::string to_string() const;

    /// Fixed-point rendering for human-readable output only.
    std::string to_decimal(int digits = 6) const;

    ExactRatio operator-() const;
    ExactRatio& operator+=(const ExactRatio& rhs);
    ExactRatio& operator-=(const ExactRatio& rhs);
    ExactRatio& operator*=(const ExactRatio& rhs);
    ExactRatio& operator/=(const ExactRatio& rhs);

    friend ExactRatio operator+(ExactRatio lhs, const ExactRatio& rhs) { return lhs += rhs; }
    friend ExactRatio operator-(ExactRatio lhs, const ExactRatio& rhs) { return lhs -= rhs; }
    friend ExactRatio operator*(ExactRatio lhs, const ExactRatio& rhs) { return lhs *= rhs; }
    friend ExactRatio operator/(ExactRatio lhs, const ExactRatio& rhs) { return lhs /= rhs; }

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b);

private:
    mpq_class value_{0};
};

ExactRatio abs(const ExactRatio& r);

std::ostream& operator<<(std::ostream& os, const ExactRatio& r);

}  // namespace permstat
