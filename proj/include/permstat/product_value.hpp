#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "permstat/ratio.hpp"

namespace permstat {

/// The quantity (product / divisor)^(1/root), kept exact. For the
/// consecutive-pairs family the divisor is always 1 and the product is an
/// integer ≥ 1. Roots are never taken: comparing values of different roots
/// cross-powers the integers.
struct ProductValue {
    BigInt product{1};
    BigInt divisor{1};
    unsigned root = 1;

    bool is_integral() const { return divisor == 1; }

    /// Compares (p1/d1)^(1/r1) with (p2/d2)^(1/r2) via p1^r2·d2^r1 vs p2^r1·d1^r2.
    friend std::strong_ordering operator<=>(const ProductValue& a, const ProductValue& b);
    /// Numeric equality: 4 with root 2 equals 2 with root 1.
    friend bool operator==(const ProductValue& a, const ProductValue& b) { return (a <=> b) == 0; }

    /// Floating approximation of the root, for display only.
    double approximate() const;
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const ProductValue& v);

}  // namespace permstat
