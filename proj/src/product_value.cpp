#include "permstat/product_value.hpp"

#include <cmath>
#include <ostream>

namespace permstat {

namespace {
BigInt power(const BigInt& base, unsigned exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}
}  // namespace

std::strong_ordering operator<=>(const ProductValue& a, const ProductValue& b) {
    BigInt lhs = power(a.product, b.root) * power(b.divisor, a.root);
    BigInt rhs = power(b.product, a.root) * power(a.divisor, b.root);
    int c = cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double ProductValue::approximate() const {
    // log-space so that huge products do not overflow a double
    const double log_value = std::log(product.get_d()) - std::log(divisor.get_d());
    return std::exp(log_value / root);
}

std::string ProductValue::to_string() const {
    std::string out = "(" + product.get_str();
    if (divisor != 1) out += "/" + divisor.get_str();
    return out + ")^(1/" + std::to_string(root) + ")";
}

std::ostream& operator<<(std::ostream& os, const ProductValue& v) { return os << v.to_string(); }

}  // namespace permstat
