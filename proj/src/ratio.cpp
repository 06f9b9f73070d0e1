#include "permstat/ratio.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace permstat {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    BigInt v(std::string(s), 10);
    return negative ? BigInt(-v) : v;
}

}  // namespace

ExactRatio::ExactRatio(std::int64_t value) : value_(static_cast<long>(value)) {}

ExactRatio::ExactRatio(std::int64_t numerator, std::int64_t denominator)
    : ExactRatio(BigInt(static_cast<long>(numerator)), BigInt(static_cast<long>(denominator))) {}

ExactRatio::ExactRatio(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRatio::ExactRatio(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactRatio ExactRatio::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), text);
        BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        return ExactRatio(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole_part = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole_part.empty() && whole_part.front() == '-';
        if (!whole_part.empty() && (whole_part.front() == '-' || whole_part.front() == '+'))
            whole_part.remove_prefix(1);
        if (whole_part.empty() && frac.empty()) throw std::invalid_argument("not a number: '" + std::string(text) + "'");
        if ((!whole_part.empty() && !all_digits(whole_part)) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("not a number: '" + std::string(text) + "'");
        std::string digits = std::string(whole_part) + std::string(frac);
        BigInt num(digits.empty() ? std::string("0") : digits, 10);
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        if (negative) num = -num;
        return ExactRatio(num, den);
    }
    return ExactRatio(parse_integer(text, text), BigInt(1));
}

std::string ExactRatio::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string ExactRatio::to_decimal(int digits) const {
    // Round half away from zero at the requested number of digits.
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt num = value_.get_num();
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scaled = (2 * num * scale + value_.get_den()) / (2 * value_.get_den());
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

ExactRatio ExactRatio::operator-() const { return ExactRatio(mpq_class(-value_)); }
ExactRatio& ExactRatio::operator+=(const ExactRatio& rhs) { value_ += rhs.value_; return *this; }
ExactRatio& ExactRatio::operator-=(const ExactRatio& rhs) { value_ -= rhs.value_; return *this; }
ExactRatio& ExactRatio::operator*=(const ExactRatio& rhs) { value_ *= rhs.value_; return *this; }
ExactRatio& ExactRatio::operator/=(const ExactRatio& rhs) {
    if (rhs.value_ == 0) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExactRatio abs(const ExactRatio& r) { return r < ExactRatio(0) ? -r : r; }

std::ostream& operator<<(std::ostream& os, const ExactRatio& r) { return os << r.to_string(); }

}  // namespace permstat
