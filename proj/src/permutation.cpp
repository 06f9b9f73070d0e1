#include "permstat/permutation.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace permstat {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("permutation must have n >= 1");
    const int n = size();
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("value " + std::to_string(v) + " repeated; not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation::Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::reversal(int n) {
    if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("incompatible sizes in composition");
    std::vector<int> v(images_.size());
    for (int i = 1; i <= size(); ++i) v[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
    return Permutation(std::move(v), Unchecked{});
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(images_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << '(' << p.to_string() << ')'; }

Permutation parse_permutation(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';

    std::istringstream in(normalized);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);

    std::size_t first = 0;
    if (!tokens.empty() && tokens[0].rfind("n=", 0) == 0) first = 1;
    if (first == tokens.size()) throw std::invalid_argument("empty permutation");

    const int n = static_cast<int>(tokens.size() - first);
    std::vector<int> images;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t k = first; k < tokens.size(); ++k) {
        const std::string& tok = tokens[k];
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad token '" + tok + "': not an integer");
        if (v < 1 || v > n)
            throw std::invalid_argument("bad token '" + tok + "': out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("bad token '" + tok + "': repeated value, not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
        images.push_back(v);
    }
    return Permutation(std::move(images));
}

}  // namespace permstat
