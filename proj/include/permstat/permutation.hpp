#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace permstat {

/// A bijection of {1, ..., n} in one-line notation. All indices and values
/// are 1-based: `p(i)` is the image of i.
class Permutation {
public:
    /// Throws std::invalid_argument when `images` is empty or not a
    /// bijection of {1, ..., images.size()}.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images);

    static Permutation identity(int n);
    /// i -> n + 1 - i.
    static Permutation reversal(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> images() const { return images_; }

    Permutation inverse() const;
    /// (this ∘ other)(i) = this(other(i)); `other` is applied first.
    Permutation compose(const Permutation& other) const;

    /// Space-separated one-line notation, e.g. "2 4 1 3".
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

    std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Reads whitespace- or comma-separated one-line notation. A leading
/// "n=<k>" token is ignored. Errors name the first offending token.
Permutation parse_permutation(const std::string& text);

}  // namespace permstat
