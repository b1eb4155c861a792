#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sturm {

/// Equilibrium label. Throughout the library labels are 1-based positions in
/// the x=0 boundary order (h0 = id).
using Label = int;

/// A permutation of {1..N} in one-line notation: `(*this)(k)` is the image of k.
class Permutation {
public:
    Permutation() = default;

    /// Throws Error{NotABijection} unless `images` is a bijection of {1..N}.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    bool empty() const noexcept { return images_.empty(); }

    /// 1-based image lookup.
    int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }

    std::span<const int> images() const noexcept { return images_; }

    Permutation inverse() const;
    bool is_involution() const;
    bool is_dissipative() const noexcept;

    /// Canonical one-line text: images separated by single spaces.
    std::string to_string() const;
    /// Disjoint-cycle form, fixed points omitted, e.g. "(2 8 14)(3 9)".
    std::string to_cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Accepts one-line notation (whitespace or comma separated, optionally in
/// braces) or "cycles: (a b ...)(c d ...) n=N".
Permutation parse_permutation(std::string_view text);

Permutation invert(const Permutation& p);

/// (compose(p, q))(k) = p(q(k)).
Permutation compose(const Permutation& p, const Permutation& q);

/// k -> N+1-k.
Permutation reversal(std::size_t n);

/// {sigma, x->1-x, u->-u, both}: sigma, sigma^-1, k sigma k, k sigma^-1 k with k = reversal.
std::array<Permutation, 4> trivial_equivalences(const Permutation& sigma);

/// Sturm permutation of the n-dimensional Chafee-Infante attractor on 2n+1 letters.
Permutation chafee_infante(int n);

}  // namespace sturm
