#pragma once

#include <cstddef>
#include <vector>

#include "sturm/permutation.hpp"

namespace sturm {

enum class Sign { minus, plus };

constexpr Sign flip(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr char sign_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

/// Zero number with the sign of the difference at x=0, written j_+ / j_-.
struct SignedZ {
    int value = 0;
    Sign sign = Sign::plus;

    friend bool operator==(const SignedZ&, const SignedZ&) = default;
};

/// Runs the Morse index recursion forward from i_1 = 0 without checking any
/// precondition. Used by validation, which wants every property reported.
std::vector<int> morse_recursion(const Permutation& sigma);

/// Morse indices i_1..i_N (index 0 holds i_1). Throws NotDissipative, or
/// AnchorMismatch when the recursion does not land on i_N = 0.
std::vector<int> morse_indices(const Permutation& sigma);

/// Morse indices and the symmetric matrix of unsigned zero numbers z(v_j - v_k).
class ZeroData {
public:
    ZeroData() = default;
    ZeroData(std::vector<int> morse, std::vector<int> zmatrix);

    std::size_t size() const noexcept { return morse_.size(); }
    int morse(Label k) const { return morse_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<int>& morse_vector() const noexcept { return morse_; }
    int z(Label j, Label k) const {
        return zmatrix_[static_cast<std::size_t>(j - 1) * morse_.size() + static_cast<std::size_t>(k - 1)];
    }

private:
    std::vector<int> morse_;
    std::vector<int> zmatrix_;
};

/// Fills each column upward from z_1k = 0 and downward from z_Nk = 0, then
/// requires the two triangles to agree (SymmetryViolation otherwise).
ZeroData zero_matrix(const Permutation& sigma);

/// z(w - v) with the sign of (w - v) at x=0; labels are h0-positions so the
/// sign is plus iff w > v. Throws EqualLabels for w == v.
SignedZ signed_zero(const ZeroData& zd, Label w, Label v);

}  // namespace sturm
