#include "sturm/zero_data.hpp"

#include <string>

#include "sturm/error.hpp"

namespace sturm {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

}  // namespace

std::vector<int> morse_recursion(const Permutation& sigma) {
    const auto n = static_cast<int>(sigma.size());
    if (n == 0) return {};
    const Permutation inv = sigma.inverse();
    std::vector<int> morse(static_cast<std::size_t>(n), 0);
    for (int k = 1; k < n; ++k) {
        const int parity = (k % 2 == 1) ? 1 : -1;  // (-1)^(k+1)
        morse[static_cast<std::size_t>(k)] =
            morse[static_cast<std::size_t>(k - 1)] + parity * sgn(inv(k + 1) - inv(k));
    }
    return morse;
}

std::vector<int> morse_indices(const Permutation& sigma) {
    if (!sigma.is_dissipative()) {
        throw Error(ErrorKind::NotDissipative, "sigma(1)=1 and sigma(N)=N required, got " + sigma.to_string());
    }
    auto morse = morse_recursion(sigma);
    if (morse.back() != 0) {
        throw Error(ErrorKind::AnchorMismatch, "recursion ends at i_N=" + std::to_string(morse.back()));
    }
    return morse;
}

ZeroData::ZeroData(std::vector<int> morse, std::vector<int> zmatrix)
    : morse_(std::move(morse)), zmatrix_(std::move(zmatrix)) {}

ZeroData zero_matrix(const Permutation& sigma) {
    auto morse = morse_indices(sigma);
    const auto n = static_cast<int>(sigma.size());
    const auto un = static_cast<std::size_t>(n);
    const Permutation inv = sigma.inverse();

    // Column-wise fill; upper[j][k] holds rows j < k, lower rows j > k.
    std::vector<int> upper(un * un, 0);
    std::vector<int> lower(un * un, 0);
    auto at = [un](std::vector<int>& m, int j, int k) -> int& {
        return m[static_cast<std::size_t>(j - 1) * un + static_cast<std::size_t>(k - 1)];
    };
    auto step = [&](int j, int k) {
        const int parity = (j % 2 == 0) ? -1 : 1;  // (-1)^(j+1)
        return parity * (sgn(inv(j + 1) - inv(k)) - sgn(inv(j) - inv(k))) / 2;
    };

    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j + 1 <= k - 1; ++j) at(upper, j + 1, k) = at(upper, j, k) + step(j, k);
        for (int j = n - 1; j >= k + 1; --j) at(lower, j, k) = at(lower, j + 1, k) - step(j, k);
    }

    std::vector<int> z(un * un, 0);
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            if (j == k) {
                at(z, j, k) = morse[static_cast<std::size_t>(k - 1)];
                continue;
            }
            const int here = j < k ? at(upper, j, k) : at(lower, j, k);
            const int mirrored = k < j ? at(upper, k, j) : at(lower, k, j);
            if (here != mirrored) {
                throw Error(ErrorKind::SymmetryViolation, "z(" + std::to_string(j) + "," + std::to_string(k) +
                                                              ")=" + std::to_string(here) + " but z(" +
                                                              std::to_string(k) + "," + std::to_string(j) +
                                                              ")=" + std::to_string(mirrored));
            }
            at(z, j, k) = here;
        }
    }
    return ZeroData(std::move(morse), std::move(z));
}

SignedZ signed_zero(const ZeroData& zd, Label w, Label v) {
    if (w == v) throw Error(ErrorKind::EqualLabels, "label " + std::to_string(w));
    const auto n = static_cast<Label>(zd.size());
    if (w < 1 || v < 1 || w > n || v > n) {
        throw Error(ErrorKind::UnknownLabel, std::to_string(w) + " or " + std::to_string(v));
    }
    return SignedZ{zd.z(w, v), w > v ? Sign::plus : Sign::minus};
}

}  // namespace sturm
