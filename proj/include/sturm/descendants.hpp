#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sturm/complex.hpp"
#include "sturm/permutation.hpp"
#include "sturm/zero_data.hpp"

namespace sturm {

/// Signs s_{n-1} ... s_0, stored in that (printed) order.
struct SignSequence {
    std::vector<Sign> signs;

    std::size_t size() const noexcept { return signs.size(); }
    /// s_j, counted from the right.
    Sign at(std::size_t j) const { return signs[signs.size() - 1 - j]; }

    static SignSequence constant(std::size_t n, Sign s);
    /// s_j = s * (-1)^(top - j); the entry at level `top` equals `s`.
    static SignSequence alternating(std::size_t n, Sign s, std::size_t top);

    std::string to_string() const;
    friend bool operator==(const SignSequence&, const SignSequence&) = default;
};

/// Accepts '+' and '-' (also the Unicode minus sign). Throws InvalidArgument.
SignSequence parse_sign_sequence(std::string_view text);

/// [v^{n-1}, ..., v^0] for the cell O of dim n = |s|.
/// Throws UnknownLabel, InvalidArgument, NoCandidate, MultipleCandidates.
std::vector<Label> descendant_chain(const SignedComplex& c, Label O, const SignSequence& s);

struct LeadingNeighbors {
    Label w0_minus = 0;
    Label w0_plus = 0;
    Label w1_minus = 0;
    Label w1_plus = 0;

    friend bool operator==(const LeadingNeighbors&, const LeadingNeighbors&) = default;
};

LeadingNeighbors leading_neighbors(const SignedComplex& c, Label O);

struct BoundaryOrders {
    std::vector<Label> h0;
    std::vector<Label> h1;

    /// "h0: ..." and "h1: ..." lines.
    std::string to_string() const;
    friend bool operator==(const BoundaryOrders&, const BoundaryOrders&) = default;
};

/// Slot reconstruction of both boundary orders. Unless `force`, refuses
/// complexes with validate_complex findings (InvalidComplex).
/// Throws SlotConflict, BrokenChain, BadEndpoints and whatever the descendant
/// search raises on non-Sturm input.
BoundaryOrders reconstruct_orders(const SignedComplex& c, bool force = false);

/// sigma(m) = position of h1(m) within h0. Throws LabelMismatch.
Permutation boundary_orders_to_permutation(const BoundaryOrders& b);

/// Per level k and side s of E^k_s(O), compared in the orders of sigma.
struct MinimaxEntry {
    int level = 0;
    Sign side = Sign::plus;
    std::vector<Label> members;
    Label closest_at_1 = 0;
    Label farthest_at_0 = 0;
    Label closest_at_0 = 0;
    Label farthest_at_1 = 0;
    Label descendant = 0;              // v^k(s s ... s)
    Label alternating_descendant = 0;  // v^k(t), t_j = s (-1)^(k-j)
    bool closest_is_descendant = false;
    bool farthest_is_descendant = false;
    bool swap_holds = false;  // closest_at_0 == farthest_at_1 == alternating_descendant

    bool all_hold() const { return closest_is_descendant && farthest_is_descendant && swap_holds; }
};

struct MinimaxReport {
    Label cell = 0;
    int dim = 0;
    std::vector<MinimaxEntry> entries;

    bool all_hold() const;
    std::string to_string() const;
};

/// Throws NotSturm, UnknownLabel, InvalidArgument (dim 0).
MinimaxReport minimax_pairs(const Permutation& sigma, Label O);
MinimaxReport minimax_pairs(const Permutation& sigma, const SignedComplex& c, Label O);

}  // namespace sturm
