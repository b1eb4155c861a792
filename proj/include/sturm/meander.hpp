#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sturm/permutation.hpp"

namespace sturm {

enum class Side { above, below };

struct Arc {
    int left = 0;   // axis coordinate, left < right
    int right = 0;
    Side side = Side::above;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// The formal meander path of sigma: it visits axis coordinates p_k = sigma^-1(k)
/// in order k = 1..N, alternating upper and lower half-circles (odd arcs above).
struct ArcDiagram {
    std::vector<int> visits;
    std::vector<Arc> arcs;
};

ArcDiagram arc_diagram(const Permutation& sigma);

/// Pairs (a, b), a < b, of 0-based arc indices on the same side whose endpoint
/// intervals strictly interleave.
std::vector<std::pair<int, int>> crossings(const ArcDiagram& diagram);

struct SturmValidation {
    bool dissipative = false;
    bool meander = false;
    std::size_t crossing_count = 0;
    bool morse = false;
    bool anchor_ok = false;                      // recursion lands on i_N = 0
    std::optional<int> first_negative_position;  // 1-based k with i_k < 0
    bool verdict = false;
};

/// Evaluates dissipativeness, the meander property and the Morse property
/// independently; verdict is their conjunction.
SturmValidation validate(const Permutation& sigma);

inline constexpr int default_enumeration_bound = 9;

/// All Sturm permutations of size n in lexicographic order, OpenMP-parallel over
/// the choice of sigma(2). Throws BoundExceeded for n > bound, InvalidArgument
/// for even or non-positive n.
std::vector<Permutation> enumerate_sturm(int n, int bound = default_enumeration_bound);

/// Single-threaded reference: walks S_N in lexicographic order and filters.
std::vector<Permutation> enumerate_sturm_serial(int n, int bound = default_enumeration_bound);

}  // namespace sturm
