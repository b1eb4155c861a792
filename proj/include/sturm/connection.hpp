#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sturm/permutation.hpp"
#include "sturm/zero_data.hpp"

namespace sturm {

/// Heteroclinic relation v ~> w over labels 1..N, stored as a dense matrix.
class ConnectionGraph {
public:
    ConnectionGraph() = default;
    ConnectionGraph(std::vector<int> morse, std::vector<bool> adjacency);

    std::size_t size() const noexcept { return morse_.size(); }
    int morse(Label v) const { return morse_[static_cast<std::size_t>(v - 1)]; }
    bool connects(Label v, Label w) const {
        return adjacency_[static_cast<std::size_t>(v - 1) * size() + static_cast<std::size_t>(w - 1)];
    }
    /// Edges in lexicographic (v, w) order.
    std::vector<std::pair<Label, Label>> edges() const;
    std::vector<Label> targets(Label v) const;

private:
    std::vector<int> morse_;
    std::vector<bool> adjacency_;
};

/// A label w with z(v1-w) = z(w-v2) = z(v1-v2) lying strictly between v1 and v2
/// at x=0 or at x=1; the smallest such label, or nullopt if v1 ~> v2.
/// Requires i(v1) > i(v2) (IndexOrderViolated otherwise).
std::optional<Label> is_blocked(Label v1, Label v2, const ZeroData& zd, const Permutation& sigma);

/// Throws NotSturm unless validate(sigma).verdict.
ConnectionGraph connection_graph(const Permutation& sigma);
ConnectionGraph connection_graph(const Permutation& sigma, const ZeroData& zd);

/// One "v -> w" line per edge.
std::string edge_list_text(const ConnectionGraph& g);

struct HemisphereLevel {
    std::vector<Label> minus;
    std::vector<Label> plus;

    friend bool operator==(const HemisphereLevel&, const HemisphereLevel&) = default;
};

/// Equilibrium sets E^j_-(v), E^j_+(v) for j = 0..i(v)-1.
struct HemisphereSets {
    Label owner = 0;
    std::vector<HemisphereLevel> levels;
};

HemisphereSets hemisphere_sets(const Permutation& sigma, Label v);
HemisphereSets hemisphere_sets(const ZeroData& zd, const ConnectionGraph& g, Label v);

}  // namespace sturm
