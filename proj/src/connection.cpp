#include "sturm/connection.hpp"

#include <algorithm>

#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

ConnectionGraph::ConnectionGraph(std::vector<int> morse, std::vector<bool> adjacency)
    : morse_(std::move(morse)), adjacency_(std::move(adjacency)) {}

std::vector<std::pair<Label, Label>> ConnectionGraph::edges() const {
    std::vector<std::pair<Label, Label>> out;
    const auto n = static_cast<Label>(size());
    for (Label v = 1; v <= n; ++v) {
        for (Label w = 1; w <= n; ++w) {
            if (connects(v, w)) out.emplace_back(v, w);
        }
    }
    return out;
}

std::vector<Label> ConnectionGraph::targets(Label v) const {
    std::vector<Label> out;
    const auto n = static_cast<Label>(size());
    for (Label w = 1; w <= n; ++w) {
        if (connects(v, w)) out.push_back(w);
    }
    return out;
}

std::optional<Label> is_blocked(Label v1, Label v2, const ZeroData& zd, const Permutation& sigma) {
    if (zd.morse(v1) <= zd.morse(v2)) {
        throw Error(ErrorKind::IndexOrderViolated, "i(" + std::to_string(v1) + ")=" + std::to_string(zd.morse(v1)) +
                                                       " <= i(" + std::to_string(v2) +
                                                       ")=" + std::to_string(zd.morse(v2)));
    }
    const Permutation inv = sigma.inverse();
    const int target = zd.z(v1, v2);
    const auto [lo0, hi0] = std::minmax(v1, v2);
    const auto [lo1, hi1] = std::minmax(inv(v1), inv(v2));
    const auto n = static_cast<Label>(zd.size());
    for (Label w = 1; w <= n; ++w) {
        if (w == v1 || w == v2) continue;
        const bool between0 = lo0 < w && w < hi0;
        const bool between1 = lo1 < inv(w) && inv(w) < hi1;
        if ((between0 || between1) && zd.z(v1, w) == target && zd.z(w, v2) == target) return w;
    }
    return std::nullopt;
}

ConnectionGraph connection_graph(const Permutation& sigma, const ZeroData& zd) {
    const auto n = static_cast<Label>(sigma.size());
    const auto un = sigma.size();
    std::vector<bool> adjacency(un * un, false);
    for (Label v = 1; v <= n; ++v) {
        for (Label w = 1; w <= n; ++w) {
            if (zd.morse(v) > zd.morse(w) && !is_blocked(v, w, zd, sigma)) {
                adjacency[static_cast<std::size_t>(v - 1) * un + static_cast<std::size_t>(w - 1)] = true;
            }
        }
    }
    return ConnectionGraph(zd.morse_vector(), std::move(adjacency));
}

ConnectionGraph connection_graph(const Permutation& sigma) {
    if (!validate(sigma).verdict) throw Error(ErrorKind::NotSturm, sigma.to_string());
    return connection_graph(sigma, zero_matrix(sigma));
}

std::string edge_list_text(const ConnectionGraph& g) {
    std::string out;
    for (const auto& [v, w] : g.edges()) {
        out += std::to_string(v) + " -> " + std::to_string(w) + "\n";
    }
    return out;
}

HemisphereSets hemisphere_sets(const ZeroData& zd, const ConnectionGraph& g, Label v) {
    HemisphereSets h;
    h.owner = v;
    h.levels.resize(static_cast<std::size_t>(zd.morse(v)));
    for (Label w : g.targets(v)) {
        const SignedZ s = signed_zero(zd, w, v);
        if (s.value < 0 || s.value >= zd.morse(v)) continue;  // excluded by z(w-v) < i(v) on Sturm input
        auto& level = h.levels[static_cast<std::size_t>(s.value)];
        (s.sign == Sign::plus ? level.plus : level.minus).push_back(w);
    }
    return h;
}

HemisphereSets hemisphere_sets(const Permutation& sigma, Label v) {
    if (!validate(sigma).verdict) throw Error(ErrorKind::NotSturm, sigma.to_string());
    const ZeroData zd = zero_matrix(sigma);
    if (v < 1 || v > static_cast<Label>(sigma.size())) throw Error(ErrorKind::UnknownLabel, std::to_string(v));
    return hemisphere_sets(zd, connection_graph(sigma, zd), v);
}

}  // namespace sturm
