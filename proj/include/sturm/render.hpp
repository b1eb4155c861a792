#pragma once

#include <string>

#include "sturm/connection.hpp"
#include "sturm/permutation.hpp"

namespace sturm {

struct RenderOptions {
    double unit = 40.0;  // axis spacing, > 0
    bool label_axis = true;
    bool mark_crossings = false;
};

/// The meander of sigma over the x=1 axis: N points, N-1 half-circles, and
/// optionally a red dot at every self-crossing. Uses only path, circle and text.
std::string render_meander_svg(const Permutation& sigma, const RenderOptions& opts = {});

/// Graphviz digraph, one node per label annotated with its Morse index, one
/// "v -> w;" line per connection.
std::string render_connection_dot(const ConnectionGraph& g);

}  // namespace sturm
