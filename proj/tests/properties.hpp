#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sturm/complex.hpp"
#include "sturm/connection.hpp"
#include "sturm/descendants.hpp"
#include "sturm/error.hpp"
#include "sturm/meander.hpp"
#include "sturm/zero_data.hpp"

// Exhaustive property checks shared by the unit tests and the acceptance run.
namespace properties {

using namespace sturm;

enum Group { roundtrip, ordering, minimax, adjacency, equivalence, connection, staircase, group_count };

inline const std::array<const char*, group_count> group_names{
    "round trip", "descendant ordering", "minimax coincidences", "index adjacency",
    "trivial equivalences", "connection edges", "staircases and leading neighbours"};

struct Tally {
    std::array<long, group_count> checked{};
    std::array<long, group_count> failed{};
    std::array<std::string, group_count> first_failure{};

    void record(Group g, bool ok, const std::string& what) {
        ++checked[g];
        if (ok) return;
        if (failed[g]++ == 0) first_failure[g] = what;
    }
    bool all_pass() const {
        return std::all_of(failed.begin(), failed.end(), [](long f) { return f == 0; });
    }
};

inline int sgn(int x) { return (x > 0) - (x < 0); }

struct Context {
    const Permutation& sigma;
    Permutation inv;
    ZeroData zd;
    ConnectionGraph g;
    SignedComplex c;
    std::string tag;

    explicit Context(const Permutation& s)
        : sigma(s),
          inv(s.inverse()),
          zd(zero_matrix(s)),
          g(connection_graph(s, zd)),
          c(build_complex(s)),
          tag(s.to_string()) {}

    int h1pos(Label v) const { return inv(v); }
};

inline void check_roundtrip(const Context& x, const BoundaryOrders& b, Tally& t) {
    const auto n = static_cast<Label>(x.sigma.size());
    std::vector<Label> id(static_cast<std::size_t>(n));
    for (Label v = 1; v <= n; ++v) id[static_cast<std::size_t>(v - 1)] = v;
    const std::vector<Label> h1(x.sigma.images().begin(), x.sigma.images().end());
    t.record(roundtrip, b.h0 == id && b.h1 == h1 && boundary_orders_to_permutation(b) == x.sigma, x.tag);
}

inline void check_ordering(const Context& x, Label O, Tally& t) {
    const int n = x.c.cell(O).dim;
    const auto chain = descendant_chain(x.c, O, SignSequence::constant(static_cast<std::size_t>(n), Sign::plus));
    auto v = [&](int j) { return chain[static_cast<std::size_t>(n - 1 - j)]; };
    const std::string where = x.tag + " O=" + std::to_string(O);

    // (i)/(ii)
    bool ok = O < v(n - 1);
    for (int j = n - 1; j > 0; --j) ok = ok && v(j) < v(j - 1);
    t.record(ordering, ok, where + " (i)/(ii)");

    // (iii) even j ascend above O at x=1, (iv) odd j descend below O
    int last_even = x.h1pos(O);
    int last_odd = x.h1pos(O);
    bool even_ok = true;
    bool odd_ok = true;
    for (int j = n - 1; j >= 0; --j) {
        if (j % 2 == 0) {
            even_ok = even_ok && x.h1pos(v(j)) > last_even;
            last_even = x.h1pos(v(j));
        } else {
            odd_ok = odd_ok && x.h1pos(v(j)) < last_odd;
            last_odd = x.h1pos(v(j));
        }
    }
    t.record(ordering, even_ok, where + " (iii)");
    t.record(ordering, odd_ok, where + " (iv)");

    // (v)
    bool z_ok = true;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            if (j != k) z_ok = z_ok && x.zd.z(v(j), v(k)) == std::min(j, k);
        }
    }
    t.record(ordering, z_ok, where + " (v)");

    // (vi)
    bool trunc_ok = true;
    for (int k = 1; k < n; ++k) {
        const auto sub = descendant_chain(x.c, v(k), SignSequence::constant(static_cast<std::size_t>(k), Sign::plus));
        const std::vector<Label> expected(chain.end() - k, chain.end());
        trunc_ok = trunc_ok && sub == expected;
    }
    t.record(ordering, trunc_ok, where + " (vi)");
}

inline void check_minimax(const Context& x, Label O, Tally& t) {
    const MinimaxReport r = minimax_pairs(x.sigma, x.c, O);
    for (const auto& e : r.entries) {
        const std::string where = x.tag + " O=" + std::to_string(O) + " E^" + std::to_string(e.level) +
                                  sign_char(e.side);
        t.record(minimax, e.closest_is_descendant, where + " closest at x=1");
        t.record(minimax, e.farthest_is_descendant, where + " farthest at x=0");
        t.record(minimax, e.swap_holds, where + " swapped pair");
    }
}

inline void check_adjacency(const Context& x, const BoundaryOrders& b, Tally& t) {
    // position lookups for both orders
    std::map<Label, int> pos0;
    std::map<Label, int> pos1;
    for (std::size_t i = 0; i < b.h0.size(); ++i) pos0[b.h0[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < b.h1.size(); ++i) pos1[b.h1[i]] = static_cast<int>(i);
    for (int iota = 0; iota < 2; ++iota) {
        const auto& order = iota == 0 ? b.h0 : b.h1;
        const auto& other = iota == 0 ? pos1 : pos0;
        t.record(adjacency, x.zd.morse(order.front()) == 0 && x.zd.morse(order.back()) == 0,
                 x.tag + " endpoints of h" + std::to_string(iota));
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Label O = order[i];
            const int iO = x.zd.morse(O);
            const int parity = iO % 2 == 0 ? 1 : -1;
            for (int step : {-1, 1}) {
                const auto j = static_cast<long>(i) + step;
                if (j < 0 || j >= static_cast<long>(order.size())) continue;
                const Label w = order[static_cast<std::size_t>(j)];
                const int expected = iO + step * parity * sgn(other.at(w) - other.at(O));
                t.record(adjacency, x.zd.morse(w) == expected,
                         x.tag + " h" + std::to_string(iota) + " neighbour " + std::to_string(w) + " of " +
                             std::to_string(O));
            }
        }
    }
}

inline void check_connections(const Context& x, Tally& t) {
    const auto n = static_cast<Label>(x.sigma.size());
    for (Label v = 1; v <= n; ++v) {
        for (Label w : x.g.targets(v)) {
            const std::string where = x.tag + " " + std::to_string(v) + "->" + std::to_string(w);
            t.record(connection, x.zd.z(v, w) < x.zd.morse(v), where + " z < i(source)");
            t.record(connection, x.zd.z(v, w) >= x.zd.morse(w), where + " z >= i(target)");
            bool closed = true;
            for (Label u : x.g.targets(w)) closed = closed && x.g.connects(v, u);
            t.record(connection, closed, where + " transitivity");
        }
        t.record(connection, x.c.boundary(v) == x.g.targets(v), x.tag + " boundary of " + std::to_string(v));
    }
}

inline void check_staircase(const Context& x, const BoundaryOrders& b, Label O, Tally& t) {
    const int n = x.c.cell(O).dim;
    const std::string where = x.tag + " O=" + std::to_string(O);
    for (Sign s : {Sign::minus, Sign::plus}) {
        for (const SignSequence& seq : {SignSequence::constant(static_cast<std::size_t>(n), s),
                                        SignSequence::alternating(static_cast<std::size_t>(n), s,
                                                                  static_cast<std::size_t>(n - 1))}) {
            const auto chain = descendant_chain(x.c, O, seq);
            bool ok = x.g.connects(O, chain.front());
            for (std::size_t i = 0; i < chain.size(); ++i) {
                ok = ok && x.c.cell(chain[i]).dim == n - 1 - static_cast<int>(i);
                if (i + 1 < chain.size()) ok = ok && x.g.connects(chain[i], chain[i + 1]);
            }
            t.record(staircase, ok, where + " staircase " + seq.to_string());
        }
    }
    const LeadingNeighbors l = leading_neighbors(x.c, O);
    for (int iota = 0; iota < 2; ++iota) {
        const auto& order = iota == 0 ? b.h0 : b.h1;
        const auto it = std::find(order.begin(), order.end(), O);
        const Label pred = *(it - 1);
        const Label succ = *(it + 1);
        const Label lead_minus = iota == 0 ? l.w0_minus : l.w1_minus;
        const Label lead_plus = iota == 0 ? l.w0_plus : l.w1_plus;
        if (x.c.cell(pred).dim == n - 1) t.record(staircase, pred == lead_minus, where + " predecessor");
        if (x.c.cell(succ).dim == n - 1) t.record(staircase, succ == lead_plus, where + " successor");
    }
}

// Everything that is checked per permutation.
inline void check_permutation(const Permutation& sigma, Tally& t) {
    const Context x(sigma);
    BoundaryOrders b;
    try {
        b = reconstruct_orders(x.c);
    } catch (const Error& e) {
        t.record(roundtrip, false, x.tag + ": " + e.what());
        return;
    }
    check_roundtrip(x, b, t);
    check_adjacency(x, b, t);
    check_connections(x, t);
    for (const auto& [O, cell] : x.c.cells()) {
        if (cell.dim == 0) continue;
        check_ordering(x, O, t);
        check_minimax(x, O, t);
        check_staircase(x, b, O, t);
    }
}

inline void check_equivalence_closure(const std::vector<Permutation>& all, Tally& t) {
    const std::set<Permutation> set(all.begin(), all.end());
    for (const auto& p : all) {
        for (const auto& q : trivial_equivalences(p)) {
            t.record(equivalence, set.count(q) == 1, p.to_string() + " -> " + q.to_string());
        }
    }
}

}  // namespace properties
