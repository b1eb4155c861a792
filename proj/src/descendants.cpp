#include "sturm/descendants.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

SignSequence SignSequence::constant(std::size_t n, Sign s) {
    return SignSequence{std::vector<Sign>(n, s)};
}

SignSequence SignSequence::alternating(std::size_t n, Sign s, std::size_t top) {
    SignSequence out{std::vector<Sign>(n, s)};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t gap = top >= j ? top - j : j - top;
        out.signs[n - 1 - j] = gap % 2 == 0 ? s : flip(s);
    }
    return out;
}

std::string SignSequence::to_string() const {
    std::string out;
    for (Sign s : signs) out += sign_char(s);
    return out;
}

SignSequence parse_sign_sequence(std::string_view text) {
    static constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    SignSequence out;
    for (std::size_t i = 0; i < text.size();) {
        if (text[i] == '+') {
            out.signs.push_back(Sign::plus);
            ++i;
        } else if (text[i] == '-') {
            out.signs.push_back(Sign::minus);
            ++i;
        } else if (text.substr(i, unicode_minus.size()) == unicode_minus) {
            out.signs.push_back(Sign::minus);
            i += unicode_minus.size();
        } else {
            throw Error(ErrorKind::InvalidArgument, "bad sign sequence '" + std::string(text) + "'");
        }
    }
    return out;
}

std::vector<Label> descendant_chain(const SignedComplex& c, Label O, const SignSequence& s) {
    const Cell& cell = c.cell(O);
    const int n = cell.dim;
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "cell " + std::to_string(O) + " has dim 0");
    if (static_cast<int>(s.size()) != n) {
        throw Error(ErrorKind::InvalidArgument, "sign sequence of length " + std::to_string(s.size()) +
                                                    " for a cell of dim " + std::to_string(n));
    }
    if (static_cast<int>(cell.hemispheres.size()) != n) {
        throw Error(ErrorKind::InvalidArgument, "cell " + std::to_string(O) + " lacks hemisphere levels");
    }

    auto side = [&](std::size_t j) -> const std::vector<Label>& {
        const auto& level = cell.hemispheres[j];
        return s.at(j) == Sign::plus ? level.plus : level.minus;
    };
    auto where = [&](std::size_t j) {
        return "cell " + std::to_string(O) + " level " + std::to_string(j) + sign_char(s.at(j));
    };

    std::vector<Label> up;  // v^0, v^1, ...
    const auto& polar = side(0);
    if (polar.empty()) throw Error(ErrorKind::NoCandidate, where(0) + " is empty");
    if (polar.size() > 1) throw Error(ErrorKind::MultipleCandidates, where(0) + " is not a singleton");
    up.push_back(polar.front());

    for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) {
        std::optional<Label> found;
        for (Label w : side(j)) {
            if (!c.contains(w) || c.cell(w).dim != static_cast<int>(j)) continue;
            if (!c.in_boundary(up.back(), w)) continue;
            if (found) {
                throw Error(ErrorKind::MultipleCandidates, where(j) + ": both " + std::to_string(*found) + " and " +
                                                               std::to_string(w) + " bound " +
                                                               std::to_string(up.back()));
            }
            found = w;
        }
        if (!found) throw Error(ErrorKind::NoCandidate, where(j) + ": no cell above " + std::to_string(up.back()));
        up.push_back(*found);
    }
    return {up.rbegin(), up.rend()};
}

LeadingNeighbors leading_neighbors(const SignedComplex& c, Label O) {
    const auto n = static_cast<std::size_t>(std::max(c.cell(O).dim, 0));
    auto lead = [&](const SignSequence& s) { return descendant_chain(c, O, s).front(); };
    const bool even = n % 2 == 0;
    LeadingNeighbors out;
    out.w0_minus = lead(SignSequence::alternating(n, Sign::minus, n - 1));
    out.w0_plus = lead(SignSequence::alternating(n, Sign::plus, n - 1));
    out.w1_minus = lead(SignSequence::constant(n, even ? Sign::plus : Sign::minus));
    out.w1_plus = lead(SignSequence::constant(n, even ? Sign::minus : Sign::plus));
    return out;
}

namespace {

std::string join(const std::vector<Label>& xs) {
    std::string out;
    for (Label x : xs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(x);
    }
    return out;
}

std::vector<Label> chain_order(const SignedComplex& c, const std::map<Label, LeadingNeighbors>& lead, int iota) {
    std::map<Label, Label> pred;
    std::map<Label, Label> succ;

    std::vector<Label> sweep = c.labels();
    std::stable_sort(sweep.begin(), sweep.end(),
                     [&](Label a, Label b) { return c.cell(a).dim > c.cell(b).dim; });

    const std::string tag = "h" + std::to_string(iota);
    for (Label O : sweep) {
        if (c.cell(O).dim == 0) continue;
        const LeadingNeighbors& l = lead.at(O);
        const Label below = iota == 0 ? l.w0_minus : l.w1_minus;
        const Label above = iota == 0 ? l.w0_plus : l.w1_plus;
        if (!pred.count(O)) {
            if (auto it = succ.find(below); it != succ.end()) {
                throw Error(ErrorKind::SlotConflict, tag + " successor of " + std::to_string(below) + " claimed by " +
                                                         std::to_string(it->second) + " and " + std::to_string(O));
            }
            pred[O] = below;
            succ[below] = O;
        }
        if (!succ.count(O)) {
            if (auto it = pred.find(above); it != pred.end()) {
                throw Error(ErrorKind::SlotConflict, tag + " predecessor of " + std::to_string(above) +
                                                         " claimed by " + std::to_string(it->second) + " and " +
                                                         std::to_string(O));
            }
            succ[O] = above;
            pred[above] = O;
        }
    }

    std::vector<Label> first;
    std::vector<Label> last;
    for (Label v : c.labels()) {
        if (!pred.count(v)) first.push_back(v);
        if (!succ.count(v)) last.push_back(v);
    }
    if (first.size() != 1 || last.size() != 1) {
        throw Error(ErrorKind::BrokenChain, tag + ": chain starts {" + join(first) + "} and ends {" + join(last) + "}");
    }
    for (Label end : {first.front(), last.front()}) {
        if (c.cell(end).dim != 0) {
            throw Error(ErrorKind::BadEndpoints, tag + ": endpoint " + std::to_string(end) + " has dim " +
                                                     std::to_string(c.cell(end).dim));
        }
    }

    std::vector<Label> order{first.front()};
    while (order.size() <= c.size()) {
        auto it = succ.find(order.back());
        if (it == succ.end()) break;
        order.push_back(it->second);
    }
    if (order.size() != c.size() || order.back() != last.front()) {
        throw Error(ErrorKind::BrokenChain, tag + ": successor links do not visit every cell once");
    }
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (std::abs(c.cell(order[i]).dim - c.cell(order[i - 1]).dim) != 1) {
            throw Error(ErrorKind::BrokenChain, tag + ": neighbors " + std::to_string(order[i - 1]) + " and " +
                                                    std::to_string(order[i]) + " do not differ in dim by one");
        }
    }
    return order;
}

}  // namespace

std::string BoundaryOrders::to_string() const {
    return "h0: " + join(h0) + "\nh1: " + join(h1) + "\n";
}

BoundaryOrders reconstruct_orders(const SignedComplex& c, bool force) {
    if (c.size() == 0) throw Error(ErrorKind::InvalidComplex, "empty complex");
    if (!force) {
        const auto findings = validate_complex(c);
        if (!findings.empty()) {
            throw Error(ErrorKind::InvalidComplex, "cell " + std::to_string(findings.front().cell) + ": " +
                                                       findings.front().check + ": " + findings.front().message);
        }
    }
    std::map<Label, LeadingNeighbors> lead;
    for (const auto& [id, cell] : c.cells()) {
        if (cell.dim > 0) lead.emplace(id, leading_neighbors(c, id));
    }
    return BoundaryOrders{chain_order(c, lead, 0), chain_order(c, lead, 1)};
}

Permutation boundary_orders_to_permutation(const BoundaryOrders& b) {
    if (b.h0.size() != b.h1.size()) throw Error(ErrorKind::LabelMismatch, "orders differ in length");
    std::map<Label, int> position;
    for (std::size_t i = 0; i < b.h0.size(); ++i) {
        if (!position.emplace(b.h0[i], static_cast<int>(i + 1)).second) {
            throw Error(ErrorKind::LabelMismatch, "h0 repeats " + std::to_string(b.h0[i]));
        }
    }
    std::vector<int> images;
    images.reserve(b.h1.size());
    for (Label v : b.h1) {
        auto it = position.find(v);
        if (it == position.end()) throw Error(ErrorKind::LabelMismatch, "h1 label " + std::to_string(v) + " not in h0");
        images.push_back(it->second);
    }
    try {
        return Permutation(std::move(images));
    } catch (const Error&) {
        throw Error(ErrorKind::LabelMismatch, "h1 repeats a label");
    }
}

bool MinimaxReport::all_hold() const {
    return std::all_of(entries.begin(), entries.end(), [](const MinimaxEntry& e) { return e.all_hold(); });
}

std::string MinimaxReport::to_string() const {
    std::ostringstream os;
    os << "cell " << cell << " (dim " << dim << ")\n";
    for (const auto& e : entries) {
        os << "  E^" << e.level << sign_char(e.side) << " = {" << join(e.members) << "}"
           << "  closest@1=" << e.closest_at_1 << " farthest@0=" << e.farthest_at_0
           << " descendant=" << e.descendant << "  closest@0=" << e.closest_at_0
           << " farthest@1=" << e.farthest_at_1 << " alternating=" << e.alternating_descendant << "  "
           << (e.all_hold() ? "ok" : "MISMATCH") << "\n";
    }
    os << (all_hold() ? "all coincidences hold" : "coincidence failure") << "\n";
    return os.str();
}

MinimaxReport minimax_pairs(const Permutation& sigma, const SignedComplex& c, Label O) {
    const Cell& cell = c.cell(O);
    if (cell.dim < 1) throw Error(ErrorKind::InvalidArgument, "cell " + std::to_string(O) + " has dim 0");
    const Permutation inv = sigma.inverse();
    auto dist0 = [&](Label w) { return std::abs(w - O); };
    auto dist1 = [&](Label w) { return std::abs(inv(w) - inv(O)); };
    auto pick = [](const std::vector<Label>& xs, auto key, bool smallest) {
        return *std::min_element(xs.begin(), xs.end(), [&](Label a, Label b) {
            return smallest ? key(a) < key(b) : key(a) > key(b);
        });
    };

    const auto n = static_cast<std::size_t>(cell.dim);
    MinimaxReport report{O, cell.dim, {}};
    for (std::size_t k = 0; k < n; ++k) {
        for (Sign s : {Sign::minus, Sign::plus}) {
            MinimaxEntry e;
            e.level = static_cast<int>(k);
            e.side = s;
            e.members = s == Sign::plus ? cell.hemispheres[k].plus : cell.hemispheres[k].minus;
            if (e.members.empty()) throw Error(ErrorKind::InvalidComplex, "empty hemisphere");
            e.closest_at_1 = pick(e.members, dist1, true);
            e.farthest_at_0 = pick(e.members, dist0, false);
            e.closest_at_0 = pick(e.members, dist0, true);
            e.farthest_at_1 = pick(e.members, dist1, false);
            const auto chain = descendant_chain(c, O, SignSequence::constant(n, s));
            e.descendant = chain[n - 1 - k];
            const auto alt = descendant_chain(c, O, SignSequence::alternating(n, s, k));
            e.alternating_descendant = alt[n - 1 - k];
            e.closest_is_descendant = e.closest_at_1 == e.descendant;
            e.farthest_is_descendant = e.farthest_at_0 == e.descendant;
            e.swap_holds = e.closest_at_0 == e.farthest_at_1 && e.closest_at_0 == e.alternating_descendant;
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

MinimaxReport minimax_pairs(const Permutation& sigma, Label O) {
    if (!validate(sigma).verdict) throw Error(ErrorKind::NotSturm, sigma.to_string());
    if (O < 1 || O > static_cast<Label>(sigma.size())) throw Error(ErrorKind::UnknownLabel, std::to_string(O));
    return minimax_pairs(sigma, build_complex(sigma), O);
}

}  // namespace sturm
