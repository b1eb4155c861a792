#include "sturm/meander.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sturm/error.hpp"
#include "sturm/zero_data.hpp"

namespace sturm {

ArcDiagram arc_diagram(const Permutation& sigma) {
    ArcDiagram d;
    const Permutation inv = sigma.inverse();
    const auto n = static_cast<int>(sigma.size());
    d.visits.reserve(sigma.size());
    for (int k = 1; k <= n; ++k) d.visits.push_back(inv(k));
    for (int k = 1; k < n; ++k) {
        const int a = d.visits[static_cast<std::size_t>(k - 1)];
        const int b = d.visits[static_cast<std::size_t>(k)];
        d.arcs.push_back(Arc{std::min(a, b), std::max(a, b), k % 2 == 1 ? Side::above : Side::below});
    }
    return d;
}

std::vector<std::pair<int, int>> crossings(const ArcDiagram& diagram) {
    std::vector<std::pair<int, int>> out;
    const auto m = static_cast<int>(diagram.arcs.size());
    for (int i = 0; i < m; ++i) {
        const Arc& x = diagram.arcs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
            const Arc& y = diagram.arcs[static_cast<std::size_t>(j)];
            if (x.side != y.side) continue;
            const bool interleave = (x.left < y.left && y.left < x.right && x.right < y.right) ||
                                    (y.left < x.left && x.left < y.right && y.right < x.right);
            if (interleave) out.emplace_back(i, j);
        }
    }
    return out;
}

SturmValidation validate(const Permutation& sigma) {
    SturmValidation v;
    if (sigma.empty()) return v;
    v.dissipative = sigma.is_dissipative();
    v.crossing_count = crossings(arc_diagram(sigma)).size();
    v.meander = v.crossing_count == 0;

    const auto morse = morse_recursion(sigma);
    v.anchor_ok = morse.back() == 0;
    for (std::size_t k = 0; k < morse.size(); ++k) {
        if (morse[k] < 0) {
            v.first_negative_position = static_cast<int>(k + 1);
            break;
        }
    }
    v.morse = v.anchor_ok && !v.first_negative_position;
    v.verdict = v.dissipative && v.meander && v.morse;
    return v;
}

namespace {

void check_enumeration_size(int n, int bound) {
    if (n < 1 || n % 2 == 0) {
        throw Error(ErrorKind::InvalidArgument, "enumeration needs odd n >= 1, got " + std::to_string(n));
    }
    if (n > bound) {
        throw Error(ErrorKind::BoundExceeded, "n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    }
}

}  // namespace

std::vector<Permutation> enumerate_sturm_serial(int n, int bound) {
    check_enumeration_size(n, bound);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        if (images.front() != 1 || images.back() != n) continue;
        Permutation p(images);
        if (validate(p).verdict) out.push_back(std::move(p));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<Permutation> enumerate_sturm(int n, int bound) {
    check_enumeration_size(n, bound);
    if (n < 5) return enumerate_sturm_serial(n, bound);

    // Dissipative candidates only: sigma(1)=1, sigma(N)=N. Each task owns one
    // value of sigma(2) and walks the remaining N-3 middle slots.
    const int tasks = n - 2;
    std::vector<std::vector<Permutation>> found(static_cast<std::size_t>(tasks));

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < tasks; ++t) {
        const int second = t + 2;
        std::vector<int> middle;
        for (int v = 2; v < n; ++v) {
            if (v != second) middle.push_back(v);
        }
        std::vector<int> images(static_cast<std::size_t>(n));
        images.front() = 1;
        images[1] = second;
        images.back() = n;
        auto& local = found[static_cast<std::size_t>(t)];
        do {
            std::copy(middle.begin(), middle.end(), images.begin() + 2);
            Permutation p(images);
            if (validate(p).verdict) local.push_back(std::move(p));
        } while (std::next_permutation(middle.begin(), middle.end()));
    }

    std::vector<Permutation> out;
    for (auto& chunk : found) {
        std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sturm
