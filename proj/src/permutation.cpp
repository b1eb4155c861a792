#include "sturm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sturm/error.hpp"

namespace sturm {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::NotABijection: return "NotABijection";
        case ErrorKind::MalformedCycle: return "MalformedCycle";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NotDissipative: return "NotDissipative";
        case ErrorKind::AnchorMismatch: return "AnchorMismatch";
        case ErrorKind::SymmetryViolation: return "SymmetryViolation";
        case ErrorKind::EqualLabels: return "EqualLabels";
        case ErrorKind::NegativeDimension: return "NegativeDimension";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::IndexOrderViolated: return "IndexOrderViolated";
        case ErrorKind::NotSturm: return "NotSturm";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::MalformedJSON: return "MalformedJSON";
        case ErrorKind::SchemaViolation: return "SchemaViolation";
        case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
        case ErrorKind::NoCandidate: return "NoCandidate";
        case ErrorKind::MultipleCandidates: return "MultipleCandidates";
        case ErrorKind::InvalidComplex: return "InvalidComplex";
        case ErrorKind::SlotConflict: return "SlotConflict";
        case ErrorKind::BrokenChain: return "BrokenChain";
        case ErrorKind::BadEndpoints: return "BadEndpoints";
        case ErrorKind::LabelMismatch: return "LabelMismatch";
        case ErrorKind::InvalidBipolarity: return "InvalidBipolarity";
        case ErrorKind::PathMismatch: return "PathMismatch";
        case ErrorKind::TemplateInvalid: return "TemplateInvalid";
    }
    return "Unknown";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const auto n = static_cast<int>(images_.size());
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw Error(ErrorKind::NotABijection,
                        "value " + std::to_string(v) + " is out of range or repeated for n=" + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
        inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
    }
    Permutation result;
    result.images_ = std::move(inv);
    return result;
}

bool Permutation::is_involution() const {
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (images_[static_cast<std::size_t>(images_[k] - 1)] != static_cast<int>(k + 1)) return false;
    }
    return true;
}

bool Permutation::is_dissipative() const noexcept {
    return !images_.empty() && images_.front() == 1 && images_.back() == static_cast<int>(images_.size());
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(images_[k]);
    }
    return out;
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (done[start] || images_[start] == static_cast<int>(start + 1)) continue;
        out += '(';
        std::size_t k = start;
        bool first = true;
        while (!done[k]) {
            done[k] = true;
            if (!first) out += ' ';
            first = false;
            out += std::to_string(k + 1);
            k = static_cast<std::size_t>(images_[k] - 1);
        }
        out += ')';
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_int(std::string_view token, int& value) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

Permutation parse_cycles(std::string_view body) {
    const auto npos = body.rfind("n=");
    if (npos == std::string_view::npos) throw Error(ErrorKind::MalformedCycle, "missing explicit size 'n=N'");
    int n = 0;
    if (!parse_int(trim(body.substr(npos + 2)), n) || n < 1) {
        throw Error(ErrorKind::MalformedCycle, "bad size after 'n='");
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

    std::string_view rest = trim(body.substr(0, npos));
    while (!rest.empty()) {
        if (rest.front() != '(') throw Error(ErrorKind::MalformedCycle, "expected '(' in cycle list");
        const auto close = rest.find(')');
        if (close == std::string_view::npos) throw Error(ErrorKind::MalformedCycle, "unbalanced parenthesis");
        std::istringstream in{std::string(rest.substr(1, close - 1))};
        std::vector<int> cycle;
        std::string token;
        while (in >> token) {
            int v = 0;
            if (!parse_int(token, v)) throw Error(ErrorKind::MalformedCycle, "non-integer '" + token + "'");
            if (v < 1 || v > n) throw Error(ErrorKind::MalformedCycle, "element " + token + " outside 1..n");
            if (used[static_cast<std::size_t>(v)]) {
                throw Error(ErrorKind::MalformedCycle, "element " + token + " appears twice");
            }
            used[static_cast<std::size_t>(v)] = true;
            cycle.push_back(v);
        }
        if (cycle.empty()) throw Error(ErrorKind::MalformedCycle, "empty cycle");
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
        }
        rest = trim(rest.substr(close + 1));
    }
    return Permutation(std::move(images));
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw Error(ErrorKind::EmptyInput, "no permutation given");
    if (text.starts_with("cycles:")) return parse_cycles(text.substr(7));

    std::string cleaned(text);
    if (cleaned.front() == '{' && cleaned.back() == '}') cleaned = cleaned.substr(1, cleaned.size() - 2);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<int> images;
    std::string token;
    while (in >> token) {
        int v = 0;
        if (!parse_int(token, v)) throw Error(ErrorKind::NotABijection, "non-integer token '" + token + "'");
        images.push_back(v);
    }
    if (images.empty()) throw Error(ErrorKind::EmptyInput, "no permutation given");
    return Permutation(std::move(images));
}

Permutation invert(const Permutation& p) { return p.inverse(); }

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::SizeMismatch,
                    "cannot compose sizes " + std::to_string(p.size()) + " and " + std::to_string(q.size()));
    }
    std::vector<int> images(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) images[k] = p(q(static_cast<int>(k + 1)));
    return Permutation(std::move(images));
}

Permutation reversal(std::size_t n) {
    std::vector<int> images(n);
    for (std::size_t k = 0; k < n; ++k) images[k] = static_cast<int>(n - k);
    return Permutation(std::move(images));
}

std::array<Permutation, 4> trivial_equivalences(const Permutation& sigma) {
    const Permutation kappa = reversal(sigma.size());
    const Permutation inv = sigma.inverse();
    return {sigma, inv, compose(kappa, compose(sigma, kappa)), compose(kappa, compose(inv, kappa))};
}

Permutation chafee_infante(int n) {
    if (n < 0) throw Error(ErrorKind::NegativeDimension, "n=" + std::to_string(n));
    std::vector<int> out(static_cast<std::size_t>(2 * n + 1));
    std::iota(out.begin(), out.end(), 1);
    for (int m = 1; m <= n / 2; ++m) {
        const int a = 2 * m;
        const int b = 2 * n + 2 - 2 * m;
        std::swap(out[static_cast<std::size_t>(a - 1)], out[static_cast<std::size_t>(b - 1)]);
    }
    return Permutation(std::move(out));
}

}  // namespace sturm
