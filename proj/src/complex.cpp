#include "sturm/complex.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "sturm/descendants.hpp"
#include "sturm/error.hpp"
#include "sturm/meander.hpp"
#include "sturm/zero_data.hpp"

namespace sturm {

void SignedComplex::add(Cell cell) {
    for (auto& level : cell.hemispheres) {
        std::sort(level.minus.begin(), level.minus.end());
        std::sort(level.plus.begin(), level.plus.end());
    }
    const Label id = cell.id;
    cells_[id] = std::move(cell);
}

const Cell& SignedComplex::cell(Label id) const {
    auto it = cells_.find(id);
    if (it == cells_.end()) throw Error(ErrorKind::UnknownLabel, "no cell " + std::to_string(id));
    return it->second;
}

Cell& SignedComplex::cell(Label id) {
    auto it = cells_.find(id);
    if (it == cells_.end()) throw Error(ErrorKind::UnknownLabel, "no cell " + std::to_string(id));
    return it->second;
}

std::vector<Label> SignedComplex::labels() const {
    std::vector<Label> out;
    out.reserve(cells_.size());
    for (const auto& [id, _] : cells_) out.push_back(id);
    return out;
}

int SignedComplex::max_dim() const {
    int d = 0;
    for (const auto& [_, c] : cells_) d = std::max(d, c.dim);
    return d;
}

std::vector<Label> SignedComplex::boundary(Label id) const {
    std::vector<Label> out;
    for (const auto& level : cell(id).hemispheres) {
        out.insert(out.end(), level.minus.begin(), level.minus.end());
        out.insert(out.end(), level.plus.begin(), level.plus.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SignedComplex::in_boundary(Label face, Label owner) const {
    for (const auto& level : cell(owner).hemispheres) {
        if (std::binary_search(level.minus.begin(), level.minus.end(), face)) return true;
        if (std::binary_search(level.plus.begin(), level.plus.end(), face)) return true;
    }
    return false;
}

SignedComplex build_complex(const Permutation& sigma) {
    if (!validate(sigma).verdict) throw Error(ErrorKind::NotSturm, sigma.to_string());
    const ZeroData zd = zero_matrix(sigma);
    const ConnectionGraph g = connection_graph(sigma, zd);
    SignedComplex c;
    const auto n = static_cast<Label>(sigma.size());
    for (Label v = 1; v <= n; ++v) {
        HemisphereSets h = hemisphere_sets(zd, g, v);
        c.add(Cell{v, zd.morse(v), std::move(h.levels)});
    }
    return c;
}

namespace {

std::string label_list(const std::vector<Label>& xs) {
    std::string s;
    for (Label x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return "{" + s + "}";
}

}  // namespace

std::vector<Finding> validate_complex(const SignedComplex& c) {
    std::vector<Finding> out;
    auto report = [&out](Label id, std::string check, std::string message) {
        out.push_back(Finding{id, std::move(check), std::move(message)});
    };

    for (const auto& [id, cell] : c.cells()) {
        if (cell.dim < 0) report(id, "dimension", "negative dimension");
        if (static_cast<int>(cell.hemispheres.size()) != cell.dim) {
            report(id, "hemisphere-count",
                   "dim " + std::to_string(cell.dim) + " but " + std::to_string(cell.hemispheres.size()) + " levels");
        }

        std::set<Label> seen;
        for (std::size_t j = 0; j < cell.hemispheres.size(); ++j) {
            const auto& level = cell.hemispheres[j];
            const int lj = static_cast<int>(j);
            for (Sign s : {Sign::minus, Sign::plus}) {
                const auto& side = s == Sign::minus ? level.minus : level.plus;
                const std::string where = "level " + std::to_string(j) + sign_char(s);
                if (side.empty()) report(id, "empty-side", where + " is empty");
                if (j == 0 && side.size() > 1) report(id, "polar-singleton", where + " has " + label_list(side));

                bool has_top = false;
                for (Label m : side) {
                    if (m == id) {
                        report(id, "self-member", where + " contains the cell itself");
                        continue;
                    }
                    if (!seen.insert(m).second) report(id, "disjointness", where + " repeats " + std::to_string(m));
                    if (!c.contains(m)) {
                        report(id, "unknown-member", where + " names missing cell " + std::to_string(m));
                        continue;
                    }
                    const int md = c.cell(m).dim;
                    if (md > lj) {
                        report(id, "member-dimension",
                               where + " holds " + std::to_string(m) + " of dim " + std::to_string(md));
                    }
                    if (md == lj) has_top = true;
                }
                if (!side.empty() && !has_top) report(id, "top-cell", where + " has no cell of dim " + std::to_string(j));
            }
        }

        for (Label w : c.boundary(id)) {
            if (w == id || !c.contains(w)) continue;
            for (Label u : c.boundary(w)) {
                if (u != id && !c.in_boundary(u, id)) {
                    report(id, "boundary-closure",
                           std::to_string(u) + " bounds " + std::to_string(w) + " but is missing from the boundary");
                }
            }
        }
    }
    return out;
}

using json = nlohmann::ordered_json;

std::string encode_complex(const SignedComplex& c) {
    json root;
    root["name"] = c.name();
    root["cells"] = json::array();
    for (const auto& [id, cell] : c.cells()) {
        json jc;
        jc["id"] = id;
        jc["dim"] = cell.dim;
        jc["hemispheres"] = json::array();
        for (const auto& level : cell.hemispheres) {
            jc["hemispheres"].push_back(json{{"minus", level.minus}, {"plus", level.plus}});
        }
        root["cells"].push_back(std::move(jc));
    }
    return root.dump(2) + "\n";
}

namespace {

int int_field(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
        throw Error(ErrorKind::SchemaViolation, where + ": '" + key + "' must be an integer");
    }
    return obj.at(key).get<int>();
}

std::vector<Label> label_array(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj.at(key).is_array()) {
        throw Error(ErrorKind::SchemaViolation, where + ": '" + key + "' must be an array");
    }
    std::vector<Label> out;
    for (const auto& x : obj.at(key)) {
        if (!x.is_number_integer()) throw Error(ErrorKind::SchemaViolation, where + ": non-integer in '" + key + "'");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

DecodedComplex decode_complex(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedJSON, e.what());
    }
    if (!root.is_object()) throw Error(ErrorKind::SchemaViolation, "top level must be an object");
    if (!root.contains("cells") || !root["cells"].is_array()) {
        throw Error(ErrorKind::SchemaViolation, "'cells' array required");
    }

    DecodedComplex out;
    if (root.contains("name")) {
        if (!root["name"].is_string()) throw Error(ErrorKind::SchemaViolation, "'name' must be a string");
        out.complex.set_name(root["name"].get<std::string>());
    }
    for (const auto& jc : root["cells"]) {
        if (!jc.is_object()) throw Error(ErrorKind::SchemaViolation, "cell entries must be objects");
        Cell cell;
        cell.id = int_field(jc, "id", "cell");
        const std::string where = "cell " + std::to_string(cell.id);
        if (cell.id < 1) throw Error(ErrorKind::SchemaViolation, where + ": ids must be positive");
        if (out.complex.contains(cell.id)) throw Error(ErrorKind::SchemaViolation, where + ": duplicate id");
        cell.dim = int_field(jc, "dim", where);
        if (cell.dim < 0) throw Error(ErrorKind::SchemaViolation, where + ": negative dim");
        if (!jc.contains("hemispheres") || !jc["hemispheres"].is_array()) {
            throw Error(ErrorKind::SchemaViolation, where + ": 'hemispheres' array required");
        }
        if (static_cast<int>(jc["hemispheres"].size()) != cell.dim) {
            throw Error(ErrorKind::SchemaViolation, where + ": hemispheres length must equal dim");
        }
        for (const auto& jl : jc["hemispheres"]) {
            if (!jl.is_object()) throw Error(ErrorKind::SchemaViolation, where + ": hemisphere entries must be objects");
            cell.hemispheres.push_back(HemisphereLevel{label_array(jl, "minus", where), label_array(jl, "plus", where)});
        }
        out.complex.add(std::move(cell));
    }
    out.findings = validate_complex(out.complex);
    return out;
}

SignedComplex relabel(const SignedComplex& c, const std::vector<Label>& h0) {
    std::map<Label, Label> position;
    for (std::size_t i = 0; i < h0.size(); ++i) position[h0[i]] = static_cast<Label>(i + 1);
    if (position.size() != c.size() || h0.size() != c.size()) {
        throw Error(ErrorKind::LabelMismatch, "order does not list every cell exactly once");
    }
    auto map_one = [&](Label x) {
        auto it = position.find(x);
        if (it == position.end()) throw Error(ErrorKind::LabelMismatch, "label " + std::to_string(x) + " not in order");
        return it->second;
    };
    SignedComplex out(c.name());
    for (const auto& [id, cell] : c.cells()) {
        Cell mapped{map_one(id), cell.dim, {}};
        for (const auto& level : cell.hemispheres) {
            HemisphereLevel ml;
            for (Label x : level.minus) ml.minus.push_back(map_one(x));
            for (Label x : level.plus) ml.plus.push_back(map_one(x));
            mapped.hemispheres.push_back(std::move(ml));
        }
        out.add(std::move(mapped));
    }
    return out;
}

bool canonical_equal(const SignedComplex& a, const SignedComplex& b) {
    if (a.size() != b.size()) return false;
    auto canonical = [](const SignedComplex& c, const char* which) {
        try {
            return relabel(c, reconstruct_orders(c, true).h0);
        } catch (const Error& e) {
            throw Error(ErrorKind::ReconstructionFailed, std::string(which) + ": " + e.what());
        }
    };
    return canonical(a, "first complex") == canonical(b, "second complex");
}

}  // namespace sturm
