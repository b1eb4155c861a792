#include "sturm/cell_template.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sturm/descendants.hpp"
#include "sturm/error.hpp"

namespace sturm {

using json = nlohmann::json;

namespace {

int get_int(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
        throw Error(ErrorKind::SchemaViolation, where + ": '" + key + "' must be an integer");
    }
    return obj.at(key).get<int>();
}

std::vector<Label> get_labels(const json& obj, const char* key, const std::string& where) {
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

const json& get_array(const json& obj, const char* key) {
    if (!obj.contains(key) || !obj.at(key).is_array()) {
        throw Error(ErrorKind::SchemaViolation, std::string("'") + key + "' array required");
    }
    return obj.at(key);
}

std::string chart_name(Chart c) { return c == Chart::west ? "W" : "E"; }

// Walks an alternating edge/vertex path from `from`; returns the problem, or
// an empty string when the path is a directed path ending at `to`.
std::string path_problem(const std::vector<Label>& path, Label from, Label to,
                         const std::map<Label, PlanarEdge>& edges, const std::set<Label>& vertices) {
    if (path.size() % 2 == 0) return "path must alternate edge, vertex, ..., edge";
    Label at = from;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Label x = path[i];
        if (i % 2 == 0) {
            auto it = edges.find(x);
            if (it == edges.end()) return "expected an edge at " + std::to_string(x);
            if (it->second.tail != at) return "edge " + std::to_string(x) + " does not leave " + std::to_string(at);
            at = it->second.head;
        } else {
            if (!vertices.count(x)) return "expected a vertex at " + std::to_string(x);
            if (x != at) return "vertex " + std::to_string(x) + " is not the head of the previous edge";
        }
    }
    if (at != to) return "path ends at " + std::to_string(at) + " instead of " + std::to_string(to);
    return {};
}

std::set<Label> odd_entries(const std::vector<Label>& path) {
    std::set<Label> out;
    for (std::size_t i = 1; i < path.size(); i += 2) out.insert(path[i]);
    return out;
}

std::vector<Label> even_entries(const std::vector<Label>& path) {
    std::vector<Label> out;
    for (std::size_t i = 0; i < path.size(); i += 2) out.push_back(path[i]);
    return out;
}

struct Bipolarity {
    std::vector<std::string> problems;
    std::vector<Label> sources;
    std::vector<Label> sinks;
};

Bipolarity check_bipolarity(const PlanarComplex& p) {
    Bipolarity b;
    std::map<Label, int> indeg;
    std::map<Label, int> outdeg;
    std::map<Label, std::vector<Label>> out;
    for (Label v : p.vertices) indeg[v] = outdeg[v] = 0;
    for (const auto& e : p.edges) {
        if (!indeg.count(e.tail) || !indeg.count(e.head)) {
            b.problems.push_back("edge " + std::to_string(e.id) + " has an endpoint that is not a vertex");
            continue;
        }
        if (e.tail == e.head) b.problems.push_back("edge " + std::to_string(e.id) + " is a loop");
        ++outdeg[e.tail];
        ++indeg[e.head];
        out[e.tail].push_back(e.head);
    }
    for (const auto& [v, d] : indeg) {
        if (d == 0) b.sources.push_back(v);
        if (outdeg[v] == 0) b.sinks.push_back(v);
    }

    std::map<Label, int> remaining = indeg;
    std::vector<Label> ready = b.sources;
    std::size_t seen = 0;
    while (!ready.empty()) {
        const Label v = ready.back();
        ready.pop_back();
        ++seen;
        for (Label w : out[v]) {
            if (--remaining[w] == 0) ready.push_back(w);
        }
    }
    if (seen != indeg.size()) b.problems.push_back("edge orientation has a directed cycle");
    if (b.sources.size() != 1) b.problems.push_back(std::to_string(b.sources.size()) + " source vertices");
    if (b.sinks.size() != 1) b.problems.push_back(std::to_string(b.sinks.size()) + " sink vertices");
    return b;
}

struct Lookup {
    std::set<Label> vertices;
    std::map<Label, PlanarEdge> edges;
    std::map<Label, const PlanarFace*> faces;
    std::vector<std::string> duplicates;

    explicit Lookup(const PlanarComplex& p) {
        std::set<Label> all;
        auto claim = [&](Label id) {
            if (!all.insert(id).second) duplicates.push_back("label " + std::to_string(id) + " used twice");
        };
        for (Label v : p.vertices) {
            claim(v);
            vertices.insert(v);
        }
        for (const auto& e : p.edges) {
            claim(e.id);
            edges[e.id] = e;
        }
        for (const auto& f : p.faces) {
            claim(f.id);
            faces[f.id] = &f;
        }
    }
};

std::vector<std::string> face_problems(const PlanarFace& f, const Lookup& lk) {
    std::vector<std::string> out;
    const std::string where = "face " + std::to_string(f.id) + ": ";
    if (!lk.vertices.count(f.min) || !lk.vertices.count(f.max)) out.push_back(where + "min/max must be vertices");
    for (const auto* path : {&f.minus_path, &f.plus_path}) {
        const std::string why = path_problem(*path, f.min, f.max, lk.edges, lk.vertices);
        if (!why.empty()) out.push_back(where + (path == &f.minus_path ? "minus path: " : "plus path: ") + why);
    }
    const auto a = odd_entries(f.minus_path);
    const auto b = odd_entries(f.plus_path);
    for (Label v : a) {
        if (b.count(v)) out.push_back(where + "paths meet at vertex " + std::to_string(v));
    }
    return out;
}

}  // namespace

CellTemplate parse_template(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedJSON, e.what());
    }
    if (!root.is_object()) throw Error(ErrorKind::SchemaViolation, "top level must be an object");

    CellTemplate t;
    t.skeleton.vertices = get_labels(root, "vertices", "template");
    for (const auto& je : get_array(root, "edges")) {
        if (!je.is_object()) throw Error(ErrorKind::SchemaViolation, "edge entries must be objects");
        PlanarEdge e;
        e.id = get_int(je, "id", "edge");
        const std::string where = "edge " + std::to_string(e.id);
        e.tail = get_int(je, "tail", where);
        e.head = get_int(je, "head", where);
        t.skeleton.edges.push_back(e);
    }
    for (const auto& jf : get_array(root, "faces")) {
        if (!jf.is_object()) throw Error(ErrorKind::SchemaViolation, "face entries must be objects");
        PlanarFace f;
        f.id = get_int(jf, "id", "face");
        const std::string where = "face " + std::to_string(f.id);
        f.min = get_int(jf, "min", where);
        f.max = get_int(jf, "max", where);
        f.minus_path = get_labels(jf, "minus_path", where);
        f.plus_path = get_labels(jf, "plus_path", where);
        if (jf.contains("chart")) {
            if (!jf["chart"].is_string()) throw Error(ErrorKind::SchemaViolation, where + ": 'chart' must be a string");
            const auto chart = jf["chart"].get<std::string>();
            if (chart == "W") {
                f.chart = Chart::west;
            } else if (chart == "E") {
                f.chart = Chart::east;
            } else {
                throw Error(ErrorKind::SchemaViolation, where + ": 'chart' must be \"W\" or \"E\"");
            }
        }
        t.skeleton.faces.push_back(std::move(f));
    }
    if (root.contains("ball")) {
        const json& jb = root["ball"];
        if (!jb.is_object()) throw Error(ErrorKind::SchemaViolation, "'ball' must be an object");
        Ball b;
        b.id = get_int(jb, "id", "ball");
        b.north = get_int(jb, "north", "ball");
        b.south = get_int(jb, "south", "ball");
        b.meridian_ew = get_labels(jb, "meridian_ew", "ball");
        b.meridian_we = get_labels(jb, "meridian_we", "ball");
        t.ball = std::move(b);
    }
    return t;
}

std::vector<Label> hemisphere_cells(const CellTemplate& t, Chart chart) {
    std::set<Label> out;
    for (const auto& f : t.skeleton.faces) {
        if (f.chart != chart) continue;
        out.insert(f.id);
        out.insert(f.minus_path.begin(), f.minus_path.end());
        out.insert(f.plus_path.begin(), f.plus_path.end());
    }
    if (t.ball) {
        for (const auto* m : {&t.ball->meridian_ew, &t.ball->meridian_we}) {
            for (Label x : *m) out.erase(x);
        }
        out.erase(t.ball->north);
        out.erase(t.ball->south);
    }
    return {out.begin(), out.end()};
}

SignedComplex planar_to_signed_complex(const PlanarComplex& p) {
    const Lookup lk(p);
    if (!lk.duplicates.empty()) throw Error(ErrorKind::PathMismatch, lk.duplicates.front());
    const Bipolarity bp = check_bipolarity(p);
    if (!bp.problems.empty()) throw Error(ErrorKind::InvalidBipolarity, bp.problems.front());
    for (const auto& f : p.faces) {
        const auto problems = face_problems(f, lk);
        if (!problems.empty()) throw Error(ErrorKind::PathMismatch, problems.front());
    }

    SignedComplex c;
    for (Label v : p.vertices) c.add(Cell{v, 0, {}});
    for (const auto& e : p.edges) c.add(Cell{e.id, 1, {HemisphereLevel{{e.tail}, {e.head}}}});
    for (const auto& f : p.faces) {
        c.add(Cell{f.id, 2, {HemisphereLevel{{f.min}, {f.max}}, HemisphereLevel{f.minus_path, f.plus_path}}});
    }
    return c;
}

namespace {

struct EdgeIncidence {
    Label face = 0;
    Chart chart = Chart::west;
    Sign side = Sign::minus;
};

std::map<Label, std::vector<EdgeIncidence>> edge_incidence(const PlanarComplex& p) {
    std::map<Label, std::vector<EdgeIncidence>> out;
    for (const auto& f : p.faces) {
        for (Label e : even_entries(f.minus_path)) out[e].push_back({f.id, f.chart, Sign::minus});
        for (Label e : even_entries(f.plus_path)) out[e].push_back({f.id, f.chart, Sign::plus});
    }
    return out;
}

std::optional<Label> face_with_edge(const PlanarComplex& p, Chart chart, Label edge) {
    for (const auto& f : p.faces) {
        if (f.chart != chart) continue;
        for (const auto* path : {&f.minus_path, &f.plus_path}) {
            const auto es = even_entries(*path);
            if (std::find(es.begin(), es.end(), edge) != es.end()) return f.id;
        }
    }
    return std::nullopt;
}

std::set<Label> face_edges(const PlanarComplex& p, Label id) {
    std::set<Label> out;
    for (const auto& f : p.faces) {
        if (f.id != id) continue;
        for (Label e : even_entries(f.minus_path)) out.insert(e);
        for (Label e : even_entries(f.plus_path)) out.insert(e);
    }
    return out;
}

void check_closure(const CellTemplate& t, const Lookup& lk, ConditionResult& r) {
    const auto& p = t.skeleton;
    for (const auto& d : lk.duplicates) r.fail(d);
    if (!t.ball) {
        r.fail("no 3-cell given");
        return;
    }
    const Ball& b = *t.ball;
    if (lk.vertices.count(b.id) || lk.edges.count(b.id) || lk.faces.count(b.id)) {
        r.fail("ball label " + std::to_string(b.id) + " collides with a boundary cell");
    }
    for (const auto& f : p.faces) {
        for (auto& why : face_problems(f, lk)) r.fail(std::move(why));
    }

    std::set<Label> covered;
    for (const auto& f : p.faces) {
        covered.insert(f.min);
        covered.insert(f.max);
        covered.insert(f.minus_path.begin(), f.minus_path.end());
        covered.insert(f.plus_path.begin(), f.plus_path.end());
    }
    for (Label v : p.vertices) {
        if (!covered.count(v)) r.fail("vertex " + std::to_string(v) + " lies on no face");
    }

    std::set<Label> meridian_edges;
    for (const auto* m : {&b.meridian_ew, &b.meridian_we}) {
        for (Label e : even_entries(*m)) meridian_edges.insert(e);
    }
    const auto incidence = edge_incidence(p);
    for (const auto& e : p.edges) {
        auto it = incidence.find(e.id);
        const std::size_t count = it == incidence.end() ? 0 : it->second.size();
        const std::string where = "edge " + std::to_string(e.id);
        if (count != 2) {
            r.fail(where + " lies on " + std::to_string(count) + " faces instead of 2");
            continue;
        }
        const bool mixed = it->second[0].chart != it->second[1].chart;
        if (meridian_edges.count(e.id) && !mixed) r.fail(where + " is a meridian edge but does not separate W from E");
        if (!meridian_edges.count(e.id) && mixed) r.fail(where + " separates W from E but is not on a meridian");
    }

    const long euler = static_cast<long>(p.vertices.size()) - static_cast<long>(p.edges.size()) +
                       static_cast<long>(p.faces.size());
    if (euler != 2) r.fail("boundary has Euler characteristic " + std::to_string(euler) + " instead of 2");

    const auto west = hemisphere_cells(t, Chart::west);
    const auto east = hemisphere_cells(t, Chart::east);
    if (west.empty() || east.empty()) r.fail("a hemisphere is empty");
    std::vector<Label> both;
    std::set_intersection(west.begin(), west.end(), east.begin(), east.end(), std::back_inserter(both));
    for (Label x : both) r.fail("cell " + std::to_string(x) + " lies in both hemispheres");
}

void check_bipolar(const CellTemplate& t, const Lookup& lk, ConditionResult& r) {
    const Bipolarity bp = check_bipolarity(t.skeleton);
    for (const auto& why : bp.problems) r.fail(why);
    if (!t.ball) {
        r.fail("no poles without a 3-cell");
        return;
    }
    const Ball& b = *t.ball;
    if (bp.sources.size() == 1 && bp.sources.front() != b.north) {
        r.fail("source is " + std::to_string(bp.sources.front()) + ", north pole is " + std::to_string(b.north));
    }
    if (bp.sinks.size() == 1 && bp.sinks.front() != b.south) {
        r.fail("sink is " + std::to_string(bp.sinks.front()) + ", south pole is " + std::to_string(b.south));
    }
    for (const auto* m : {&b.meridian_ew, &b.meridian_we}) {
        const std::string why = path_problem(*m, b.north, b.south, lk.edges, lk.vertices);
        if (!why.empty()) r.fail(std::string(m == &b.meridian_ew ? "EW" : "WE") + " meridian: " + why);
    }
    std::set<Label> ew(b.meridian_ew.begin(), b.meridian_ew.end());
    for (Label x : b.meridian_we) {
        if (ew.count(x)) r.fail("meridians share " + std::to_string(x));
    }
}

void check_orientation(const CellTemplate& t, ConditionResult& r) {
    if (!t.ball) return;
    const Ball& b = *t.ball;
    std::set<Label> meridian_vertices;
    std::set<Label> meridian_edges;
    for (const auto* m : {&b.meridian_ew, &b.meridian_we}) {
        for (Label v : odd_entries(*m)) meridian_vertices.insert(v);
        for (Label e : even_entries(*m)) meridian_edges.insert(e);
    }
    const auto incidence = edge_incidence(t.skeleton);
    for (const auto& e : t.skeleton.edges) {
        if (meridian_edges.count(e.id)) continue;
        auto it = incidence.find(e.id);
        if (it == incidence.end() || it->second.empty()) continue;
        const Chart chart = it->second.front().chart;
        if (std::any_of(it->second.begin(), it->second.end(), [&](const auto& x) { return x.chart != chart; })) {
            continue;  // reported under (i)
        }
        const std::string where = "edge " + std::to_string(e.id) + " (" + chart_name(chart) + ")";
        if (chart == Chart::west) {
            if (meridian_vertices.count(e.tail)) {
                r.fail(where + " leaves meridian vertex " + std::to_string(e.tail));
            }
        } else if (meridian_vertices.count(e.head)) {
            r.fail(where + " enters meridian vertex " + std::to_string(e.head));
        }
    }
}

struct OverlapPair {
    const char* name;
    const std::vector<Label>* meridian;
};

void check_overlap(const CellTemplate& t, ConditionResult& r) {
    if (!t.ball) return;
    const Ball& b = *t.ball;
    for (const OverlapPair& pair : {OverlapPair{"WE", &b.meridian_we}, OverlapPair{"EW", &b.meridian_ew}}) {
        const auto edges = even_entries(*pair.meridian);
        if (edges.empty()) {
            r.fail(std::string(pair.name) + " meridian has no edges");
            continue;
        }
        const auto w = face_with_edge(t.skeleton, Chart::west, edges.front());
        const auto e = face_with_edge(t.skeleton, Chart::east, edges.back());
        if (!w || !e) {
            r.fail(std::string(pair.name) + " meridian end edges lack W/E faces");
            continue;
        }
        const auto fw = face_edges(t.skeleton, *w);
        const auto fe = face_edges(t.skeleton, *e);
        const bool shared = std::any_of(edges.begin(), edges.end(), [&](Label x) { return fw.count(x) && fe.count(x); });
        if (!shared) {
            r.fail("faces " + std::to_string(*w) + " and " + std::to_string(*e) + " share no " + pair.name +
                   " meridian edge");
        }
    }
}

std::optional<ConditionResult> check_overlap_refined(const CellTemplate& t) {
    if (!t.ball) return std::nullopt;
    const Ball& b = *t.ball;
    ConditionResult r;
    try {
        const SignedComplex c = template_to_signed_complex(t, true);
        auto chain = [&](const char* s) { return descendant_chain(c, b.id, parse_sign_sequence(s)); };
        struct Case {
            const char* name;
            const std::vector<Label>* meridian;
            const char* lower;
            const char* upper;
        };
        for (const Case& k : {Case{"WE", &b.meridian_we, "-+-", "+++"}, Case{"EW", &b.meridian_ew, "---", "+-+"}}) {
            const auto first = chain(k.lower);
            const auto second = chain(k.upper);
            const auto edges = even_entries(*k.meridian);
            auto pos = [&](Label x) { return std::find(edges.begin(), edges.end(), x) - edges.begin(); };
            const auto p = pos(first[1]);
            const auto q = pos(second[1]);
            const auto n = static_cast<std::ptrdiff_t>(edges.size());
            if (p == n || q == n) {
                r.fail(std::string(k.name) + ": second descendants are not on the meridian");
                continue;
            }
            const auto fa = face_edges(t.skeleton, first[0]);
            const auto fb = face_edges(t.skeleton, second[0]);
            bool shared = false;
            for (auto i = std::min(p, q); i <= std::max(p, q); ++i) {
                const Label x = edges[static_cast<std::size_t>(i)];
                shared = shared || (fa.count(x) && fb.count(x));
            }
            if (!shared) {
                r.fail(std::string(k.name) + ": faces " + std::to_string(first[0]) + " and " +
                       std::to_string(second[0]) + " share no edge between " + std::to_string(first[1]) + " and " +
                       std::to_string(second[1]));
            }
        }
    } catch (const Error&) {
        return std::nullopt;
    }
    return r;
}

void check_sign_coherence(const CellTemplate& t, ConditionResult& r) {
    std::set<Label> meridian_edges;
    if (t.ball) {
        for (const auto* m : {&t.ball->meridian_ew, &t.ball->meridian_we}) {
            for (Label e : even_entries(*m)) meridian_edges.insert(e);
        }
    }
    for (const auto& [edge, inc] : edge_incidence(t.skeleton)) {
        if (inc.size() != 2) continue;
        const bool same = inc[0].side == inc[1].side;
        const bool meridian = meridian_edges.count(edge) != 0;
        if (meridian && !same) {
            r.fail("meridian edge " + std::to_string(edge) + " gets opposite sides from faces " +
                   std::to_string(inc[0].face) + " and " + std::to_string(inc[1].face));
        }
        if (!meridian && same) {
            r.fail("edge " + std::to_string(edge) + " gets the same side from faces " + std::to_string(inc[0].face) +
                   " and " + std::to_string(inc[1].face));
        }
    }
}

void print_condition(std::ostringstream& os, const char* tag, const char* title, const ConditionResult& c) {
    os << tag << ' ' << (c.pass ? "PASS" : "FAIL") << "  " << title << "\n";
    for (const auto& f : c.findings) os << "      " << f << "\n";
}

}  // namespace

TemplateReport validate_template(const CellTemplate& t) {
    const Lookup lk(t.skeleton);
    TemplateReport r;
    check_closure(t, lk, r.closure);
    check_bipolar(t, lk, r.bipolar);
    check_orientation(t, r.orientation);
    check_overlap(t, r.overlap);
    r.overlap_refined = check_overlap_refined(t);
    check_sign_coherence(t, r.sign_coherence);
    return r;
}

std::string TemplateReport::to_string() const {
    std::ostringstream os;
    print_condition(os, "(i)", "closure of a single 3-cell", closure);
    print_condition(os, "(ii)", "bipolar orientation with disjoint meridians", bipolar);
    print_condition(os, "(iii)", "edges directed towards the meridians in W, away in E", orientation);
    print_condition(os, "(iv)", "meridian overlap of the leading faces", overlap);
    if (overlap_refined) {
        print_condition(os, "(iv')", "overlap between the second descendants", *overlap_refined);
    } else {
        os << "(iv') n/a   overlap between the second descendants (descendants not computable)\n";
    }
    print_condition(os, "(s)", "side tags coherent across edges", sign_coherence);
    os << "template: " << (passes() ? "VALID" : "INVALID") << "\n";
    return os.str();
}

SignedComplex template_to_signed_complex(const CellTemplate& t, bool force) {
    if (!force) {
        const TemplateReport report = validate_template(t);
        if (!report.passes()) {
            throw Error(ErrorKind::TemplateInvalid, "template fails its conditions:\n" + report.to_string());
        }
    }
    SignedComplex c = planar_to_signed_complex(t.skeleton);
    if (!t.ball) return c;
    const Ball& b = *t.ball;
    c.add(Cell{b.id,
               3,
               {HemisphereLevel{{b.north}, {b.south}},
                HemisphereLevel{b.meridian_ew, b.meridian_we},
                HemisphereLevel{hemisphere_cells(t, Chart::west), hemisphere_cells(t, Chart::east)}}});
    return c;
}

}  // namespace sturm
