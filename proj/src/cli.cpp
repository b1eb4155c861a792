#include "sturm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturm/cell_template.hpp"
#include "sturm/complex.hpp"
#include "sturm/connection.hpp"
#include "sturm/descendants.hpp"
#include "sturm/error.hpp"
#include "sturm/meander.hpp"
#include "sturm/permutation.hpp"
#include "sturm/render.hpp"
#include "sturm/zero_data.hpp"

namespace sturm::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// PERM may be given inline (one or several tokens), as "-" for stdin, or via --file.
struct PermInput {
    std::vector<std::string> tokens;
    std::string file;

    void attach(CLI::App* sub) {
        sub->add_option("perm", tokens, "permutation in one-line or cycle notation, or - for stdin");
        sub->add_option("--file", file, "read the permutation from a file");
    }

    Permutation load(std::istream& in) const {
        std::string text;
        if (!file.empty()) {
            if (!tokens.empty()) throw UsageError("give the permutation inline or via --file, not both");
            text = read_file(file);
        } else if (tokens.size() == 1 && tokens.front() == "-") {
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        } else if (!tokens.empty()) {
            for (const auto& t : tokens) text += t + " ";
        } else {
            throw UsageError("missing permutation");
        }
        return parse_permutation(text);
    }
};

bool is_input_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::EmptyInput:
        case ErrorKind::NotABijection:
        case ErrorKind::MalformedCycle:
        case ErrorKind::MalformedJSON:
        case ErrorKind::SchemaViolation:
        case ErrorKind::InvalidArgument:
        case ErrorKind::BoundExceeded:
        case ErrorKind::UnknownLabel:
        case ErrorKind::NegativeDimension:
            return true;
        default:
            return false;
    }
}

void print_validation(std::ostream& out, const Permutation& sigma, const SturmValidation& v) {
    out << "permutation: " << sigma.to_string() << "\n";
    out << "dissipative: " << yes_no(v.dissipative) << "\n";
    out << "meander: " << yes_no(v.meander) << " (" << v.crossing_count << " crossings)\n";
    out << "morse: " << yes_no(v.morse);
    if (v.first_negative_position) {
        out << " (negative index at position " << *v.first_negative_position << ")";
    } else if (!v.anchor_ok) {
        out << " (recursion misses i_N = 0)";
    }
    out << "\n";
    out << "verdict: " << (v.verdict ? "Sturm" : "not Sturm") << "\n";
}

std::string failed_property(const SturmValidation& v) {
    if (!v.dissipative) return "not dissipative";
    if (!v.meander) return "not a meander (" + std::to_string(v.crossing_count) + " crossings)";
    if (!v.morse) return "Morse indices fail";
    return "Sturm";
}

int cmd_validate(const Permutation& sigma, std::ostream& out) {
    const auto v = validate(sigma);
    print_validation(out, sigma, v);
    return v.verdict ? ok : negative;
}

int require_sturm(const Permutation& sigma, std::ostream& err) {
    const auto v = validate(sigma);
    if (v.verdict) return ok;
    err << "not a Sturm permutation: " << failed_property(v) << "\n";
    return negative;
}

int cmd_analyze(const Permutation& sigma, bool as_json, std::ostream& out, std::ostream& err) {
    if (int rc = require_sturm(sigma, err)) return rc;
    const ZeroData zd = zero_matrix(sigma);
    const ConnectionGraph g = connection_graph(sigma, zd);
    const SignedComplex c = build_complex(sigma);
    const auto n = static_cast<Label>(sigma.size());

    if (as_json) {
        nlohmann::ordered_json j;
        j["permutation"] = std::vector<int>(sigma.images().begin(), sigma.images().end());
        j["morse"] = zd.morse_vector();
        j["z"] = nlohmann::ordered_json::array();
        for (Label a = 1; a <= n; ++a) {
            std::vector<int> row;
            for (Label b = 1; b <= n; ++b) row.push_back(zd.z(a, b));
            j["z"].push_back(row);
        }
        j["edges"] = nlohmann::ordered_json::array();
        for (const auto& [v, w] : g.edges()) j["edges"].push_back({v, w});
        j["hemispheres"] = nlohmann::ordered_json::array();
        for (const auto& [id, cell] : c.cells()) {
            if (cell.dim == 0) continue;
            nlohmann::ordered_json jc;
            jc["cell"] = id;
            jc["dim"] = cell.dim;
            jc["levels"] = nlohmann::ordered_json::array();
            for (const auto& l : cell.hemispheres) jc["levels"].push_back({{"minus", l.minus}, {"plus", l.plus}});
            j["hemispheres"].push_back(std::move(jc));
        }
        out << j.dump(2) << "\n";
        return ok;
    }

    out << "morse: " << join(zd.morse_vector()) << "\n";
    out << "z matrix:\n";
    for (Label a = 1; a <= n; ++a) {
        std::vector<int> row;
        for (Label b = 1; b <= n; ++b) row.push_back(zd.z(a, b));
        out << "  " << join(row) << "\n";
    }
    out << "connections:\n";
    for (const auto& [v, w] : g.edges()) out << "  " << v << " -> " << w << "\n";
    out << "hemispheres:\n";
    for (const auto& [id, cell] : c.cells()) {
        if (cell.dim == 0) continue;
        out << "  cell " << id << " (dim " << cell.dim << ")\n";
        for (std::size_t k = 0; k < cell.hemispheres.size(); ++k) {
            out << "    E^" << k << "- = {" << join(cell.hemispheres[k].minus) << "}   E^" << k << "+ = {"
                << join(cell.hemispheres[k].plus) << "}\n";
        }
    }
    return ok;
}

void print_orders(std::ostream& out, const BoundaryOrders& b, const Permutation& sigma) {
    out << b.to_string();
    out << "sigma: " << sigma.to_string() << "\n";
}

int cmd_reconstruct(const std::string& path, bool force, std::ostream& out, std::ostream& err) {
    const DecodedComplex d = decode_complex(read_file(path));
    for (const auto& f : d.findings) err << "finding: cell " << f.cell << " " << f.check << ": " << f.message << "\n";
    if (!d.findings.empty() && !force) {
        err << "complex has structural findings; rerun with --force to reconstruct anyway\n";
        return negative;
    }
    const BoundaryOrders b = reconstruct_orders(d.complex, true);
    print_orders(out, b, boundary_orders_to_permutation(b));
    return ok;
}

int cmd_roundtrip(const Permutation& sigma, std::ostream& out, std::ostream& err) {
    if (int rc = require_sturm(sigma, err)) return rc;
    const BoundaryOrders b = reconstruct_orders(build_complex(sigma));
    const Permutation back = boundary_orders_to_permutation(b);
    print_orders(out, b, back);
    const bool same = back == sigma;
    out << "round trip: " << (same ? "identity" : "MISMATCH") << "\n";
    return same ? ok : negative;
}

int cmd_minimax(const Permutation& sigma, Label cell, std::ostream& out, std::ostream& err) {
    if (int rc = require_sturm(sigma, err)) return rc;
    const MinimaxReport r = minimax_pairs(sigma, cell);
    out << r.to_string();
    return r.all_hold() ? ok : negative;
}

int cmd_enumerate(int n, int bound, std::ostream& out) {
    for (const auto& p : enumerate_sturm(n, bound)) out << p.to_string() << "\n";
    return ok;
}

int cmd_template(const std::string& path, bool force, std::ostream& out, std::ostream& err) {
    const CellTemplate t = parse_template(read_file(path));
    const TemplateReport report = validate_template(t);
    out << report.to_string();
    if (!report.passes() && !force) {
        err << "template conditions fail; rerun with --force to convert anyway\n";
        return negative;
    }
    const SignedComplex c = template_to_signed_complex(t, true);
    const auto findings = validate_complex(c);
    for (const auto& f : findings) out << "finding: cell " << f.cell << " " << f.check << ": " << f.message << "\n";

    BoundaryOrders b;
    try {
        b = reconstruct_orders(c, true);
    } catch (const Error& e) {
        out << "reconstruction failed: " << e.what() << "\n";
        out << "verdict: not Sturm\n";
        return negative;
    }
    const Permutation sigma = boundary_orders_to_permutation(b);
    print_orders(out, b, sigma);
    out << "cycles: " << sigma.to_cycle_string() << "\n";

    const SturmValidation v = validate(sigma);
    if (!v.verdict) {
        out << "verdict: " << failed_property(v) << "\n";
        return negative;
    }
    const bool same = canonical_equal(build_complex(sigma), c);
    out << "rebuilt complex: " << (same ? "matches the input" : "differs from the input") << "\n";
    if (same && report.passes()) {
        out << "verdict: Sturm 3-ball\n";
        return ok;
    }
    out << "verdict: " << (same ? "Sturm, but the template conditions fail" : "not the complex of its permutation")
        << "\n";
    return negative;
}

int cmd_render(const Permutation& sigma, const std::string& svg_path, const std::string& dot_path,
               RenderOptions opts, std::ostream& out) {
    write_file(svg_path, render_meander_svg(sigma, opts));
    out << "wrote " << svg_path << "\n";
    if (!dot_path.empty()) {
        if (!validate(sigma).verdict) throw Error(ErrorKind::NotSturm, "connection graph needs a Sturm permutation");
        write_file(dot_path, render_connection_dot(connection_graph(sigma)));
        out << "wrote " << dot_path << "\n";
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Sturm permutations and signed Thom-Smale complexes", "sturm"};
    app.require_subcommand(1);
    std::function<int()> action;

    PermInput perm;
    bool as_json = false;
    bool force = false;
    bool mark_crossings = false;
    bool no_labels = false;
    std::string file;
    std::string output;
    std::string dot;
    int n = 0;
    int bound = default_enumeration_bound;
    int cell = 0;
    double unit = 40.0;

    auto* validate_cmd = app.add_subcommand("validate", "check dissipativity, meander and Morse properties");
    perm.attach(validate_cmd);
    validate_cmd->callback([&] { action = [&] { return cmd_validate(perm.load(in), out); }; });

    auto* analyze_cmd = app.add_subcommand("analyze", "Morse indices, zero numbers, connections, hemispheres");
    perm.attach(analyze_cmd);
    analyze_cmd->add_flag("--json", as_json, "machine-readable output");
    analyze_cmd->callback([&] { action = [&] { return cmd_analyze(perm.load(in), as_json, out, err); }; });

    auto* complex_cmd = app.add_subcommand("complex", "signed complex as JSON");
    perm.attach(complex_cmd);
    complex_cmd->callback([&] {
        action = [&] {
            const Permutation sigma = perm.load(in);
            if (int rc = require_sturm(sigma, err)) return rc;
            out << encode_complex(build_complex(sigma));
            return static_cast<int>(ok);
        };
    });

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "boundary orders of a signed complex");
    reconstruct_cmd->add_option("--complex", file, "complex JSON file")->required();
    reconstruct_cmd->add_flag("--force", force, "reconstruct despite structural findings");
    reconstruct_cmd->callback([&] { action = [&] { return cmd_reconstruct(file, force, out, err); }; });

    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "permutation -> complex -> orders -> permutation");
    perm.attach(roundtrip_cmd);
    roundtrip_cmd->callback([&] { action = [&] { return cmd_roundtrip(perm.load(in), out, err); }; });

    auto* minimax_cmd = app.add_subcommand("minimax", "closest / most distant hemisphere members of a cell");
    perm.attach(minimax_cmd);
    minimax_cmd->add_option("--cell", cell, "cell label")->required();
    minimax_cmd->callback([&] { action = [&] { return cmd_minimax(perm.load(in), cell, out, err); }; });

    auto* ci_cmd = app.add_subcommand("ci", "Chafee-Infante permutation");
    ci_cmd->add_option("--n", n, "dimension")->required();
    ci_cmd->callback([&] {
        action = [&] {
            out << chafee_infante(n).to_string() << "\n";
            return static_cast<int>(ok);
        };
    });

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all Sturm permutations of a size");
    enumerate_cmd->add_option("--n", n, "odd number of equilibria")->required();
    enumerate_cmd->add_option("--bound", bound, "largest size allowed");
    enumerate_cmd->callback([&] { action = [&] { return cmd_enumerate(n, bound, out); }; });

    auto* template_cmd = app.add_subcommand("template", "check and convert a 3-cell template");
    template_cmd->add_option("--file", file, "template JSON file")->required();
    template_cmd->add_flag("--force", force, "convert even when conditions fail");
    template_cmd->callback([&] { action = [&] { return cmd_template(file, force, out, err); }; });

    auto* render_cmd = app.add_subcommand("render", "meander diagram as SVG");
    perm.attach(render_cmd);
    render_cmd->add_option("-o,--output", output, "SVG output file")->required();
    render_cmd->add_option("--dot", dot, "also write the connection graph in DOT format");
    render_cmd->add_option("--unit", unit, "axis spacing")->check(CLI::PositiveNumber);
    render_cmd->add_flag("--mark-crossings", mark_crossings, "mark self-crossings in red");
    render_cmd->add_flag("--no-labels", no_labels, "omit axis labels");
    render_cmd->callback([&] {
        action = [&] {
            return cmd_render(perm.load(in), output, dot, RenderOptions{unit, !no_labels, mark_crossings}, out);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? static_cast<int>(ok) : static_cast<int>(usage);
    }

    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? usage : negative;
    }
}

}  // namespace sturm::cli
