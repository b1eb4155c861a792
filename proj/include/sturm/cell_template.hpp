#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturm/complex.hpp"

namespace sturm {

enum class Chart { west, east };

struct PlanarEdge {
    Label id = 0;
    Label tail = 0;
    Label head = 0;
};

/// A 2-cell bounded by two directed paths from `min` to `max`. Paths list the
/// interior barycenters in traversal order: edge, vertex, edge, ..., edge.
struct PlanarFace {
    Label id = 0;
    Label min = 0;
    Label max = 0;
    std::vector<Label> minus_path;
    std::vector<Label> plus_path;
    Chart chart = Chart::west;
};

struct PlanarComplex {
    std::vector<Label> vertices;
    std::vector<PlanarEdge> edges;
    std::vector<PlanarFace> faces;
};

/// The 3-cell of a template. Meridians use the face path format, poles excluded.
struct Ball {
    Label id = 0;
    Label north = 0;
    Label south = 0;
    std::vector<Label> meridian_ew;
    std::vector<Label> meridian_we;
};

struct CellTemplate {
    PlanarComplex skeleton;
    std::optional<Ball> ball;
};

/// Throws MalformedJSON, SchemaViolation.
CellTemplate parse_template(std::string_view text);

/// Cells strictly inside the West or East hemisphere: the faces of that chart
/// with their path members, minus meridians and poles. Sorted.
std::vector<Label> hemisphere_cells(const CellTemplate& t, Chart chart);

struct ConditionResult {
    bool pass = true;
    std::vector<std::string> findings;

    void fail(std::string why) {
        pass = false;
        findings.push_back(std::move(why));
    }
};

struct TemplateReport {
    ConditionResult closure;       // (i)
    ConditionResult bipolar;       // (ii)
    ConditionResult orientation;   // (iii)
    ConditionResult overlap;       // (iv)
    /// (iv) restricted to shared edges between the second descendants; empty
    /// when those descendants cannot be computed.
    std::optional<ConditionResult> overlap_refined;
    /// Informational: each interior edge gets opposite side tags from its two
    /// faces, each meridian edge the same tag.
    ConditionResult sign_coherence;

    bool passes() const { return closure.pass && bipolar.pass && orientation.pass && overlap.pass; }
    std::string to_string() const;
};

TemplateReport validate_template(const CellTemplate& t);

/// 0-cells for vertices, 1-cells ({tail},{head}), 2-cells ({min},{max}) then
/// (minus path, plus path). Throws InvalidBipolarity, PathMismatch.
SignedComplex planar_to_signed_complex(const PlanarComplex& p);

/// Converts the skeleton and adds the 3-cell with levels (N, S), (EW, WE),
/// (West, East). Throws TemplateInvalid unless `force` or the template passes.
SignedComplex template_to_signed_complex(const CellTemplate& t, bool force = false);

}  // namespace sturm
