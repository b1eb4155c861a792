#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sturm/connection.hpp"
#include "sturm/permutation.hpp"

namespace sturm {

/// One cell of a signed hemisphere complex: its barycenter label, dimension
/// and, for each level j < dim, the barycenters of the open hemispheres
/// Sigma^j_-(id) and Sigma^j_+(id). Member lists are kept sorted.
struct Cell {
    Label id = 0;
    int dim = 0;
    std::vector<HemisphereLevel> hemispheres;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// The signed Thom-Smale complex as pure incidence data. The face relation is
/// not stored: the boundary of a cell is the union of its hemisphere members.
class SignedComplex {
public:
    SignedComplex() = default;
    explicit SignedComplex(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Inserts or replaces; member lists are sorted on the way in.
    void add(Cell cell);

    bool contains(Label id) const { return cells_.count(id) != 0; }
    const Cell& cell(Label id) const;
    Cell& cell(Label id);
    const std::map<Label, Cell>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    std::vector<Label> labels() const;
    int max_dim() const;

    /// Union of all hemisphere members of `id`, sorted.
    std::vector<Label> boundary(Label id) const;
    bool in_boundary(Label face, Label owner) const;

    friend bool operator==(const SignedComplex& a, const SignedComplex& b) { return a.cells_ == b.cells_; }

private:
    std::string name_;
    std::map<Label, Cell> cells_;
};

/// One cell per label, dimension = Morse index, hemispheres = E^j_pm(v).
/// Throws NotSturm.
SignedComplex build_complex(const Permutation& sigma);

struct Finding {
    Label cell = 0;
    std::string check;
    std::string message;
};

/// Necessary structural conditions only; empty iff none is violated.
std::vector<Finding> validate_complex(const SignedComplex& c);

std::string encode_complex(const SignedComplex& c);

struct DecodedComplex {
    SignedComplex complex;
    std::vector<Finding> findings;
};

/// Parses the JSON schema; structurally odd complexes are returned with their
/// findings instead of being refused. Throws MalformedJSON, SchemaViolation.
DecodedComplex decode_complex(std::string_view text);

/// Maps each label to its position under `h0` (must list every label once).
SignedComplex relabel(const SignedComplex& c, const std::vector<Label>& h0);

/// Compares both complexes after relabelling by their reconstructed x=0 orders.
/// Throws ReconstructionFailed when either reconstruction fails.
bool canonical_equal(const SignedComplex& a, const SignedComplex& b);

}  // namespace sturm
