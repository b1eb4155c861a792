#include <algorithm>

#include <doctest.h>

#include "sturm/cell_template.hpp"
#include "sturm/complex.hpp"
#include "sturm/error.hpp"
#include "sturm/meander.hpp"
#include "support.hpp"

using namespace sturm;

namespace {

ErrorKind decode_error(const std::string& text) {
    try {
        decode_complex(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::EmptyInput;
}

bool has_check(const std::vector<Finding>& fs, const std::string& check) {
    return std::any_of(fs.begin(), fs.end(), [&](const Finding& f) { return f.check == check; });
}

}  // namespace

TEST_CASE("complex of the nine-equilibrium example") {
    const SignedComplex c = build_complex(testing::nine_ball);
    CHECK(c.size() == 9);
    CHECK(c.max_dim() == 3);
    const Cell& top = c.cell(4);
    CHECK(top.dim == 3);
    REQUIRE(top.hemispheres.size() == 3);
    CHECK(top.hemispheres[0] == HemisphereLevel{{1}, {9}});
    CHECK(top.hemispheres[1] == HemisphereLevel{{2}, {8}});
    CHECK(top.hemispheres[2] == HemisphereLevel{{3}, {5, 6, 7}});
    CHECK(c.cell(7).hemispheres[1] == HemisphereLevel{{6}, {8}});
    CHECK(c.boundary(4) == std::vector<Label>{1, 2, 3, 5, 6, 7, 8, 9});
    CHECK(c.in_boundary(6, 7));
    CHECK_FALSE(c.in_boundary(2, 7));
    CHECK(validate_complex(c).empty());
}

TEST_CASE("single equilibrium") {
    const SignedComplex c = build_complex(Permutation{1});
    CHECK(c.size() == 1);
    CHECK(c.cell(1).dim == 0);
    CHECK_THROWS_AS(build_complex(Permutation{1, 3, 2}), Error);
}

TEST_CASE("Chafee-Infante complexes") {
    for (int n = 0; n <= 6; ++n) {
        const SignedComplex c = build_complex(chafee_infante(n));
        const Label top = n + 1;
        CHECK(c.cell(top).dim == n);
        for (const auto& level : c.cell(top).hemispheres) {
            CHECK(level.minus.size() == 1);
            CHECK(level.plus.size() == 1);
        }
        for (int k = 0; k <= n; ++k) {
            const auto count = std::count_if(c.cells().begin(), c.cells().end(),
                                             [&](const auto& kv) { return kv.second.dim == k; });
            CHECK(count == (k < n ? 2 : 1));
        }
    }
}

TEST_CASE("mutilated complexes produce findings") {
    SignedComplex c = build_complex(testing::nine_ball);
    auto& plus = c.cell(4).hemispheres[2].plus;
    plus.erase(std::find(plus.begin(), plus.end(), 6));
    const auto findings = validate_complex(c);
    CHECK(has_check(findings, "boundary-closure"));

    SignedComplex d = build_complex(testing::nine_ball);
    d.cell(4).hemispheres[2].plus.clear();
    CHECK(has_check(validate_complex(d), "empty-side"));

    SignedComplex e = build_complex(testing::nine_ball);
    e.cell(4).hemispheres[0].plus.push_back(8);
    const auto fe = validate_complex(e);
    CHECK(has_check(fe, "polar-singleton"));
    CHECK(has_check(fe, "disjointness"));
    CHECK(has_check(fe, "member-dimension"));

    SignedComplex f = build_complex(testing::nine_ball);
    f.cell(3).hemispheres[1].minus = {12};
    CHECK(has_check(validate_complex(f), "unknown-member"));

    SignedComplex g = build_complex(testing::nine_ball);
    g.cell(3).hemispheres[1].minus = {3};
    CHECK(has_check(validate_complex(g), "self-member"));

    SignedComplex h = build_complex(testing::nine_ball);
    h.cell(4).hemispheres[2].minus = {2};
    CHECK(has_check(validate_complex(h), "top-cell"));

    SignedComplex k = build_complex(testing::nine_ball);
    k.cell(4).hemispheres.pop_back();
    CHECK(has_check(validate_complex(k), "hemisphere-count"));
}

TEST_CASE("JSON round trip") {
    SignedComplex c = build_complex(testing::nine_ball);
    c.set_name("nine");
    const std::string text = encode_complex(c);
    const DecodedComplex d = decode_complex(text);
    CHECK(d.complex == c);
    CHECK(d.complex.name() == "nine");
    CHECK(d.findings.empty());
    CHECK(encode_complex(d.complex) == text);
}

TEST_CASE("encoding of 0-cells") {
    const std::string text = encode_complex(build_complex(Permutation{1}));
    CHECK(text.find("\"hemispheres\": []") != std::string::npos);
}

TEST_CASE("decode errors") {
    CHECK(decode_error("{") == ErrorKind::MalformedJSON);
    CHECK(decode_error("[]") == ErrorKind::SchemaViolation);
    CHECK(decode_error(R"({"name":"x"})") == ErrorKind::SchemaViolation);
    CHECK(decode_error(R"({"cells":[{"id":1,"dim":1,"hemispheres":[]}]})") == ErrorKind::SchemaViolation);
    CHECK(decode_error(R"({"cells":[{"id":1,"dim":0,"hemispheres":[]},{"id":1,"dim":0,"hemispheres":[]}]})") ==
          ErrorKind::SchemaViolation);
    CHECK(decode_error(R"({"cells":[{"id":0,"dim":0,"hemispheres":[]}]})") == ErrorKind::SchemaViolation);
    CHECK(decode_error(R"({"cells":[{"id":"a","dim":0,"hemispheres":[]}]})") == ErrorKind::SchemaViolation);
    CHECK(decode_error(R"({"cells":[{"id":2,"dim":1,"hemispheres":[{"minus":[1]}]}]})") ==
          ErrorKind::SchemaViolation);
}

TEST_CASE("decode keeps structurally odd complexes and reports them") {
    const DecodedComplex d = decode_complex(R"({"name":"odd","cells":[{"id":2,"dim":1,
        "hemispheres":[{"minus":[1],"plus":[]}]}]})");
    CHECK(d.complex.size() == 1);
    CHECK(has_check(d.findings, "empty-side"));
    CHECK(has_check(d.findings, "unknown-member"));
}

TEST_CASE("tetrahedron complex fixture") {
    const DecodedComplex d = decode_complex(testing::read_fixture("tetrahedron_complex.json"));
    CHECK(d.complex.size() == 15);
    CHECK(d.findings.empty());
    const CellTemplate t = parse_template(testing::read_fixture("tetrahedron.json"));
    CHECK(d.complex == template_to_signed_complex(t));
}

TEST_CASE("octahedron passes the structural checks") {
    const CellTemplate t = parse_template(testing::read_fixture("octahedron.json"));
    CHECK(validate_complex(template_to_signed_complex(t, true)).empty());
}

TEST_CASE("relabelling and canonical equality") {
    const SignedComplex c = build_complex(testing::nine_ball);
    const std::vector<Label> order{9, 3, 5, 1, 8, 2, 4, 7, 6};
    const SignedComplex shuffled = relabel(c, order);
    CHECK_FALSE(shuffled == c);
    CHECK(canonical_equal(c, shuffled));
    CHECK(canonical_equal(c, c));
    CHECK_FALSE(canonical_equal(c, build_complex(chafee_infante(4))));
    CHECK_THROWS_AS(relabel(c, {1, 2, 3}), Error);

    SignedComplex broken = c;
    broken.cell(4).hemispheres[2].minus.clear();
    try {
        canonical_equal(c, broken);
        FAIL("expected ReconstructionFailed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ReconstructionFailed);
    }
}

TEST_CASE("complex invariants over all Sturm permutations up to N=9") {
    for (int n : {1, 3, 5, 7, 9}) {
        for (const auto& sigma : enumerate_sturm(n)) {
            CAPTURE(sigma.to_string());
            const SignedComplex c = build_complex(sigma);
            CHECK(validate_complex(c).empty());
            const ZeroData zd = zero_matrix(sigma);
            for (const auto& [v, cell] : c.cells()) {
                for (std::size_t j = 0; j < cell.hemispheres.size(); ++j) {
                    for (Label w : cell.hemispheres[j].minus) {
                        CHECK(signed_zero(zd, w, v) == SignedZ{static_cast<int>(j), Sign::minus});
                    }
                    for (Label w : cell.hemispheres[j].plus) {
                        CHECK(signed_zero(zd, w, v) == SignedZ{static_cast<int>(j), Sign::plus});
                    }
                }
            }
        }
    }
}
