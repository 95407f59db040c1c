/*
 * Copyright 2026 The logsymp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>

#include "logsymp/json_io.hpp"
#include "logsymp/logsymp.hpp"
#include "oracles.hpp"

using namespace logsymp;
using io::json;

namespace {

json load(const std::string& name) {
    std::ifstream in(std::string(LOGSYMP_SAMPLES_DIR) + "/" + name);
    REQUIRE(in);
    return json::parse(in);
}

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("rationals", "[json]") {
    for (const Rational& r : {Rational(0), Rational(-7), Rational(3, 4), Rational(-5, 6), Rational(BigInt("123456789012345678901234567890"))})
        CHECK(io::rational_from_json(io::to_json(r)) == r);
    CHECK(io::rational_from_json(json(4)) == Rational(4));
    CHECK(io::rational_from_json(json("2/-4")) == Rational(-1, 2));
    CHECK(code_of([] { io::rational_from_json(json("1/0")); }) == ErrorCode::Parse);
    CHECK(code_of([] { io::rational_from_json(json("abc")); }) == ErrorCode::Parse);
    CHECK(code_of([] { io::rational_from_json(json(1.5)); }) == ErrorCode::Parse);
}

TEST_CASE("matrices and classes round-trip", "[json][property]") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        QMatrix m = oracle::random_skew(rng, 4, -9, 9) * Rational(1, 1 + trial % 5);
        CHECK(io::matrix_from_json(io::to_json(m)) == m);
        LogClass cls = oracle::random_projective_class(rng, 2, -5, 5);
        LogClass back = io::class_from_json(json::parse(io::to_json(cls).dump()));
        CHECK(back.matrix() == cls.matrix());
        CHECK(back.complex().kind() == ComplexKind::ProjectiveSpace);
        CHECK(back.num_vertices() == 5);
    }
    CHECK(code_of([] { io::matrix_from_json(json::parse("[[1, 2], [3]]")); }) == ErrorCode::Parse);
    CHECK(code_of([] { io::matrix_from_json(json::parse("{\"a\": 1}")); }) == ErrorCode::Parse);
}

TEST_CASE("complexes", "[json]") {
    for (const ComplexPtr& c : {projective_space_complex(1), projective_space_complex(2), affine_germ_complex(3)}) {
        ComplexPtr back = io::complex_from_json(io::to_json(*c));
        CHECK(back->kind() == c->kind());
        CHECK(back->num_vertices() == c->num_vertices());
        CHECK(back->facets() == c->facets());
        CHECK(back->chern_mode() == c->chern_mode());
    }
    auto custom = io::complex_from_json(load("custom_complex.json").at("complex"));
    CHECK(custom->kind() == ComplexKind::Custom);
    CHECK(custom->chern_mode() == ChernMode::Unsupported);
    CHECK(code_of([] { io::complex_from_json(json::parse("{\"kind\": \"torus\"}")); }) == ErrorCode::Parse);
    CHECK(code_of([] { io::complex_from_json(json::parse("{\"kind\": \"P2n\"}")); }) == ErrorCode::Parse);
}

TEST_CASE("samples parse", "[json]") {
    auto block = io::class_from_json(load("p4_block.json"));
    CHECK(block.num_vertices() == 5);
    CHECK(is_nondegenerate(block));
    auto tri = io::class_from_json(load("triangle_111.json"));
    CHECK(smoothing_diagram_of(tri).size() == 3);
    auto pent = io::diagram_from_json(load("pentagon.json"));
    CHECK(pent.size() == 5);
    CHECK(io::diagram_from_json(load("empty_p4.json")).empty());
    auto germ = io::germ_from_json(load("germ_111.json"));
    CHECK(germ.n_divisor == 3);
    CHECK(germ.full_matrix.rows() == 4);
}

TEST_CASE("diagrams round-trip", "[json][property]") {
    for (const auto& c : enumerate_smoothing_diagrams(2)) {
        json j = io::to_json(c);
        CHECK(j.at("encoding") == c.canonical.encoding);
        CHECK(j.at("dimension") == c.dimension);
        SmoothingDiagram d = io::diagram_from_json(json::parse(j.at("diagram").dump()));
        CHECK(d == c.representative);
        CHECK(io::matrix_from_json(j.at("witness")) == c.witness.matrix());
    }
    CHECK(code_of([] { io::diagram_from_json(json::parse("{\"vertices\": 3, \"edges\": [{\"e\": [0]}]}")); }) ==
          ErrorCode::Parse);
    CHECK(code_of([] { io::diagram_from_json(json::parse("{\"vertices\": 3, \"edges\": [{\"e\": [0, 1], \"orders\": {\"x\": 1}}]}")); }) ==
          ErrorCode::Parse);
    CHECK(code_of([] { io::diagram_from_json(json::parse("{\"edges\": []}")); }) == ErrorCode::Parse);
}

TEST_CASE("reports round-trip", "[json]") {
    auto germ = io::germ_from_json(load("germ_111.json"));
    json r = io::to_json(cohomology_report(germ));
    CHECK(r.at("poincare") == json::parse("[1, 3, 6, 4]"));
    CHECK(r.at("hp2") == 6);
    CHECK(r.at("contributing_simplices").size() == 4);
    auto g2 = io::germ_from_json(json::parse(io::to_json(germ).dump()));
    CHECK(g2.full_matrix == germ.full_matrix);

    json a = io::to_json(analyze(io::class_from_json(load("triangle_111.json"))));
    CHECK(a.at("holonomic") == true);
    CHECK(a.at("diagram").at("edges").size() == 3);

    auto tp = io::to_json(triple_points_c4()[0]);
    CHECK(tp.at("label") == "E6tilde");
    CHECK(tp.at("biresidues") == json::parse("[\"1/3\", \"1/3\", \"1/3\"]"));
    auto chain = io::to_json(two_edge_chain_family(1, 4));
    CHECK(chain.at("biresidues") == json::parse("[\"5\", \"2\", \"3\"]"));
    CHECK(chain.at("label") == "T_{inf,2,5}");
    CHECK(chain.at("third_edge_smoothable") == false);

    auto s = io::to_json(is_realizable(SmoothingDiagram(3), projective_space_complex(1)));
    CHECK(s.at("verdict") == "ExtraSmoothableEdge");
    CHECK(s.at("witness").is_null());
}
