// realize_test.cpp
// The entropy-realization construction and its end-to-end verifier.

#include <doctest.h>

#include <markovmm/errors.hpp>
#include <markovmm/realize.hpp>
#include <markovmm/sft.hpp>

#include "test_support.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace markovmm;

namespace {

constexpr double kLog2 = 0.6931471805599453;
constexpr double kLogGoldenRatio = 0.48121182505960347;

AdjacencyMatrix matrix_of(std::vector<std::string> alphabet,
                          std::vector<std::vector<std::uint8_t>> rows) {
    AdjacencyMatrix m;
    m.alphabet = std::move(alphabet);
    m.rows = std::move(rows);
    return m;
}

struct SegmentTable {
    const char* id;
    PointQ a;
    PointQ b;
};

}  // namespace

TEST_CASE("realizing the golden-ratio matrix reproduces the reference figure") {
    auto input = mmtest::load_matrix_fixture("golden.json");
    auto out = realize(input);

    CHECK(out.permutation == std::vector<int>{0, 1, 2});
    CHECK(out.k == 2);
    CHECK(out.c0_ids == std::vector<std::string>{"c1_2m", "c2_1", "c3_1", "c3_2"});

    const auto& mm = out.multimap;
    CHECK(mm.ambient == IntervalQ{Rat(1), Rat(5), true});
    std::vector<Rat> half_grid;
    for (int h = 2; h <= 10; ++h) half_grid.push_back(Rat(h, 2));
    CHECK(mm.partition == half_grid);

    // The nine interval branches, frozen from the reference construction.
    std::vector<SegmentTable> expected = {
        {"c1_2m", {Rat(1), Rat(2)}, {Rat(3, 2), Rat(7, 2)}},
        {"c2_1", {Rat(2), Rat(1)}, {Rat(5, 2), Rat(3, 2)}},
        {"c3_1", {Rat(3), Rat(1)}, {Rat(7, 2), Rat(3, 2)}},
        {"c3_2", {Rat(3), Rat(2)}, {Rat(7, 2), Rat(5, 2)}},
        {"r1", {Rat(3, 2), Rat(9, 2)}, {Rat(2), Rat(5)}},
        {"r2", {Rat(5, 2), Rat(9, 2)}, {Rat(3), Rat(5)}},
        {"r3", {Rat(7, 2), Rat(9, 2)}, {Rat(4), Rat(5)}},
        {"fl", {Rat(4), Rat(9, 2)}, {Rat(9, 2), Rat(5)}},
        {"fr", {Rat(9, 2), Rat(9, 2)}, {Rat(5), Rat(5)}},
    };
    for (const auto& seg : expected) {
        CAPTURE(seg.id);
        const Symbol& s = mm.at(seg.id);
        REQUIRE(s.cls == SymbolClass::A0);
        CHECK(s.domain.lo == seg.a.x);
        CHECK(s.domain.hi == seg.b.x);
        CHECK(branch_eval(s, s.domain.lo) == seg.a.y);
        CHECK(branch_eval(s, s.domain.hi) == seg.b.y);
    }

    // The merged branch climbs with slope 3; plain entries with slope 1.
    CHECK(mm.at("c1_2m").branch->slope == Rat(3));
    CHECK(mm.at("c2_1").branch->slope == Rat(1));
    CHECK(mm.at("r1").branch->slope == Rat(1));

    // Both endpoints of every branch carry a point symbol with provenance.
    int bl = 0, tr = 0;
    for (const auto& [id, role] : out.provenance) {
        if (role.rfind("C2(", 0) == 0) ++bl;
        if (role.rfind("B2(", 0) == 0) ++tr;
    }
    CHECK(bl == 9);
    CHECK(tr == 9);
    CHECK(mm.symbols.size() == 9 + 18);
}

TEST_CASE("the golden-ratio realization verifies end to end") {
    auto input = mmtest::load_matrix_fixture("golden.json");
    auto out = realize(input);
    RealizationReport report;
    REQUIRE_NOTHROW(report = verify_realization(input, out, 1e-6));

    CHECK(report.input_entropy == doctest::Approx(kLogGoldenRatio).epsilon(1e-9));
    CHECK(report.c0_component_entropy == doctest::Approx(kLogGoldenRatio).epsilon(1e-9));
    CHECK(report.output_sft_entropy == doctest::Approx(kLogGoldenRatio).epsilon(1e-9));
    CHECK(report.class_f_verdict.status == ClassFVerdict::Status::in_f);
    CHECK(report.figure_segments.size() == 9);
    for (const auto& seg : report.figure_segments) {
        CHECK(seg.kind == GraphPrimitive::Kind::segment);
    }
}

TEST_CASE("realizing the full 2-shift merges on the first column") {
    auto input = mmtest::load_matrix_fixture("allones2.json");
    auto out = realize(input);
    CHECK(out.k == 1);
    REQUIRE(out.c0_ids.size() == 3);
    CHECK(std::find(out.c0_ids.begin(), out.c0_ids.end(), "c1_1m") != out.c0_ids.end());

    auto report = verify_realization(input, out, 1e-6);
    CHECK(report.input_entropy == doctest::Approx(kLog2).epsilon(1e-9));
    CHECK(report.c0_component_entropy == doctest::Approx(kLog2).epsilon(1e-9));
    CHECK(report.class_f_verdict.status == ClassFVerdict::Status::in_f);
}

TEST_CASE("realization permutes rows so the pivot entries are adjacent") {
    // Row 0 has ones in columns 0 and 2: a transposition is required.
    auto input = matrix_of({"x", "y", "z"}, {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
    REQUIRE(is_irreducible(input));
    auto out = realize(input);
    CHECK(out.permutation != std::vector<int>{0, 1, 2});

    // The permuted matrix must still realize the same entropy.
    auto report = verify_realization(input, out, 1e-6);
    CHECK(report.c0_component_entropy ==
          doctest::Approx(report.input_entropy).epsilon(1e-9));
    CHECK(report.class_f_verdict.status == ClassFVerdict::Status::in_f);
}

TEST_CASE("the c0 block is the line graph of the permuted input") {
    auto input = mmtest::load_matrix_fixture("golden.json");
    auto out = realize(input);
    auto matrix = build_matrix(out.multimap);
    const int n = static_cast<int>(input.size());

    // Permuted matrix entries, 1-based.
    auto entry = [&](int i, int j) {
        return input.rows[out.permutation[i - 1]][out.permutation[j - 1]] != 0;
    };

    // One branch per entry: the merged branch stands for both pivot entries
    // of row 1, a plain branch c<i>_<j> for everything else.
    struct Encoded {
        std::string id;
        int row;
        std::vector<int> targets;
    };
    std::vector<Encoded> encoded;
    for (const std::string& id : out.c0_ids) {
        if (id.back() == 'm') {
            encoded.push_back({id, 1, {out.k, out.k + 1}});
        } else {
            auto us = id.find('_');
            int i = std::stoi(id.substr(1, us - 1));
            int j = std::stoi(id.substr(us + 1));
            encoded.push_back({id, i, {j}});
        }
    }

    // Every permuted entry is encoded exactly once.
    int entry_count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) entry_count += entry(i, j) ? 1 : 0;
    int encoded_count = 0;
    for (const auto& e : encoded) {
        encoded_count += static_cast<int>(e.targets.size());
        for (int j : e.targets) {
            CAPTURE(e.id);
            CHECK(entry(e.row, j));
        }
    }
    CHECK(encoded_count == entry_count);

    // Edges follow the line-graph law: u -> v iff v's row is a target of u.
    for (const auto& u : encoded) {
        for (const auto& v : encoded) {
            bool want = std::find(u.targets.begin(), u.targets.end(), v.row) != u.targets.end();
            CAPTURE(u.id);
            CAPTURE(v.id);
            CHECK(matrix.at(matrix.index_of(u.id), matrix.index_of(v.id)) == want);
        }
    }
}

TEST_CASE("realize rejects unusable inputs") {
    SUBCASE("reducible matrix") {
        auto input = matrix_of({"a", "b"}, {{1, 1}, {0, 1}});
        CHECK_THROWS_AS(realize(input), Error);
        try {
            realize(input);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::not_irreducible);
        }
    }
    SUBCASE("bare cycle") {
        auto input = mmtest::load_matrix_fixture("cycle2.json");
        CHECK_THROWS_AS(realize(input), Error);
        try {
            realize(input);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::zero_entropy);
        }
    }
}

TEST_CASE("the verifier rejects a tampered construction") {
    auto input = mmtest::load_matrix_fixture("golden.json");
    auto out = realize(input);
    // Claim a wrong component: drop one encoding branch.
    out.c0_ids.pop_back();
    CHECK_THROWS_AS(verify_realization(input, out, 1e-6), Error);
    try {
        verify_realization(input, out, 1e-6);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::verification_failure);
    }
}
