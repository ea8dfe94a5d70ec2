#include "crtkit/document.hpp"

#include "crtkit/pconstruct.hpp"

#include <doctest.h>

using namespace crtkit;

namespace {

ModuleDocument doc_of(const CRTModule& m) {
    ModuleDocument doc;
    doc.module = m;
    return doc;
}

} // namespace

TEST_CASE("documents round-trip") {
    std::vector<CRTModule> fixtures = {
        build_p(builtin_example("G-alpha")),
        build_p(builtin_example("H-beta")),
        CRTModule{},
        shift(build_p(builtin_example("G-alpha")), 3),
    };
    PresentedGroup z2(std::vector<Int>{0, 0});
    fixtures.push_back(build_p(
        InvolutiveGroup(z2, GroupHom(z2, z2, IntMatrix::from_rows({{0, 1}, {1, 0}})))));

    for (const auto& m : fixtures) {
        std::string text = render_module_document(doc_of(m));
        ModuleDocument back = parse_module_document(text);
        CHECK(back.module == m);
        // rendering is deterministic
        CHECK(render_module_document(back) == text);
        // verification status survives the round trip
        CHECK(check_crt_relations(back.module, true).empty() ==
              check_crt_relations(m, true).empty());
    }
}

TEST_CASE("metadata round-trips") {
    ModuleDocument doc = doc_of(CRTModule{});
    doc.name = "zero";
    doc.provenance = "unit test";
    ModuleDocument back = parse_module_document(render_module_document(doc));
    CHECK(back == doc);
}

TEST_CASE("schema violations are rejected by name") {
    std::string text = render_module_document(doc_of(build_p(builtin_example("G-alpha"))));

    SUBCASE("unknown top-level field") {
        std::string bad = text;
        bad.insert(bad.find("\"O\""), "\"extra\": 1, ");
        CHECK_THROWS_WITH_AS(parse_module_document(bad), doctest::Contains("extra"),
                             ParseError);
    }
    SUBCASE("unknown map family") {
        std::string bad = text;
        bad.insert(bad.find("\"etaO\""), "\"etaX\": [], ");
        CHECK_THROWS_WITH_AS(parse_module_document(bad), doctest::Contains("etaX"),
                             ParseError);
    }
    SUBCASE("missing part") {
        CHECK_THROWS_WITH_AS(parse_module_document("{}"), doctest::Contains("missing"),
                             ParseError);
    }
    SUBCASE("not json") {
        CHECK_THROWS_AS(parse_module_document("{"), ParseError);
    }
    SUBCASE("non-canonical orders") {
        std::string bad = R"({"O": [[4,2],[],[],[],[],[],[],[]],
            "U": [[],[],[],[],[],[],[],[]], "T": [[],[],[],[],[],[],[],[]], "maps": {}})";
        CHECK_THROWS_WITH_AS(parse_module_document(bad),
                             doctest::Contains("invariant-factor"), ParseError);
    }
}

TEST_CASE("document integers are limited to 64 bits") {
    // 2^63 parses as an unsigned 64-bit value: out of the signed range
    std::string big = R"({"O": [[9223372036854775808],[],[],[],[],[],[],[]],
        "U": [[],[],[],[],[],[],[],[]], "T": [[],[],[],[],[],[],[],[]], "maps": {}})";
    CHECK_THROWS_WITH_AS(parse_module_document(big), doctest::Contains("64-bit"), ParseError);

    std::string huge = R"({"O": [[123456789012345678901234567890],[],[],[],[],[],[],[]],
        "U": [[],[],[],[],[],[],[],[]], "T": [[],[],[],[],[],[],[],[]], "maps": {}})";
    CHECK_THROWS_AS(parse_module_document(huge), ParseError);

    std::string fractional = R"({"O": [[2.5],[],[],[],[],[],[],[]],
        "U": [[],[],[],[],[],[],[],[]], "T": [[],[],[],[],[],[],[],[]], "maps": {}})";
    CHECK_THROWS_AS(parse_module_document(fractional), ParseError);
}

TEST_CASE("degenerate matrices encode as empty arrays") {
    CRTModule m = build_p(builtin_example("G-alpha"));
    std::string text = render_module_document(doc_of(m));
    // tau at even degrees maps a rank-2 group into the trivial group
    ModuleDocument back = parse_module_document(text);
    CHECK(back.module.tau[0] == IntMatrix(0, 2));
    CHECK(back.module.tau[1] == m.tau[1]);

    // a matrix where [] was expected parses but fails structural validation
    std::string bad = text;
    auto pos = bad.find("\"tau\"");
    REQUIRE(pos != std::string::npos);
    auto empty = bad.find("[]", pos);
    REQUIRE(empty != std::string::npos);
    bad.replace(empty, 2, "[[1,1]]");
    ModuleDocument mutated = parse_module_document(bad);
    CHECK(!validate_structure(mutated.module).empty());
}
