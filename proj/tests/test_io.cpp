#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "gcb/io.hpp"

using namespace gcb;

namespace {

Document roundtrip(const Document& d) { return from_text(to_text(d)); }

std::string read(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("save/load of every kind") {
    auto G = make_cyclic(2);
    FiniteAbelianGroup Z2({2}), Z4({4});
    auto C = make_trivial_gcrossed(G, Z4);
    std::vector<Document> docs = {
        {kFormatVersion, make_dihedral(3)},
        {kFormatVersion, make_product(make_cyclic(2), make_cyclic(2))},
        {kFormatVersion, fx::cochain(G, Z4, 3, {{{1, 1, 1}, 2}})},
        {kFormatVersion, semion()},
        {kFormatVersion, C},
        {kFormatVersion, from_gcrossed(C)},
        {kFormatVersion, decategorify(C)},
        {kFormatVersion, identity_functor(C)},
    };
    for (const auto& d : docs) {
        CAPTURE(d.kind());
        CHECK(roundtrip(d) == d);
    }

    auto path = std::filesystem::temp_directory_path() / "gcb_io_test.json";
    save(docs[4], path.string());
    CHECK(load(path.string()) == docs[4]);
    std::filesystem::remove(path);
}

TEST_CASE("the corpus is a fixed point of load/save") {
    for (const auto& e : std::filesystem::directory_iterator(std::string(GCB_SOURCE_DIR) + "/corpus")) {
        CAPTURE(e.path().string());
        auto d = load(e.path().string());
        CHECK(from_text(to_text(d)) == d);
        CHECK(to_text(d) == read(e.path().string()));  // byte-identical
    }
}

TEST_CASE("malformed documents") {
    auto text = to_text({kFormatVersion, make_trivial_gcrossed(make_cyclic(2), FiniteAbelianGroup({2}))});
    CHECK_THROWS_AS(from_text(text.substr(0, text.size() / 2)), ParseError);

    auto bad_version = text;
    bad_version.replace(bad_version.find("\"1.0\""), 5, "\"2.0\"");
    CHECK_THROWS_AS(from_text(bad_version), SchemaVersionMismatch);

    // F_1(1) = 0 makes braid(1,1) run between different objects
    auto j = text;
    auto pos = j.find("\"act\": [0,1,0,1]");
    REQUIRE(pos != std::string::npos);
    j.replace(pos, 16, "\"act\": [0,1,0,0]");
    try {
        from_text(j);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("braid[1,1]") != std::string::npos);
    }

    auto missing = text;
    missing.replace(missing.find("\"braid\""), 7, "\"braie\"");
    CHECK_THROWS_WITH_AS(from_text(missing), doctest::Contains("braid"), ParseError);
    CHECK_THROWS_AS(from_text("{\"format_version\": \"1.0\", \"kind\": \"sheaf\"}"), ParseError);
}
