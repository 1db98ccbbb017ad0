#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include <k3deg/catalog.hpp>
#include <k3deg/checks.hpp>

using namespace k3deg;

#ifndef K3DEG_CATALOG
#error "K3DEG_CATALOG must point at the bundled catalog"
#endif

namespace {

std::string write_temp(const std::string& text) {
    std::string path = "k3deg_test_tmp.json";
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("bundled catalog loads and is fully consistent") {
    auto cat = catalog::load_catalog(K3DEG_CATALOG);
    REQUIRE(cat.schema == catalog::kSchemaTag);
    REQUIRE(cat.models.size() == 10);
    REQUIRE(cat.fibrations.size() == 2);
    REQUIRE(cat.graph.counts.classes == 11);

    auto rep = checks::run_all(cat);
    for (const auto& c : rep.results) {
        INFO(c.id << " [" << c.subject << "] " << c.detail);
        CHECK(c.pass);
    }
    REQUIRE(rep.ok());
}

TEST_CASE("model lookup by name") {
    auto cat = catalog::load_catalog(K3DEG_CATALOG);
    REQUIRE(catalog::model_by_name(cat, "e6e12").name == "e6e12");
    REQUIRE_THROWS_AS(catalog::model_by_name(cat, "zzz"),
                      catalog::CatalogError);
}

TEST_CASE("load failures carry a diagnostic path") {
    REQUIRE_THROWS_AS(catalog::load_catalog("does_not_exist.json"),
                      catalog::CatalogError);

    auto bad_tag = write_temp(R"({"schema": "other/9"})");
    REQUIRE_THROWS_AS(catalog::load_catalog(bad_tag),
                      catalog::CatalogError);
    std::remove(bad_tag.c_str());

    auto bad_json = write_temp("{ not json");
    REQUIRE_THROWS_AS(catalog::load_catalog(bad_json),
                      catalog::CatalogError);
    std::remove(bad_json.c_str());
}

TEST_CASE("reports render in both formats") {
    auto cat = catalog::load_catalog(K3DEG_CATALOG);
    std::vector<checks::CheckResult> out;
    checks::run_moduli_checks(cat, out);
    checks::Report rep{out};
    auto md = checks::to_markdown(rep);
    REQUIRE(md.find("| pass |") != std::string::npos);
    auto js = checks::to_json(rep, 5);
    auto parsed = nlohmann::json::parse(js);
    REQUIRE(parsed["failed"] == 0);
    REQUIRE(parsed["elapsed_ms"] == 5);
    REQUIRE(parsed["checks"].size() == out.size());
}
