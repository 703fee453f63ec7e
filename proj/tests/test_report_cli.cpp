#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cspace/report.hpp"

using namespace cspace;

namespace {

std::string fixture(const std::string& name) {
    return std::string(CSPACE_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("analyze the stretched four-bar end to end") {
    MechanismSpec spec = load_mechanism_file(fixture("fourbar.toml"));
    AnalyzeOptions opt;
    opt.seed = 0;
    opt.budget_limit = 500'000'000;
    AnalysisDocument doc = analyze(spec, opt);

    CHECK(!doc.st_ideal.failed);
    CHECK(doc.dim == 1);
    CHECK(doc.radical);
    REQUIRE(doc.singular.has_value());
    REQUIRE(doc.singular->points.has_value());
    REQUIRE(doc.singular->points->rational_points.size() == 1);
    for (const auto& c : doc.singular->points->rational_points[0].coords) CHECK(is_zero(c));
    REQUIRE(doc.probe.has_value());
    CHECK(doc.probe->real_points_isolated == Isolated::Yes);
    REQUIRE(doc.classification.has_value());
    CHECK(doc.classification->shaky);
}

TEST_CASE("documents are byte-identical across reruns") {
    MechanismSpec spec = load_mechanism_file(fixture("fourbar.toml"));
    AnalyzeOptions opt;
    opt.seed = 5;
    opt.budget_limit = 500'000'000;
    AnalysisDocument a = analyze(spec, opt);
    AnalysisDocument b = analyze(spec, opt);
    CHECK(a.machine_text() == b.machine_text());
    CHECK(a.summary_text() == b.summary_text());
    CHECK(!a.machine_text().empty());
    CHECK(a.machine_text().find("radical: true") != std::string::npos);
}

TEST_CASE("empty-loop specs are rejected") {
    MechanismSpec bad;
    bad.name = "bad";
    CHECK_THROWS_AS(constraint_ideal(bad, Budget(1000)), spec_error);
}

TEST_CASE("stage failures are recorded, not thrown") {
    MechanismSpec spec = load_mechanism_file(fixture("goldberg6r.toml"));
    AnalyzeOptions opt;
    opt.budget_limit = 50;  // guaranteed budget exhaustion
    AnalysisDocument doc = analyze(spec, opt);
    CHECK(doc.st_ideal.ran);
    CHECK(doc.st_ideal.failed);
    CHECK(doc.machine_text().find("FAILED") != std::string::npos);
}
