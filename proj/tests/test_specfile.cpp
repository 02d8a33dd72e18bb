#include "halg/specfile.hpp"

#include <doctest.h>

#include <filesystem>
#include <set>

using namespace halg;

namespace {

const std::string kFixtures = HALG_FIXTURE_DIR;

std::vector<std::string> fixture_files() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(kFixtures))
        if (e.path().extension() == ".spec") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> failing_ids(const SpecRun& run) {
    std::set<std::string> out;
    for (const auto& s : run.suites)
        for (const auto& id : s.report.failing()) out.insert(id);
    return out;
}

bool any_error(const SpecRun& run) {
    for (const auto& s : run.suites)
        if (s.report.errored()) return true;
    return false;
}

}  // namespace

TEST_CASE("every shipped fixture behaves as documented") {
    auto files = fixture_files();
    REQUIRE(files.size() >= 7);
    for (const auto& f : files) {
        Json spec = load_spec_file(f);
        SpecRun run = run_spec(spec, kFixtures);
        CAPTURE(f);
        CHECK_FALSE(any_error(run));
        if (spec.contains("documented_failures")) {
            auto doc = spec["documented_failures"].get<std::vector<std::string>>();
            CHECK(run.exit_code() == 1);
            CHECK(failing_ids(run) == std::set<std::string>(doc.begin(), doc.end()));
        } else {
            CHECK(run.exit_code() == 0);
        }
    }
}

TEST_CASE("structured reports are byte-identical across runs and scheduling") {
    Json spec = load_spec_file(kFixtures + "/pair3.spec");
    std::string a = report_json(run_spec(spec, kFixtures, {}, true)).dump();
    std::string b = report_json(run_spec(spec, kFixtures, {}, false)).dump();
    std::string c = report_json(run_spec(spec, kFixtures, {}, true)).dump();
    CHECK(a == b);
    CHECK(a == c);
    CHECK(report_json(run_spec(spec, kFixtures)).at("schema") == "halg-report/1");
}

TEST_CASE("construct pair:2 serializes a dim-4 algebroid that reads back unchanged") {
    Json j = construct_preset("pair:2");
    CHECK(j.at("H").at("labels").size() == 4);
    for (const char* m : {"s_l", "t_l", "delta_l", "eps_l", "s_r", "t_r", "delta_r", "eps_r"}) CHECK(j.contains(m));
    StarHopfAlgebroid back = read_algebroid(j);
    StarHopfAlgebroid orig = convolution_algebroid(pair_groupoid(2));
    CHECK(back.core.H() == orig.core.H());
    CHECK(back.core.left.delta == orig.core.left.delta);
    CHECK(back.core.right.eps == orig.core.right.eps);
    CHECK(back.core.S == orig.core.S);
    CHECK(back.star_H == orig.star_H);
    CHECK(algebroid_json(back).dump() == algebroid_json(orig).dump());
}

TEST_CASE("construct toykahler and finite1forms:2") {
    Json k = construct_preset("toykahler");
    KahlerStructure back = read_kahler(k);
    CHECK(back.dga.dim() == 4);
    CHECK(hermitian_data(back).hodge == hermitian_data(toy_kahler()).hodge);
    CHECK(kahler_check(back).ok());
    Json f = construct_preset("finite1forms:2");
    CHECK(f.at("h0").at("dim") == 5);
    CHECK(f.at("h0").at("basis").size() == 5);
    CHECK(f.at("H").at("dim") == 8);
}

TEST_CASE("unknown presets and bad input are format errors") {
    CHECK_THROWS_AS(construct_preset("pair:0"), FormatError);
    CHECK_THROWS_AS(construct_preset("mystery:3"), FormatError);
    CHECK_THROWS_AS(construct_preset("cm:Z2:C3:swap2"), FormatError);
    CHECK_THROWS_WITH_AS(parse_json("{\n  \"scalars\": ,\n}"), doctest::Contains("line 2"), FormatError);
    CHECK_THROWS_AS(run_spec(parse_json("{}"), "."), FormatError);
    Json dangling = parse_json(R"({"scalars": "gaussian-rational", "structures": [],
                                   "checks": [{"suite": "hopf", "target": "nowhere"}]})");
    CHECK_THROWS_WITH_AS(run_spec(dangling, "."), doctest::Contains("nowhere"), FormatError);
    Json wrong_suite = parse_json(R"({"scalars": "gaussian-rational", "structures": [{"id": "G", "preset": "pair:2"}],
                                      "checks": [{"suite": "kahler", "target": "G"}]})");
    CHECK_THROWS_AS(run_spec(wrong_suite, "."), FormatError);
}

TEST_CASE("serialized maps reject out-of-range indices") {
    Json m = parse_json(R"({"rows": 2, "cols": 1, "columns": [[[5, "1"]]]})");
    CHECK_THROWS_AS(read_map(m), FormatError);
    CHECK_THROWS_AS(read_scalar(Json("1/0")), FormatError);
    CHECK(read_scalar(Json("-1/2+1/3*i")) == Scalar::frac(-1, 2, 1, 3));
}

TEST_CASE("invariants listings") {
    Json calc = load_spec_file(kFixtures + "/calculi.spec");
    InvariantListing swap = invariants_of(calc, kFixtures, "groupoid-forms");
    CHECK(swap.per_degree[0].second.dim() == 1);
    CHECK(swap.per_degree[1].second.dim() == 1);
    InvariantListing unit = invariants_of(calc, kFixtures, "unit-forms");
    for (std::size_t k = 0; k < unit.per_degree.size(); ++k) CHECK(unit.per_degree[k].second.dim() == unit.ambient[k]);
    InvariantListing base = invariants_of(load_spec_file(kFixtures + "/pair3.spec"), kFixtures, "C3");
    CHECK(base.kind == "base");
    CHECK(base.per_degree[0].second.dim() == 1);
    CHECK(listing_text(base).find("degree 0: dim 1 of 3") != std::string::npos);
}
