#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graybox/errors.hpp"
#include "graybox/harness.hpp"
#include "graybox/perm_problems.hpp"
#include "graybox/pseudo_boolean.hpp"
#include "schema_check.hpp"

using namespace graybox;
using namespace graybox::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / "graybox_harness_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& contents) {
    const auto path = scratch_dir() / name;
    std::ofstream(path, std::ios::binary) << contents;
    return path.string();
}

std::string generated(ProblemKind kind, int n, std::uint64_t seed) {
    std::ostringstream text;
    generate_instance(text, kind, n, 3, seed);
    return write_file(to_string(kind) + std::to_string(n) + "_" + std::to_string(seed) + ".txt", text.str());
}

nlohmann::json load_schema() {
    std::ifstream in(GRAYBOX_SOURCE_DIR "/docs/run_record.schema.json");
    return nlohmann::json::parse(in);
}

RunConfig config_for(ProblemKind kind, const std::string& instance, const std::string& command) {
    RunConfig c;
    c.command = command;
    c.problem = kind;
    c.instance = instance;
    c.seed = 17;
    c.iterations = 10;
    c.alpha = 0.2;
    return c;
}

}  // namespace

TEST_CASE("eval on the small worked instances") {
    RunConfig lop;
    lop.problem = ProblemKind::Lop;
    lop.instance = write_file("lop2.txt", "2\n0 5\n3 0\n");
    CHECK(evaluate_solution(lop, "") == 5.0);
    CHECK(evaluate_solution(lop, "2 1") == 3.0);

    RunConfig smt;
    smt.problem = ProblemKind::Smtwtp;
    smt.instance = write_file("smt1.txt", "1\n2\n3\n1\n");
    CHECK(evaluate_solution(smt, "1") == 3.0);

    const auto solution = write_file("sol.txt", "1 2\n");
    CHECK(evaluate_solution(lop, solution) == 5.0);
    CHECK_THROWS_AS(evaluate_solution(lop, "1 2 3"), ParseError);
}

TEST_CASE("eval agrees with the library evaluator") {
    const auto path = generated(ProblemKind::Smtwtp, 12, 3);
    RunConfig c;
    c.problem = ProblemKind::Smtwtp;
    c.instance = path;
    const perm::SmtwtpProblem problem(perm::load_smtwtp(path));
    const auto p = Permutation::parse_one_line("12 11 10 9 8 7 6 5 4 3 2 1");
    CHECK(evaluate_solution(c, p.to_one_line()) == problem.evaluate(p));
}

TEST_CASE("hill-climb records are deterministic, bounded and schema-valid") {
    const auto schema = load_schema();
    for (auto kind : {ProblemKind::Lop, ProblemKind::Smtwtp, ProblemKind::Pb}) {
        const auto path = generated(kind, 25, 5);
        auto c = config_for(kind, path, "hillclimb");
        const auto a = run_hillclimb(c, 0);
        const auto b = run_hillclimb(c, 0);
        CHECK(to_json(a, false).dump() == to_json(b, false).dump());
        CHECK(schema::validate(schema, to_json(a)).empty());
        for (std::size_t i = 1; i < a.trajectory.size(); ++i) CHECK(a.trajectory[i].fitness < a.trajectory[i - 1].fitness);
        c.budget = 3;
        const auto capped = run_hillclimb(c, 0);
        CHECK(capped.moves <= 3);
    }
}

TEST_CASE("ILS records: best never worsens and segments descend") {
    const auto schema = load_schema();
    for (auto kind : {ProblemKind::Lop, ProblemKind::Smtwtp, ProblemKind::Pb}) {
        const auto path = generated(kind, 30, 6);
        const auto c = config_for(kind, path, "ils");
        const auto r = run_ils(c, 1);
        const auto errors = schema::validate(schema, to_json(r));
        CHECK(errors.empty());
        for (std::size_t i = 1; i < r.best_per_iteration.size(); ++i)
            CHECK(r.best_per_iteration[i] <= r.best_per_iteration[i - 1]);
        CHECK(r.best_per_iteration.size() == c.iterations + 1);
        CHECK(r.px_components.size() == c.iterations);
        for (std::size_t i = 1; i < r.trajectory.size(); ++i)
            if (r.trajectory[i].segment == r.trajectory[i - 1].segment)
                CHECK(r.trajectory[i].fitness < r.trajectory[i - 1].fitness);
        CHECK(r.best_fitness == r.best_per_iteration.back());
    }
}

TEST_CASE("replications run in parallel give the same records as sequential runs") {
    const auto path = generated(ProblemKind::Lop, 20, 8);
    auto c = config_for(ProblemKind::Lop, path, "ils");
    c.replications = 4;
    const auto sequential = run_replications(c);
    c.parallel = true;
    const auto parallel = run_replications(c);
    REQUIRE(sequential.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(sequential[i].replication == static_cast<int>(i));
        CHECK(to_json(sequential[i], false) == to_json(parallel[i], false));
    }
    CHECK(to_json(sequential[0], false) != to_json(sequential[1], false));
}

TEST_CASE("CSV output has a fixed header and one row per record") {
    const auto path = generated(ProblemKind::Pb, 20, 2);
    auto c = config_for(ProblemKind::Pb, path, "hillclimb");
    c.replications = 2;
    std::ostringstream out;
    write_records(out, run_replications(c), OutputFormat::Csv, true);
    std::istringstream lines(out.str());
    std::string header, row;
    std::getline(lines, header);
    CHECK(header == csv_header());
    int rows = 0;
    while (std::getline(lines, row)) {
        ++rows;
        CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
    }
    CHECK(rows == 2);
}

TEST_CASE("configuration validation") {
    RunConfig c;
    c.alpha = 0.0;
    CHECK_THROWS_AS(validate(c), ContractError);
    c.alpha = 1.0;
    CHECK_NOTHROW(validate(c));
    c.widths = {4};
    CHECK_THROWS_AS(validate(c), ContractError);
    c.widths = {2};
    c.replications = 0;
    CHECK_THROWS_AS(validate(c), ContractError);
    CHECK_THROWS_AS(parse_problem_kind("tsp"), ContractError);
    auto missing_seed = config_for(ProblemKind::Lop, generated(ProblemKind::Lop, 5, 1), "ils");
    missing_seed.seed.reset();
    CHECK_THROWS_AS(run_ils(missing_seed, 0), ContractError);
}

TEST_CASE("px report on identical and on different parents") {
    const auto path = generated(ProblemKind::Lop, 8, 4);
    RunConfig c;
    c.problem = ProblemKind::Lop;
    c.instance = path;
    const auto same = px_report(c, "1 2 3 4 5 6 7 8", "1 2 3 4 5 6 7 8");
    CHECK(same["q"] == 0);
    CHECK(same["offspring"] == "1 2 3 4 5 6 7 8");
    const auto r = px_report(c, "1 2 3 4 5 6 7 8", "2 1 3 5 4 6 8 7");
    CHECK(r["q"] == 3);
    CHECK(r["components"].size() == 3);
    CHECK(r["offspring_fitness"].get<double>() <=
          std::min(r["parent1_fitness"].get<double>(), r["parent2_fitness"].get<double>()));

    RunConfig b;
    b.problem = ProblemKind::Pb;
    b.instance = generated(ProblemKind::Pb, 10, 4);
    const auto binary = px_report(b, "0000000000", "1111100000");
    CHECK(binary["offspring_fitness"].get<double>() <=
          std::min(binary["parent1_fitness"].get<double>(), binary["parent2_fitness"].get<double>()));
}

TEST_CASE("decompose report") {
    RunConfig b;
    b.problem = ProblemKind::Pb;
    b.instance = write_file("split.txt", "4 2 2\n2 1 2\n0 1 2 7\n2 3 4\n3 0 5 1\n");
    const auto r = decompose_report(b, "1111", "");
    CHECK(r["split"] == nlohmann::json::array({"1100", "0011"}));

    RunConfig p;
    p.problem = ProblemKind::Lop;
    p.instance = generated(ProblemKind::Lop, 6, 1);
    const auto d = decompose_report(p, "1 2 3 4 5 6", "2 1 3 6 4 5");
    CHECK(d["q"] == 2);
    CHECK(d["components"].size() == 3);
}

TEST_CASE("fourier check on the regression example") {
    const auto description = nlohmann::json::parse(R"({"group":"z2","n":3,
        "walsh":{"100":1,"010":-2,"001":3,"110":4,"111":5}})");
    const auto r = fourier_check(description, "110 001\n001 ; 010\n# comment\n000 111\n");
    REQUIRE(r["pairs"].size() == 3);
    CHECK(r["pairs"][0]["certificate"] == true);
    CHECK(r["pairs"][0]["definitional"] == true);
    CHECK(r["pairs"][1]["certificate"] == false);
    CHECK(r["pairs"][1]["definitional"] == false);
    CHECK(r["pairs"][2]["certificate"] == true);

    const auto sym = nlohmann::json::parse(R"({"group":"sym","n":3,"table":[0,1,2,3,4,5]})");
    const auto s = fourier_check(sym, "(1 2) ; (2 3)\n(1) ; (1 2 3)\n");
    CHECK(s["pairs"][0]["commute"] == false);
    CHECK(s["pairs"][0]["certificate"].is_null());
    CHECK(s["pairs"][1]["certificate"] == true);
    CHECK(s["pairs"][1]["definitional"] == true);

    CHECK_THROWS_AS(fourier_check(description, "110\n"), ParseError);
    CHECK_THROWS_AS(fourier_check(description, "11 001\n"), ParseError);
}
