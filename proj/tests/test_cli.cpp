#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hgc/containers.hpp"
#include "hgc/edge_io.hpp"
#include "hgc/generators.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HGC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "hgc_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("gen emits canonical edge lists for every family") {
    RunResult ap = run_cli("gen --family ap --n 5");
    CHECK(ap.exit_code == 0);
    CHECK(ap.out == hgc::edge_list_string(hgc::ap_hypergraph(5)));

    RunResult tri = run_cli("gen --family triangle --n 4");
    CHECK(tri.out == hgc::edge_list_string(hgc::triangle_hypergraph(4)));

    RunResult rnd1 = run_cli("gen --family random --k 3 --n 8 --edges 10 --seed 5");
    RunResult rnd2 = run_cli("gen --family random --k 3 --n 8 --edges 10 --seed 5");
    CHECK(rnd1.exit_code == 0);
    CHECK(rnd1.out == rnd2.out);

    fs::path dir = temp_dir();
    fs::path pattern = dir / "triangle_pattern.edges";
    {
        std::ofstream out(pattern);
        out << "2 3 3\n0 1\n0 2\n1 2\n";
    }
    RunResult hcopy = run_cli("gen --family hcopy --pattern " + pattern.string() + " --n 4");
    CHECK(hcopy.out == hgc::edge_list_string(hgc::triangle_hypergraph(4)));
}

TEST_CASE("janson sweep emits the documented CSV schema") {
    fs::path dir = temp_dir();
    fs::path input = dir / "a9.edges";
    hgc::write_edge_list_file(input.string(), hgc::ap_hypergraph(9));

    RunResult r = run_cli("janson --input " + input.string() + " --m-range 2:4:1 --B 10");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "m,mu,delta,delta_hat,bound,ratio");
    int rows = 0;
    std::string row;
    while (std::getline(lines, row))
        if (!row.empty()) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("trichotomy and brute are deterministic and exit zero") {
    fs::path dir = temp_dir();
    fs::path input = dir / "a5.edges";
    hgc::write_edge_list_file(input.string(), hgc::ap_hypergraph(5));

    std::string args = "trichotomy --input " + input.string() +
                       " --m 3 --trials 300 --seed 11 --epsilon 0.75";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult brute = run_cli("brute --input " + input.string() +
                              " --m 2 --seed 11 --epsilon 0.75");
    CHECK(brute.exit_code == 0);
    CHECK(brute.out.find("bad_exemplars") != std::string::npos);
}

TEST_CASE("verify-fingerprint round trips through files") {
    fs::path dir = temp_dir();
    fs::path input = dir / "a9v.edges";
    hgc::Hypergraph a9 = hgc::ap_hypergraph(9);
    hgc::write_edge_list_file(input.string(), a9);

    hgc::ConstantSchedule sched =
        hgc::derive_schedule(3, 0.9, 10.0, hgc::ScheduleMode::Empirical);
    hgc::VertexSet indep(9, {0, 1, 3, 7});
    hgc::Rng rng = hgc::Rng::stream(17, "extract", indep.hash());
    hgc::ExtractionOutcome outcome = hgc::extract_fingerprint(a9, indep, sched, rng);
    REQUIRE(outcome.tag == hgc::OutcomeTag::P2);

    fs::path fp_path = dir / "fp.txt";
    fs::path sched_path = dir / "sched.txt";
    fs::path set_path = dir / "iset.txt";
    {
        std::ofstream(fp_path) << hgc::serialize_fingerprint(outcome.fingerprint);
        std::ofstream(sched_path) << hgc::serialize_schedule(sched);
        std::ofstream set_out(set_path);
        for (int v : indep.ids()) set_out << v << ' ';
    }
    RunResult ok = run_cli("verify-fingerprint --input " + input.string() +
                           " --fingerprint " + fp_path.string() + " --set " +
                           set_path.string() + " --schedule " + sched_path.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"all_passed\": true") != std::string::npos);

    // Tampered fingerprint: drop F to a single vertex.
    hgc::Fingerprint broken = outcome.fingerprint;
    auto ids = broken.f.ids();
    for (size_t i = 1; i < ids.size(); ++i) broken.f.erase(ids[i]);
    std::ofstream(fp_path) << hgc::serialize_fingerprint(broken);
    RunResult bad = run_cli("verify-fingerprint --input " + input.string() +
                            " --fingerprint " + fp_path.string() + " --set " +
                            set_path.string() + " --schedule " + sched_path.string());
    CHECK(bad.exit_code == 1);
}

TEST_CASE("sweep writes byte-identical files for the same manifest inputs") {
    fs::path dir = temp_dir();
    fs::path input = dir / "t5.edges";
    hgc::write_edge_list_file(input.string(), hgc::triangle_hypergraph(5));

    fs::path out_a = dir / "sweep_a";
    fs::path out_b = dir / "sweep_b";
    std::string base = "sweep --input " + input.string() +
                       " --m-range 4:6:2 --trials 100 --ind-trials 200 --seed 3 --out-dir ";
    RunResult ra = run_cli(base + out_a.string());
    RunResult rb = run_cli(base + out_b.string());
    CHECK(ra.exit_code == 0);
    CHECK(rb.exit_code == 0);

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    CHECK(slurp(out_a / "sweep.csv") == slurp(out_b / "sweep.csv"));
    CHECK(slurp(out_a / "manifest.json") == slurp(out_b / "manifest.json"));
}

TEST_CASE("removal-transfer produces a summary and per-trial csv") {
    fs::path dir = temp_dir();
    fs::path input = dir / "a9t.edges";
    hgc::write_edge_list_file(input.string(), hgc::ap_hypergraph(9));
    fs::path out = dir / "transfer";

    RunResult r = run_cli("removal-transfer --input " + input.string() +
                          " --gamma 0.5 --alpha 0.34 --p 0.7 --trials 5 --seed 4 " +
                          "--out-dir " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pass_fraction") != std::string::npos);
    CHECK(fs::exists(out / "transference_trials.csv"));
}

TEST_CASE("config file mirrors flags") {
    fs::path dir = temp_dir();
    fs::path input = dir / "a5c.edges";
    hgc::write_edge_list_file(input.string(), hgc::ap_hypergraph(5));
    fs::path cfg = dir / "run.cfg";
    {
        std::ofstream out(cfg);
        out << "seed=11\n";
    }
    RunResult via_cfg = run_cli("--config " + cfg.string() + " trichotomy --input " +
                                input.string() + " --m 3 --trials 200");
    RunResult via_flag = run_cli("trichotomy --input " + input.string() +
                                 " --m 3 --trials 200 --seed 11");
    CHECK(via_cfg.exit_code == 0);
    CHECK(via_cfg.out == via_flag.out);
}
