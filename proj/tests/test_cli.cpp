#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "declab/config.hpp"
#include "declab/csv.hpp"
#include "declab/experiments.hpp"

using namespace declab;
namespace fs = std::filesystem;

namespace {
std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}
} // namespace

TEST_CASE("config parsing") {
    const std::string text =
        "# comment line\n"
        "experiment = reduce-check\n"
        "damping.gamma = 1.5   # trailing comment\n"
        "modes = 16\n";
    Config c = Config::parse_string(text, "t.cfg");
    CHECK(c.require_string("experiment") == "reduce-check");
    CHECK(c.require_double("damping.gamma") == 1.5);
    CHECK(c.require_int("modes") == 16);
    CHECK(c.get_double("absent", 7.0) == 7.0);

    // Round trip through serialize.
    Config c2 = Config::parse_string(c.serialize(), "t2.cfg");
    CHECK(c2.serialize() == c.serialize());

    // Line-anchored errors.
    try {
        Config::parse_string("a = 1\nbroken line\n", "bad.cfg");
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("bad.cfg:2") != std::string::npos);
    }
    try {
        Config bad = Config::parse_string("experiment = reduce-check\nbogus.key = 2\n", "k.cfg");
        bad.restrict_keys({"experiment"});
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("k.cfg:2") != std::string::npos);
        CHECK(std::string(e.what()).find("bogus.key") != std::string::npos);
    }
    CHECK_THROWS_AS(Config::parse_string("x = 1\nx = 2\n", "d.cfg"), ConfigError);
    CHECK_THROWS_AS(Config::parse_file("/nonexistent/declab.cfg"), ConfigError);
}

TEST_CASE("csv formatting") {
    CsvWriter w({"a", "b"});
    w.row({1.0, 0.3333333333333333});
    CHECK(w.buffer() == "a,b\n1,0.33333333333333331\n");
    CHECK_THROWS(w.row({1.0}));
}

TEST_CASE("reduce-check experiment runs and is deterministic") {
    const fs::path dir1 = fs::temp_directory_path() / "declab_test_rc1";
    const fs::path dir2 = fs::temp_directory_path() / "declab_test_rc2";
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    Config cfg = Config::parse_string(
        "experiment = reduce-check\ngamma = 1\nlambda = 7.3\nmodes = 16\ntrials = 8\nseed = 11\n",
        "rc.cfg");
    ExperimentOutcome o1 = run_experiment(cfg, dir1.string());
    ExperimentOutcome o2 = run_experiment(cfg, dir2.string());
    CHECK(o1.pass);
    CHECK(o1.summary["max_residual"].get<double>() <= 1e-12);
    // Byte-identical reruns.
    CHECK(slurp(dir1 / "residuals.csv") == slurp(dir2 / "residuals.csv"));
    CHECK(slurp(dir1 / "summary.json") == slurp(dir2 / "summary.json"));

    // Report collection sees the summary.
    auto rows = collect_report(dir1.string());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].kind == "reduce-check");
    CHECK(rows[0].pass);
    const std::string table = render_report(rows);
    CHECK(table.find("reduce-check") != std::string::npos);
    CHECK(table.find("pass") != std::string::npos);

    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("unknown keys and kinds are config errors") {
    const fs::path dir = fs::temp_directory_path() / "declab_test_err";
    Config bad_kind = Config::parse_string("experiment = warp-drive\n", "w.cfg");
    CHECK_THROWS_AS(run_experiment(bad_kind, dir.string()), ConfigError);

    Config bad_key = Config::parse_string(
        "experiment = reduce-check\nunknown.knob = 3\n", "u.cfg");
    CHECK_THROWS_AS(run_experiment(bad_key, dir.string()), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("regions experiment") {
    const fs::path dir = fs::temp_directory_path() / "declab_test_regions";
    fs::remove_all(dir);
    Config cfg = Config::parse_string(
        "experiment = regions\ngamma = 1\nsamples = 2000\nmu.samples = 5000\n"
        "slow.samples = 500\nseed = 3\n",
        "r.cfg");
    ExperimentOutcome o = run_experiment(cfg, dir.string());
    CHECK(o.pass);
    CHECK(o.summary["mu_min"].get<double>() >= 1.0);
    CHECK(o.summary["block_product_max_rel_err"].get<double>() <= 1e-12);
    fs::remove_all(dir);
}

TEST_CASE("simulate experiment conservation report") {
    const fs::path dir = fs::temp_directory_path() / "declab_test_sim";
    fs::remove_all(dir);
    Config cfg = Config::parse_string(
        "experiment = simulate\ndamping.kind = none\ngrid.modes = 16,16\n"
        "dt = 0.002\nhorizon = 1.0\nstride = 10\n",
        "s.cfg");
    ExperimentOutcome o = run_experiment(cfg, dir.string());
    CHECK(o.pass);
    CHECK(o.summary["conservation_drift"].get<double>() <= 1e-10);
    CHECK(fs::exists(dir / "decay.csv"));
    fs::remove_all(dir);
}
