#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "resbench/experiments.hpp"

using namespace resbench;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

fs::path fresh_dir(const char* tag) {
    const auto dir = fs::temp_directory_path() / (std::string("resbench_test_") + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string tiny_config_json(const fs::path& out_csv, int runs = 3) {
    std::ostringstream json;
    json << R"({
      "schema_version": 1,
      "models": ["asn"],
      "sizes": [10],
      "noise_levels": [0.05],
      "inputs": [{"kind": "clean", "id": "clean"}],
      "topologies": 1,
      "runs_per_topology": )"
         << runs << R"(,
      "plan": {"washout": 50, "train": 300, "test": 100},
      "base_seed": 42,
      "output_path": ")"
         << out_csv.generic_string() << R"("
    })";
    return json.str();
}

}  // namespace

TEST_CASE("config json round-trips the documented schema") {
    const auto dir = fresh_dir("config");
    const auto config = experiments::config_from_json_text(tiny_config_json(dir / "out.csv"));
    CHECK(config.models.size() == 1);
    CHECK(config.sizes == std::vector<std::size_t>{10});
    CHECK(config.plan.washout_steps == 50);
    CHECK(config.plan.train_steps == 300);
    CHECK(config.runs_per_topology == 3);
    config.validate();
}

TEST_CASE("config parsing rejects malformed documents") {
    CHECK_THROWS(experiments::config_from_json_text("not json at all"));
    CHECK_THROWS(experiments::config_from_json_text(R"({"schema_version": 99})"));
    // deterministic models cannot sweep nonzero noise
    CHECK_THROWS(experiments::config_from_json_text(R"({
        "schema_version": 1,
        "models": ["an"], "sizes": [10], "noise_levels": [0.05],
        "inputs": [{"kind": "clean", "id": "c"}]
    })"));
}

TEST_CASE("sweep cardinality: 1x1x1x1x1x3 gives 3 rows") {
    const auto dir = fresh_dir("card");
    auto config = experiments::config_from_json_text(tiny_config_json(dir / "out.csv"));
    const auto record = experiments::run_sweep(config, 1);
    CHECK(record.rows.size() == 3);
    std::size_t ok = 0, blow = 0, failed = 0;
    for (const auto& row : record.rows) {
        if (row.status == "ok") ++ok;
        else if (row.status == "blowup") ++blow;
        else ++failed;
    }
    CHECK(ok + blow + failed == record.rows.size());  // conservation
}

TEST_CASE("sweep reruns and worker counts are byte-identical") {
    const auto dir = fresh_dir("determinism");
    auto config = experiments::config_from_json_text(tiny_config_json(dir / "a.csv", 6));
    config.topologies = 2;
    experiments::run_sweep(config, 1);
    const auto first = slurp(dir / "a.csv");

    fs::remove_all(dir / "a.csv.cells");  // force full recompute
    fs::remove(dir / "a.csv");
    experiments::run_sweep(config, 1);
    CHECK(slurp(dir / "a.csv") == first);

    config.output_path = (dir / "b.csv").generic_string();
    experiments::run_sweep(config, 8);
    CHECK(slurp(dir / "b.csv") == first);
}

TEST_CASE("interrupted sweeps resume from completed cell checkpoints") {
    const auto dir = fresh_dir("resume");
    auto config = experiments::config_from_json_text(tiny_config_json(dir / "out.csv", 4));
    config.models = {reservoir::NeuronKind::ASN, reservoir::NeuronKind::BSN};
    experiments::run_sweep(config, 1);
    const auto full = slurp(dir / "out.csv");

    // simulate an interruption: keep one cell checkpoint, drop the output
    fs::remove(dir / "out.csv");
    const auto cells_dir = dir / "out.csv.cells";
    REQUIRE(fs::exists(cells_dir / "cell_0.csv"));
    fs::remove(cells_dir / "cell_1.csv");

    // tamper with the surviving checkpoint to prove it is reused, not rebuilt
    auto kept = slurp(cells_dir / "cell_0.csv");
    std::ofstream(cells_dir / "cell_0.csv", std::ios::binary) << kept;
    experiments::run_sweep(config, 1);
    CHECK(slurp(dir / "out.csv") == full);
}

TEST_CASE("csv round-trip preserves every row") {
    const auto dir = fresh_dir("csv");
    auto config = experiments::config_from_json_text(tiny_config_json(dir / "out.csv", 5));
    const auto record = experiments::run_sweep(config, 1);
    const auto loaded = experiments::read_csv((dir / "out.csv").generic_string());
    REQUIRE(loaded.rows.size() == record.rows.size());
    for (std::size_t i = 0; i < record.rows.size(); ++i) {
        REQUIRE(loaded.rows[i].status == record.rows[i].status);
        REQUIRE(loaded.rows[i].nmse.has_value() == record.rows[i].nmse.has_value());
        if (record.rows[i].nmse)
            REQUIRE(*loaded.rows[i].nmse == *record.rows[i].nmse);  // to_chars exact
    }
}

TEST_CASE("read_csv reports malformed rows by number") {
    const auto dir = fresh_dir("badcsv");
    const auto path = dir / "bad.csv";
    std::ofstream(path) << "model,N,b,input_id,topology,run,status,nmse,blowup,"
                           "blowup_step,wout_db,mc_total\n"
                        << "asn,10,0.05,clean,0,0,ok\n";  // short row
    try {
        experiments::read_csv(path.generic_string());
        FAIL("expected parse error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
    std::ofstream(dir / "empty.csv") << "";
    CHECK_THROWS(experiments::read_csv((dir / "empty.csv").generic_string()));
}

TEST_CASE("summary json counts match the record") {
    const auto dir = fresh_dir("summary");
    auto config = experiments::config_from_json_text(tiny_config_json(dir / "out.csv", 4));
    experiments::run_sweep(config, 1);
    const auto text = slurp(dir / "out.csv.summary.json");
    CHECK(text.find("\"count_total\": 4") != std::string::npos);
}

TEST_CASE("report renders the analysis files from a sweep csv") {
    const auto dir = fresh_dir("report");
    auto config = experiments::config_from_json_text(tiny_config_json(dir / "out.csv", 3));
    experiments::run_sweep(config, 1);
    const auto out_dir = dir / "rendered";
    experiments::report((dir / "out.csv").generic_string(), out_dir.generic_string());
    CHECK(fs::exists(out_dir / "summary.csv"));
    CHECK(fs::exists(out_dir / "nmse_histogram.csv"));
    CHECK(fs::exists(out_dir / "blowup.csv"));
    CHECK(fs::exists(out_dir / "dynamic_range.csv"));
    const auto summary = slurp(out_dir / "summary.csv");
    CHECK(summary.find("asn") != std::string::npos);
}

TEST_CASE("mc suite emits one mc_total per run with delays 1..k_max") {
    const auto dir = fresh_dir("mc");
    auto config = experiments::config_from_json_text(tiny_config_json(dir / "out.csv", 2));
    config.mc_plan.washout_steps = 60;
    config.mc_plan.train_steps = 300;
    config.mc_plan.eval_steps = 200;
    config.mc_k_max = 50;
    const auto record = experiments::run_mc_suite(config, 1);
    REQUIRE(record.rows.size() == 2);
    for (const auto& row : record.rows) {
        REQUIRE(row.mc_total.has_value());
        REQUIRE(*row.mc_total >= 0.0);
        REQUIRE(*row.mc_total <= 50.0);
    }
}

TEST_CASE("execute_run exposes the single-cell probe used by the cli") {
    const auto dir = fresh_dir("probe");
    auto config = experiments::config_from_json_text(tiny_config_json(dir / "out.csv", 1));
    const auto cells = experiments::enumerate_cells(config);
    REQUIRE(cells.size() == 1);
    const auto weights = experiments::cell_topology(config, cells[0], 0);
    const auto outcome = experiments::execute_run(config, cells[0], 0, 0, weights);
    CHECK(outcome.row.model == "asn");
    CHECK((outcome.row.status == "ok" || outcome.row.status == "blowup"));
    if (outcome.row.status == "ok") CHECK(outcome.row.nmse.has_value());
}

TEST_CASE("topology matrices are shared across models of equal size") {
    const auto dir = fresh_dir("topo");
    auto config = experiments::config_from_json_text(tiny_config_json(dir / "out.csv", 1));
    config.models = {reservoir::NeuronKind::ASN, reservoir::NeuronKind::BSN};
    const auto cells = experiments::enumerate_cells(config);
    REQUIRE(cells.size() == 2);
    const auto wa = experiments::cell_topology(config, cells[0], 0);
    const auto wb = experiments::cell_topology(config, cells[1], 0);
    CHECK(linalg::frobenius_distance(wa.w_s, wb.w_s) == 0.0);
    const auto wa1 = experiments::cell_topology(config, cells[0], 1);
    CHECK(linalg::frobenius_distance(wa.w_s, wa1.w_s) > 0.0);
}
