#include <doctest.h>

#ifdef FMEAN_CLI_PATH

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const fs::path kDir = fs::temp_directory_path() / "fmean_cli_tests";

struct RunOutput {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& body) {
  fs::create_directories(kDir);
  const fs::path p = kDir / name;
  std::ofstream(p, std::ios::binary) << body;
  return p;
}

RunOutput run_cli(const std::string& args) {
  fs::create_directories(kDir);
  const fs::path out = kDir / "stdout.txt";
  const fs::path err = kDir / "stderr.txt";
  const std::string cmd = std::string(FMEAN_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

const char* kMeanConfig = R"({
  "command": "mean",
  "mean_function": {"name": "log", "params": []},
  "points": [1.0, 4.0]
})";

const char* kExitConfig = R"({
  "command": "exit-time",
  "mean_function": {"name": "log", "params": []},
  "chain": {
    "transition": [[0.9, 0.1], [0.2, 0.8]],
    "state_values": [1.0, 4.0],
    "initial_state": 0
  },
  "options": {"N": 5, "L": 2.0, "n_paths": 5000, "seed": 7}
})";

}  // namespace

TEST_CASE("cli happy path") {
  const auto cfg = write_file("mean.json", kMeanConfig);
  const auto r = run_cli("--config " + cfg.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mean") != std::string::npos);
  CHECK(r.out.find("2") != std::string::npos);

  // The command may come from a subcommand instead of the config.
  const auto cfg2 = write_file("points_only.json", R"({
    "mean_function": {"name": "log", "params": []},
    "points": [1.0, 4.0]
  })");
  const auto r2 = run_cli("mean --config " + cfg2.string());
  CHECK(r2.exit_code == 0);
}

TEST_CASE("cli validation failures exit 2") {
  const auto bad_probs = write_file("bad_probs.json", R"({
    "command": "cond-mean",
    "mean_function": {"name": "log", "params": []},
    "space": {"probs": [0.5, 0.4]},
    "variables": {"X": [1.0, 2.0]},
    "partitions": {"G": [[0], [1]]}
  })");
  const auto r = run_cli("--config " + bad_probs.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("error") != std::string::npos);

  CHECK(run_cli("").exit_code == 2);  // --config is required
  CHECK(run_cli("--config /nonexistent/path.json").exit_code == 2);
  const auto cfg = write_file("mean.json", kMeanConfig);
  CHECK(run_cli("--config " + cfg.string() + " --format yaml").exit_code == 2);
  const auto invalid = write_file("invalid.json", "{ not json");
  CHECK(run_cli("--config " + invalid.string()).exit_code == 2);
}

TEST_CASE("cli numeric failures exit 3") {
  const auto overflow = write_file("overflow.json", R"({
    "command": "ce",
    "mean_function": {"name": "exp", "params": [1.0]},
    "space": {"probs": [0.5, 0.5]},
    "variables": {"X": [1000.0, 1000.0]}
  })");
  const auto r = run_cli("--config " + overflow.string());
  CHECK(r.exit_code == 3);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("structured output reruns byte for byte") {
  const auto cfg = write_file("exit.json", kExitConfig);
  const fs::path o1 = kDir / "run1.json";
  const fs::path o2 = kDir / "run2.json";
  CHECK(run_cli("--config " + cfg.string() + " --out " + o1.string()).exit_code == 0);
  CHECK(run_cli("--config " + cfg.string() + " --out " + o2.string()).exit_code == 0);
  const std::string a = slurp(o1);
  CHECK_FALSE(a.empty());
  CHECK(a == slurp(o2));

  // The same scenario split across three workers writes the same bytes.
  const fs::path o3 = kDir / "run3.json";
  CHECK(run_cli("--config " + cfg.string() + " --workers 3 --out " + o3.string()).exit_code ==
        0);
  CHECK(a == slurp(o3));
}

TEST_CASE("format flags") {
  const auto cfg = write_file("mean.json", kMeanConfig);
  const auto csv = run_cli("--config " + cfg.string() + " --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("component,value") != std::string::npos);

  const auto structured = run_cli("--config " + cfg.string() + " --format structured");
  CHECK(structured.exit_code == 0);
  CHECK(structured.out.front() == '{');
  CHECK(structured.out.find("\"command\"") != std::string::npos);
}

TEST_CASE("seed override shows up in the echoed config") {
  const auto cfg = write_file("exit.json", kExitConfig);
  const auto r = run_cli("--config " + cfg.string() + " --seed 99 --format structured");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"seed\": 99") != std::string::npos);
}

TEST_CASE("logging goes to stderr and leaves stdout alone") {
  const auto cfg = write_file("mean.json", kMeanConfig);
  const auto quiet = run_cli("--config " + cfg.string());
  CHECK(quiet.err.empty());

  fs::create_directories(kDir);
  const fs::path out = kDir / "stdout_log.txt";
  const fs::path err = kDir / "stderr_log.txt";
  const std::string cmd = std::string("FMEAN_LOG=debug ") + FMEAN_CLI_PATH + " --config " +
                          cfg.string() + " > " + out.string() + " 2> " + err.string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out) == quiet.out);
  CHECK(slurp(err).find("[info]") != std::string::npos);
}

#endif  // FMEAN_CLI_PATH
