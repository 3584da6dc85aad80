#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("eorlicz_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = work_dir() / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  fs::path out = work_dir() / "stdout.txt";
  std::string command = std::string(EORLICZ_CLI_PATH) + " " + args + " > " + out.string() +
                        " 2> " + (work_dir() / "stderr.txt").string();
  int status = std::system(command.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return RunResult{code, read_file(out)};
}

const char* kSquareAtomSpec = R"json({
  "phi": "u^2",
  "E": ["t", "u"],
  "omega": {"type": "discrete", "atoms": [[0, 1]]},
  "t_samples": [1.0]
})json";

}  // namespace

TEST_CASE("classify exit codes follow the requested classes") {
  fs::path spec = write_file("ex221.json", R"json({
    "phi": "exp(t+u)-1",
    "E": ["u", "u"],
    "t_samples": [0.5, 1, 2],
    "classes": ["E-Young"]
  })json");
  RunResult r = run_cli("classify --spec " + spec.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["classes"]["E-Young"]["status"] == "certified");
  CHECK(j["requested_classes"][0] == "E-Young");

  // All four classes requested: the concave root refutes convexity.
  fs::path sqrt_spec = write_file("sqrt.json", R"json({
    "phi": "u^0.5",
    "E": ["t", "u"],
    "t_samples": [1.0]
  })json");
  CHECK(run_cli("classify --spec " + sqrt_spec.string()).exit_code == 1);

  fs::path bad = write_file("bad.json", R"json({"phi": "u++", "E": ["t", "u"], "t_samples": [1]})json");
  RunResult rb = run_cli("classify --spec " + bad.string());
  CHECK(rb.exit_code == 3);
  CHECK(nlohmann::json::parse(rb.stdout_text).contains("error"));

  fs::path unknown_key =
      write_file("unknown.json", R"json({"phi": "u", "E": ["t", "u"], "bogus": 1})json");
  CHECK(run_cli("classify --spec " + unknown_key.string()).exit_code == 3);

  CHECK(run_cli("classify --spec " + (work_dir() / "missing.json").string()).exit_code == 3);

  // A dead log term poisons the reflection and zero-point probes without
  // refuting anything: inconclusive classes, exit 2.
  fs::path incon = write_file("incon.json", R"json({
    "phi": "u^2 + 0*ln(u)",
    "E": ["t", "u"],
    "t_samples": [1.0]
  })json");
  CHECK(run_cli("classify --spec " + incon.string()).exit_code == 2);
}

TEST_CASE("classify reports are byte-identical across reruns and threads") {
  fs::path spec = write_file("det.json", R"json({
    "phi": "piecewise(u<1, u-abs(t), u+abs(t)-2)",
    "E": ["u", "u"],
    "t_samples": [0.5, 1, 2]
  })json");
  RunResult a = run_cli("classify --spec " + spec.string());
  RunResult b = run_cli("classify --spec " + spec.string());
  RunResult c = run_cli("--threads 4 classify --spec " + spec.string());
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.stdout_text == b.stdout_text);
  CHECK(a.stdout_text == c.stdout_text);
  CHECK(!a.stdout_text.empty());
}

TEST_CASE("norm command") {
  fs::path spec = write_file("square.json", kSquareAtomSpec);
  fs::path data = write_file("three.csv", "0,3\n");
  RunResult r = run_cli("norm --spec " + spec.string() + " --data " + data.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(j.contains("iterations"));
  CHECK(j.contains("bracket"));
  CHECK(j.contains("modular_at_value"));

  // Decreasing composition: precondition failure.
  fs::path dec = write_file("dec.json", R"json({
    "phi": "piecewise(u<1, -log(u+abs(t)^(1/p)+1), inf)",
    "E": ["u^p", "u"],
    "p": 2,
    "omega": {"type": "discrete", "atoms": [[1, 1]]}
  })json");
  fs::path half = write_file("half.csv", "1,0.5\n");
  RunResult rd = run_cli("norm --spec " + dec.string() + " --data " + half.string());
  CHECK(rd.exit_code == 3);
  CHECK(nlohmann::json::parse(rd.stdout_text).contains("error"));

  // Row count must match the measure.
  fs::path wide = write_file("wide.csv", "0,1\n1,2\n");
  CHECK(run_cli("norm --spec " + spec.string() + " --data " + wide.string()).exit_code == 3);

  // --report writes the same bytes to a file.
  fs::path report = work_dir() / "norm_report.json";
  RunResult rr = run_cli("norm --spec " + spec.string() + " --data " + data.string() +
                         " --report " + report.string());
  CHECK(rr.exit_code == 0);
  CHECK(read_file(report) == r.stdout_text);
}

TEST_CASE("sobolev command") {
  fs::path spec = write_file("sob.json", R"json({
    "phi": "u^2",
    "E": ["t", "u"],
    "omega": {"type": "interval", "a": 0, "b": 1, "nodes": 2001, "rule": "midpoint"}
  })json");
  // f(x) = x sampled at the midpoint nodes.
  std::ostringstream csv;
  for (int i = 0; i < 2001; ++i) {
    double x = (i + 0.5) / 2001.0;
    csv << x << "," << x << "\n";
  }
  fs::path data = write_file("linear.csv", csv.str());
  RunResult r = run_cli("sobolev --spec " + spec.string() + " --data " + data.string() +
                        " --order 1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["value"].get<double>() == doctest::Approx(1.5773502691896257).epsilon(1e-3));
  CHECK(j["order"] == 1);
}

TEST_CASE("catalog command") {
  RunResult r = run_cli("catalog");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  auto disputed = j["summary"]["disputed"];
  REQUIRE(disputed.size() == 2);
  CHECK(disputed[0] == "ex2.1.2");
  CHECK(disputed[1] == "ex2.2.2");

  CHECK(run_cli("catalog --fixture nope").exit_code == 3);

  RunResult rf = run_cli("catalog --fixture ex4.1");
  CHECK(rf.exit_code == 0);
  auto jf = nlohmann::json::parse(rf.stdout_text);
  CHECK(jf["name"] == "ex4.1");
  CHECK(jf.contains("with_map"));
}
