#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "rigidity/edge_list_io.hpp"
#include "rigidity/geometric.hpp"
#include "rigidity/report_io.hpp"

namespace fs = std::filesystem;
using namespace rigidity;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rigidity");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::current_path() / "cli_scratch";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path) << text;
  return path;
}

std::map<std::string, std::string> fields_of(const std::string& text) {
  std::istringstream in(text);
  return parse_machine_report(in);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int single_line(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("analyze") {
  const auto k4 = write_file("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  auto r = run({"analyze", "--input", k4.string(), "--format", "machine"});
  CHECK(r.code == 0);
  auto f = fields_of(r.out);
  CHECK(f["k_r"] == "1/1");
  CHECK(f["k_u"] == "1/1");
  CHECK(f["globally_rigid"] == "true");

  const auto tri = write_file("tri.txt", "# triangle\n3 3\n0 1\n1 2\n2 0\n");
  r = run({"analyze", "--input", tri.string(), "--format", "machine"});
  CHECK(r.code == 0);
  f = fields_of(r.out);
  CHECK(f["k_r"] == "1/1");
  CHECK(f["k_u"] == "0/1");
  CHECK(f["redundant_count"] == "0");
  CHECK(f["m"] == "3");
  CHECK(f["minimally_rigid"] == "true");

  r = run({"analyze", "--input", tri.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("minimally rigid:") != std::string::npos);

  const auto bad = write_file("bad.txt", "2 1\n0 x\n");
  r = run({"analyze", "--input", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(single_line(r.err) == 1);

  r = run({"analyze", "--input", scratch("missing.txt").string()});
  CHECK(r.code == 2);
  CHECK(single_line(r.err) == 1);
}

TEST_CASE("analyze with --k") {
  const auto k4 = write_file("k4k.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  auto r = run({"analyze", "--input", k4.string(), "--k", "1", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(fields_of(r.out)["k_u_k"] == "1/1");

  r = run({"analyze", "--input", k4.string(), "--k", "2", "--format", "machine"});
  CHECK(r.code == 3);
  CHECK(single_line(r.err) == 1);
  CHECK(fields_of(r.out)["k_r"] == "1/1");
}

TEST_CASE("argument errors") {
  auto r = run({});
  CHECK(r.code == 2);
  CHECK(single_line(r.err) == 1);
  r = run({"analyze", "--input", "x", "--bogus"});
  CHECK(r.code == 2);
  CHECK(single_line(r.err) == 1);
  r = run({"analyze", "--input", "x", "--format", "yaml"});
  CHECK(r.code == 2);
  r = run({"frobnicate"});
  CHECK(r.code == 2);
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sweep") != std::string::npos);
}

TEST_CASE("rgg") {
  const auto prefix = scratch("fig4").string();
  auto r = run({"rgg", "--nodes", "25", "--side", "30", "--seed", "3", "--radius", "12",
                "--out", prefix});
  REQUIRE(r.code == 0);
  const auto dep = read_deployment_file(prefix + ".deployment");
  CHECK(dep.size() == 25);
  CHECK(dep.seed == 3);
  const Graph g = read_edge_list_file(prefix + ".edges");
  CHECK(g == geometric_graph(dep, 12.0));
  auto f = fields_of(r.out);
  CHECK(f["m"] == std::to_string(g.edge_count()));
  CHECK(f.count("k_r") == 1);
  CHECK(f.count("k_u") == 1);

  r = run({"rgg", "--nodes", "0", "--side", "30", "--seed", "3", "--radius", "12", "--out",
           scratch("empty").string()});
  CHECK(r.code == 0);
  CHECK(fields_of(r.out)["k_r"] == "1/1");

  r = run({"rgg", "--nodes", "25", "--side", "-1", "--seed", "3", "--radius", "12", "--out",
           prefix});
  CHECK(r.code == 2);
  CHECK(single_line(r.err) == 1);
  r = run({"rgg", "--nodes", "25", "--side", "30", "--seed", "3", "--radius", "-2", "--out",
           prefix});
  CHECK(r.code == 2);
}

TEST_CASE("sweep") {
  const auto csv = scratch("sweep.csv");
  const auto svg = scratch("sweep.svg");
  auto r = run({"sweep", "--nodes", "25", "--side", "30", "--trials", "1", "--step", "0.01",
                "--seed", "8", "--csv", csv.string(), "--svg", svg.string()});
  REQUIRE(r.code == 0);
  std::istringstream lines(slurp(csv));
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  double previous = -1.0;
  while (std::getline(lines, line)) {
    ++rows;
    const double kr = std::stod(line.substr(line.find(',') + 1));
    CHECK(kr >= previous);
    previous = kr;
  }
  CHECK(rows == 101);
  CHECK(slurp(svg).rfind("<svg", 0) == 0);
  auto f = fields_of(r.out);
  CHECK(f["rows"] == "101");
  CHECK(f.count("rigidity_threshold") == 1);
  CHECK(f.count("relative_increase") == 1);

  r = run({"sweep", "--nodes", "25", "--side", "30", "--trials", "2", "--step", "0.1",
           "--seed", "8", "--csv", csv.string(), "--verbose"});
  CHECK(r.code == 0);
  CHECK(slurp(csv).find("k_r_exact") != std::string::npos);

  r = run({"sweep", "--nodes", "25", "--side", "30", "--trials", "1", "--step", "0", "--seed",
           "8", "--csv", csv.string()});
  CHECK(r.code == 2);
  CHECK(single_line(r.err) == 1);
}

TEST_CASE("verify") {
  const auto k4 = write_file("vk4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  auto r = run({"verify", "--input", k4.string(), "--seeds", "5"});
  CHECK(r.code == 0);
  auto f = fields_of(r.out);
  CHECK(f["matroid_rank"] == "5");
  CHECK(f["generic_rank_seed_5"] == "5");
  CHECK(f["agree"] == "true");

  const auto empty = write_file("vempty.txt", "6 0\n");
  r = run({"verify", "--input", empty.string()});
  CHECK(r.code == 0);
  CHECK(fields_of(r.out)["generic_rank_seed_1"] == "0");

  const auto path = write_file("vpath.txt", "3 2\n0 1\n1 2\n");
  r = run({"verify", "--input", path.string(), "--seeds", "5"});
  CHECK(r.code == 0);
  CHECK(fields_of(r.out)["matroid_rank"] == "2");

  const auto bad = write_file("vbad.txt", "3 2\n0 1\n");
  r = run({"verify", "--input", bad.string()});
  CHECK(r.code == 2);
}

TEST_CASE("machine output is byte-stable") {
  const auto k5 = write_file("k5.txt", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  const auto a = run({"analyze", "--input", k5.string(), "--k", "2", "--format", "machine"});
  const auto b = run({"analyze", "--input", k5.string(), "--k", "2", "--format", "machine"});
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
}
