#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const auto out_path = std::filesystem::temp_directory_path() / "stieltjes_cli_test.out";
  const std::string cmd = env + " " + STIELTJES_CLI_PATH + " " + args + " > " +
                          out_path.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

double first_value(const std::string& out, const std::string& method) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(method + " ", 0) == 0) {
      std::istringstream fields(line.substr(method.size()));
      double v = 0.0;
      fields >> v;
      return v;
    }
  }
  return std::nan("");
}

}  // namespace

TEST_CASE("gamma with every method") {
  const auto r = run("gamma -n 0 -u 1 --method all");
  CHECK(r.code == 0);
  for (const char* m : {"hasse", "coffey", "bell", "brede", "limit"}) {
    CHECK(first_value(r.out, m) == doctest::Approx(0.5772156649).epsilon(1e-8));
  }
  CHECK(r.out.find("max pairwise spread") != std::string::npos);
}

TEST_CASE("gamma with a single method") {
  const auto r = run("gamma -n 1 -u 1 --method coffey");
  CHECK(r.code == 0);
  CHECK(r.out.find("-0.0728") != std::string::npos);
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run("gamma -n 0 -u -1").code == 64);
  CHECK(run("gamma -u 1").code == 64);
  CHECK(run("gamma -n 0 --method nope").code == 64);
  CHECK(run("gamma -n 0 -u 2 --method brede").code == 64);
  CHECK(run("gamma -n 20 --method bell").code == 64);
  CHECK(run("validate --suite nope").code == 64);
  CHECK(run("table nope").code == 64);
  CHECK(run("").code == 64);
  CHECK(run("--max-level 2 gamma -n 0").code == 64);
}

TEST_CASE("tolerance precedence") {
  CHECK(run("validate --suite quad", "STIELTJES_TOL=garbage").code == 64);
  CHECK(run("validate --suite quad --tol 1", "STIELTJES_TOL=garbage").code == 0);
  CHECK(run("validate --suite quad", "STIELTJES_TOL=1e-30").code == 2);
  CHECK(run("validate --suite quad --tol 1", "STIELTJES_TOL=1e-30").code == 0);
}

TEST_CASE("validate writes a report") {
  const auto path = std::filesystem::temp_directory_path() / "stieltjes_cli_report.json";
  std::filesystem::remove(path);
  const auto r = run("validate --suite bell --json " + path.string());
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc.contains("version"));
  CHECK(doc.contains("timestamp"));
  CHECK(doc.at("summary").at("failed") == 0);
  for (const auto& c : doc.at("checks")) CHECK(c.at("difference") == 0.0);
}

TEST_CASE("identities suite reports the positivity failures") {
  const auto r = run("validate --suite identities");
  CHECK(r.code == 2);
  CHECK(r.out.find("identities.lerch[0.25]") != std::string::npos);
  CHECK(r.out.find("identities.quarter_integral") != std::string::npos);
  CHECK(r.out.find("identities.inversion[6,2]") != std::string::npos);
  CHECK(r.out.find("identities.positivity[5]") != std::string::npos);
}

TEST_CASE("unwritable report exits with 74") {
  CHECK(run("validate --suite bell --json /nonexistent/dir/report.json").code == 74);
}

TEST_CASE("tables") {
  const auto brede = run("table brede_coeffs --max-n 2");
  CHECK(brede.code == 0);
  CHECK(brede.out.find("p_0(z) = 1") != std::string::npos);
  CHECK(brede.out.find("p_2(z)") != std::string::npos);

  const auto derivs = run("table gamma_derivs --max-m 3");
  CHECK(derivs.code == 0);
  CHECK(derivs.out.find("-0.577215664901533") != std::string::npos);
  CHECK(derivs.out.find("1.97811199065595") != std::string::npos);

  const auto in = run("table In --max-n 4");
  CHECK(in.code == 0);
  std::istringstream rows(in.out);
  std::string line;
  std::getline(rows, line);
  int count = 0;
  while (std::getline(rows, line)) {
    std::istringstream fields(line);
    int n = 0;
    double value = 0.0;
    fields >> n >> value;
    CHECK(value > 0.0);
    ++count;
  }
  CHECK(count == 5);

  CHECK(run("table gamma_n --max-n 3 -u 0.5").code == 0);
  CHECK(run("table gamma_n --max-n 13").code == 64);
}

TEST_CASE("identical invocations give identical output") {
  CHECK(run("gamma -n 2 -u 1.5 --method all").out == run("gamma -n 2 -u 1.5 --method all").out);
}
