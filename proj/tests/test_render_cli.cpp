#include <doctest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "thhku/json_io.hpp"
#include "thhku/render.hpp"
#include "thhku/torsion_block.hpp"

using namespace thhku;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Drawing commands only, without indentation or the environment lines, sorted.
std::vector<std::string> tikz_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    line.erase(0, line.find_first_not_of(' '));
    if (line.empty() || line.rfind("\\begin{tikzpicture}", 0) == 0 || line.rfind("\\end{tikzpicture}", 0) == 0)
      continue;
    out.push_back(line);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string fixture(const std::string& name) { return read_file(std::string(THHKU_FIXTURE_DIR) + "/figures/" + name); }

}  // namespace

TEST_CASE("TikZ output reproduces the figures") {
  // The p = 3 figure shows T_1 to the left of T_2, on T_2's origin.
  std::string combined = render_tikz(torsion_block(3, 1), {20}) + render_tikz(torsion_block(3, 2));
  CHECK(tikz_lines(combined) == tikz_lines(fixture("p3T2.tikz")));
  CHECK(tikz_lines(render_tikz(torsion_block(3, 3))) == tikz_lines(fixture("p3T3.tikz")));
  CHECK(tikz_lines(render_tikz(torsion_block(5, 1))) == tikz_lines(fixture("p5T1.tikz")));
  CHECK(tikz_lines(render_tikz(torsion_block(5, 2))) == tikz_lines(fixture("p5T2.tikz")));
}

TEST_CASE("SVG output") {
  const TorsionBlock b = torsion_block(5, 1);
  const std::string svg = render_svg(b);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<circle class=\"node") == 3);
  CHECK(count(svg, "<line class=") + count(svg, "<path class=") == 2);

  const TorsionBlock t = torsion_block(3, 2);
  const std::string big = render_svg(t);
  CHECK(count(big, "<circle class=\"node") == 10);
  CHECK(count(big, "<line class=") + count(big, "<path class=") == 8);
  CHECK(count(big, " bent\"") == 1);
}

TEST_CASE("an empty block renders as an empty document") {
  TorsionBlock empty;
  empty.lo = 8;
  empty.hi = 11;
  const std::string svg = render_svg(empty);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<circle") == 0);
  const std::string tikz = render_tikz(empty);
  CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
  CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);
  CHECK(tikz_lines(tikz).empty());
}

TEST_CASE("block JSON is deterministic and complete") {
  const std::string a = block_json(torsion_block(3, 2)), b = block_json(torsion_block(3, 2));
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["nodes"].size() == 10);
  CHECK(j["edges"].size() == 8);
  CHECK(j["degrees"] == nlohmann::json::array({20, 37}));
}

#ifdef THHKU_CLI_PATH

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded; stdout is captured.
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + THHKU_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("CLI") {
  const CliResult pres = run_cli("presentation --p 3 --D 12");
  CHECK(pres.status == 0);
  CHECK(pres.out.find("Z_(3) {u^4·1} + Z/3 {σuμ_3}") != std::string::npos);

  const CliResult svg = run_cli("diagram --p 5 --n 1");
  CHECK(svg.status == 0);
  CHECK(count(svg.out, "<circle class=\"node") == 3);
  CHECK(count(svg.out, "<line class=") == 2);

  CHECK(run_cli("verify --p 3 --D 20").status == 0);
  const CliResult json = run_cli("verify --p 3 --D 20 --format json");
  CHECK(json.status == 0);
  CHECK(nlohmann::json::parse(json.out)["passed"] == true);

  CHECK(run_cli("verify --p 4").status == 2);
  CHECK(run_cli("verify --p 3 --D 3").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  // A regular file as the parent directory is unwritable even for root.
  const std::string blocked = std::string(THHKU_FIXTURE_DIR) + "/figures/p5T1.tikz/x.json";
  CHECK(run_cli("pages --p 3 --D 20 --ss u --out \"" + blocked + "\"").status == 2);

  const CliResult pages = run_cli("pages --p 3 --D 20 --ss u");
  CHECK(pages.status == 0);
  const auto j = nlohmann::json::parse(pages.out);
  REQUIRE(j.is_array());
  CHECK(j.back()["r"] == 0);
}

#endif
