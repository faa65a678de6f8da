#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "relgraph/groups.hpp"
#include "relgraph/io.hpp"
#include "support.hpp"

#ifndef RELGRAPH_CLI_PATH
#error "RELGRAPH_CLI_PATH must name the relgraph binary"
#endif

using namespace relgraph;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;  // stdout and stderr together
};

Run run(const std::string& args) {
  const std::string command = std::string("\"") + RELGRAPH_CLI_PATH + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("relgraph_cli_" + name)) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
  std::string rel(const std::string& name, const Relation& r) const {
    io::write_relation_file(dir / name, r);
    return (dir / name).string();
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("spheres").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("cli: spheres") {
  Scratch s("spheres");
  const auto c7 = s.rel("c7.rel", relgraph::testing::directed_cycle(7));
  const Run r = run("spheres " + c7 + " -j 3 --reflexive");
  CHECK(r.code == 0);
  CHECK(r.out == "j ball sphere\n0 1 -\n1 2 1\n2 3 1\n3 4 1\n");
  CHECK(run("spheres " + c7 + " -j 0").out == "j ball sphere\n0 1 -\n");
  CHECK(run("spheres " + c7 + " -j 2 -v 7").code == 2);

  CHECK(run("spheres " + s.write("bad.rel", "3\n0 9\n") + " -j 1").code == 2);
  CHECK(run("spheres " + (s.dir / "missing.rel").string() + " -j 1").code == 2);
}

TEST_CASE("cli: kappa") {
  Scratch s("kappa");
  const auto k4 = s.rel("k4.rel", Relation::complete(4));
  const Run complete = run("kappa " + k4);
  CHECK(complete.code == 0);
  CHECK(complete.out.find("complete: kappa = n-1 = 3") != std::string::npos);

  const auto z8 = s.rel("z8.rel", relgraph::testing::circulant(8, {1, 2}, false));
  const Run ok = run("kappa " + z8 + " --oracle");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("kappa = 2") != std::string::npos);
  CHECK(ok.out.find("agreement: yes") != std::string::npos);

  const Run broken = run("kappa " + z8 + " --oracle --fault-offset 1");
  CHECK(broken.code == 1);
  CHECK(broken.out.find("agreement: NO") != std::string::npos);

  const auto big = s.rel("big.rel", relgraph::testing::directed_cycle(20));
  CHECK(run("kappa " + big + " --oracle").code == 2);
  CHECK(run("kappa " + big).code == 0);
}

TEST_CASE("cli: atoms") {
  Scratch s("atoms");
  const auto z8 = s.rel("z8.rel", relgraph::testing::circulant(8, {1, 2}, false));
  const Run r = run("atoms " + z8 + " -v 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("atom containing 3: {3}") != std::string::npos);
  CHECK(run("atoms " + s.rel("k3.rel", Relation::complete(3))).code == 2);
}

TEST_CASE("cli: girth") {
  Scratch s("girth");
  const auto looped = s.rel("looped.rel", relgraph::testing::directed_cycle(5, true));
  CHECK(run("girth " + looped).out == "1\n");
  CHECK(run("girth " + looped + " --strip-loops").out == "5\n");
  CHECK(run("girth " + s.rel("empty.rel", Relation(3))).out == "infinite\n");
}

TEST_CASE("cli: zerosum") {
  Scratch s("zerosum");
  std::ostringstream z10;
  io::write_group(z10, cyclic(10));
  const auto grp = s.write("z10.grp", z10.str());
  const Run r = run("zerosum " + grp + " " + s.write("s.txt", "3\n4\n"));
  CHECK(r.code == 0);
  CHECK(r.out.find("k = 3\nbound = 5\n") != std::string::npos);
  CHECK(r.out.find("minimal: yes") != std::string::npos);

  std::ostringstream z6;
  io::write_group(z6, cyclic(6));
  const auto g6 = s.write("z6.grp", z6.str());
  CHECK(run("zerosum " + g6 + " " + s.write("one.txt", "1\n")).out.find("k = 6\n") != std::string::npos);
  CHECK(run("zerosum " + g6 + " " + s.write("id.txt", "0\n1\n")).code == 2);
  CHECK(run("zerosum " + s.write("bad.grp", "2\n0 1\n1 1\n") + " " + s.write("t.txt", "1\n")).code == 2);
}

TEST_CASE("cli: gen writes files that parse back") {
  Scratch s("gen");
  const Run r = run("gen circulants --n 7 -o " + (s.dir / "c").string());
  CHECK(r.code == 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(s.dir / "c")) {
    ++files;
    const Relation rel = io::read_relation_file(entry.path());
    CHECK(rel.size() == 7);
    CHECK(regular_degree(rel).has_value());
  }
  CHECK(files == 63);
  CHECK(io::read_relation_file(s.dir / "c" / "circulant_n7_s1_2.rel") ==
        relgraph::testing::circulant(7, {1, 2}, false));

  CHECK(run("gen catalog --n 8 -o " + (s.dir / "g").string()).code == 0);
  CHECK(io::read_group_file(s.dir / "g" / "D4.grp").order() == 8);
  CHECK(run("gen hypercubes --n 3 -o " + (s.dir / "h").string()).code == 2);
}

TEST_CASE("cli: verify") {
  Scratch s("verify");
  CHECK(run("verify petersen --max-n 5").code == 2);
  CHECK(run("verify circulants").code == 2);
  CHECK(run("verify circulants --max-n 6 --checks sphere,bogus").code == 2);

  const std::string first = (s.dir / "a.ndjson").string();
  const std::string second = (s.dir / "b.ndjson").string();
  const Run r = run("verify circulants --max-n 8 --checks all --report " + first);
  CHECK(r.code == 0);
  CHECK(r.out.find("family circulants (bound 8)") != std::string::npos);
  CHECK(run("verify circulants --max-n 8 --checks all --report " + second).code == 0);
  CHECK_FALSE(slurp(first).empty());
  CHECK(slurp(first) == slurp(second));

  const Run shifted = run("verify circulants --max-n 6 --checks sphere --sphere-shift 1");
  CHECK(shifted.code == 1);
  CHECK(shifted.out.find("BUG: ") != std::string::npos);

  const std::vector<Arc> path{{0, 1}, {1, 2}};
  const auto p = s.rel("path.rel", Relation::from_edges(3, path));
  const Run refused = run("verify from-file " + p);
  CHECK(refused.code == 0);
  CHECK(refused.out.find("warning: ") != std::string::npos);
  CHECK(refused.out.find("not point-transitive") != std::string::npos);
  CHECK(run("verify from-file").code == 2);
}
