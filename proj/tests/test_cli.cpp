#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef MWGRAPH_BIN
#define MWGRAPH_BIN "mwgraph"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& input = "") {
  std::string cmd;
  if (!input.empty()) {
    std::string esc;
    for (char c : input)
      if (c == '\'')
        esc += "'\\''";
      else
        esc += c;
    cmd = "printf '%s' '" + esc + "' | ";
  }
  cmd += std::string(MWGRAPH_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("width of a five-cycle from graph6 on stdin") {
  auto r = run("width --format graph6", "DUW");  // C5
  CHECK(r.exit_code == 0);
  CHECK(r.out == "5\n");
}

TEST_CASE("hamcycle says no on an unbalanced complete bipartite graph") {
  auto r = run("hamcycle --format edgelist",
               "5\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
  CHECK(r.exit_code == 1);
  CHECK(r.out == "no\n");
}

TEST_CASE("hampath says yes on a path") {
  auto r = run("hampath --format edgelist", "3\n0 1\n1 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "yes\n");
}

TEST_CASE("color witness on a triangle") {
  auto r = run("color --witness --format dimacs",
               "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"chi\":3") != std::string::npos);
  CHECK(r.out.find("\"witness\"") != std::string::npos);
  CHECK(r.out.find("\"schema\":\"mw.color/1\"") != std::string::npos);
}

TEST_CASE("paths emits ham and size") {
  auto r = run("paths --witness --format edgelist", "3\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"ham\":3") != std::string::npos);
  CHECK(r.out.find("\"size\":3") != std::string::npos);
}

TEST_CASE("nd and decompose run") {
  auto nd = run("nd --format edgelist", "4\n0 1\n0 2\n0 3\n");
  CHECK(nd.out == "2\n");
  auto dec = run("decompose --format edgelist", "4\n0 1\n1 2\n2 3\n");
  CHECK(dec.out.find("\"prime\"") != std::string::npos);
  auto dot = run("decompose --dot --format edgelist", "4\n0 1\n1 2\n2 3\n");
  CHECK(dot.out.find("digraph") != std::string::npos);
}

TEST_CASE("gen is deterministic per seed and feeds back in") {
  auto a = run("gen --n 30 --width 4 --seed 11");
  auto b = run("gen --n 30 --width 4 --seed 11");
  CHECK(a.out == b.out);
  auto c = run("gen --n 30 --width 4 --seed 12");
  CHECK(a.out != c.out);
  auto w = run("width --format graph6", a.out);
  CHECK(w.exit_code == 0);
  CHECK(std::stoi(w.out) <= 4);
}

TEST_CASE("gen named families") {
  auto pet = run("gen --named petersen");
  auto back = run("width --format graph6", pet.out);
  CHECK(back.out == "10\n");
  auto bad = run("gen --named nonsense");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("check exits cleanly on small corpora") {
  auto r = run("check --all-connected --max-n 5 --random 40 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 mismatches") != std::string::npos);
}

TEST_CASE("bench emits csv rows") {
  auto r = run("bench --width 3 --sizes 30,60 --reps 1 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,mw,op,millis") != std::string::npos);
  CHECK(r.out.find("30,") != std::string::npos);
  CHECK(r.out.find("60,") != std::string::npos);
}

TEST_CASE("bad input exits with code 2") {
  auto r = run("width --format graph6", "\x01\x02");
  CHECK(r.exit_code == 2);
  auto missing = run("width --input /nonexistent --format graph6");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("flag plumbing reaches the solvers") {
  auto a = run("paths --eager-cuts --linear-scan --format edgelist",
               "4\n0 1\n1 2\n2 3\n");
  CHECK(a.out.find("\"ham\":1") != std::string::npos);
  auto b = run("color --fast-mwp --format edgelist", "4\n0 1\n1 2\n2 3\n");
  CHECK(b.out.find("\"chi\":2") != std::string::npos);
}
