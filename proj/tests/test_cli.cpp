#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef BRAIDQUOT_CLI
#error "BRAIDQUOT_CLI must name the command line binary"
#endif

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(std::string const &args, std::string const &env = "")
{
  std::string cmd = env + " " + BRAIDQUOT_CLI + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string build_to_file(std::string const &args, std::string const &name)
{
  auto r = run("build " + args);
  REQUIRE(r.status == 0);
  std::string path = "cli_test_" + name + ".json";
  std::ofstream(path) << r.out;
  return path;
}

} // namespace

TEST_CASE("build")
{
  auto a = run("build artin_braid n=3");
  CHECK(a.status == 0);
  CHECK(a.out == "{\"label\":\"B_3\",\"generators\":[\"s1\",\"s2\"],\"relators\":[[1,2,1,-2,-1,-2]]}\n");
  auto s = run("build sphere_braid n=2");
  CHECK(s.out.find("\"relators\":[[1,1]]") != std::string::npos);
  auto t = run("build triangle l=2 m=3 n=5");
  CHECK(t.status == 0);
  CHECK(t.out.find("\"generators\":[\"a\",\"b\"]") != std::string::npos);
  CHECK(run("build --list").status == 0);
  CHECK(run("build nope n=3").status == 1);
  CHECK(run("build artin_braid").status == 1);
  CHECK(run("build artin_braid n=x").status == 1);
  CHECK(run("build artin_braid n=1").status == 1);
}

TEST_CASE("order")
{
  auto f = build_to_file("sphere_braid n=4 q=3", "b4s3");
  auto r = run("order " + f);
  CHECK(r.status == 0);
  CHECK(r.out == "12\n");
  CHECK(run("order --strategy felsch " + f).out == "12\n");
  CHECK(run("order < " + f + " -").out == "12\n");
  auto j = run("order --json " + f);
  CHECK(j.out.find("\"index\":12") != std::string::npos);

  auto inf = build_to_file("sphere_braid n=4 q=6", "b4s6");
  auto i = run("order --max-cosets 20000 " + inf);
  CHECK(i.status == 2);
  CHECK(i.out == "INCONCLUSIVE\n");
  CHECK(run("order " + inf, "BRAIDQUOT_MAX_COSETS=20000").status == 2);
  CHECK(run("order " + f, "BRAIDQUOT_MAX_COSETS=junk").status == 1);

  std::ofstream("cli_test_bad.json") << "{\"label\": ";
  CHECK(run("order cli_test_bad.json").status == 1);
  CHECK(run("order cli_test_missing.json").status == 1);
  CHECK(run("order --strategy dfs " + f).status == 1);
}

TEST_CASE("abelian")
{
  auto f = build_to_file("sphere_braid n=3 q=3", "b3s3");
  CHECK(run("abelian " + f).out == "{\"free_rank\":0,\"torsion\":[]}\n");
  auto n = build_to_file("nonorientable_abelianized g=2 q=4", "no24");
  CHECK(run("abelian " + n).out == "{\"free_rank\":1,\"torsion\":[2,2]}\n");
  auto a = build_to_file("artin_braid n=4", "b4");
  CHECK(run("abelian " + a).out == "{\"free_rank\":1,\"torsion\":[]}\n");
}

TEST_CASE("identify")
{
  auto f = build_to_file("sphere_braid n=4 q=5", "b4s5");
  auto r = run("identify " + f);
  CHECK(r.status == 0);
  CHECK(r.out.find("\"identified_name\":\"A5\"") != std::string::npos);
  auto i = build_to_file("nonorientable_abelianized g=2 q=3", "no23");
  CHECK(run("identify --max-cosets 1000 " + i).status == 2);
}

TEST_CASE("output is deterministic")
{
  auto f = build_to_file("crystallographic_disk n=3 q=4", "cd34");
  auto a = run("identify " + f);
  auto b = run("identify " + f);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run("build crystallographic_surface g=1 n=2").out ==
        run("build crystallographic_surface g=1 n=2").out);
}

TEST_CASE("suite with a tiny cap")
{
  auto r = run("paper-suite --max-cosets 100 --format markdown");
  CHECK(r.status != 0);
  CHECK(r.out.find("| claim") != std::string::npos);
  auto again = run("paper-suite --max-cosets 100");
  CHECK(again.out == run("paper-suite --max-cosets 100").out);
  CHECK(again.out.find("runtime_ms") == std::string::npos);
}
