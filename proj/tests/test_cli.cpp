#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "wordroots/formats.hpp"
#include "wordroots/periodicity.hpp"

using namespace wordroots;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

// Runs the installed binary through the shell; stderr is folded into stdout
// so parse errors and progress lines are visible to the assertions.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + WORDROOTS_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Fixture files live under the test working directory.
std::string fixture(const std::string& name, const std::string& content) {
  std::filesystem::create_directories("cli_fixtures");
  std::string path = "cli_fixtures/" + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  REQUIRE(out.good());
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze prints the root chain") {
  RunResult r = run_cli("analyze abaabaababaabaabab --format structured");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "distinct-roots 5"));
  CHECK(contains(r.output, "root hhroot aba\n"));
  CHECK(contains(r.output, "root shroot abaab\n"));
  CHECK(contains(r.output, "root sroot abaabaab\n"));
  CHECK(contains(r.output, "root hroot abaabaabab\n"));
  CHECK(contains(r.output, "root root abaabaababaabaabab\n"));
}

TEST_CASE("structured analyze output reconstructs the profile") {
  for (const std::string& w :
       {std::string("a"), std::string("ababa"), std::string("abaabaabab"),
        std::string("aabaaabaaba"), std::string("bbbb")}) {
    RunResult r = run_cli("analyze " + w + " --format structured");
    REQUIRE(r.exit_code == 0);
    PeriodicityProfile parsed =
        parse_profile_structured(r.output, Alphabet::binary());
    PeriodicityProfile direct = profile(w);
    CHECK(parsed.word == direct.word);
    CHECK(parsed.roots == direct.roots);
    CHECK(parsed.in_class == direct.in_class);
    CHECK(parsed.degree == direct.degree);
    CHECK(parsed.distinct_roots == direct.distinct_roots);
  }
}

TEST_CASE("analyze rejects the empty word") {
  RunResult r = run_cli("analyze ''");
  CHECK(r.exit_code == 64);
}

TEST_CASE("analyze with an explicit alphabet and spaced words") {
  std::string alpha = fixture("alpha_spaced.txt", "x0\nx1\n");
  RunResult r =
      run_cli("analyze 'x0 x1 x0 x1' --alphabet " + alpha +
              " --spaced --format structured");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "degree 2"));
  CHECK(contains(r.output, "root root x0 x1"));

  RunResult bad = run_cli("analyze 'x0 x1' --spaced");
  CHECK(bad.exit_code == 64);
}

TEST_CASE("analyze agrees with its hidden oracle check") {
  RunResult r = run_cli("analyze aababaababaabaab --oracle");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "oracle check ok"));
}

TEST_CASE("search reports witnesses and exhaustion") {
  RunResult hit = run_cli("search --k 4 --bound 10 --format structured");
  CHECK(hit.exit_code == 0);
  CHECK(contains(hit.output, "witness abaabaabab\n"));

  RunResult strong = run_cli("search --k 2 --strong --bound 10 --format structured");
  CHECK(strong.exit_code == 0);
  CHECK(contains(strong.output, "witness abaababaab\n"));

  RunResult miss = run_cli("search --k 6 --bound 5 --format structured");
  CHECK(miss.exit_code == 3);
  CHECK(contains(miss.output, "exhausted true"));
  CHECK_FALSE(contains(miss.output, "witness"));

  RunResult bad = run_cli("search --k 9 --bound 5");
  CHECK(bad.exit_code >= 64);
}

TEST_CASE("code predicates") {
  std::string yes = fixture("code_yes.txt", "aba\nb\n");
  RunResult r1 = run_cli("code code " + yes);
  CHECK(r1.exit_code == 0);
  CHECK(contains(r1.output, "code"));

  std::string no = fixture("code_no.txt", "a\nab\nba\n");
  RunResult r2 = run_cli("code code " + no);
  CHECK(r2.exit_code == 1);
  CHECK(contains(r2.output, "aba"));

  RunResult r3 = run_cli("code ncode " + no + " --n 2 --format structured");
  CHECK(r3.exit_code == 0);
  CHECK(contains(r3.output, "ncode true"));
  RunResult r4 = run_cli("code ncode " + no + " --n 3");
  CHECK(r4.exit_code == 1);

  std::string inter = fixture("code_inter.txt", "ab\n");
  RunResult r5 = run_cli("code intercode " + inter + " --m 1");
  CHECK(r5.exit_code == 0);
  std::string square = fixture("code_square.txt", "aa\n");
  RunResult r6 = run_cli("code intercode " + square + " --m 1");
  CHECK(r6.exit_code == 1);

  std::string with_eps = fixture("code_eps.txt", "a\n-\n");
  RunResult r7 = run_cli("code code " + with_eps);
  CHECK(r7.exit_code == 65);
}

TEST_CASE("language square classification drives the exit code") {
  std::string ab_star = fixture("lang_abstar.txt",
                                "alphabet: ab\n"
                                "start: s\n"
                                "accept: s\n"
                                "s a -> t\n"
                                "t b -> s\n");
  RunResult reg = run_cli("lang square-class " + ab_star);
  CHECK(reg.exit_code == 0);
  CHECK(contains(reg.output, "regular"));
  CHECK(contains(reg.output, "ab"));

  std::string a_bstar = fixture("lang_abstar_gram.txt",
                                "S -> a B | a\n"
                                "B -> b B | b\n");
  RunResult cf = run_cli("lang square-class " + a_bstar);
  CHECK(cf.exit_code == 1);
  CHECK(contains(cf.output, "context-free-not-regular"));

  std::string sigma = fixture("lang_sigma.txt",
                              "alphabet: ab\n"
                              "start: s\n"
                              "accept: s\n"
                              "s a -> s\n"
                              "s b -> s\n");
  RunResult hard = run_cli("lang square-class " + sigma);
  CHECK(hard.exit_code == 2);
  CHECK(contains(hard.output, "not-context-free"));
}

TEST_CASE("language root finiteness") {
  std::string ab_star = fixture("lang_abstar.txt",
                                "alphabet: ab\n"
                                "start: s\n"
                                "accept: s\n"
                                "s a -> t\n"
                                "t b -> s\n");
  RunResult fin = run_cli("lang root-finite " + ab_star + " --format structured");
  CHECK(fin.exit_code == 0);
  CHECK(contains(fin.output, "finite true"));
  CHECK(contains(fin.output, "root ab"));

  std::string a_bstar = fixture("lang_abstar_gram.txt",
                                "S -> a B | a\n"
                                "B -> b B | b\n");
  RunResult inf = run_cli("lang root-finite " + a_bstar);
  CHECK(inf.exit_code == 1);
  CHECK(contains(inf.output, "infinite root set"));
}

TEST_CASE("language powers print a parseable automaton") {
  std::string single = fixture("lang_single_a.txt",
                               "alphabet: ab\n"
                               "start: s\n"
                               "accept: t\n"
                               "s a -> t\n");
  RunResult r = run_cli("lang pow " + single + " --H 0,1,2 --format structured");
  REQUIRE(r.exit_code == 0);
  // The output is an automaton followed by '#' sample lines; reparse it.
  Dfa d = determinize(parse_automaton(r.output));
  CHECK(enumerate_language(d, 6) == WordSet{"", "a", "aa"});
  CHECK(contains(r.output, "# -"));
  CHECK(contains(r.output, "# aa"));

  RunResult no_h = run_cli("lang pow " + single);
  CHECK(no_h.exit_code == 64);
}

TEST_CASE("contextual generation lists the language shortlex") {
  std::string g = fixture("ctx_matched.txt",
                          "axioms:\n"
                          "-\n"
                          "ab\n"
                          "contexts:\n"
                          "- , -\n"
                          "a , b\n"
                          "choice:\n"
                          "table\n"
                          "- -> {0}\n"
                          "ab -> {1}\n"
                          "default -> {}\n");
  RunResult ex = run_cli("contextual " + g + " --mode ex --maxlen 8");
  CHECK(ex.exit_code == 0);
  CHECK(ex.output == "-\nab\naabb\n");

  RunResult in = run_cli("contextual " + g + " --mode in --maxlen 6");
  CHECK(in.exit_code == 0);
  CHECK(in.output == "-\nab\naabb\naaabbb\n");

  RunResult js = run_cli("contextual " + g + " --mode ex --maxlen 8 --format json");
  CHECK(js.exit_code == 0);
  CHECK(js.output == "[\"\", \"ab\", \"aabb\"]\n");
}

TEST_CASE("parse errors carry line numbers and exit 65") {
  std::string bad = fixture("bad_automaton.txt",
                            "alphabet: ab\n"
                            "start: s\n"
                            "accept: s\n"
                            "s c -> s\n");
  RunResult r = run_cli("lang square-class " + bad);
  CHECK(r.exit_code == 65);
  CHECK(contains(r.output, "line 4"));

  RunResult gone = run_cli("lang square-class cli_fixtures/no_such_file.txt");
  CHECK(gone.exit_code == 70);
}

TEST_CASE("randomized verification subcommand") {
  RunResult r = run_cli("verify --seed 7 --trials 15");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "ok:"));
  CHECK(contains(r.output, "seed 7"));
}

TEST_CASE("usage errors") {
  RunResult none = run_cli("");
  CHECK(none.exit_code >= 64);
  RunResult unknown = run_cli("frobnicate");
  CHECK(unknown.exit_code >= 64);
  RunResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(contains(version.output, "wordroots"));
}
