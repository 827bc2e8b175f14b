#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "ctxpass/cli.hpp"
#include "ctxpass/errors.hpp"
#include "ctxpass/report.hpp"
#include "ctxpass/text.hpp"
#include "ctxpass/wordlist.hpp"
#include "test_support.hpp"

using namespace ctxpass;

namespace {

struct CliResult {
  int rc;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int rc = dispatch(args, in, out, err);
  return {rc, out.str(), err.str()};
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

std::string merged_profile() { return testutil::fixture_path("profiles/george_merged.json"); }
std::string corpus() { return testutil::fixture_path("corpus/paper_passwords.txt"); }

const std::string kPaperTable =
    "Password; Force; Leet; Coverage; CUPP; CPS\n"
    "OrangeSystems23; 70; 47; 47; 0; 0.46\n"
    "MaleSystems*?; 65; 100; 100; 0; 0.65\n"
    "GeorgeCali1023; 65; 0; 0; 0; 0.23\n"
    "C@liforn1Sm1th49; 82; 13; 100; 0; 0.50\n"
    "Syst3msSm1th@; 67; 62; 100; 0; 0.56\n"
    "0r@nge@n3@; 48; 40; 100; 0; 0.35\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits zero, parse problems exit one") {
  auto help = run_cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("eval") != std::string::npos);
  CHECK(run_cli({}).rc == 1);
  CHECK(run_cli({"bogus"}).rc == 1);
  CHECK(run_cli({"eval"}).rc == 1);
}

TEST_CASE("profile merge writes the canonical merged document") {
  std::vector<std::string> args = {"profile", "merge", "-",
                                   testutil::fixture_path("profiles/george_facebook.json"),
                                   testutil::fixture_path("profiles/george_linkedin.json")};
  auto res = run_cli(args);
  CHECK(res.rc == 0);
  CHECK(res.out == testutil::fixture("profiles/george_merged.json"));

  testutil::TempDir tmp;
  std::string out_path = tmp.file("merged.json");
  args[2] = out_path;
  auto to_file = run_cli(args);
  CHECK(to_file.rc == 0);
  CHECK(to_file.out.empty());
  CHECK(read_file(out_path) == testutil::fixture("profiles/george_merged.json"));
}

TEST_CASE("wordlist output is deterministic and fingerprinted") {
  std::vector<std::string> args = {"wordlist", "--profile", merged_profile(), "--out", "-"};
  auto first = run_cli(args);
  auto second = run_cli(args);
  CHECK(first.rc == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.rfind("#fingerprint:", 0) == 0);
  Wordlist wl = Wordlist::load(first.out);
  CHECK(wl.contains("george"));
  CHECK(wl.contains("George1994"));
}

TEST_CASE("eval renders the paper table") {
  auto res = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                      "--format", "paper"});
  CHECK(res.rc == 0);
  CHECK(res.out == kPaperTable);
}

TEST_CASE("eval csv carries binary labels and parses back") {
  auto res = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                      "--format", "csv"});
  CHECK(res.rc == 0);
  ResultsTable table = parse_results_csv(res.out);
  REQUIRE(table.rows.size() == 6);
  REQUIRE(table.has_labels);
  auto expect = testutil::expected_rows();
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(table.rows[i].password == expect[i].password);
    CHECK(table.rows[i].force == expect[i].force);
    CHECK(table.rows[i].leet == expect[i].leet);
    CHECK(table.rows[i].coverage == expect[i].coverage);
    CHECK(table.rows[i].cupp == expect[i].cupp);
    CHECK(table.rows[i].cps == doctest::Approx(expect[i].cps).epsilon(1e-4));
  }
  std::vector<Strength> binary = {Strength::Weak, Strength::Strong, Strength::Weak,
                                  Strength::Weak, Strength::Strong, Strength::Weak};
  CHECK(table.labels == binary);

  auto jobs4 = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                        "--format", "csv", "-j", "4"});
  CHECK(jobs4.rc == 0);
  CHECK(jobs4.out == res.out);
}

TEST_CASE("eval with three levels uses the ternary classifier") {
  auto res = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                      "--format", "csv", "--levels", "3"});
  CHECK(res.rc == 0);
  std::vector<Strength> ternary = {Strength::Medium, Strength::Strong, Strength::Weak,
                                   Strength::Medium, Strength::Medium, Strength::Weak};
  CHECK(parse_results_csv(res.out).labels == ternary);
}

TEST_CASE("eval json round trips") {
  auto res = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                      "--format", "json"});
  CHECK(res.rc == 0);
  ResultsTable table = parse_results_json(res.out);
  CHECK(table.rows.size() == 6);
  CHECK(table.has_labels);
  CHECK(table.rows[1].password == "MaleSystems*?");
  CHECK(table.labels[1] == Strength::Strong);
}

TEST_CASE("classify relabels an existing results csv") {
  auto eval_res = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                           "--format", "csv"});
  testutil::TempDir tmp;
  std::string in_path = tmp.file("results.csv");
  write_file(in_path, eval_res.out);
  auto res = run_cli({"classify", "--in", in_path, "--levels", "3"});
  CHECK(res.rc == 0);
  std::vector<Strength> ternary = {Strength::Medium, Strength::Strong, Strength::Weak,
                                   Strength::Medium, Strength::Medium, Strength::Weak};
  CHECK(parse_results_csv(res.out).labels == ternary);
}

TEST_CASE("prompt subcommand reproduces the rendered prompts") {
  auto gen = run_cli({"prompt", "generation", "--profile", merged_profile()});
  CHECK(gen.rc == 0);
  CHECK(gen.out == testutil::fixture("golden/prompt_generation.txt"));

  auto eval = run_cli({"prompt", "evaluation", "--profile", merged_profile(),
                       "--passwords", corpus()});
  CHECK(eval.rc == 0);
  CHECK(eval.out == testutil::fixture("golden/prompt_evaluation.txt"));

  auto metrics = run_cli({"prompt", "metrics"});
  CHECK(metrics.rc == 0);
  CHECK(metrics.out == testutil::fixture("golden/prompt_metrics_explanation.txt"));

  auto scores = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                         "--format", "csv"});
  testutil::TempDir tmp;
  std::string scores_path = tmp.file("scores.csv");
  write_file(scores_path, scores.out);
  auto soda = run_cli({"prompt", "soda", "--profile", merged_profile(),
                       "--scores", scores_path});
  CHECK(soda.rc == 0);
  CHECK(soda.out == testutil::fixture("golden/prompt_soda_eval.txt"));

  CHECK(run_cli({"prompt", "haiku", "--profile", merged_profile()}).rc == 1);
  CHECK(run_cli({"prompt", "generation"}).rc == 1);
  CHECK(run_cli({"prompt", "evaluation", "--profile", merged_profile()}).rc == 1);
  CHECK(run_cli({"prompt", "soda", "--profile", merged_profile()}).rc == 1);
}

TEST_CASE("llm-eval votes across mock clients") {
  std::string mock_a = "mock:" + testutil::fixture_path("llm/george_eval_replies.json");
  std::string mock_b = "mock:" + testutil::fixture_path("llm/george_eval_replies_b.json");
  auto res = run_cli({"llm-eval", "--profile", merged_profile(), "--passwords", corpus(),
                      "--client", mock_a, "--client", mock_b});
  CHECK(res.rc == 0);
  CHECK(res.out ==
        "password,george_eval_replies,george_eval_replies_b,ensemble\n"
        "OrangeSystems23,Weak,Weak,Weak\n"
        "MaleSystems*?,Strong,Weak,Weak\n"
        "GeorgeCali1023,Weak,Weak,Weak\n"
        "C@liforn1Sm1th49,Strong,Strong,Strong\n"
        "Syst3msSm1th@,Weak,Unknown,Weak\n"
        "0r@nge@n3@,Weak,Weak,Weak\n");

  auto solo = run_cli({"llm-eval", "--profile", merged_profile(), "--passwords", corpus(),
                       "--client", mock_a});
  CHECK(solo.rc == 0);
  CHECK(solo.out ==
        "password,george_eval_replies\n"
        "OrangeSystems23,Weak\n"
        "MaleSystems*?,Strong\n"
        "GeorgeCali1023,Weak\n"
        "C@liforn1Sm1th49,Strong\n"
        "Syst3msSm1th@,Weak\n"
        "0r@nge@n3@,Weak\n");

  auto soda = run_cli({"llm-eval", "--profile", merged_profile(), "--passwords", corpus(),
                       "--client", mock_a, "--pipeline", "soda"});
  CHECK(soda.rc == 0);
  CHECK(soda.out == solo.out);

  CHECK(run_cli({"llm-eval", "--profile", merged_profile(), "--passwords", corpus()}).rc == 1);
  CHECK(run_cli({"llm-eval", "--profile", merged_profile(), "--passwords", corpus(),
                 "--client", "carrier-pigeon"})
            .rc == 1);
  CHECK(run_cli({"llm-eval", "--profile", merged_profile(), "--passwords", corpus(),
                 "--client", mock_a, "--pipeline", "turbo"})
            .rc == 1);
}

TEST_CASE("llm-eval command client reads CTXPASS_LLM_CMD") {
  unsetenv("CTXPASS_LLM_CMD");
  auto unset = run_cli({"llm-eval", "--profile", merged_profile(), "--passwords", corpus(),
                        "--client", "command"});
  CHECK(unset.rc == 1);
  CHECK(unset.err.find("CTXPASS_LLM_CMD") != std::string::npos);

  // cat echoes the prompt; no verdict region names a label, so all Unknown.
  setenv("CTXPASS_LLM_CMD", "cat", 1);
  auto echoed = run_cli({"llm-eval", "--profile", merged_profile(), "--passwords", corpus(),
                         "--client", "command"});
  unsetenv("CTXPASS_LLM_CMD");
  CHECK(echoed.rc == 0);
  CHECK(echoed.out ==
        "password,command\n"
        "OrangeSystems23,Unknown\n"
        "MaleSystems*?,Unknown\n"
        "GeorgeCali1023,Unknown\n"
        "C@liforn1Sm1th49,Unknown\n"
        "Syst3msSm1th@,Unknown\n"
        "0r@nge@n3@,Unknown\n");
}

TEST_CASE("report compares predictions against gold labels") {
  testutil::TempDir tmp;
  std::string pred_path = tmp.file("pred.csv");
  std::string gold_path = tmp.file("gold.csv");
  write_file(pred_path, "password,label\np1,Strong\np2,Weak\np3,Strong\np4,Weak\n");
  write_file(gold_path, "p1,Strong\np2,Strong\np3,Weak\np4,Weak\n");
  auto res = run_cli({"report", "--pred", pred_path, "--gold", gold_path});
  CHECK(res.rc == 0);
  CHECK(res.out.find("items: 4\n") != std::string::npos);
  CHECK(res.out.find("accuracy: 0.5000\n") != std::string::npos);
  CHECK(res.out.find("precision: 0.5000\n") != std::string::npos);
  CHECK(res.out.find("f1: 0.5000\n") != std::string::npos);

  auto eval_res = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                           "--format", "csv"});
  std::string results_pred = tmp.file("results_pred.csv");
  write_file(results_pred, eval_res.out);
  std::string gold_match = tmp.file("gold_match.csv");
  write_file(gold_match,
             "OrangeSystems23,Weak\nMaleSystems*?,Strong\nGeorgeCali1023,Weak\n"
             "C@liforn1Sm1th49,Weak\nSyst3msSm1th@,Strong\n0r@nge@n3@,Weak\n");
  auto perfect = run_cli({"report", "--pred", results_pred, "--gold", gold_match});
  CHECK(perfect.rc == 0);
  CHECK(perfect.out.find("accuracy: 1.0000\n") != std::string::npos);

  std::string unlabeled = tmp.file("unlabeled.csv");
  write_file(unlabeled, "password,force,leet,coverage,cupp,cps\na,50,10,20,1,0.25\n");
  CHECK(run_cli({"report", "--pred", unlabeled, "--gold", gold_path}).rc == 2);

  std::string gold_extra = tmp.file("gold_extra.csv");
  write_file(gold_extra, "p1,Strong\nunseen,Weak\n");
  CHECK(run_cli({"report", "--pred", pred_path, "--gold", gold_extra}).rc == 2);
  CHECK(run_cli({"report", "--pred", pred_path, "--gold", gold_path, "--levels", "5"}).rc == 1);
}

TEST_CASE("check prints one record per password") {
  auto res = run_cli({"check", "--profile", merged_profile(), "X9#mQ2$vL5@wP8"});
  CHECK(res.rc == 0);
  CHECK(res.out ==
        "password: X9#mQ2$vL5@wP8\n"
        "force: 72\n"
        "leet: 100\n"
        "coverage: 100\n"
        "cupp: 0\n"
        "cps: 0.7200\n"
        "binary: Strong\n"
        "ternary: Strong\n");

  auto weak = run_cli({"check", "--profile", merged_profile(), "GeorgeCali1023"});
  CHECK(weak.rc == 0);
  CHECK(weak.out.find("cps: 0.2275\n") != std::string::npos);
  CHECK(weak.out.find("binary: Weak\n") != std::string::npos);
}

TEST_CASE("check interactive mode reads until end of input") {
  auto res = run_cli({"check", "--profile", merged_profile(), "--interactive"},
                     "abc12345\n\nStrongPass!99x\n");
  CHECK(res.rc == 0);
  CHECK(count_occurrences(res.err, "password> ") == 4);
  CHECK(count_occurrences(res.out, "password: ") == 2);
  CHECK(res.out.find("password: abc12345\n") != std::string::npos);
  CHECK(res.out.find("password: StrongPass!99x\n") != std::string::npos);
  CHECK(res.out.find("ternary: ") != std::string::npos);

  CHECK(run_cli({"check", "--profile", merged_profile()}).rc == 1);
  CHECK(run_cli({"check", "--profile", merged_profile(), "pw", "--interactive"}).rc == 1);
}

TEST_CASE("config file overrides classifier, format, and wordlist knobs") {
  testutil::TempDir tmp;
  std::string strict = tmp.file("strict.json");
  write_file(strict, "{\"binary_threshold\": 0.7, \"medium_high\": 0.7}\n");
  auto res = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                      "--format", "csv", "--config", strict});
  CHECK(res.rc == 0);
  auto labels = parse_results_csv(res.out).labels;
  CHECK(std::count(labels.begin(), labels.end(), Strength::Strong) == 0);

  std::string paper_default = tmp.file("paper.json");
  write_file(paper_default, "{\"format\": \"paper\"}\n");
  auto paper = run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                        "--config", paper_default});
  CHECK(paper.rc == 0);
  CHECK(paper.out == kPaperTable);

  std::string wl_cfg = tmp.file("wordlist.json");
  write_file(wl_cfg,
             "{\"wordlist\": {\"special_suffixes\": [\"!\"], \"max_length\": 10}}\n");
  auto defaults = run_cli({"wordlist", "--profile", merged_profile(), "--out", "-"});
  auto trimmed = run_cli({"wordlist", "--profile", merged_profile(), "--out", "-",
                          "--config", wl_cfg});
  CHECK(trimmed.rc == 0);
  Wordlist def_wl = Wordlist::load(defaults.out);
  Wordlist cut_wl = Wordlist::load(trimmed.out);
  CHECK(def_wl.contains("george?"));
  CHECK_FALSE(cut_wl.contains("george?"));
  CHECK(cut_wl.contains("george!"));
  CHECK(def_wl.contains("georgesmith"));
  CHECK_FALSE(cut_wl.contains("georgesmith"));
}

TEST_CASE("config file problems map to exit codes") {
  testutil::TempDir tmp;
  std::string bad_json = tmp.file("bad.json");
  write_file(bad_json, "{\n");
  CHECK(run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                 "--config", bad_json})
            .rc == 2);

  std::string bad_type = tmp.file("type.json");
  write_file(bad_type, "{\"binary_threshold\": \"high\"}\n");
  CHECK(run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                 "--config", bad_type})
            .rc == 2);

  std::string bad_jobs = tmp.file("jobs.json");
  write_file(bad_jobs, "{\"jobs\": 2.5}\n");
  CHECK(run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                 "--config", bad_jobs})
            .rc == 2);

  std::string inverted = tmp.file("inverted.json");
  write_file(inverted, "{\"binary_threshold\": 0.2}\n");
  CHECK(run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                 "--format", "csv", "--config", inverted})
            .rc == 1);
}

TEST_CASE("failure exit codes separate usage from data problems") {
  CHECK(run_cli({"eval", "--profile", "/nonexistent.json", "--passwords", corpus()}).rc == 2);
  CHECK(run_cli({"eval", "--profile", merged_profile(), "--passwords", corpus(),
                 "--format", "yaml"})
            .rc == 1);
  testutil::TempDir tmp;
  std::string mangled = tmp.file("mangled.json");
  write_file(mangled, "not json at all");
  CHECK(run_cli({"profile", "merge", "-", mangled}).rc == 2);
  std::string empty_corpus = tmp.file("empty.txt");
  write_file(empty_corpus, "\n\n");
  CHECK(run_cli({"eval", "--profile", merged_profile(), "--passwords", empty_corpus}).rc == 2);
}

}  // TEST_SUITE
