#include "ctxpass/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

#include "ctxpass/common_list.hpp"
#include "ctxpass/errors.hpp"
#include "ctxpass/metrics.hpp"
#include "ctxpass/pipeline.hpp"
#include "ctxpass/profile.hpp"
#include "ctxpass/prompts.hpp"
#include "ctxpass/report.hpp"
#include "ctxpass/text.hpp"
#include "ctxpass/tokens.hpp"
#include "ctxpass/wordlist.hpp"

namespace ctxpass {

namespace {

// Values loaded from --config; command-line flags override these, these
// override built-in defaults.
struct CliConfig {
  ClassifierConfig classifier;
  WordlistConfig wordlist;
  std::optional<std::string> common_list;
  std::optional<std::string> format;
  std::optional<int> jobs;
};

CliConfig load_cli_config(const std::string& path) {
  CliConfig cfg;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config file ") + path + ": " + e.what(), e.byte);
  }
  if (!doc.is_object()) throw DataError("config file must be a JSON object: " + path);
  auto num = [&](const char* key, double& target) {
    if (auto it = doc.find(key); it != doc.end()) {
      if (!it->is_number()) throw DataError(std::string("config ") + key + " must be a number");
      target = it->get<double>();
    }
  };
  num("binary_threshold", cfg.classifier.binary_threshold);
  num("medium_low", cfg.classifier.medium_low);
  num("medium_high", cfg.classifier.medium_high);
  if (auto it = doc.find("common_list"); it != doc.end()) {
    if (!it->is_string()) throw DataError("config common_list must be a string");
    cfg.common_list = it->get<std::string>();
  }
  if (auto it = doc.find("format"); it != doc.end()) {
    if (!it->is_string()) throw DataError("config format must be a string");
    cfg.format = it->get<std::string>();
  }
  if (auto it = doc.find("jobs"); it != doc.end()) {
    if (!it->is_number_integer()) throw DataError("config jobs must be an integer");
    cfg.jobs = it->get<int>();
  }
  if (auto it = doc.find("wordlist"); it != doc.end()) {
    if (!it->is_object()) throw DataError("config wordlist must be an object");
    const auto& w = *it;
    auto flag = [&](const char* key, bool& target) {
      if (auto f = w.find(key); f != w.end()) {
        if (!f->is_boolean()) throw DataError(std::string("config wordlist.") + key + " must be a boolean");
        target = f->get<bool>();
      }
    };
    flag("enable_case", cfg.wordlist.enable_case);
    flag("enable_leet", cfg.wordlist.enable_leet);
    flag("concat_pairs", cfg.wordlist.concat_pairs);
    if (auto f = w.find("special_suffixes"); f != w.end()) {
      if (!f->is_array()) throw DataError("config wordlist.special_suffixes must be an array");
      cfg.wordlist.special_suffixes.clear();
      for (const auto& s : *f) {
        if (!s.is_string())
          throw DataError("config wordlist.special_suffixes entries must be strings");
        cfg.wordlist.special_suffixes.push_back(s.get<std::string>());
      }
    }
    if (auto f = w.find("max_length"); f != w.end()) {
      if (!f->is_number_integer() || f->get<int>() < 0)
        throw DataError("config wordlist.max_length must be a non-negative integer");
      cfg.wordlist.max_length = static_cast<std::size_t>(f->get<int>());
    }
    if (auto f = w.find("year_window"); f != w.end()) {
      if (!f->is_number_integer())
        throw DataError("config wordlist.year_window must be an integer");
      cfg.wordlist.year_window = f->get<int>();
    }
  }
  return cfg;
}

UserProfile load_profile_file(const std::string& path) {
  return as_user_profile(load_profile_document(read_file(path)));
}

// Password corpus: one per line, empty lines skipped, oversize rejected with
// the offending line number.
std::vector<std::string> load_passwords_file(const std::string& path) {
  std::vector<std::string> out;
  auto lines = split_lines(read_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    if (lines[i].size() > 256)
      throw DataError(path + " line " + std::to_string(i + 1) +
                      ": password exceeds 256 characters");
    out.push_back(lines[i]);
  }
  if (out.empty()) throw DataError(path + " contains no passwords");
  return out;
}

CommonList load_common(const std::optional<std::string>& path) {
  if (path) return CommonList::from_text(read_file(*path));
  return CommonList::builtin();
}

void write_output(const std::string& target, const std::string& content, std::ostream& out) {
  if (target == "-") out << content;
  else write_file(target, content);
}

std::vector<StrengthScores> evaluate_batch(const std::vector<std::string>& passwords,
                                           const TokenSet& tokens, const Wordlist& wordlist,
                                           const CommonList& common, int jobs) {
  std::vector<StrengthScores> rows(passwords.size());
  if (jobs < 1) throw UsageError("jobs must be at least 1");
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), passwords.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < passwords.size(); ++i)
      rows[i] = evaluate(passwords[i], tokens, wordlist, common);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= passwords.size()) break;
        rows[i] = evaluate(passwords[i], tokens, wordlist, common);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<Strength> classify_rows(const std::vector<StrengthScores>& rows, int levels,
                                    const ClassifierConfig& cfg) {
  if (levels != 2 && levels != 3) throw UsageError("levels must be 2 or 3");
  std::vector<Strength> labels;
  labels.reserve(rows.size());
  for (const auto& r : rows)
    labels.push_back(levels == 2 ? classify_binary(r.cps, cfg) : classify_ternary(r.cps, cfg));
  return labels;
}

std::string client_name_for_mock(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  return stem.empty() ? "mock" : stem;
}

struct CommandContext {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Shared --config handling: each subcommand carries its own option so the
// flag can appear after the subcommand name.
struct ConfigSlot {
  std::string path;
  CliConfig values;
  void load_if_set() {
    if (!path.empty()) values = load_cli_config(path);
  }
};

void cmd_profile_merge(const std::string& out_path, const std::vector<std::string>& inputs,
                       CommandContext& ctx) {
  std::vector<UserProfile> profiles;
  profiles.reserve(inputs.size());
  for (const auto& path : inputs) profiles.push_back(parse_profile(read_file(path)));
  MergedProfile merged = merge_profiles(profiles);
  write_output(out_path, serialize_merged(merged), ctx.out);
}

void cmd_wordlist(const std::string& profile_path, const std::string& out_path,
                  ConfigSlot& config, CommandContext& ctx) {
  config.load_if_set();
  UserProfile profile = load_profile_file(profile_path);
  Wordlist wl = Wordlist::generate(derive_tokens(profile), config.values.wordlist);
  write_output(out_path, wl.serialize(), ctx.out);
}

struct EvalArgs {
  std::string profile_path;
  std::string passwords_path;
  std::string wordlist_path;
  std::string common_path;
  std::string format;
  int levels = 2;
  int jobs = 0;
};

void cmd_eval(const EvalArgs& args, ConfigSlot& config, CommandContext& ctx) {
  config.load_if_set();
  UserProfile profile = load_profile_file(args.profile_path);
  TokenSet tokens = derive_tokens(profile);
  std::vector<std::string> passwords = load_passwords_file(args.passwords_path);
  Wordlist wordlist = args.wordlist_path.empty()
                          ? Wordlist::generate(tokens, config.values.wordlist)
                          : Wordlist::load(read_file(args.wordlist_path));
  std::optional<std::string> common_path =
      args.common_path.empty() ? config.values.common_list
                               : std::optional<std::string>(args.common_path);
  CommonList common = load_common(common_path);

  std::string format_name =
      !args.format.empty() ? args.format : config.values.format.value_or("csv");
  TableFormat format = table_format_from_name(format_name);
  int jobs = args.jobs > 0 ? args.jobs : config.values.jobs.value_or(1);

  auto rows = evaluate_batch(passwords, tokens, wordlist, common, jobs);
  if (format == TableFormat::Paper) {
    ctx.out << render_results_table(rows, format);
  } else {
    auto labels = classify_rows(rows, args.levels, config.values.classifier);
    ctx.out << render_results_table(rows, format, &labels);
  }
}

void cmd_classify(const std::string& in_path, int levels, ConfigSlot& config,
                  CommandContext& ctx) {
  config.load_if_set();
  ResultsTable table = parse_results_csv(read_file(in_path));
  auto labels = classify_rows(table.rows, levels, config.values.classifier);
  ctx.out << render_results_table(table.rows, TableFormat::Csv, &labels);
}

void cmd_prompt(const std::string& kind, const std::string& profile_path,
                const std::string& passwords_path, const std::string& scores_path,
                CommandContext& ctx) {
  auto profile = [&]() -> UserProfile {
    if (profile_path.empty()) throw UsageError("prompt " + kind + " requires --profile");
    return load_profile_file(profile_path);
  };
  if (kind == "generation") {
    ctx.out << render_generation_prompt(profile()) << "\n";
  } else if (kind == "evaluation") {
    if (passwords_path.empty()) throw UsageError("prompt evaluation requires --passwords");
    ctx.out << render_evaluation_prompt(profile(), load_passwords_file(passwords_path)) << "\n";
  } else if (kind == "metrics") {
    ctx.out << render_metrics_explanation_prompt() << "\n";
  } else if (kind == "soda") {
    if (scores_path.empty()) throw UsageError("prompt soda requires --scores");
    ResultsTable table = parse_results_csv(read_file(scores_path));
    ctx.out << render_soda_eval_prompt(profile(), table.rows) << "\n";
  } else {
    throw UsageError("unknown prompt kind: " + kind +
                     " (expected generation, evaluation, metrics, or soda)");
  }
}

struct LlmEvalArgs {
  std::string profile_path;
  std::string passwords_path;
  std::vector<std::string> client_specs;
  std::string pipeline = "eval";
  std::string wordlist_path;
  std::string common_path;
};

void cmd_llm_eval(const LlmEvalArgs& args, ConfigSlot& config, CommandContext& ctx) {
  config.load_if_set();
  UserProfile profile = load_profile_file(args.profile_path);
  std::vector<std::string> passwords = load_passwords_file(args.passwords_path);
  if (args.client_specs.empty()) throw UsageError("llm-eval requires at least one --client");

  std::vector<std::unique_ptr<LLMClient>> owned;
  std::vector<LLMClient*> clients;
  for (const auto& spec : args.client_specs) {
    if (spec.rfind("mock:", 0) == 0) {
      std::string path = spec.substr(5);
      if (path.empty()) throw UsageError("mock client needs a fixture path: mock:FILE");
      owned.push_back(std::make_unique<MockClient>(
          MockClient::from_file(path, client_name_for_mock(path))));
    } else if (spec == "command") {
      const char* cmd = std::getenv("CTXPASS_LLM_CMD");
      owned.push_back(std::make_unique<CommandClient>(cmd ? cmd : ""));
    } else {
      throw UsageError("unknown client spec: " + spec + " (expected mock:FILE or command)");
    }
    clients.push_back(owned.back().get());
  }

  PipelineResult result;
  if (args.pipeline == "eval") {
    result = run_evaluation(profile, passwords, clients);
  } else if (args.pipeline == "soda") {
    TokenSet tokens = derive_tokens(profile);
    Wordlist wordlist = args.wordlist_path.empty()
                            ? Wordlist::generate(tokens, config.values.wordlist)
                            : Wordlist::load(read_file(args.wordlist_path));
    std::optional<std::string> common_path =
        args.common_path.empty() ? config.values.common_list
                                 : std::optional<std::string>(args.common_path);
    CommonList common = load_common(common_path);
    auto rows = evaluate_batch(passwords, tokens, wordlist, common, 1);
    result = run_soda_evaluation(profile, rows, clients);
  } else {
    throw UsageError("unknown pipeline: " + args.pipeline + " (expected eval or soda)");
  }

  std::string header = "password";
  for (const auto& run : result.runs) header += "," + csv_quote(run.model);
  if (result.has_ensemble) header += ",ensemble";
  ctx.out << header << "\n";
  for (std::size_t i = 0; i < passwords.size(); ++i) {
    std::string line = csv_quote(passwords[i]);
    for (const auto& run : result.runs)
      line += "," + std::string(strength_label(run.verdicts[i].label));
    if (result.has_ensemble)
      line += "," + std::string(strength_label(result.ensemble[i].label));
    ctx.out << line << "\n";
  }
}

void cmd_report(const std::string& pred_path, const std::string& gold_path, int levels,
                CommandContext& ctx) {
  if (levels != 2 && levels != 3) throw UsageError("levels must be 2 or 3");
  std::string pred_text = read_file(pred_path);

  // Prediction files come in two shapes: a full results CSV with a label
  // column, or a bare password,label file.
  std::vector<std::pair<std::string, Strength>> pred_pairs;
  if (pred_text.rfind("password,force,", 0) == 0) {
    ResultsTable table = parse_results_csv(pred_text);
    if (!table.has_labels)
      throw DataError("prediction CSV " + pred_path + " has no label column");
    for (std::size_t i = 0; i < table.rows.size(); ++i)
      pred_pairs.emplace_back(table.rows[i].password, table.labels[i]);
  } else {
    for (auto& [pw, label] : parse_gold_csv(pred_text)) pred_pairs.emplace_back(pw, label);
  }

  std::map<std::string, Strength> by_password;
  for (const auto& [pw, label] : pred_pairs) {
    auto [it, inserted] = by_password.emplace(pw, label);
    if (!inserted && it->second != label)
      throw DataError("conflicting predictions for password: " + pw);
  }

  std::vector<Strength> pred, gold;
  for (const auto& [pw, label] : parse_gold_csv(read_file(gold_path))) {
    auto it = by_password.find(pw);
    if (it == by_password.end()) throw DataError("no prediction for password: " + pw);
    pred.push_back(it->second);
    gold.push_back(label);
  }

  ConfusionMatrix cm = confusion(pred, gold);
  ClassificationReport report = levels == 2 ? binary_metrics(cm) : macro_metrics(cm);
  ctx.out << render_report_text(report);
}

void print_check_record(const StrengthScores& s, const ClassifierConfig& cfg,
                        std::ostream& out) {
  char cps_buf[32];
  std::snprintf(cps_buf, sizeof(cps_buf), "%.4f", s.cps);
  out << "password: " << s.password << "\n"
      << "force: " << s.force << "\n"
      << "leet: " << s.leet << "\n"
      << "coverage: " << s.coverage << "\n"
      << "cupp: " << s.cupp << "\n"
      << "cps: " << cps_buf << "\n"
      << "binary: " << strength_label(classify_binary(s.cps, cfg)) << "\n"
      << "ternary: " << strength_label(classify_ternary(s.cps, cfg)) << "\n";
}

void cmd_check(const std::string& profile_path, const std::string& password, bool interactive,
               ConfigSlot& config, CommandContext& ctx) {
  config.load_if_set();
  if (interactive == !password.empty())
    throw UsageError("check needs exactly one of PASSWORD or --interactive");
  UserProfile profile = load_profile_file(profile_path);
  TokenSet tokens = derive_tokens(profile);
  Wordlist wordlist = Wordlist::generate(tokens, config.values.wordlist);
  CommonList common = load_common(config.values.common_list);

  if (!interactive) {
    if (password.size() > 256) throw DataError("password exceeds 256 characters");
    print_check_record(evaluate(password, tokens, wordlist, common),
                       config.values.classifier, ctx.out);
    return;
  }
  std::string line;
  while (true) {
    ctx.err << "password> " << std::flush;
    if (!std::getline(ctx.in, line)) break;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      print_check_record(evaluate(line, tokens, wordlist, common), config.values.classifier,
                         ctx.out);
      ctx.out << "\n";
    } catch (const std::exception& e) {
      ctx.err << "error: " << e.what() << "\n";
    }
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CommandContext ctx{in, out, err};
  CLI::App app{"Context-aware password strength engine", "ctxpass"};
  app.require_subcommand(1);
  ConfigSlot config;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config.path, "JSON config file");
  };

  auto* profile_cmd = app.add_subcommand("profile", "Profile document operations");
  profile_cmd->require_subcommand(1);
  auto* merge_cmd = profile_cmd->add_subcommand("merge", "Merge profiles, first listed wins");
  std::string merge_out;
  std::vector<std::string> merge_inputs;
  merge_cmd->add_option("out", merge_out, "Output path or - for stdout")->required();
  merge_cmd->add_option("inputs", merge_inputs, "Input profile documents")->required();

  auto* wordlist_cmd = app.add_subcommand("wordlist", "Generate the candidate wordlist");
  std::string wl_profile, wl_out;
  wordlist_cmd->add_option("--profile", wl_profile, "Profile document")->required();
  wordlist_cmd->add_option("--out", wl_out, "Output path or - for stdout")->required();
  add_config(wordlist_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Score a password corpus");
  EvalArgs eval_args;
  eval_cmd->add_option("--profile", eval_args.profile_path, "Profile document")->required();
  eval_cmd->add_option("--passwords", eval_args.passwords_path, "Password file, one per line")
      ->required();
  eval_cmd->add_option("--wordlist", eval_args.wordlist_path,
                       "Precomputed wordlist file (default: generate from profile)");
  eval_cmd->add_option("--common", eval_args.common_path, "Common password list file");
  eval_cmd->add_option("--format", eval_args.format, "paper, csv, or json");
  eval_cmd->add_option("--levels", eval_args.levels, "Classification levels: 2 or 3");
  eval_cmd->add_option("-j,--jobs", eval_args.jobs, "Worker threads");
  add_config(eval_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Relabel a results CSV");
  std::string classify_in;
  int classify_levels = 2;
  classify_cmd->add_option("--in", classify_in, "Results CSV")->required();
  classify_cmd->add_option("--levels", classify_levels, "Classification levels: 2 or 3");
  add_config(classify_cmd);

  auto* prompt_cmd = app.add_subcommand("prompt", "Render a pipeline prompt");
  std::string prompt_kind, prompt_profile, prompt_passwords, prompt_scores;
  prompt_cmd->add_option("kind", prompt_kind, "generation, evaluation, metrics, or soda")
      ->required();
  prompt_cmd->add_option("--profile", prompt_profile, "Profile document");
  prompt_cmd->add_option("--passwords", prompt_passwords, "Password file");
  prompt_cmd->add_option("--scores", prompt_scores, "Results CSV with precomputed scores");

  auto* llm_cmd = app.add_subcommand("llm-eval", "Run an evaluation pipeline against clients");
  LlmEvalArgs llm_args;
  llm_cmd->add_option("--profile", llm_args.profile_path, "Profile document")->required();
  llm_cmd->add_option("--passwords", llm_args.passwords_path, "Password file")->required();
  llm_cmd->add_option("--client", llm_args.client_specs,
                      "mock:FIXTURE or command (repeatable; command reads CTXPASS_LLM_CMD)");
  llm_cmd->add_option("--pipeline", llm_args.pipeline, "eval or soda");
  llm_cmd->add_option("--wordlist", llm_args.wordlist_path, "Precomputed wordlist file");
  llm_cmd->add_option("--common", llm_args.common_path, "Common password list file");
  add_config(llm_cmd);

  auto* report_cmd = app.add_subcommand("report", "Score predictions against gold labels");
  std::string report_pred, report_gold;
  int report_levels = 2;
  report_cmd->add_option("--pred", report_pred, "Prediction CSV")->required();
  report_cmd->add_option("--gold", report_gold, "Gold label CSV")->required();
  report_cmd->add_option("--levels", report_levels, "Classification levels: 2 or 3");

  auto* check_cmd = app.add_subcommand("check", "Evaluate a single password");
  std::string check_profile, check_password;
  bool check_interactive = false;
  check_cmd->add_option("--profile", check_profile, "Profile document")->required();
  check_cmd->add_option("password", check_password, "Password to evaluate");
  check_cmd->add_flag("--interactive", check_interactive, "Read passwords line by line");
  add_config(check_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (merge_cmd->parsed()) cmd_profile_merge(merge_out, merge_inputs, ctx);
    else if (wordlist_cmd->parsed()) cmd_wordlist(wl_profile, wl_out, config, ctx);
    else if (eval_cmd->parsed()) cmd_eval(eval_args, config, ctx);
    else if (classify_cmd->parsed()) cmd_classify(classify_in, classify_levels, config, ctx);
    else if (prompt_cmd->parsed())
      cmd_prompt(prompt_kind, prompt_profile, prompt_passwords, prompt_scores, ctx);
    else if (llm_cmd->parsed()) cmd_llm_eval(llm_args, config, ctx);
    else if (report_cmd->parsed()) cmd_report(report_pred, report_gold, report_levels, ctx);
    else if (check_cmd->parsed())
      cmd_check(check_profile, check_password, check_interactive, config, ctx);
    else {
      err << "error: no subcommand selected\n";
      return 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace ctxpass
