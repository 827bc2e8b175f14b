#include "ctxpass/pipeline.hpp"

#include "ctxpass/errors.hpp"
#include "ctxpass/prompts.hpp"

namespace ctxpass {

std::vector<std::string> run_generation(const UserProfile& profile, LLMClient& client) {
  return parse_generated_passwords(client.send(render_generation_prompt(profile)));
}

namespace {

PipelineResult collect_verdicts(const std::string& prompt,
                                const std::vector<std::string>& passwords,
                                const std::vector<LLMClient*>& clients,
                                const std::string& preamble) {
  if (clients.empty()) throw UsageError("pipeline requires at least one client");
  PipelineResult result;
  result.prompt = prompt;
  for (LLMClient* client : clients) {
    if (!preamble.empty()) client->send(preamble);
    ModelRun run;
    run.model = client->name();
    run.reply = client->send(prompt);
    run.verdicts = parse_verdicts(run.reply, passwords);
    result.runs.push_back(std::move(run));
  }
  if (result.runs.size() >= 2) {
    std::vector<std::vector<Verdict>> sets;
    sets.reserve(result.runs.size());
    for (const auto& run : result.runs) sets.push_back(run.verdicts);
    result.ensemble = ensemble_vote(sets);
    result.has_ensemble = true;
  }
  return result;
}

}  // namespace

PipelineResult run_evaluation(const UserProfile& profile,
                              const std::vector<std::string>& passwords,
                              const std::vector<LLMClient*>& clients) {
  return collect_verdicts(render_evaluation_prompt(profile, passwords), passwords, clients, "");
}

PipelineResult run_soda_evaluation(const UserProfile& profile,
                                   const std::vector<StrengthScores>& scores,
                                   const std::vector<LLMClient*>& clients) {
  std::vector<std::string> passwords;
  passwords.reserve(scores.size());
  for (const auto& s : scores) passwords.push_back(s.password);
  return collect_verdicts(render_soda_eval_prompt(profile, scores), passwords, clients,
                          render_metrics_explanation_prompt());
}

}  // namespace ctxpass
