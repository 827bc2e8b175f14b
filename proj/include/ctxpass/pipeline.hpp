#pragma once

#include <string>
#include <vector>

#include "ctxpass/llm_client.hpp"
#include "ctxpass/metrics.hpp"
#include "ctxpass/profile.hpp"
#include "ctxpass/verdicts.hpp"

namespace ctxpass {

struct ModelRun {
  std::string model;
  std::string reply;
  std::vector<Verdict> verdicts;
};

struct PipelineResult {
  std::string prompt;
  std::vector<ModelRun> runs;
  // Filled when two or more clients voted.
  std::vector<Verdict> ensemble;
  bool has_ensemble = false;
};

// First pipeline: ask one model for memorable passwords, parse the reply.
std::vector<std::string> run_generation(const UserProfile& profile, LLMClient& client);

// Second pipeline: render the evaluation prompt once, collect per-model
// verdicts, and vote when more than one client answers.
PipelineResult run_evaluation(const UserProfile& profile,
                              const std::vector<std::string>& passwords,
                              const std::vector<LLMClient*>& clients);

// Third pipeline: per client, send the metrics explanation first (the reply
// is conversational context only, not parsed), then the metric-assisted
// prompt built from the precomputed scores.
PipelineResult run_soda_evaluation(const UserProfile& profile,
                                   const std::vector<StrengthScores>& scores,
                                   const std::vector<LLMClient*>& clients);

}  // namespace ctxpass
