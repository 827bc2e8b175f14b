#pragma once

#include <string>
#include <vector>

#include "ctxpass/metrics.hpp"
#include "ctxpass/profile.hpp"

namespace ctxpass {

// The six prompt kinds the pipelines use. Rendered text never carries a
// trailing newline; golden files append one.
enum class PromptId {
  Generation,
  Evaluation,
  MetricsExplanation,
  SodaEval,
  MetaPromptGen,
  MetaMetricsPromptGen,
};

// Password-generation request. Bracket groups for absent optional fields are
// omitted. Throws RenderError when name or surname is empty.
std::string render_generation_prompt(const UserProfile& profile);

// Direct LLM evaluation request listing the passwords as "[p1], [p2], ...".
// Throws UsageError on an empty password list.
std::string render_evaluation_prompt(const UserProfile& profile,
                                     const std::vector<std::string>& passwords);

// Fixed text defining Force, Leet, Coverage, CUPP, and CPS.
std::string render_metrics_explanation_prompt();

// Metric-assisted evaluation request: user information line, results table,
// and the Strong/Weak instruction paragraph. Throws UsageError on empty
// scores.
std::string render_soda_eval_prompt(const UserProfile& profile,
                                    const std::vector<StrengthScores>& scores);

enum class MetaPromptKind { Plain, WithMetrics };

// Fixed meta-prompts asking a model to author an evaluation prompt, without
// or with the metric table.
std::string render_meta_prompt(MetaPromptKind kind);

}  // namespace ctxpass
