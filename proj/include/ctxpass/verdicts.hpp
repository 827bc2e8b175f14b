#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctxpass/metrics.hpp"

namespace ctxpass {

struct Verdict {
  std::string password;
  Strength label = Strength::Unknown;
  // Reply excerpt the label was read from; empty exactly when Unknown.
  std::string raw_span;
  std::optional<double> score;
};

// Extracts password candidates from a free-form generation reply: per line,
// enumeration markers, bullets, surrounding brackets/quotes, and trailing
// punctuation are stripped; survivors of 8..64 chars without internal
// whitespace are kept, deduplicated in order. Throws ParseError carrying the
// reply when nothing survives.
std::vector<std::string> parse_generated_passwords(const std::string& reply);

// Reads one verdict per password from an evaluation reply. The last
// case-sensitive occurrence of the password anchors the scan; the rest of
// that line, then the following line, is searched for the first label with
// negated phrases ranked above positive ones. A trailing number up to 100
// becomes the score. Missing password or label yields Unknown.
std::vector<Verdict> parse_verdicts(const std::string& reply,
                                    const std::vector<std::string>& passwords);

// Majority vote across aligned per-model verdict lists; ties and all-Unknown
// fall to Weak. Throws UsageError on fewer than two lists or misalignment.
std::vector<Verdict> ensemble_vote(const std::vector<std::vector<Verdict>>& verdict_sets);

}  // namespace ctxpass
