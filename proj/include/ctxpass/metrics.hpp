#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ctxpass/common_list.hpp"
#include "ctxpass/tokens.hpp"
#include "ctxpass/wordlist.hpp"

namespace ctxpass {

// Unknown never comes out of the classifiers; it marks verdicts that could
// not be read out of an LLM reply.
enum class Strength { Weak, Medium, Strong, Unknown };

std::string_view strength_label(Strength s);
// Throws DataError on anything but Weak/Medium/Strong/Unknown.
Strength strength_from_label(std::string_view label);

struct StrengthScores {
  std::string password;
  int force = 0;     // 0..100
  int leet = 0;      // 0..100
  int coverage = 0;  // 0..100
  int cupp = 0;      // 0 or 1
  double cps = 0.0;  // [0,1], unrounded

  bool operator==(const StrengthScores&) const = default;
};

struct ClassifierConfig {
  double binary_threshold = 0.55;
  double medium_low = 0.36;
  double medium_high = 0.60;

  // Requires 0 < medium_low < binary_threshold <= medium_high < 1.
  void validate() const;
};

enum class MatchMode { Exact, Leet };

// Entropy-pool score: pool = sum of character class sizes present (lowercase
// 26, uppercase 26, digits 10, anything else 33), score = min(100,
// round(100 * len * log2(pool) / 128)) with half away from zero.
// Throws UsageError on empty input or length > 256.
int force_score(std::string_view password);

// Maximum characters covered by non-overlapping token matches. A match is a
// full alpha token, an alpha-token prefix of length >= 4, or a full numeric
// token. Exact mode compares case-insensitively; leet mode additionally lets
// password glyphs stand for their inverse-map letters. Numeric tokens are
// digit-exact in both modes.
std::size_t match_coverage(std::string_view password, const TokenSet& tokens, MatchMode mode);

// round(100 * (1 - covered/len)); higher = less personal content.
int coverage_score(std::string_view password, const TokenSet& tokens);
int leet_score(std::string_view password, const TokenSet& tokens);

// 1 iff the wordlist or the common list knows the password.
int cupp_flag(std::string_view password, const Wordlist& wordlist, const CommonList& common);

// (force/100) * (0.35 + 0.45*leet/100 + 0.20*coverage/100) * (1 - 0.3*cupp),
// clamped to [0,1]. Throws UsageError on out-of-range inputs.
double cps(int force, int leet, int coverage, int cupp);

StrengthScores evaluate(std::string_view password, const TokenSet& tokens,
                        const Wordlist& wordlist, const CommonList& common);

// Strong iff cps >= binary_threshold. Throws UsageError when cps is outside
// [0,1] or the config is invalid.
Strength classify_binary(double cps_value, const ClassifierConfig& cfg = {});

// Weak below medium_low, Medium through medium_high inclusive, Strong above.
Strength classify_ternary(double cps_value, const ClassifierConfig& cfg = {});

}  // namespace ctxpass
