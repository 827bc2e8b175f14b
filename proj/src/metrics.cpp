#include "ctxpass/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ctxpass/errors.hpp"
#include "ctxpass/leet.hpp"
#include "ctxpass/text.hpp"

namespace ctxpass {

std::string_view strength_label(Strength s) {
  switch (s) {
    case Strength::Weak: return "Weak";
    case Strength::Medium: return "Medium";
    case Strength::Strong: return "Strong";
    case Strength::Unknown: return "Unknown";
  }
  return "Unknown";
}

Strength strength_from_label(std::string_view label) {
  if (label == "Weak") return Strength::Weak;
  if (label == "Medium") return Strength::Medium;
  if (label == "Strong") return Strength::Strong;
  if (label == "Unknown") return Strength::Unknown;
  throw DataError("unknown strength label: " + std::string(label));
}

void ClassifierConfig::validate() const {
  if (!(0.0 < medium_low && medium_low < binary_threshold &&
        binary_threshold <= medium_high && medium_high < 1.0))
    throw UsageError("classifier thresholds must satisfy 0 < low < binary <= high < 1");
}

namespace {

constexpr std::size_t kMaxPasswordLen = 256;
constexpr std::size_t kMinPrefixLen = 4;
constexpr double kReferenceBits = 128.0;

int round_ratio(double value) { return static_cast<int>(std::lround(value)); }

}  // namespace

int force_score(std::string_view password) {
  if (password.empty()) throw UsageError("force_score requires a non-empty password");
  if (password.size() > kMaxPasswordLen)
    throw UsageError("password exceeds " + std::to_string(kMaxPasswordLen) + " characters");
  bool lower = false, upper = false, digit = false, other = false;
  for (char c : password) {
    if (is_ascii_lower(c)) lower = true;
    else if (is_ascii_upper(c)) upper = true;
    else if (is_ascii_digit(c)) digit = true;
    else other = true;
  }
  int pool = (lower ? 26 : 0) + (upper ? 26 : 0) + (digit ? 10 : 0) + (other ? 33 : 0);
  double bits = static_cast<double>(password.size()) * std::log2(static_cast<double>(pool));
  return std::min(100, round_ratio(100.0 * bits / kReferenceBits));
}

namespace {

bool segment_matches(std::string_view segment, std::string_view token_prefix, bool leet_mode) {
  for (std::size_t i = 0; i < segment.size(); ++i) {
    bool ok = leet_mode ? leet_char_matches(segment[i], token_prefix[i])
                        : exact_char_matches(segment[i], token_prefix[i]);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::size_t match_coverage(std::string_view password, const TokenSet& tokens, MatchMode mode) {
  if (password.empty()) return 0;
  const bool leet_mode = mode == MatchMode::Leet;
  const std::size_t n = password.size();
  std::vector<std::size_t> cov(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    cov[i] = cov[i - 1];
    auto consider = [&](std::string_view token_prefix, bool leet_chars) {
      std::size_t len = token_prefix.size();
      if (len > i) return;
      if (!segment_matches(password.substr(i - len, len), token_prefix, leet_chars)) return;
      cov[i] = std::max(cov[i], cov[i - len] + len);
    };
    for (const auto& t : tokens.alpha) {
      consider(t, leet_mode);
      for (std::size_t len = kMinPrefixLen; len < t.size(); ++len)
        consider(std::string_view(t).substr(0, len), leet_mode);
    }
    // Numeric tokens stay digit-exact even in leet mode.
    for (const auto& t : tokens.numeric) consider(t, false);
  }
  return cov[n];
}

namespace {

int uncovered_ratio(std::string_view password, std::size_t covered) {
  double frac = 1.0 - static_cast<double>(covered) / static_cast<double>(password.size());
  return round_ratio(100.0 * frac);
}

}  // namespace

int coverage_score(std::string_view password, const TokenSet& tokens) {
  if (password.empty()) throw UsageError("coverage_score requires a non-empty password");
  return uncovered_ratio(password, match_coverage(password, tokens, MatchMode::Exact));
}

int leet_score(std::string_view password, const TokenSet& tokens) {
  if (password.empty()) throw UsageError("leet_score requires a non-empty password");
  return uncovered_ratio(password, match_coverage(password, tokens, MatchMode::Leet));
}

int cupp_flag(std::string_view password, const Wordlist& wordlist, const CommonList& common) {
  return (wordlist.contains(password) || common.contains(password)) ? 1 : 0;
}

double cps(int force, int leet, int coverage, int cupp) {
  auto in_range = [](int v) { return v >= 0 && v <= 100; };
  if (!in_range(force) || !in_range(leet) || !in_range(coverage) || (cupp != 0 && cupp != 1))
    throw UsageError("cps inputs out of range");
  double value = (force / 100.0) *
                 (0.35 + 0.45 * (leet / 100.0) + 0.20 * (coverage / 100.0)) *
                 (1.0 - 0.3 * cupp);
  return std::clamp(value, 0.0, 1.0);
}

StrengthScores evaluate(std::string_view password, const TokenSet& tokens,
                        const Wordlist& wordlist, const CommonList& common) {
  StrengthScores s;
  s.password = std::string(password);
  s.force = force_score(password);
  s.leet = leet_score(password, tokens);
  s.coverage = coverage_score(password, tokens);
  s.cupp = cupp_flag(password, wordlist, common);
  s.cps = cps(s.force, s.leet, s.coverage, s.cupp);
  return s;
}

namespace {

void check_cps_range(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw UsageError("cps value outside [0,1]");
}

}  // namespace

Strength classify_binary(double cps_value, const ClassifierConfig& cfg) {
  cfg.validate();
  check_cps_range(cps_value);
  return cps_value >= cfg.binary_threshold ? Strength::Strong : Strength::Weak;
}

Strength classify_ternary(double cps_value, const ClassifierConfig& cfg) {
  cfg.validate();
  check_cps_range(cps_value);
  if (cps_value < cfg.medium_low) return Strength::Weak;
  if (cps_value <= cfg.medium_high) return Strength::Medium;
  return Strength::Strong;
}

}  // namespace ctxpass
