#include "ctxpass/verdicts.hpp"

#include <algorithm>
#include <array>

#include "ctxpass/errors.hpp"
#include "ctxpass/text.hpp"

namespace ctxpass {

namespace {

constexpr std::size_t kMinCandidateLen = 8;
constexpr std::size_t kMaxCandidateLen = 64;

// Strips "1. " / "12) " style enumeration and "- " / "* " bullets. The
// marker must be followed by whitespace so digit-led passwords survive.
std::string strip_markers(std::string token) {
  while (true) {
    std::string before = token;
    std::size_t i = 0;
    while (i < token.size() && i < 3 && is_ascii_digit(token[i])) ++i;
    if (i > 0 && i < token.size() && (token[i] == '.' || token[i] == ')') &&
        i + 1 < token.size() && (token[i + 1] == ' ' || token[i + 1] == '\t')) {
      token = trim(token.substr(i + 1));
    } else if (!token.empty() && (token[0] == '-' || token[0] == '*') && token.size() > 1 &&
               (token[1] == ' ' || token[1] == '\t')) {
      token = trim(token.substr(1));
    } else if (token.rfind("\xe2\x80\xa2", 0) == 0) {  // bullet point
      token = trim(token.substr(3));
    }
    if (token == before) return token;
  }
}

bool is_pair(char open, char close) {
  return (open == '[' && close == ']') || (open == '(' && close == ')') ||
         (open == '{' && close == '}') || (open == '"' && close == '"') ||
         (open == '\'' && close == '\'') || (open == '`' && close == '`');
}

std::string strip_wrapping(std::string token) {
  while (token.size() >= 2 && is_pair(token.front(), token.back()))
    token = trim(token.substr(1, token.size() - 2));
  while (!token.empty() &&
         (token.back() == ',' || token.back() == ';' || token.back() == ':'))
    token = trim(token.substr(0, token.size() - 1));
  return token;
}

bool has_whitespace(const std::string& s) {
  return s.find(' ') != std::string::npos || s.find('\t') != std::string::npos;
}

}  // namespace

std::vector<std::string> parse_generated_passwords(const std::string& reply) {
  std::vector<std::string> out;
  for (const auto& line : split_lines(reply)) {
    std::string token = strip_wrapping(strip_markers(trim(line)));
    if (token.size() < kMinCandidateLen || token.size() > kMaxCandidateLen) continue;
    if (has_whitespace(token)) continue;
    if (std::find(out.begin(), out.end(), token) == out.end()) out.push_back(std::move(token));
  }
  if (out.empty())
    throw ParseError("no password candidates found in reply: " + reply, 0);
  return out;
}

namespace {

struct LabelTier {
  Strength label;
  std::vector<std::string_view> phrases;
};

const std::array<LabelTier, 3>& label_tiers() {
  // Negated phrases first; "insecure" must outrank its "secure" substring.
  static const std::array<LabelTier, 3> kTiers = {{
      {Strength::Weak, {"not secure", "insecure", "weak"}},
      {Strength::Medium, {"medium"}},
      {Strength::Strong, {"secure", "strong"}},
  }};
  return kTiers;
}

// Searches one region (already lowercased) tier by tier; fills label and the
// original-casing excerpt. Returns false when no phrase occurs.
bool scan_region(const std::string& reply, std::size_t begin, std::size_t end, Strength& label,
                 std::string& raw_span) {
  std::string lowered = to_lower_ascii(std::string_view(reply).substr(begin, end - begin));
  for (const auto& tier : label_tiers()) {
    std::size_t best = std::string::npos;
    std::size_t best_len = 0;
    for (auto phrase : tier.phrases) {
      std::size_t pos = lowered.find(phrase);
      if (pos != std::string::npos && (best == std::string::npos || pos < best)) {
        best = pos;
        best_len = phrase.size();
      }
    }
    if (best != std::string::npos) {
      label = tier.label;
      raw_span = reply.substr(begin + best, best_len);
      return true;
    }
  }
  return false;
}

std::optional<double> scan_score(const std::string& reply, std::size_t begin, std::size_t end) {
  std::optional<double> last;
  std::size_t i = begin;
  while (i < end) {
    if (!is_ascii_digit(reply[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < end && is_ascii_digit(reply[j])) ++j;
    if (j < end && reply[j] == '.' && j + 1 < end && is_ascii_digit(reply[j + 1])) {
      ++j;
      while (j < end && is_ascii_digit(reply[j])) ++j;
    }
    double v = std::stod(reply.substr(i, j - i));
    if (v <= 100.0) last = v;
    i = j;
  }
  return last;
}

}  // namespace

std::vector<Verdict> parse_verdicts(const std::string& reply,
                                    const std::vector<std::string>& passwords) {
  if (passwords.empty()) throw UsageError("verdict parsing requires at least one password");
  std::vector<Verdict> out;
  out.reserve(passwords.size());
  for (const auto& pw : passwords) {
    Verdict v;
    v.password = pw;
    std::size_t pos = reply.rfind(pw);
    if (pos != std::string::npos) {
      std::size_t after = pos + pw.size();
      std::size_t line_end = reply.find('\n', after);
      if (line_end == std::string::npos) line_end = reply.size();
      std::size_t next_begin = line_end < reply.size() ? line_end + 1 : reply.size();
      std::size_t next_end = reply.find('\n', next_begin);
      if (next_end == std::string::npos) next_end = reply.size();

      if (scan_region(reply, after, line_end, v.label, v.raw_span)) {
        v.score = scan_score(reply, after, line_end);
      } else if (scan_region(reply, next_begin, next_end, v.label, v.raw_span)) {
        v.score = scan_score(reply, next_begin, next_end);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> ensemble_vote(const std::vector<std::vector<Verdict>>& verdict_sets) {
  if (verdict_sets.size() < 2) throw UsageError("ensemble voting requires at least two models");
  const auto& first = verdict_sets.front();
  for (const auto& set : verdict_sets) {
    if (set.size() != first.size())
      throw UsageError("ensemble verdict lists have different lengths");
    for (std::size_t i = 0; i < set.size(); ++i)
      if (set[i].password != first[i].password)
        throw UsageError("ensemble verdict lists disagree on password order");
  }

  std::vector<Verdict> out;
  out.reserve(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    std::array<int, 3> counts{};  // Weak, Medium, Strong
    for (const auto& set : verdict_sets)
      if (set[i].label != Strength::Unknown)
        ++counts[static_cast<std::size_t>(set[i].label)];

    int best = 0;
    std::size_t best_idx = 0;
    bool unique = false;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] > best) {
        best = counts[k];
        best_idx = k;
        unique = true;
      } else if (counts[k] == best && best > 0) {
        unique = false;
      }
    }

    Verdict v;
    v.password = first[i].password;
    v.label = (best > 0 && unique) ? static_cast<Strength>(best_idx) : Strength::Weak;
    std::string span = "votes:";
    bool any = false;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      span += std::string(any ? ", " : " ") +
              std::string(strength_label(static_cast<Strength>(k))) + "=" +
              std::to_string(counts[k]);
      any = true;
    }
    if (!any) span += " none";
    v.raw_span = std::move(span);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ctxpass
