#include "ctxpass/wordlist.hpp"

#include <algorithm>
#include <set>

#include "ctxpass/errors.hpp"
#include "ctxpass/leet.hpp"
#include "ctxpass/text.hpp"

namespace ctxpass {

void WordlistConfig::validate() const {
  if (max_length < 4) throw UsageError("wordlist max_length must be at least 4");
  if (year_window < 0) throw UsageError("wordlist year_window must be non-negative");
  for (const auto& s : special_suffixes)
    if (s.size() != 1) throw UsageError("wordlist suffixes must be single characters");
}

std::string WordlistConfig::canonical() const {
  std::string out = "case=";
  out += enable_case ? '1' : '0';
  out += ";leet=";
  out += enable_leet ? '1' : '0';
  out += ";suffixes=";
  for (const auto& s : special_suffixes) out += s;
  out += ";max=" + std::to_string(max_length);
  out += ";yw=" + std::to_string(year_window);
  out += ";pairs=";
  out += concat_pairs ? '1' : '0';
  return out;
}

std::vector<std::string> case_variants(const std::string& word) {
  if (word.empty()) throw UsageError("case_variants requires a non-empty word");
  std::vector<std::string> out{word};
  for (auto&& v : {capitalize_ascii(word), to_upper_ascii(word)})
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

std::vector<std::string> leet_variants(const std::string& word) {
  std::vector<std::string> out{word};
  std::string subst = leet_transform(word);
  if (subst != word) out.push_back(std::move(subst));
  return out;
}

namespace {

// All case/leet spellings of one alpha token under the config.
std::vector<std::string> token_variants(const std::string& token, const WordlistConfig& cfg) {
  std::vector<std::string> cased =
      cfg.enable_case ? case_variants(token) : std::vector<std::string>{token};
  if (!cfg.enable_leet) return cased;
  std::vector<std::string> out;
  for (const auto& c : cased)
    for (auto& v : leet_variants(c))
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  return out;
}

bool looks_like_year(const std::string& s) {
  if (s.size() != 4) return false;
  int v = 0;
  for (char c : s) {
    if (!is_ascii_digit(c)) return false;
    v = v * 10 + (c - '0');
  }
  return v >= 1900 && v <= 2099;
}

}  // namespace

Wordlist::Wordlist(std::vector<std::string> entries, std::string fingerprint)
    : entries_(std::move(entries)), fingerprint_(std::move(fingerprint)) {
  for (const auto& e : entries_) folded_.insert(to_lower_ascii(e));
}

Wordlist Wordlist::generate(const TokenSet& tokens, const WordlistConfig& config) {
  config.validate();
  if (tokens.alpha.empty() && tokens.numeric.empty())
    throw UsageError("wordlist generation requires at least one token");

  std::set<std::string> numeric(tokens.numeric);
  if (config.year_window > 0) {
    for (const auto& n : tokens.numeric) {
      if (!looks_like_year(n)) continue;
      int year = std::stoi(n);
      for (int d = -config.year_window; d <= config.year_window; ++d) {
        int y = year + d;
        if (y >= 1900 && y <= 2099) numeric.insert(std::to_string(y));
      }
    }
  }

  // Variant lists keyed by base token so pair expansion can skip same-base
  // combinations.
  std::vector<std::vector<std::string>> variants;
  variants.reserve(tokens.alpha.size());
  for (const auto& t : tokens.alpha) variants.push_back(token_variants(t, config));

  std::set<std::string> unsuffixed;
  for (const auto& vs : variants)
    for (const auto& v : vs) {
      unsuffixed.insert(v);
      for (const auto& n : numeric) {
        unsuffixed.insert(v + n);
        unsuffixed.insert(n + v);
      }
    }
  if (config.concat_pairs) {
    for (std::size_t a = 0; a < variants.size(); ++a)
      for (std::size_t b = 0; b < variants.size(); ++b) {
        if (a == b) continue;
        for (const auto& va : variants[a])
          for (const auto& vb : variants[b]) unsuffixed.insert(va + vb);
      }
  }

  std::set<std::string> all(unsuffixed);
  for (const auto& base : unsuffixed)
    for (const auto& suffix : config.special_suffixes) all.insert(base + suffix);

  std::vector<std::string> entries;
  for (auto& e : all)
    if (e.size() <= config.max_length) entries.push_back(e);

  std::string digest =
      hex64(fnv1a64(serialize_tokens(tokens) + "|" + config.canonical()));
  return Wordlist(std::move(entries), std::move(digest));
}

Wordlist Wordlist::load(const std::string& file_text) {
  auto lines = split_lines(file_text);
  constexpr std::string_view kHeader = "#fingerprint:";
  if (lines.empty() || lines.front().rfind(kHeader, 0) != 0)
    throw DataError("wordlist file is missing the #fingerprint header");
  std::string digest = lines.front().substr(kHeader.size());
  if (digest.size() != 16 ||
      !std::all_of(digest.begin(), digest.end(),
                   [](char c) { return is_ascii_digit(c) || (c >= 'a' && c <= 'f'); }))
    throw DataError("wordlist fingerprint is not a 16-digit hex value");

  std::vector<std::string> entries(lines.begin() + 1, lines.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].empty())
      throw DataError("wordlist has an empty entry at line " + std::to_string(i + 2));
    if (i > 0 && !(entries[i - 1] < entries[i]))
      throw DataError("wordlist entries must be sorted and unique (line " +
                      std::to_string(i + 2) + ")");
  }
  return Wordlist(std::move(entries), std::move(digest));
}

bool Wordlist::contains(std::string_view candidate) const {
  std::string c(candidate);
  if (std::binary_search(entries_.begin(), entries_.end(), c)) return true;
  return folded_.count(to_lower_ascii(c)) != 0;
}

std::string Wordlist::serialize() const {
  std::string out = "#fingerprint:" + fingerprint_ + "\n";
  for (const auto& e : entries_) {
    out += e;
    out += '\n';
  }
  return out;
}

}  // namespace ctxpass
