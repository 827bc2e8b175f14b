#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ctxpass/tokens.hpp"

namespace ctxpass {

struct WordlistConfig {
  bool enable_case = true;
  bool enable_leet = true;
  std::vector<std::string> special_suffixes = {"!", "@", "#", "$", "*", "?"};
  std::size_t max_length = 24;
  int year_window = 0;
  bool concat_pairs = true;

  // Throws UsageError when out of contract: max_length < 4, a multi-character
  // or empty suffix, or year_window < 0.
  void validate() const;

  // Stable text form mixed into the fingerprint.
  std::string canonical() const;
};

// {word, Capitalized, UPPER} with duplicates collapsed, input order preserved.
// Throws UsageError on an empty word.
std::vector<std::string> case_variants(const std::string& word);

// {word, full-substitution leet form}; a word with no substitutable
// characters collapses to {word}.
std::vector<std::string> leet_variants(const std::string& word);

class Wordlist {
 public:
  static Wordlist generate(const TokenSet& tokens, const WordlistConfig& config);

  // Parses the serialized form. Throws DataError on a missing fingerprint
  // header, unsorted or duplicate entries, or empty entry lines.
  static Wordlist load(const std::string& file_text);

  const std::vector<std::string>& entries() const { return entries_; }
  const std::string& fingerprint() const { return fingerprint_; }

  // Exact membership, or case-folded membership.
  bool contains(std::string_view candidate) const;

  // "#fingerprint:<hex>" header plus one entry per line, LF endings.
  std::string serialize() const;

 private:
  Wordlist(std::vector<std::string> entries, std::string fingerprint);

  std::vector<std::string> entries_;  // sorted, unique
  std::string fingerprint_;
  std::unordered_set<std::string> folded_;
};

}  // namespace ctxpass
