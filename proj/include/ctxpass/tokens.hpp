#pragma once

#include <set>
#include <string>

#include "ctxpass/profile.hpp"

namespace ctxpass {

// Personal-context tokens extracted from a profile. Both sets hold the
// canonical forms that every downstream matcher and generator relies on:
// alpha entries are lowercase a-z runs, numeric entries are digit strings.
struct TokenSet {
  std::set<std::string> alpha;
  std::set<std::string> numeric;

  bool operator==(const TokenSet&) const = default;
};

// alpha: accent-folded lowercase runs of length >= 3 from every text field
// and keyword. numeric: birthdate forms YYYY, YY, MMDD, DDMM, DD, MM plus
// digit runs of length >= 2 inside keywords.
TokenSet derive_tokens(const UserProfile& profile);

// Stable JSON rendering used for fingerprints: {"alpha":[...],"numeric":[...]}
// with both arrays sorted.
std::string serialize_tokens(const TokenSet& tokens);

}  // namespace ctxpass
