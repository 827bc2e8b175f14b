#include "ctxpass/tokens.hpp"

#include <json.hpp>

#include <cstdio>

#include "ctxpass/text.hpp"

namespace ctxpass {

namespace {

constexpr std::size_t kMinAlphaLen = 3;
constexpr std::size_t kMinKeywordDigits = 2;

void add_alpha_from(const std::string& text, std::set<std::string>& alpha) {
  for (auto& run : alpha_runs(fold_to_ascii(text), kMinAlphaLen)) alpha.insert(std::move(run));
}

void add_alpha_opt(const std::optional<std::string>& text, std::set<std::string>& alpha) {
  if (text) add_alpha_from(*text, alpha);
}

std::string pad2(int v) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02d", v);
  return buf;
}

}  // namespace

TokenSet derive_tokens(const UserProfile& profile) {
  TokenSet t;
  add_alpha_from(profile.name, t.alpha);
  add_alpha_from(profile.surname, t.alpha);
  add_alpha_opt(profile.nickname, t.alpha);
  add_alpha_opt(profile.city, t.alpha);
  add_alpha_opt(profile.country, t.alpha);
  add_alpha_opt(profile.education, t.alpha);
  add_alpha_opt(profile.employer, t.alpha);
  add_alpha_opt(profile.partner_name, t.alpha);
  add_alpha_opt(profile.child_name, t.alpha);
  add_alpha_opt(profile.pet_name, t.alpha);
  for (const auto& k : profile.keywords) {
    add_alpha_from(k, t.alpha);
    for (auto& run : digit_runs(k, kMinKeywordDigits)) t.numeric.insert(std::move(run));
  }
  if (profile.birthdate) {
    const Date& d = *profile.birthdate;
    char year[8];
    std::snprintf(year, sizeof(year), "%04d", d.year);
    t.numeric.insert(year);
    t.numeric.insert(pad2(d.year % 100));
    t.numeric.insert(pad2(d.month) + pad2(d.day));
    t.numeric.insert(pad2(d.day) + pad2(d.month));
    t.numeric.insert(pad2(d.day));
    t.numeric.insert(pad2(d.month));
  }
  return t;
}

std::string serialize_tokens(const TokenSet& tokens) {
  nlohmann::ordered_json doc;
  doc["alpha"] = tokens.alpha;
  doc["numeric"] = tokens.numeric;
  return doc.dump();
}

}  // namespace ctxpass
