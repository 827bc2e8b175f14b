#include "ctxpass/profile.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <unordered_set>

#include "ctxpass/errors.hpp"
#include "ctxpass/text.hpp"

namespace ctxpass {

using json = nlohmann::ordered_json;

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static const std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[static_cast<std::size_t>(m - 1)];
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return is_ascii_digit(c); });
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

Date make_date(std::string_view ys, std::string_view ms, std::string_view ds,
               const std::string& raw) {
  if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds))
    throw DateError("invalid date: " + raw);
  Date d{to_int(ys), to_int(ms), to_int(ds)};
  if (d.year < 1 || d.year > 9999 || d.month < 1 || d.month > 12 || d.day < 1 ||
      d.day > days_in_month(d.year, d.month))
    throw DateError("invalid date: " + raw);
  return d;
}

}  // namespace

Date Date::parse(const std::string& raw) {
  if (raw.size() == 10 && raw[2] == '/' && raw[5] == '/')
    return make_date(raw.substr(6, 4), raw.substr(0, 2), raw.substr(3, 2), raw);
  if (raw.size() == 10 && raw[4] == '-' && raw[7] == '-')
    return make_date(raw.substr(0, 4), raw.substr(5, 2), raw.substr(8, 2), raw);
  throw DateError("invalid date: " + raw);
}

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::string Date::us() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%02d/%02d/%04d", month, day, year);
  return buf;
}

namespace {

std::optional<std::string> opt_text(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw SchemaError(key, std::string(key) + " must be a string");
  std::string v = trim(it->get<std::string>());
  if (v.empty()) return std::nullopt;
  return v;
}

std::vector<std::string> normalize_keywords(std::vector<std::string> raw) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (auto& k : raw) {
    std::string t = trim(k);
    if (t.empty()) continue;
    if (seen.insert(to_lower_ascii(t)).second) out.push_back(std::move(t));
  }
  return out;
}

UserProfile profile_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("document", "profile must be a JSON object");
  UserProfile p;
  auto required = [&](const char* key) {
    auto v = opt_text(doc, key);
    if (!v) throw SchemaError(key, std::string("missing or empty required field: ") + key);
    return *v;
  };
  p.name = required("name");
  p.surname = required("surname");
  p.nickname = opt_text(doc, "nickname");
  if (auto raw = opt_text(doc, "birthdate")) p.birthdate = Date::parse(*raw);
  p.city = opt_text(doc, "city");
  p.country = opt_text(doc, "country");
  p.education = opt_text(doc, "education");
  p.employer = opt_text(doc, "employer");
  p.partner_name = opt_text(doc, "partner_name");
  p.child_name = opt_text(doc, "child_name");
  p.pet_name = opt_text(doc, "pet_name");
  if (auto it = doc.find("keywords"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw SchemaError("keywords", "keywords must be an array of strings");
    std::vector<std::string> raw;
    for (const auto& item : *it) {
      if (!item.is_string())
        throw SchemaError("keywords", "keywords must be an array of strings");
      raw.push_back(item.get<std::string>());
    }
    p.keywords = normalize_keywords(std::move(raw));
  }
  if (auto v = opt_text(doc, "source")) p.source = *v;
  return p;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

}  // namespace

UserProfile parse_profile(const std::string& json_text) {
  return profile_from_json(parse_json(json_text));
}

namespace {

// Scalar merge walk shared by merge_profiles. For each optional field the
// earliest non-empty value wins; later differing values become conflicts.
template <typename T>
void merge_field(const char* field, std::optional<T> UserProfile::*member,
                 const std::function<std::string(const T&)>& render,
                 const std::vector<UserProfile>& profiles, UserProfile& out,
                 std::vector<MergeConflict>& conflicts) {
  for (const auto& p : profiles) {
    const auto& v = p.*member;
    if (!v) continue;
    if (!(out.*member)) {
      out.*member = v;
    } else if (*(out.*member) != *v) {
      conflicts.push_back({field, render(*v), p.source});
    }
  }
}

}  // namespace

MergedProfile merge_profiles(const std::vector<UserProfile>& profiles) {
  if (profiles.empty()) throw UsageError("merge requires at least one profile");
  MergedProfile m;
  m.base.name = profiles.front().name;
  m.base.surname = profiles.front().surname;
  for (const auto& p : profiles) {
    if (p.name != m.base.name) m.conflicts.push_back({"name", p.name, p.source});
    if (p.surname != m.base.surname) m.conflicts.push_back({"surname", p.surname, p.source});
  }
  std::function<std::string(const std::string&)> id = [](const std::string& s) { return s; };
  std::function<std::string(const Date&)> iso = [](const Date& d) { return d.iso(); };
  merge_field<std::string>("nickname", &UserProfile::nickname, id, profiles, m.base, m.conflicts);
  merge_field<Date>("birthdate", &UserProfile::birthdate, iso, profiles, m.base, m.conflicts);
  merge_field<std::string>("city", &UserProfile::city, id, profiles, m.base, m.conflicts);
  merge_field<std::string>("country", &UserProfile::country, id, profiles, m.base, m.conflicts);
  merge_field<std::string>("education", &UserProfile::education, id, profiles, m.base,
                           m.conflicts);
  merge_field<std::string>("employer", &UserProfile::employer, id, profiles, m.base, m.conflicts);
  merge_field<std::string>("partner_name", &UserProfile::partner_name, id, profiles, m.base,
                           m.conflicts);
  merge_field<std::string>("child_name", &UserProfile::child_name, id, profiles, m.base,
                           m.conflicts);
  merge_field<std::string>("pet_name", &UserProfile::pet_name, id, profiles, m.base, m.conflicts);

  std::unordered_set<std::string> seen;
  for (const auto& p : profiles) {
    for (const auto& k : p.keywords) {
      std::string folded = to_lower_ascii(k);
      if (seen.insert(folded).second) m.base.keywords.push_back(folded);
    }
    m.sources.push_back(p.source);
  }
  return m;
}

UserProfile as_user_profile(const MergedProfile& merged) {
  UserProfile p = merged.base;
  std::string joined;
  for (std::size_t i = 0; i < merged.sources.size(); ++i) {
    if (i) joined += '+';
    joined += merged.sources[i];
  }
  p.source = joined;
  return p;
}

namespace {

json profile_to_json(const UserProfile& p) {
  json doc = json::object();
  doc["name"] = p.name;
  doc["surname"] = p.surname;
  if (p.nickname) doc["nickname"] = *p.nickname;
  if (p.birthdate) doc["birthdate"] = p.birthdate->iso();
  if (p.city) doc["city"] = *p.city;
  if (p.country) doc["country"] = *p.country;
  if (p.education) doc["education"] = *p.education;
  if (p.employer) doc["employer"] = *p.employer;
  if (p.partner_name) doc["partner_name"] = *p.partner_name;
  if (p.child_name) doc["child_name"] = *p.child_name;
  if (p.pet_name) doc["pet_name"] = *p.pet_name;
  doc["keywords"] = p.keywords;
  if (!p.source.empty()) doc["source"] = p.source;
  return doc;
}

}  // namespace

std::string serialize_profile(const UserProfile& p) {
  return profile_to_json(p).dump(2) + "\n";
}

std::string serialize_merged(const MergedProfile& m) {
  json doc = profile_to_json(m.base);
  doc.erase("source");
  doc["sources"] = m.sources;
  json conflicts = json::array();
  for (const auto& c : m.conflicts)
    conflicts.push_back({{"field", c.field}, {"value", c.losing_value}, {"source", c.losing_source}});
  doc["conflicts"] = conflicts;
  return doc.dump(2) + "\n";
}

MergedProfile load_profile_document(const std::string& json_text) {
  json doc = parse_json(json_text);
  if (!doc.is_object()) throw SchemaError("document", "profile must be a JSON object");
  if (!doc.contains("sources")) return merge_profiles({profile_from_json(doc)});

  json single = doc;
  single.erase("sources");
  single.erase("conflicts");
  single["source"] = "";
  MergedProfile m;
  m.base = profile_from_json(single);
  m.base.source.clear();
  auto& sources = doc["sources"];
  if (!sources.is_array()) throw SchemaError("sources", "sources must be an array of strings");
  for (const auto& s : sources) {
    if (!s.is_string()) throw SchemaError("sources", "sources must be an array of strings");
    m.sources.push_back(s.get<std::string>());
  }
  if (auto it = doc.find("conflicts"); it != doc.end() && it->is_array()) {
    for (const auto& c : *it) {
      if (!c.is_object()) throw SchemaError("conflicts", "conflicts entries must be objects");
      m.conflicts.push_back({c.value("field", ""), c.value("value", ""), c.value("source", "")});
    }
  }
  return m;
}

}  // namespace ctxpass
