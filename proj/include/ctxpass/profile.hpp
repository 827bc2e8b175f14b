#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ctxpass {

// Calendar date. Month and day are validated on parse, including leap years.
struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  // Accepts "MM/DD/YYYY" or "YYYY-MM-DD"; anything else throws DateError.
  static Date parse(const std::string& raw);

  std::string iso() const;  // YYYY-MM-DD
  std::string us() const;   // MM/DD/YYYY

  bool operator==(const Date&) const = default;
};

struct UserProfile {
  std::string name;
  std::string surname;
  std::optional<std::string> nickname;
  std::optional<Date> birthdate;
  std::optional<std::string> city;
  std::optional<std::string> country;
  std::optional<std::string> education;
  std::optional<std::string> employer;
  std::optional<std::string> partner_name;
  std::optional<std::string> child_name;
  std::optional<std::string> pet_name;
  std::vector<std::string> keywords;
  std::string source;
};

struct MergeConflict {
  std::string field;
  std::string losing_value;  // dates rendered as ISO
  std::string losing_source;

  bool operator==(const MergeConflict&) const = default;
};

struct MergedProfile {
  UserProfile base;
  std::vector<std::string> sources;
  std::vector<MergeConflict> conflicts;
};

// Parses a single profile document. Throws ParseError on malformed JSON,
// SchemaError on missing or empty name/surname, DateError on a bad birthdate.
// Unknown keys are ignored; keywords are trimmed, empties dropped, and
// case-fold deduplicated keeping the first spelling.
UserProfile parse_profile(const std::string& json_text);

// Earliest-listed profile wins each scalar; later differing values land in
// conflicts. Keywords become the case-folded union in first-seen order,
// lowercased. Throws UsageError on an empty input list.
MergedProfile merge_profiles(const std::vector<UserProfile>& profiles);

// Flattens a merged profile back to a UserProfile whose source joins the
// merged sources with "+".
UserProfile as_user_profile(const MergedProfile& merged);

std::string serialize_profile(const UserProfile& p);
std::string serialize_merged(const MergedProfile& m);

// Reads either document form: an object with a "sources" key parses as a
// merged profile, anything else as a single profile wrapped via a one-element
// merge.
MergedProfile load_profile_document(const std::string& json_text);

}  // namespace ctxpass
