#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <unistd.h>

#include "ctxpass/profile.hpp"
#include "ctxpass/text.hpp"

#ifndef CTXPASS_FIXTURES_DIR
#error "CTXPASS_FIXTURES_DIR must point at the fixture tree"
#endif

namespace testutil {

inline std::string fixture_path(const std::string& rel) {
  return std::string(CTXPASS_FIXTURES_DIR) + "/" + rel;
}

inline std::string fixture(const std::string& rel) {
  return ctxpass::read_file(fixture_path(rel));
}

// Unique writable directory, removed on destruction.
struct TempDir {
  std::filesystem::path path;

  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    for (int attempt = 0;; ++attempt) {
      auto candidate = base / ("ctxpass_test_" + std::to_string(::getpid()) + "_" +
                               std::to_string(attempt));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path = candidate;
        break;
      }
    }
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }

  std::string file(const std::string& name) const { return (path / name).string(); }
};

// The merged two-platform sample profile every suite shares.
inline ctxpass::UserProfile george() {
  return ctxpass::as_user_profile(
      ctxpass::load_profile_document(fixture("profiles/george_merged.json")));
}

inline std::vector<std::string> sample_passwords() {
  return {"OrangeSystems23", "MaleSystems*?",  "GeorgeCali1023",
          "C@liforn1Sm1th49", "Syst3msSm1th@", "0r@nge@n3@"};
}

// Hand-derived expected scores for sample_passwords against the merged
// profile. cps values are exact formula results, not rounded.
struct ExpectedRow {
  const char* password;
  int force;
  int leet;
  int coverage;
  int cupp;
  double cps;
};

inline const std::vector<ExpectedRow>& expected_rows() {
  static const std::vector<ExpectedRow> rows = {
      {"OrangeSystems23", 70, 47, 47, 0, 0.45885},
      {"MaleSystems*?", 65, 100, 100, 0, 0.65},
      {"GeorgeCali1023", 65, 0, 0, 0, 0.2275},
      {"C@liforn1Sm1th49", 82, 13, 100, 0, 0.49897},
      {"Syst3msSm1th@", 67, 62, 100, 0, 0.55543},
      {"0r@nge@n3@", 48, 40, 100, 0, 0.3504},
  };
  return rows;
}

}  // namespace testutil
