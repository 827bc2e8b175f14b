#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>

namespace ctxpass {

// Context-free weak password oracle. Membership is case-folded; entries are
// stored lowercase.
class CommonList {
 public:
  // The compiled-in top-1000 list.
  static const CommonList& builtin();

  // One entry per line; blank lines skipped, entries lowercased.
  // Throws DataError when no entries remain.
  static CommonList from_text(const std::string& text);

  bool contains(std::string_view password) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

}  // namespace ctxpass
