#include "ctxpass/common_list.hpp"

#include "ctxpass/errors.hpp"
#include "ctxpass/text.hpp"

namespace ctxpass {

namespace {

constexpr const char* kBuiltinData =
#include "common_list_data.inc"
    ;

}  // namespace

const CommonList& CommonList::builtin() {
  static const CommonList instance = CommonList::from_text(kBuiltinData);
  return instance;
}

CommonList CommonList::from_text(const std::string& text) {
  CommonList list;
  for (const auto& line : split_lines(text)) {
    std::string entry = to_lower_ascii(trim(line));
    if (!entry.empty()) list.entries_.insert(std::move(entry));
  }
  if (list.entries_.empty()) throw DataError("common password list has no entries");
  return list;
}

bool CommonList::contains(std::string_view password) const {
  return entries_.count(to_lower_ascii(password)) != 0;
}

}  // namespace ctxpass
