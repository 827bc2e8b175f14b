#pragma once

#include <string>
#include <string_view>

namespace ctxpass {

// Generation direction: lowercase letters only, one canonical digit per
// letter. Uppercase and everything else pass through untouched.
std::string leet_transform(std::string_view word);

// Matching direction: the set of lowercase letters a glyph may stand for.
// Returns an empty view for glyphs with no leet reading. Deliberately wider
// than the generation map so third-party spellings still match.
std::string_view leet_letters_for(char glyph);

// True when a password character can represent a token character: exact
// match after ASCII case-folding, or the glyph's leet reading covers it.
// token_char is expected in canonical lowercase/digit form.
bool leet_char_matches(char password_char, char token_char);

// Case-insensitive comparison only, no glyph readings.
bool exact_char_matches(char password_char, char token_char);

}  // namespace ctxpass
