#include "ctxpass/prompts.hpp"

#include "ctxpass/errors.hpp"
#include "ctxpass/report.hpp"

namespace ctxpass {

namespace {

void require_identity(const UserProfile& p) {
  if (p.name.empty()) throw RenderError("prompt requires a profile name");
  if (p.surname.empty()) throw RenderError("prompt requires a profile surname");
}

// "[Name: George], [Surname: Smith], [City: ...], [Date: ...]" with optional
// trailing "[Education: ...]"; absent groups disappear.
std::string bracket_groups(const UserProfile& p, bool with_education) {
  std::string out = "[Name: " + p.name + "], [Surname: " + p.surname + "]";
  if (p.city) out += ", [City: " + *p.city + "]";
  if (p.birthdate) out += ", [Date: " + p.birthdate->us() + "]";
  if (with_education && p.education) out += ", [Education: " + *p.education + "]";
  return out;
}

// Single-bracket form: "[Name: George, Surname: Smith, City: ..., Date: ...]".
std::string inline_group(const UserProfile& p) {
  std::string out = "[Name: " + p.name + ", Surname: " + p.surname;
  if (p.city) out += ", City: " + *p.city;
  if (p.birthdate) out += ", Date: " + p.birthdate->us();
  out += "]";
  return out;
}

std::string bracket_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += "[" + items[i] + "]";
  }
  return out;
}

constexpr const char* kEvaluationInstruction =
    "For each line containing a password that I could use for a social network account, give "
    "me an answer for each of them and write whether the password can be considered secure or "
    "not, giving secure or not secure. Assess the password's strength using the information "
    "supplied by the user, considering factors like its length and ability to resist guessing "
    "techniques.";

constexpr const char* kSodaInstruction =
    "Please assess the security of each password listed. Using the user information provided, "
    "analyze the password strength based on the following methods: Leet Coverage, Force, CUPP, "
    "and Cumulative Password Strength. Upon evaluation, please provide a response of Strong if "
    "the password is deemed sufficiently strong and effectively safeguards the user's "
    "information based on the provided data, or Weak if the password could potentially be "
    "compromised or guessed based on the available details.";

constexpr const char* kMetricsExplanation =
    "The following metrics describe the strength of a password with respect to a specific "
    "user's personal information.\n"
    "Force measures syntactic strength on a 0 to 100 scale: the character pool is the sum of "
    "the sizes of the character classes present in the password (26 lowercase letters, 26 "
    "uppercase letters, 10 digits, 33 symbols), the entropy is the password length multiplied "
    "by the base-2 logarithm of the pool, and the score is 100 times the entropy divided by "
    "128, capped at 100.\n"
    "Coverage measures, on a 0 to 100 scale, how much of the password remains after removing "
    "personal content: tokens derived from the user's profile are matched case-insensitively "
    "against the password, a token matches as a whole or as a prefix of at least 4 characters, "
    "matches cannot overlap, and the score is 100 times the fraction of characters left "
    "uncovered. A low Coverage means the password is mostly personal data.\n"
    "Leet is Coverage computed with leetspeak awareness: password characters may stand for "
    "letters through common substitutions (for example 4 or @ for a, 3 for e, 1 for i or l, 0 "
    "for o, 5 or $ for s, 7 for t), so obfuscated personal content is still found. Leet is "
    "never higher than Coverage.\n"
    "CUPP is a 0 or 1 flag: 1 when the password appears in the candidate wordlist generated "
    "from the user's profile or in a list of commonly used passwords, 0 otherwise.\n"
    "Cumulative Password Strength (CPS) combines the four values into a single score between 0 "
    "and 1: CPS = (Force/100) x (0.35 + 0.45 x Leet/100 + 0.20 x Coverage/100) x (1 - 0.3 x "
    "CUPP). Higher is stronger; a CPS greater than or equal to 0.55 counts as Strong in "
    "two-level classification, and the band from 0.36 to 0.60 inclusive counts as Medium in "
    "three-level classification.";

constexpr const char* kMetaPlain =
    "You are helping to build a password evaluation prompt. Write a prompt that another "
    "language model could follow to evaluate a list of passwords for a specific user. The "
    "prompt must present the user's personal information as bracketed groups, for example "
    "[Name: ...], [Surname: ...], [City: ...], [Date: ...], and then ask the model to judge, "
    "for each password in a bracketed list, whether it can be considered secure or not secure "
    "for that user, taking into account the personal information provided, the password's "
    "length, and its ability to resist guessing techniques. The generated prompt must request "
    "exactly one verdict per password.";

constexpr const char* kMetaWithMetrics =
    "You are helping to build a password evaluation prompt. Write a prompt that another "
    "language model could follow to evaluate a list of passwords for a specific user, using "
    "precomputed strength metrics. The prompt must present the user's personal information as "
    "bracketed groups, include a results table whose header is Password; Force; Leet; "
    "Coverage; CUPP; CPS, and instruct the model to give a verdict of Strong or Weak for each "
    "password based on the Force, Leet, Coverage, and CUPP scores, the Cumulative Password "
    "Strength (CPS) value, and the user information. The generated prompt must request exactly "
    "one verdict per password.";

}  // namespace

std::string render_generation_prompt(const UserProfile& profile) {
  require_identity(profile);
  return "On the basis of the following personal information: " +
         bracket_groups(profile, false) +
         ".\nCould you generate a set of passwords that do not have to directly contain "
         "personal data, but must be easy for the user to memorize?";
}

std::string render_evaluation_prompt(const UserProfile& profile,
                                     const std::vector<std::string>& passwords) {
  require_identity(profile);
  if (passwords.empty())
    throw UsageError("evaluation prompt requires at least one password");
  return "User information: " + bracket_groups(profile, true) + ".\n" + kEvaluationInstruction +
         "\nPasswords: " + bracket_list(passwords);
}

std::string render_metrics_explanation_prompt() { return kMetricsExplanation; }

std::string render_soda_eval_prompt(const UserProfile& profile,
                                    const std::vector<StrengthScores>& scores) {
  require_identity(profile);
  if (scores.empty()) throw UsageError("metric-assisted prompt requires at least one score row");
  std::string table = render_results_table(scores, TableFormat::Paper);
  return "User information: " + inline_group(profile) + "\nPasswords Evaluation Results:\n" +
         table + kSodaInstruction;
}

std::string render_meta_prompt(MetaPromptKind kind) {
  return kind == MetaPromptKind::Plain ? kMetaPlain : kMetaWithMetrics;
}

}  // namespace ctxpass
