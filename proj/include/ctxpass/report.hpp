#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ctxpass/metrics.hpp"

namespace ctxpass {

// Rows and columns indexed by Strength ordinal (Weak, Medium, Strong).
struct ConfusionMatrix {
  std::array<std::array<int, 3>, 3> counts{};  // [gold][predicted]

  int total() const;
  bool involves_medium() const;
};

// Unknown predictions count as Weak; Unknown gold labels are rejected.
// Throws UsageError on empty or mismatched inputs.
ConfusionMatrix confusion(const std::vector<Strength>& predicted,
                          const std::vector<Strength>& gold);

// A metric value of 0 caused by an empty denominator carries the flag so
// reports can mark it instead of silently folding it into real zeros.
struct MetricValue {
  double value = 0.0;
  bool zero_denominator = false;
};

struct ClassReport {
  MetricValue precision;
  MetricValue recall;
  MetricValue f1;
  int support = 0;    // gold occurrences
  int predicted = 0;  // predicted occurrences
};

struct ClassificationReport {
  int levels = 2;  // 2 = binary (Strong positive), 3 = macro one-vs-rest
  double accuracy = 0.0;
  std::array<ClassReport, 3> per_class;  // Weak, Medium, Strong
  // Binary: Strong-positive headline values. Ternary: unweighted macro means
  // over classes that occur in gold or predictions.
  MetricValue precision;
  MetricValue recall;
  MetricValue f1;
  int total = 0;
};

// Strong is the positive class. Throws UsageError when the matrix involves
// Medium.
ClassificationReport binary_metrics(const ConfusionMatrix& cm);

// One-vs-rest per class, macro-averaged over classes with any gold or
// predicted occurrences.
ClassificationReport macro_metrics(const ConfusionMatrix& cm);

enum class TableFormat { Paper, Csv, Json };

TableFormat table_format_from_name(const std::string& name);

// Paper format: "Password; Force; Leet; Coverage; CUPP; CPS" header, "; "
// separator, CPS at 2 decimals; labels ignored; empty rows rejected.
// CSV: password,force,leet,coverage,cupp,cps[,label], RFC 4180 quoting, CPS
// at 4 decimals. JSON: array of records, cps rounded to 4 decimals.
// labels, when given, must align with rows.
std::string render_results_table(const std::vector<StrengthScores>& rows, TableFormat format,
                                 const std::vector<Strength>* labels = nullptr);

struct ResultsTable {
  std::vector<StrengthScores> rows;
  std::vector<Strength> labels;  // parallel to rows when has_labels
  bool has_labels = false;
};

// Parsers for the csv/json renderings above. Throw DataError on malformed
// input; the csv parser requires the header line.
ResultsTable parse_results_csv(const std::string& text);
ResultsTable parse_results_json(const std::string& text);

// Two-column password,label file; the header line is optional.
std::vector<std::pair<std::string, Strength>> parse_gold_csv(const std::string& text);

// Human-readable report: accuracy, per-class and headline metrics at four
// decimals, with zero-denominator values marked by a trailing asterisk.
std::string render_report_text(const ClassificationReport& report);

// RFC 4180 quoting for one CSV field.
std::string csv_quote(const std::string& field);

}  // namespace ctxpass
