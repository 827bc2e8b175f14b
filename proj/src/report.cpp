#include "ctxpass/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ctxpass/errors.hpp"
#include "ctxpass/text.hpp"

namespace ctxpass {

namespace {

std::size_t idx(Strength s) { return static_cast<std::size_t>(s); }

Strength normalize_pred(Strength s) { return s == Strength::Unknown ? Strength::Weak : s; }

const std::array<Strength, 3> kClasses = {Strength::Weak, Strength::Medium, Strength::Strong};

}  // namespace

int ConfusionMatrix::total() const {
  int n = 0;
  for (const auto& row : counts)
    for (int c : row) n += c;
  return n;
}

bool ConfusionMatrix::involves_medium() const {
  std::size_t m = idx(Strength::Medium);
  for (std::size_t k = 0; k < 3; ++k)
    if (counts[m][k] != 0 || counts[k][m] != 0) return true;
  return false;
}

ConfusionMatrix confusion(const std::vector<Strength>& predicted,
                          const std::vector<Strength>& gold) {
  if (predicted.empty()) throw UsageError("confusion requires at least one item");
  if (predicted.size() != gold.size())
    throw UsageError("predicted and gold label counts differ");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (gold[i] == Strength::Unknown)
      throw UsageError("gold labels must be Weak, Medium, or Strong");
    ++cm.counts[idx(gold[i])][idx(normalize_pred(predicted[i]))];
  }
  return cm;
}

namespace {

MetricValue ratio(int numerator, int denominator) {
  if (denominator == 0) return {0.0, true};
  return {static_cast<double>(numerator) / denominator, false};
}

MetricValue f1_of(const MetricValue& p, const MetricValue& r) {
  double sum = p.value + r.value;
  if (sum == 0.0) return {0.0, true};
  return {2.0 * p.value * r.value / sum, false};
}

ClassReport class_report(const ConfusionMatrix& cm, Strength cls) {
  std::size_t c = idx(cls);
  int tp = cm.counts[c][c];
  int support = 0, predicted = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    support += cm.counts[c][k];
    predicted += cm.counts[k][c];
  }
  ClassReport r;
  r.support = support;
  r.predicted = predicted;
  r.precision = ratio(tp, predicted);
  r.recall = ratio(tp, support);
  r.f1 = f1_of(r.precision, r.recall);
  return r;
}

}  // namespace

ClassificationReport binary_metrics(const ConfusionMatrix& cm) {
  if (cm.involves_medium())
    throw UsageError("binary metrics require a two-class confusion matrix");
  int n = cm.total();
  if (n == 0) throw UsageError("empty confusion matrix");
  ClassificationReport rep;
  rep.levels = 2;
  rep.total = n;
  for (Strength cls : kClasses) rep.per_class[idx(cls)] = class_report(cm, cls);
  std::size_t s = idx(Strength::Strong), w = idx(Strength::Weak);
  rep.accuracy = static_cast<double>(cm.counts[s][s] + cm.counts[w][w]) / n;
  rep.precision = rep.per_class[s].precision;
  rep.recall = rep.per_class[s].recall;
  rep.f1 = rep.per_class[s].f1;
  return rep;
}

ClassificationReport macro_metrics(const ConfusionMatrix& cm) {
  int n = cm.total();
  if (n == 0) throw UsageError("empty confusion matrix");
  ClassificationReport rep;
  rep.levels = 3;
  rep.total = n;
  int diagonal = 0;
  for (Strength cls : kClasses) {
    rep.per_class[idx(cls)] = class_report(cm, cls);
    diagonal += cm.counts[idx(cls)][idx(cls)];
  }
  rep.accuracy = static_cast<double>(diagonal) / n;

  // A class joins the macro average when it occurs at all; classes absent
  // from both gold and predictions carry no information.
  int participating = 0;
  double p_sum = 0, r_sum = 0, f_sum = 0;
  bool p_flag = false, r_flag = false, f_flag = false;
  for (Strength cls : kClasses) {
    const ClassReport& c = rep.per_class[idx(cls)];
    if (c.support == 0 && c.predicted == 0) continue;
    ++participating;
    p_sum += c.precision.value;
    r_sum += c.recall.value;
    f_sum += c.f1.value;
    p_flag |= c.precision.zero_denominator;
    r_flag |= c.recall.zero_denominator;
    f_flag |= c.f1.zero_denominator;
  }
  rep.precision = {p_sum / participating, p_flag};
  rep.recall = {r_sum / participating, r_flag};
  rep.f1 = {f_sum / participating, f_flag};
  return rep;
}

TableFormat table_format_from_name(const std::string& name) {
  if (name == "paper") return TableFormat::Paper;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw UsageError("unknown format: " + name + " (expected paper, csv, or json)");
}

namespace {

constexpr const char* kPaperHeader = "Password; Force; Leet; Coverage; CUPP; CPS";

std::string format_cps(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

double round4(double v) { return std::round(v * 10000.0) / 10000.0; }

}  // namespace

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_results_table(const std::vector<StrengthScores>& rows, TableFormat format,
                                 const std::vector<Strength>* labels) {
  if (labels && labels->size() != rows.size())
    throw UsageError("label count does not match row count");
  switch (format) {
    case TableFormat::Paper: {
      if (rows.empty()) throw UsageError("paper-format table requires at least one row");
      std::string out = std::string(kPaperHeader) + "\n";
      for (const auto& r : rows) {
        out += r.password + "; " + std::to_string(r.force) + "; " + std::to_string(r.leet) +
               "; " + std::to_string(r.coverage) + "; " + std::to_string(r.cupp) + "; " +
               format_cps(r.cps, 2) + "\n";
      }
      return out;
    }
    case TableFormat::Csv: {
      std::string out = "password,force,leet,coverage,cupp,cps";
      if (labels) out += ",label";
      out += '\n';
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out += csv_quote(r.password) + "," + std::to_string(r.force) + "," +
               std::to_string(r.leet) + "," + std::to_string(r.coverage) + "," +
               std::to_string(r.cupp) + "," + format_cps(r.cps, 4);
        if (labels) out += "," + std::string(strength_label((*labels)[i]));
        out += '\n';
      }
      return out;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        nlohmann::ordered_json rec;
        rec["password"] = r.password;
        rec["force"] = r.force;
        rec["leet"] = r.leet;
        rec["coverage"] = r.coverage;
        rec["cupp"] = r.cupp;
        rec["cps"] = round4(r.cps);
        if (labels) rec["label"] = std::string(strength_label((*labels)[i]));
        doc.push_back(std::move(rec));
      }
      return doc.dump(2) + "\n";
    }
  }
  throw UsageError("unknown table format");
}

namespace {

// RFC 4180 reader. Returns records of fields; empty trailing line ignored.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_open = false;
  std::size_t i = 0;
  auto end_field = [&]() {
    record.push_back(std::move(field));
    field.clear();
    field_open = false;
  };
  auto end_record = [&]() {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };
  while (i < text.size()) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
      continue;
    }
    if (c == '"' && field.empty() && !field_open) {
      quoted = true;
      field_open = true;
      ++i;
    } else if (c == ',') {
      end_field();
      ++i;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
      end_record();
    } else {
      field += c;
      field_open = true;
      ++i;
    }
  }
  if (quoted) throw DataError("unterminated quoted field in CSV input");
  if (field_open || !record.empty()) end_record();
  return records;
}

int parse_score_field(const std::string& raw, const char* what, int lo, int hi) {
  if (raw.empty() ||
      !std::all_of(raw.begin(), raw.end(), [](char c) { return is_ascii_digit(c); }))
    throw DataError(std::string("invalid ") + what + " value: " + raw);
  int v = std::stoi(raw);
  if (v < lo || v > hi) throw DataError(std::string(what) + " out of range: " + raw);
  return v;
}

double parse_cps_field(const std::string& raw) {
  try {
    std::size_t pos = 0;
    double v = std::stod(raw, &pos);
    if (pos != raw.size() || !(v >= 0.0 && v <= 1.0)) throw DataError("");
    return v;
  } catch (...) {
    throw DataError("invalid cps value: " + raw);
  }
}

}  // namespace

ResultsTable parse_results_csv(const std::string& text) {
  auto records = parse_csv(text);
  if (records.empty()) throw DataError("results CSV is empty");
  const std::vector<std::string> base = {"password", "force", "leet",
                                         "coverage", "cupp",  "cps"};
  std::vector<std::string> with_label = base;
  with_label.push_back("label");
  bool has_labels;
  if (records.front() == with_label) has_labels = true;
  else if (records.front() == base) has_labels = false;
  else throw DataError("results CSV header must be password,force,leet,coverage,cupp,cps[,label]");

  ResultsTable table;
  table.has_labels = has_labels;
  std::size_t want = has_labels ? 7 : 6;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != want)
      throw DataError("results CSV row " + std::to_string(r + 1) + " has " +
                      std::to_string(rec.size()) + " fields, expected " + std::to_string(want));
    StrengthScores s;
    s.password = rec[0];
    s.force = parse_score_field(rec[1], "force", 0, 100);
    s.leet = parse_score_field(rec[2], "leet", 0, 100);
    s.coverage = parse_score_field(rec[3], "coverage", 0, 100);
    s.cupp = parse_score_field(rec[4], "cupp", 0, 1);
    s.cps = parse_cps_field(rec[5]);
    if (has_labels) table.labels.push_back(strength_from_label(rec[6]));
    table.rows.push_back(std::move(s));
  }
  return table;
}

ResultsTable parse_results_json(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_array()) throw DataError("results JSON must be an array of records");
  ResultsTable table;
  bool first = true;
  for (const auto& rec : doc) {
    if (!rec.is_object()) throw DataError("results JSON records must be objects");
    StrengthScores s;
    try {
      s.password = rec.at("password").get<std::string>();
      s.force = rec.at("force").get<int>();
      s.leet = rec.at("leet").get<int>();
      s.coverage = rec.at("coverage").get<int>();
      s.cupp = rec.at("cupp").get<int>();
      s.cps = rec.at("cps").get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("malformed results JSON record: ") + e.what());
    }
    auto check = [](int v, int lo, int hi, const char* what) {
      if (v < lo || v > hi) throw DataError(std::string(what) + " out of range");
    };
    check(s.force, 0, 100, "force");
    check(s.leet, 0, 100, "leet");
    check(s.coverage, 0, 100, "coverage");
    check(s.cupp, 0, 1, "cupp");
    if (!(s.cps >= 0.0 && s.cps <= 1.0)) throw DataError("cps out of range");
    bool labeled = rec.contains("label");
    if (first) {
      table.has_labels = labeled;
      first = false;
    } else if (labeled != table.has_labels) {
      throw DataError("results JSON mixes labeled and unlabeled records");
    }
    if (labeled) table.labels.push_back(strength_from_label(rec.at("label").get<std::string>()));
    table.rows.push_back(std::move(s));
  }
  return table;
}

std::vector<std::pair<std::string, Strength>> parse_gold_csv(const std::string& text) {
  auto records = parse_csv(text);
  std::vector<std::pair<std::string, Strength>> out;
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (r == 0 && rec.size() == 2 && rec[0] == "password" && rec[1] == "label") continue;
    if (rec.size() != 2)
      throw DataError("gold CSV row " + std::to_string(r + 1) + " must have exactly 2 fields");
    Strength label = strength_from_label(rec[1]);
    if (label == Strength::Unknown)
      throw DataError("gold CSV row " + std::to_string(r + 1) + " has label Unknown");
    out.emplace_back(rec[0], label);
  }
  if (out.empty()) throw DataError("gold CSV has no rows");
  return out;
}

namespace {

std::string metric_line(const char* name, const MetricValue& v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s: %.4f%s", name, v.value,
                v.zero_denominator ? "*" : "");
  return buf;
}

}  // namespace

std::string render_report_text(const ClassificationReport& report) {
  std::string out;
  out += "items: " + std::to_string(report.total) + "\n";
  char acc[32];
  std::snprintf(acc, sizeof(acc), "%.4f", report.accuracy);
  out += "accuracy: " + std::string(acc) + "\n";
  const char* prefix = report.levels == 3 ? "macro_" : "";
  out += metric_line((std::string(prefix) + "precision").c_str(), report.precision) + "\n";
  out += metric_line((std::string(prefix) + "recall").c_str(), report.recall) + "\n";
  out += metric_line((std::string(prefix) + "f1").c_str(), report.f1) + "\n";
  bool any_flag = report.precision.zero_denominator || report.recall.zero_denominator ||
                  report.f1.zero_denominator;
  for (Strength cls : kClasses) {
    const ClassReport& c = report.per_class[idx(cls)];
    if (report.levels == 2 && cls == Strength::Medium) continue;
    out += "class " + std::string(strength_label(cls)) + ": support " +
           std::to_string(c.support) + ", " + metric_line("precision", c.precision) + ", " +
           metric_line("recall", c.recall) + ", " + metric_line("f1", c.f1) + "\n";
    any_flag |= c.precision.zero_denominator || c.recall.zero_denominator ||
                c.f1.zero_denominator;
  }
  if (any_flag) out += "* zero denominator, value reported as 0\n";
  return out;
}

}  // namespace ctxpass
