#include "skeldet/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace skeldet {

const char* relation_name(Relation relation) {
  return relation == Relation::kEqual ? "eq" : "geq";
}

std::size_t VerificationReport::failed() const {
  std::size_t count = 0;
  for (const auto& t : trials) {
    count += t.pass ? 0 : 1;
  }
  return count;
}

std::vector<const TrialRecord*> VerificationReport::failures() const {
  std::vector<const TrialRecord*> out;
  for (const auto& t : trials) {
    if (!t.pass) {
      out.push_back(&t);
    }
  }
  return out;
}

TrialRecord& VerificationReport::add(TrialRecord record) {
  record.id = trials.size();
  trials.push_back(std::move(record));
  return trials.back();
}

namespace {

nlohmann::json optional_value(const std::optional<BigInt>& value) {
  if (!value) {
    return nullptr;
  }
  return to_string(*value);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (char c : s) {
    quoted += c;
    if (c == '"') {
      quoted += '"';
    }
  }
  return quoted + "\"";
}

std::string optional_text(const std::optional<BigInt>& value) {
  return value ? to_string(*value) : std::string();
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report, bool with_timestamp) {
  auto trials = nlohmann::json::array();
  for (const auto& t : report.trials) {
    nlohmann::json row = {
        {"id", t.id},
        {"instance", t.instance},
        {"dim", optional_value(t.dim)},
        {"det", optional_value(t.det)},
        {"formula", optional_value(t.formula)},
        {"relation", relation_name(t.relation)},
        {"pass", t.pass},
    };
    if (t.error) {
      row["error"] = *t.error;
    }
    trials.push_back(std::move(row));
  }
  nlohmann::json out = {
      {"suite", report.suite},
      {"params", report.params},
      {"seed", report.seed},
      {"trials", std::move(trials)},
      {"summary",
       {{"total", report.total()},
        {"failed", report.failed()},
        {"discarded", report.discarded},
        {"skipped", report.skipped},
        {"elapsed_ms", report.elapsed_ms}}},
  };
  if (with_timestamp) {
    out["timestamp"] = utc_timestamp();
  }
  return out;
}

void write_report_csv(std::ostream& out, const VerificationReport& report) {
  out << "suite,id,dim,det,formula,relation,pass,instance\n";
  for (const auto& t : report.trials) {
    out << csv_field(report.suite) << ',' << t.id << ',' << optional_text(t.dim) << ','
        << optional_text(t.det) << ',' << optional_text(t.formula) << ','
        << relation_name(t.relation) << ',' << (t.pass ? "true" : "false") << ','
        << csv_field(t.instance.dump()) << '\n';
  }
}

void write_report_text(std::ostream& out, const VerificationReport& report) {
  out << "suite " << report.suite << ": " << report.total() << " trials, " << report.failed()
      << " failed";
  if (report.discarded) {
    out << ", " << report.discarded << " discarded";
  }
  if (!report.skipped.empty()) {
    out << ", " << report.skipped.size() << " skipped";
  }
  out << " (" << report.elapsed_ms << " ms)\n";
  for (const auto* t : report.failures()) {
    out << "  FAIL #" << t->id << " dim=" << optional_text(t->dim)
        << " det=" << optional_text(t->det) << " formula=" << optional_text(t->formula)
        << " relation=" << relation_name(t->relation);
    if (t->error) {
      out << " error=" << *t->error;
    }
    out << "\n    instance " << t->instance.dump() << '\n';
  }
}

}  // namespace skeldet
