#pragma once

// Check results and suite reports. A report is a list of named checks, each
// pass / fail / undecided, serialised deterministically (checks sorted by id).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace recolle {

enum class Status { pass, fail, undecided };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undecided: return "undecided";
  }
  return "?";
}

struct Check {
  std::string id;
  Status status = Status::pass;
  std::size_t cases = 0;
  std::string note;
  std::optional<nlohmann::json> witness;
  std::optional<nlohmann::json> dims;

  bool passed() const { return status == Status::pass; }
};

/// Accumulates the outcome of one check over many cases. The first failure
/// (or, failing that, the first undecided case) supplies the witness.
class Tally {
 public:
  explicit Tally(std::string id) : id_(std::move(id)) {}

  void ok() { ++cases_; }
  void expect(bool cond, const std::string& what, const nlohmann::json& witness = nullptr) {
    ++cases_;
    if (!cond) record_failure(what, witness);
  }
  void fail(const std::string& what, const nlohmann::json& witness = nullptr) {
    ++cases_;
    record_failure(what, witness);
  }
  void undecided(const std::string& what, const nlohmann::json& witness = nullptr) {
    ++cases_;
    ++undecided_;
    if (!failed_ && !witness_) {
      note_ = what;
      if (!witness.is_null()) witness_ = witness;
    }
  }
  void set_dims(nlohmann::json d) { dims_ = std::move(d); }
  void set_note(std::string n) {
    if (!failed_ && undecided_ == 0) note_ = std::move(n);
  }
  bool failed() const { return failed_; }
  std::size_t cases() const { return cases_; }

  Check finish() const {
    Check c;
    c.id = id_;
    c.cases = cases_;
    c.status = failed_ ? Status::fail : (undecided_ > 0 ? Status::undecided : Status::pass);
    c.note = note_;
    c.witness = witness_;
    c.dims = dims_;
    return c;
  }

 private:
  void record_failure(const std::string& what, const nlohmann::json& witness) {
    if (failed_) return;
    failed_ = true;
    note_ = what;
    witness_.reset();
    if (!witness.is_null()) witness_ = witness;
  }

  std::string id_;
  std::size_t cases_ = 0;
  std::size_t undecided_ = 0;
  bool failed_ = false;
  std::string note_;
  std::optional<nlohmann::json> witness_;
  std::optional<nlohmann::json> dims_;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  nlohmann::json budget = nlohmann::json::object();

  void add(Check c) { checks.push_back(std::move(c)); }
  void add(const Tally& t) { checks.push_back(t.finish()); }
  void merge(const std::vector<Check>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }

  Status overall() const {
    bool undecided = false;
    for (const auto& c : checks) {
      if (c.status == Status::fail) return Status::fail;
      if (c.status == Status::undecided) undecided = true;
    }
    return undecided ? Status::undecided : Status::pass;
  }

  /// 0 all pass, 1 some failure, 3 nothing failed but something undecided.
  int exit_code() const {
    switch (overall()) {
      case Status::pass: return 0;
      case Status::fail: return 1;
      case Status::undecided: return 3;
    }
    return 1;
  }

  std::vector<Check> sorted() const {
    auto cs = checks;
    std::stable_sort(cs.begin(), cs.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return cs;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : sorted()) {
      nlohmann::json j{{"id", c.id}, {"status", to_string(c.status)}, {"cases", c.cases}};
      if (!c.note.empty()) j["note"] = c.note;
      if (c.witness) j["witness"] = *c.witness;
      if (c.dims) j["dims"] = *c.dims;
      arr.push_back(std::move(j));
    }
    return {{"schema", 1}, {"suite", suite}, {"checks", arr}, {"seed", seed}, {"budget", budget}};
  }

  std::string to_text() const {
    std::ostringstream os;
    os << suite << "\n";
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.id.size());
    for (const auto& c : sorted()) {
      os << "  " << c.id << std::string(width - c.id.size(), ' ') << "  " << to_string(c.status) << " ["
         << c.cases << (c.cases == 1 ? " case" : " cases") << "]";
      if (!c.note.empty()) os << "  " << c.note;
      os << "\n";
      if (c.dims) os << "    dims: " << c.dims->dump() << "\n";
      if (c.status != Status::pass && c.witness) os << "    witness: " << c.witness->dump() << "\n";
    }
    os << "overall: " << to_string(overall()) << "\n";
    return os.str();
  }
};

}  // namespace recolle
