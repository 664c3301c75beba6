#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twistroot/braid.hpp"

namespace twistroot {

using Json = nlohmann::ordered_json;

// One verification outcome. pass: the check ran and holds. fail: the check
// ran and does not hold. error: the check could not run (bad input,
// exhausted budget); the witness carries the reason.
struct VerificationRecord {
  enum class Status { pass, fail, error };

  std::string case_name;
  std::vector<std::pair<std::string, long long>> parameters;  // sorted by name
  Status status = Status::error;
  Json witness = Json::object();
  long long elapsed_ms = 0;
};

std::string status_name(VerificationRecord::Status s);
VerificationRecord::Status status_from_name(const std::string& name);

// {"case_name":..., "parameters":{...}, "status":..., "witness":...,
// "elapsed_ms":...}; big integers and rationals inside witnesses are
// strings. to_json / record_from_json round-trip exactly.
Json to_json(const VerificationRecord& r);
VerificationRecord record_from_json(const Json& j);

// "[PASS] case_name k=3 (12 ms)".
std::string human_line(const VerificationRecord& r);

// Stable report order: (case_name, parameters).
void sort_records(std::vector<VerificationRecord>& records);

bool all_passed(const std::vector<VerificationRecord>& records);

// Deferred verification case; run() produces exactly one record and never
// throws (failures are folded into the record's status).
using Task = std::function<VerificationRecord()>;

// Executes tasks (on `jobs` threads when jobs > 1) and returns the records
// in stable sorted order, so concurrency never changes the report.
std::vector<VerificationRecord> run_tasks(const std::vector<Task>& tasks, std::size_t jobs);

// Case builders, one group per CLI subcommand. Ranges are inclusive and
// empty when high < low.
std::vector<Task> chain_tasks(std::size_t k_low, std::size_t k_high, LetterBudget budget);
std::vector<Task> root_tasks(long long g_low, long long g_high);
std::vector<Task> half_twist_tasks(long long n_low, long long n_high);
std::vector<Task> symplectic_tasks(std::size_t g_low, std::size_t g_high);
std::vector<Task> paper_cube_tasks();
std::vector<Task> nielsen_tasks(std::size_t n_low, std::size_t n_high);
std::vector<Task> nielsen_matrix_tasks(std::size_t n_low, std::size_t n_high);
std::vector<Task> sl2_tasks(long long entry_bound, unsigned long long max_power);
std::vector<Task> polygon_tasks(std::size_t g_low, std::size_t g_high);

// "p/q" (or plain "p" for integers), exact.
std::string rational_string(const Rational& r);

}  // namespace twistroot
