#pragma once

#include "arrcov/arrangement.hpp"
#include "arrcov/cover_homology.hpp"
#include "arrcov/error.hpp"
#include "arrcov/smith.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace arrcov::tools {

using Json = nlohmann::ordered_json;

/// Schema or invariant violation in a job document; the message starts with
/// the JSON path of the offending field.
class JobSpecError : public InputError {
 public:
  JobSpecError(const std::string& path, const std::string& what) : InputError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct JobSpec {
  MarkedArrangement arrangement;
  ArrangementCharacter character;
  std::vector<std::size_t> n_list;
  std::vector<std::uint32_t> primes;  // 0 = rationals
  bool integral = true;
  bool oracle = true;
  bool milnor = false;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

struct Limits {
  std::size_t max_n = 64;
  std::size_t max_matrix = 4096;  // n * N
  bool allow_large = false;
};

/// Accepts the input schema plus the optional keys "N", "primes",
/// "integral" and "oracle" written by serialize_jobspec.
JobSpec parse_jobspec(const Json& document);
Json serialize_jobspec(const JobSpec& job);

/// Reads and parses a job file; JSON syntax errors become JobSpecError.
JobSpec load_jobspec(const std::string& path);

/// Throws JobSpecError when some N exceeds the limits and large jobs are not allowed.
void check_limits(const JobSpec& job, const Limits& limits);

/// One report entry per N, in N_list order. Oracle disagreement is recorded
/// as "oracle_agrees": false (see oracle_disagreements). Throws
/// ConsistencyError when a field Betti number differs from the bound under
/// its hypotheses or the integral free rank differs from the rational one.
Json run(const JobSpec& job);

/// N values whose report entry has "oracle_agrees": false.
std::vector<std::size_t> oracle_disagreements(const Json& report);

/// Field list for a job: the listed characteristics in order.
std::vector<FieldSelector> job_fields(const JobSpec& job);

struct LemmaSweep {
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

/// rank(C_N^k - I) = N - gcd(k, N) for 1 <= N <= max_n, 0 <= k <= 2N.
LemmaSweep lemma_sweep(std::size_t max_n, const std::vector<std::uint32_t>& characteristics);

Json integer_json(const Integer& value);
Json poly_json(const LaurentPoly& p);

}  // namespace arrcov::tools
