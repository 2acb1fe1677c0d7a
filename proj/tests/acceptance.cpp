// Acceptance suite: one PASS/FAIL line per criterion. Exit 0 when all pass,
// 2 when the oracle criterion fails, 1 for any other failure.

#include "arrcov/arrangement.hpp"
#include "arrcov/cover_homology.hpp"
#include "arrcov/schreier.hpp"
#include "arrcov/smith.hpp"
#include "arrcov/tools/jobspec.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace arrcov;
using Clock = std::chrono::steady_clock;

constexpr double kLemmaSeconds = 30.0;
constexpr double kDiagonalSeconds = 300.0;
constexpr std::size_t kSuiteSize = 200;
constexpr std::size_t kSuiteMaxN = 8;
constexpr std::size_t kOracleInstances = 100;
constexpr std::size_t kOracleMaxN = 6;
constexpr std::size_t kDivisorInstances = 100;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct SuiteInstance {
  MarkedArrangement arrangement;
  ArrangementCharacter character;
};

const std::vector<SuiteInstance>& eps_one_suite() {
  static const std::vector<SuiteInstance> suite = [] {
    std::mt19937_64 rng(kSeed);
    std::vector<SuiteInstance> out;
    for (std::size_t i = 0; i < kSuiteSize; ++i) {
      auto a = testing::random_arrangement(rng, 4, 5);
      auto chi = testing::random_integral_character(rng, a, {.eps = 1, .weight_bound = 3});
      out.push_back({std::move(a), std::move(chi)});
    }
    return out;
  }();
  return suite;
}

std::size_t expected_betti(const SuiteInstance& inst, std::size_t n) {
  std::size_t b = static_cast<std::size_t>(inst.arrangement.n - 1);
  const auto totals = inst.character.point_totals();
  for (std::size_t i = 0; i < totals.size(); ++i)
    b += static_cast<std::size_t>(inst.arrangement.multiplicities[i] - 2) *
         (std::gcd(static_cast<std::uint64_t>(totals[i] < 0 ? -totals[i] : totals[i]), std::uint64_t{n}) - 1);
  return b;
}

std::string describe(const SuiteInstance& inst, std::size_t n) {
  std::ostringstream s;
  s << "n=" << inst.arrangement.n << " m=(";
  for (std::size_t i = 0; i < inst.arrangement.point_count(); ++i) s << (i ? "," : "") << inst.arrangement.multiplicities[i];
  s << ") eps_i=(";
  const auto totals = inst.character.point_totals();
  for (std::size_t i = 0; i < totals.size(); ++i) s << (i ? "," : "") << totals[i];
  s << ") N=" << n;
  return s.str();
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome lemma_sweep() {
  Outcome out;
  const auto start = Clock::now();
  const auto sweep = tools::lemma_sweep(24, {0, 2, 3, 5, 7});
  const double elapsed = seconds_since(start);
  if (!sweep.failures.empty()) out.fail(sweep.failures.front());
  if (elapsed > kLemmaSeconds) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = std::to_string(sweep.checks) + " checks, " + std::to_string(elapsed) + " s";
  return out;
}

Outcome diagonalization() {
  Outcome out;
  const auto start = Clock::now();
  std::size_t checks = 0;
  for (const auto& inst : eps_one_suite()) {
    const LaurentMatrix direct = direct_alexander(inst.arrangement, inst.character);
    const LaurentMatrix diagonal = diagonal_form(inst.arrangement, inst.character);
    for (std::size_t n = 1; n <= kSuiteMaxN; ++n) {
      ++checks;
      if (snf_int(substitute(direct, n)) != snf_int(substitute(diagonal, n))) out.fail(describe(inst, n));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed > kDiagonalSeconds) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = std::to_string(checks) + " pairs, " + std::to_string(elapsed) + " s";
  return out;
}

Outcome betti_formula() {
  Outcome out;
  std::size_t checks = 0;
  const std::vector<FieldSelector> fields{FieldSelector(0), FieldSelector(2), FieldSelector(3), FieldSelector(5)};
  for (const auto& inst : eps_one_suite()) {
    const auto p = boundary_presentation(inst.arrangement);
    const auto w = boundary_character(inst.arrangement, inst.character);
    for (std::size_t n = 1; n <= kSuiteMaxN; ++n) {
      const auto betti = cover_betti(build_complex(p, w, n), fields);
      const std::size_t expected = expected_betti(inst, n);
      for (const auto& f : fields) {
        ++checks;
        if (betti.at(f) != expected)
          out.fail(describe(inst, n) + " over " + f.name() + ": " + std::to_string(betti.at(f)) + " != " +
                   std::to_string(expected));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " Betti numbers";
  return out;
}

/// Multiplicity profiles with at least two points and n = 1 + sum(m_i - 1).
std::vector<MarkedArrangement> all_profiles(long n) {
  std::vector<MarkedArrangement> out;
  std::function<void(long, long, std::vector<long>&)> rec = [&](long remaining, long max_part, std::vector<long>& parts) {
    if (remaining == 0) {
      if (parts.size() >= 2) {
        MarkedArrangement a{n, {}};
        for (long p : parts) a.multiplicities.push_back(p + 1);
        out.push_back(std::move(a));
      }
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p, parts);
      parts.pop_back();
    }
  };
  std::vector<long> parts;
  rec(n - 1, n - 1, parts);
  return out;
}

Outcome torsion_freeness() {
  Outcome out;
  std::size_t integral_checks = 0;
  std::size_t certificates = 0;
  for (const auto& inst : eps_one_suite()) {
    const auto p = boundary_presentation(inst.arrangement);
    const auto w = boundary_character(inst.arrangement, inst.character);
    const auto totals = inst.character.point_totals();
    for (std::size_t n = 1; n <= kSuiteMaxN; ++n) {
      const auto h1 = h1_cover(p, w, n, {});
      ++integral_checks;
      if (!h1.torsion.empty()) out.fail(describe(inst, n) + ": torsion " + AbelianGroup{h1.free_rank, h1.torsion}.to_string());
      bool gcds_ok = true;
      for (std::size_t i = 0; i < totals.size(); ++i)
        if (inst.arrangement.multiplicities[i] > 2 && cyclic_gcd(totals[i], n) != 1) gcds_ok = false;
      if (!gcds_ok) continue;
      ++certificates;
      const auto cert = certify(inst.arrangement, inst.character, n);
      if (cert.verdict != CertificateVerdict::kTorsionFree ||
          cert.rank != static_cast<std::size_t>(inst.arrangement.n - 1))
        out.fail(describe(inst, n) + ": certificate " + to_string(cert.verdict));
    }
  }
  for (long n : {3L, 5L, 7L}) {
    for (const auto& a : all_profiles(n)) {
      const auto params = williams_parameters(a);
      const auto cert = certify(a, params.character, params.n);
      ++certificates;
      const std::string what = "Milnor n=" + std::to_string(n) + " s=" + std::to_string(a.point_count());
      if (cert.verdict != CertificateVerdict::kTorsionFree || cert.rank != static_cast<std::size_t>(n - 1))
        out.fail(what + ": certificate " + to_string(cert.verdict));
      const auto h1 = h1_cover(boundary_presentation(a), boundary_character(a, params.character), params.n, {});
      ++integral_checks;
      if (h1.free_rank != static_cast<std::size_t>(n - 1) || !h1.torsion.empty()) out.fail(what + ": H1 not free of rank n-1");
    }
  }
  if (out.pass)
    out.detail = std::to_string(integral_checks) + " integral H1, " + std::to_string(certificates) + " certificates";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::mt19937_64 rng(kSeed + 5);
  const std::vector<FieldSelector> fields{FieldSelector(0), FieldSelector(2), FieldSelector(3)};
  std::size_t arrangement_cases = 0;
  for (std::size_t i = 0; i < kOracleInstances; ++i) {
    const std::size_t n = 1 + i % kOracleMaxN;
    Presentation p;
    Character w;
    std::string what;
    if (i % 2 == 0) {
      const auto a = testing::random_arrangement(rng, 3, 4);
      const auto chi = testing::random_integral_character(rng, a, {.eps = 0, .weight_bound = 3});
      p = boundary_presentation(a);
      w = boundary_character(a, chi);
      what = describe({a, chi}, n);
      ++arrangement_cases;
    } else {
      auto g = testing::random_group(rng, 5, 10, n);
      p = std::move(g.presentation);
      w = std::move(g.character);
      what = "random presentation #" + std::to_string(i) + " N=" + std::to_string(n);
    }
    const auto direct = h1_cover(p, w, n, fields);
    const auto oracle = oracle_h1(p, w, n, fields);
    if (direct.free_rank != oracle.free_rank || direct.torsion != oracle.torsion || direct.field_betti != oracle.field_betti)
      out.fail(what + ": " + AbelianGroup{direct.free_rank, direct.torsion}.to_string() + " vs oracle " +
               AbelianGroup{oracle.free_rank, oracle.torsion}.to_string());
  }
  if (out.pass)
    out.detail = std::to_string(kOracleInstances) + " instances (" + std::to_string(arrangement_cases) + " arrangements)";
  return out;
}

bool has_zero_weight(const ArrangementCharacter& chi) {
  for (const auto& pw : chi.point_weights())
    for (auto x : pw)
      if (x == 0) return true;
  return false;
}

Outcome divisibility() {
  Outcome out;
  std::mt19937_64 rng(kSeed + 6);
  const std::vector<FieldSelector> fields{FieldSelector(0), FieldSelector(2), FieldSelector(3)};
  std::size_t with_zero = 0;
  for (std::size_t i = 0; i < kDivisorInstances; ++i) {
    const auto a = testing::random_arrangement(rng, 4, 5);
    ArrangementCharacter chi;
    do {
      chi = testing::random_integral_character(rng, a, {.eps = 0, .weight_bound = 3, .require_divisor_hypotheses = true});
    } while (i % 3 == 0 && !has_zero_weight(chi));
    if (has_zero_weight(chi)) ++with_zero;
    for (const auto& f : fields) {
      const auto check = divisor_check(a, chi, f);
      if (!check.divides)
        out.fail(describe({a, chi}, 0) + " eps=" + std::to_string(chi.eps()) + " over " + f.name() + ": " +
                 check.alexander_polynomial.to_string() + " does not divide " + check.divisor.to_string());
    }
  }
  if (with_zero == 0) out.fail("no instance with a zero weight");
  if (out.pass)
    out.detail = std::to_string(kDivisorInstances) + " characters x 3 fields, " + std::to_string(with_zero) +
                 " with some eps_ij = 0";
  return out;
}

tools::JobSpec milnor_job(const MarkedArrangement& a) {
  const auto params = williams_parameters(a);
  tools::JobSpec job;
  job.arrangement = a;
  job.character = params.character;
  job.n_list = {params.n};
  job.primes = {0, 2, 3, 5};
  job.milnor = true;
  return job;
}

Outcome golden_values() {
  Outcome out;
  for (long n = 3; n <= 8; ++n) {
    const MarkedArrangement a{n, std::vector<long>(static_cast<std::size_t>(n - 1), 2)};
    const auto report = tools::run(milnor_job(a));
    const auto& x = report.at("results").at(0).at("x_cover");
    if (x.at("free_rank") != n - 1 || x.at("torsion") != tools::Json::array())
      out.fail("generic n=" + std::to_string(n) + ": " + x.dump());
    if (report.at("results").at(0).at("oracle_agrees") != true) out.fail("generic n=" + std::to_string(n) + ": oracle");
  }
  const MarkedArrangement h16{16, {4, 4, 4, 4, 4}};
  const auto params = williams_parameters(h16);
  const auto cert = certify(h16, params.character, params.n);
  if (cert.verdict != CertificateVerdict::kBoundOnly || cert.bound != 45)
    out.fail("n=16 profile: " + to_string(cert.verdict) + " bound " + std::to_string(cert.bound));
  const auto job = tools::load_jobspec((std::filesystem::path(ARRCOV_JOBS_DIR) / "icosidodecahedral_profile.json").string());
  const auto report = tools::run(job);
  const auto& entry = report.at("results").at(0);
  if (entry.at("bound") != 45 || entry.at("certificate").at("verdict") != "BoundOnly")
    out.fail("n=16 job report: " + entry.at("certificate").dump());
  if (out.pass) out.detail = "generic n=3..8 free of rank n-1; n=16 profile bound 45, BoundOnly";
  return out;
}

Outcome determinism() {
  Outcome out;
  std::size_t jobs = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ARRCOV_JOBS_DIR)) {
    if (entry.path().extension() != ".json") continue;
    tools::JobSpec job;
    try {
      job = tools::load_jobspec(entry.path().string());
    } catch (const InputError&) {
      continue;  // invalid fixtures
    }
    ++jobs;
    const std::string name = entry.path().filename().string();
    const auto doc = tools::serialize_jobspec(job);
    const auto again = tools::parse_jobspec(doc);
    if (!(again == job) || tools::serialize_jobspec(again).dump() != doc.dump()) out.fail(name + ": round-trip");
    if (tools::run(job).dump() != tools::run(again).dump()) out.fail(name + ": reports differ");
  }
  if (jobs == 0) out.fail("no jobs found");
  if (out.pass) out.detail = std::to_string(jobs) + " jobs";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"1 lemma rank sweep", lemma_sweep},
      {"2 diagonalization cokernels", diagonalization},
      {"3 exact Betti formula", betti_formula},
      {"4 torsion-freeness at eps = 1", torsion_freeness},
      {"5 oracle equivalence", oracle_equivalence},
      {"6 Alexander polynomial divisibility", divisibility},
      {"7 Milnor golden values", golden_values},
      {"8 determinism and round-trip", determinism},
  };
  int status = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) {
      if (c.check == oracle_equivalence)
        status = 2;
      else if (status == 0)
        status = 1;
    }
  }
  return status;
}
