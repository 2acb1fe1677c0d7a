#include "arrcov/tools/jobspec.hpp"

#include "arrcov/schreier.hpp"

#include <fstream>
#include <numeric>
#include <optional>
#include <set>

namespace arrcov::tools {

namespace {

const std::set<std::string> kKnownKeys{"n", "alpha", "points", "mode", "milnor", "N", "primes", "integral", "oracle"};

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::int64_t require_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw JobSpecError(path, "expected an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

bool require_bool(const Json& v, const std::string& path) {
  if (!v.is_boolean()) throw JobSpecError(path, "expected true or false, got " + v.dump());
  return v.get<bool>();
}

const Json& require_array(const Json& v, const std::string& path) {
  if (!v.is_array()) throw JobSpecError(path, "expected an array, got " + v.dump());
  return v;
}

std::int64_t residue(std::int64_t v, std::uint64_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  return ((v % sn) + sn) % sn;
}

std::string character_path(CharacterError::Kind kind) {
  switch (kind) {
    case CharacterError::Kind::kShape: return "points";
    case CharacterError::Kind::kSum: return "alpha";
    case CharacterError::Kind::kSurjectivity: return "points";
    case CharacterError::Kind::kArrangement: return "n";
  }
  return "points";
}

struct RawCharacter {
  std::optional<std::int64_t> alpha;
  std::vector<std::optional<std::vector<std::int64_t>>> weights;
  std::optional<std::uint64_t> modulus;
  bool mode_given = false;
};

/// With "milnor": true the character is the all-ones character mod n; any
/// weights that are spelled out must agree with it.
ArrangementCharacter milnor_character(const MarkedArrangement& a, const RawCharacter& raw) {
  const auto n = static_cast<std::uint64_t>(a.n);
  if (raw.mode_given && raw.modulus != n)
    throw JobSpecError("mode", "a Milnor job is defined mod n = " + std::to_string(n));
  if (raw.alpha && residue(*raw.alpha, n) != residue(1, n))
    throw JobSpecError("alpha", "a Milnor job needs alpha = 1 mod n");
  for (std::size_t i = 0; i < raw.weights.size(); ++i) {
    if (!raw.weights[i]) continue;
    for (std::size_t j = 0; j < raw.weights[i]->size(); ++j)
      if (residue((*raw.weights[i])[j], n) != residue(1, n))
        throw JobSpecError(at(at("points", i) + ".weights", j), "a Milnor job needs every weight = 1 mod n");
  }
  return williams_parameters(a).character;
}

}  // namespace

JobSpec parse_jobspec(const Json& document) {
  if (!document.is_object()) throw JobSpecError("$", "expected a JSON object");
  for (const auto& [key, value] : document.items())
    if (!kKnownKeys.contains(key)) throw JobSpecError(key, "unknown key");

  JobSpec job;
  if (document.contains("milnor")) job.milnor = require_bool(document["milnor"], "milnor");

  if (!document.contains("n")) throw JobSpecError("n", "missing");
  job.arrangement.n = require_int(document["n"], "n");
  if (!document.contains("points")) throw JobSpecError("points", "missing");

  RawCharacter raw;
  const Json& points = require_array(document["points"], "points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string path = at("points", i);
    const Json& point = points[i];
    if (!point.is_object()) throw JobSpecError(path, "expected an object with \"m\" and \"weights\"");
    for (const auto& [key, value] : point.items())
      if (key != "m" && key != "weights") throw JobSpecError(path + "." + key, "unknown key");
    if (!point.contains("m")) throw JobSpecError(path + ".m", "missing");
    const auto m = require_int(point["m"], path + ".m");
    if (m < 2) throw JobSpecError(path + ".m", "multiplicity must be at least 2, got " + std::to_string(m));
    job.arrangement.multiplicities.push_back(static_cast<long>(m));

    if (!point.contains("weights")) {
      if (!job.milnor) throw JobSpecError(path + ".weights", "missing");
      raw.weights.emplace_back();
      continue;
    }
    const Json& w = require_array(point["weights"], path + ".weights");
    if (static_cast<std::int64_t>(w.size()) != m - 1)
      throw JobSpecError(path + ".weights", "expected m - 1 = " + std::to_string(m - 1) + " weights, got " +
                                                std::to_string(w.size()));
    std::vector<std::int64_t> weights;
    for (std::size_t j = 0; j < w.size(); ++j) weights.push_back(require_int(w[j], at(path + ".weights", j)));
    raw.weights.emplace_back(std::move(weights));
  }

  if (auto v = validate_arrangement(job.arrangement); !v) throw JobSpecError("n", v.reason);

  if (document.contains("alpha")) raw.alpha = require_int(document["alpha"], "alpha");
  if (document.contains("mode")) {
    raw.mode_given = true;
    const Json& mode = document["mode"];
    if (mode.is_string() && mode.get<std::string>() == "integral") {
      raw.modulus.reset();
    } else if (mode.is_object() && mode.size() == 1 && mode.contains("modN")) {
      const auto modulus = require_int(mode["modN"], "mode.modN");
      if (modulus < 1) throw JobSpecError("mode.modN", "modulus must be at least 1");
      raw.modulus = static_cast<std::uint64_t>(modulus);
    } else {
      throw JobSpecError("mode", "expected \"integral\" or {\"modN\": int}, got " + mode.dump());
    }
  }

  if (job.milnor) {
    job.character = milnor_character(job.arrangement, raw);
  } else {
    if (!raw.alpha) throw JobSpecError("alpha", "missing");
    std::vector<std::vector<std::int64_t>> weights;
    for (auto& w : raw.weights) weights.push_back(std::move(*w));
    try {
      job.character = character_from_weights(job.arrangement, *raw.alpha, std::move(weights), raw.modulus);
    } catch (const CharacterError& e) {
      throw JobSpecError(character_path(e.kind()), e.what());
    }
  }

  if (document.contains("N")) {
    const Json& list = require_array(document["N"], "N");
    if (list.empty()) throw JobSpecError("N", "expected at least one cover degree");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto n = require_int(list[i], at("N", i));
      if (n < 1) throw JobSpecError(at("N", i), "cover degree must be at least 1, got " + std::to_string(n));
      job.n_list.push_back(static_cast<std::size_t>(n));
    }
  } else if (job.character.is_modular()) {
    job.n_list = {static_cast<std::size_t>(job.character.modulus())};
  } else {
    for (std::size_t n = 2; n <= 8; ++n) job.n_list.push_back(n);
  }
  if (job.character.is_modular())
    for (std::size_t i = 0; i < job.n_list.size(); ++i)
      if (job.n_list[i] != job.character.modulus())
        throw JobSpecError(at("N", i), "the character is defined mod " + std::to_string(job.character.modulus()) +
                                           ", so N must equal " + std::to_string(job.character.modulus()));

  if (document.contains("primes")) {
    const Json& list = require_array(document["primes"], "primes");
    std::set<std::uint32_t> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto p = require_int(list[i], at("primes", i));
      if (p < 0 || p >= (std::int64_t{1} << 31) || (p != 0 && !is_prime(static_cast<std::uint64_t>(p))))
        throw JobSpecError(at("primes", i), "characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
      if (!seen.insert(static_cast<std::uint32_t>(p)).second)
        throw JobSpecError(at("primes", i), "duplicate characteristic " + std::to_string(p));
      job.primes.push_back(static_cast<std::uint32_t>(p));
    }
  } else {
    job.primes = {0, 2, 3, 5};
  }

  if (document.contains("integral")) job.integral = require_bool(document["integral"], "integral");
  if (document.contains("oracle")) job.oracle = require_bool(document["oracle"], "oracle");
  return job;
}

Json serialize_jobspec(const JobSpec& job) {
  Json doc;
  doc["n"] = job.arrangement.n;
  doc["alpha"] = job.character.eps();
  Json points = Json::array();
  for (std::size_t i = 0; i < job.arrangement.point_count(); ++i)
    points.push_back({{"m", job.arrangement.multiplicities[i]}, {"weights", job.character.point_weights()[i]}});
  doc["points"] = std::move(points);
  if (job.character.is_modular())
    doc["mode"] = {{"modN", job.character.modulus()}};
  else
    doc["mode"] = "integral";
  if (job.milnor) doc["milnor"] = true;
  doc["N"] = job.n_list;
  doc["primes"] = job.primes;
  doc["integral"] = job.integral;
  doc["oracle"] = job.oracle;
  return doc;
}

JobSpec load_jobspec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JobSpecError(path, "cannot open file");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw JobSpecError(path, std::string("malformed JSON: ") + e.what());
  }
  return parse_jobspec(doc);
}

void check_limits(const JobSpec& job, const Limits& limits) {
  if (limits.allow_large) return;
  for (std::size_t i = 0; i < job.n_list.size(); ++i) {
    const std::size_t n = job.n_list[i];
    if (n > limits.max_n)
      throw JobSpecError(at("N", i), "N = " + std::to_string(n) + " exceeds the cap of " + std::to_string(limits.max_n) +
                                         " (use --allow-large)");
    const auto size = static_cast<std::size_t>(job.arrangement.n) * n;
    if (size > limits.max_matrix)
      throw JobSpecError(at("N", i), "n * N = " + std::to_string(size) + " exceeds the matrix guard of " +
                                         std::to_string(limits.max_matrix) + " (use --allow-large)");
  }
}

std::vector<FieldSelector> job_fields(const JobSpec& job) {
  std::vector<FieldSelector> fields;
  for (auto p : job.primes) fields.emplace_back(p);
  return fields;
}

Json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Json poly_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, integer_json(c)});
  return terms;
}

namespace {

Json torsion_json(const std::vector<Integer>& torsion) {
  Json out = Json::array();
  for (const auto& d : torsion) out.push_back(integer_json(d));
  return out;
}

Json betti_json(const std::map<FieldSelector, std::size_t>& betti, const std::vector<FieldSelector>& fields) {
  Json out = Json::object();
  for (const auto& f : fields) out[std::to_string(f.characteristic())] = betti.at(f);
  return out;
}

bool divisor_applies(const MarkedArrangement& a, const ArrangementCharacter& chi) {
  if (chi.is_modular() || chi.eps() == 0) return false;
  const auto totals = chi.point_totals();
  for (std::size_t i = 0; i < a.point_count(); ++i)
    if (a.multiplicities[i] > 2 && totals[i] == 0) return false;
  return true;
}

Json divisor_json(const JobSpec& job, const std::vector<FieldSelector>& fields) {
  if (!divisor_applies(job.arrangement, job.character)) return nullptr;
  Json out;
  out["poly"] = poly_json(alexander_divisor(job.arrangement, job.character));
  out["divides"] = divisor_check(job.arrangement, job.character, FieldSelector::rationals()).divides;
  Json by_field = Json::object();
  for (const auto& f : fields) by_field[std::to_string(f.characteristic())] = divisor_check(job.arrangement, job.character, f).divides;
  out["by_field"] = std::move(by_field);
  return out;
}

Json certificate_json(const Certificate& cert) {
  Json out;
  out["verdict"] = to_string(cert.verdict);
  out["mode"] = cert.mode_flag == ArrangementCharacter::Mode::kModular ? "modN" : "integral";
  out["bound"] = cert.verdict == CertificateVerdict::kInconclusive ? Json(nullptr) : Json(cert.bound);
  out["rank"] = cert.verdict == CertificateVerdict::kTorsionFree ? Json(cert.rank) : Json(nullptr);
  Json log = Json::array();
  for (const auto& h : cert.hypotheses_log) log.push_back({{"hypothesis", h.hypothesis}, {"passed", h.passed}});
  out["hypotheses"] = std::move(log);
  return out;
}

}  // namespace

Json run(const JobSpec& job) {
  const auto& a = job.arrangement;
  const auto& chi = job.character;
  const auto fields = job_fields(job);
  const Presentation p = boundary_presentation(a);
  const Character weights = boundary_character(a, chi);

  Json report;
  report["arrangement"] = {{"n", a.n}, {"s", a.point_count()}, {"multiplicities", a.multiplicities}};
  Json character;
  character["mode"] = chi.is_modular() ? "modN" : "integral";
  if (chi.is_modular()) character["modulus"] = chi.modulus();
  character["eps"] = chi.eps();
  character["weights"] = chi.point_weights();
  character["epsilon_i"] = chi.point_totals();
  report["character"] = std::move(character);

  const Json divisor = divisor_json(job, fields);
  Json results = Json::array();
  for (const std::size_t n : job.n_list) {
    Json entry;
    entry["N"] = n;
    const bool eps_ok = eps_hypothesis_holds(chi, n);
    const std::optional<std::size_t> bound = eps_ok ? std::optional(betti_bound(a, chi, n)) : std::nullopt;
    entry["bound"] = bound ? Json(*bound) : Json(nullptr);
    entry["certificate"] = certificate_json(certify(a, chi, n));

    const CoverChainComplex complex = build_complex(p, weights, n);
    const auto betti = cover_betti(complex, fields);
    if (bound)
      for (const auto& [field, b] : betti)
        if (b != *bound)
          throw ConsistencyError("N = " + std::to_string(n) + ": Betti number over " + field.name() + " is " +
                                 std::to_string(b) + " but the exact formula gives " + std::to_string(*bound));

    std::optional<AbelianGroup> h1;
    if (job.integral || job.oracle) h1 = integral_homology(complex.d1, complex.d2);
    if (h1 && betti.contains(FieldSelector::rationals()) && h1->free_rank != betti.at(FieldSelector::rationals()))
      throw ConsistencyError("N = " + std::to_string(n) + ": integral free rank " + std::to_string(h1->free_rank) +
                             " differs from the rational Betti number");
    Json x_cover;
    x_cover["free_rank"] = job.integral ? Json(h1->free_rank) : Json(nullptr);
    x_cover["torsion"] = job.integral ? torsion_json(h1->torsion) : Json(nullptr);
    x_cover["betti"] = betti_json(betti, fields);
    entry["x_cover"] = std::move(x_cover);
    entry["divisor"] = divisor;

    if (job.oracle) {
      const CoverHomologyReport oracle = oracle_h1(p, weights, n, fields);
      entry["oracle_agrees"] =
          oracle.free_rank == h1->free_rank && oracle.torsion == h1->torsion && oracle.field_betti == betti;
    } else {
      entry["oracle_agrees"] = nullptr;
    }
    results.push_back(std::move(entry));
  }
  report["results"] = std::move(results);
  return report;
}

std::vector<std::size_t> oracle_disagreements(const Json& report) {
  std::vector<std::size_t> out;
  for (const auto& entry : report.at("results"))
    if (entry.at("oracle_agrees") == false) out.push_back(entry.at("N").get<std::size_t>());
  return out;
}

LemmaSweep lemma_sweep(std::size_t max_n, const std::vector<std::uint32_t>& characteristics) {
  LemmaSweep sweep;
  for (const auto c : characteristics) {
    const FieldSelector field(c);
    for (std::size_t n = 1; n <= max_n; ++n)
      for (std::int64_t k = 0; k <= static_cast<std::int64_t>(2 * n); ++k) {
        const std::size_t expected = n - std::gcd(static_cast<std::size_t>(k), n);
        const std::size_t got = lemma_rank(n, k, field);
        ++sweep.checks;
        if (got != expected)
          sweep.failures.push_back("N=" + std::to_string(n) + " k=" + std::to_string(k) + " over " + field.name() +
                                   ": rank " + std::to_string(got) + ", expected " + std::to_string(expected));
      }
  }
  return sweep;
}

}  // namespace arrcov::tools
