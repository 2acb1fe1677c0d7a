#include "arrcov/tools/jobspec.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using arrcov::tools::Json;
using arrcov::tools::JobSpec;

constexpr int kInputError = 1;
constexpr int kInconsistent = 2;

struct Options {
  std::string file;
  std::vector<std::size_t> n_list;
  std::vector<std::uint32_t> primes;
  std::optional<bool> integral;
  std::optional<bool> oracle;
  std::string json_path;
  bool allow_large = false;
  std::uint32_t divisor_char = 0;
  std::size_t lemma_max_n = 24;
  std::vector<std::uint32_t> lemma_chars{0, 2, 3, 5, 7};
};

JobSpec load(const Options& opt, bool force_milnor = false) {
  Json doc;
  {
    std::ifstream in(opt.file);
    if (!in) throw arrcov::tools::JobSpecError(opt.file, "cannot open file");
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw arrcov::tools::JobSpecError(opt.file, std::string("malformed JSON: ") + e.what());
    }
  }
  if (force_milnor && doc.is_object()) {
    // The Milnor character replaces whatever character the file describes.
    doc["milnor"] = true;
    for (const char* key : {"alpha", "mode", "N"}) doc.erase(key);
    if (doc.contains("points") && doc["points"].is_array())
      for (auto& point : doc["points"])
        if (point.is_object()) point.erase("weights");
  }
  if (!opt.n_list.empty()) doc["N"] = opt.n_list;
  if (!opt.primes.empty()) doc["primes"] = opt.primes;
  if (opt.integral) doc["integral"] = *opt.integral;
  if (opt.oracle) doc["oracle"] = *opt.oracle;
  JobSpec job = arrcov::tools::parse_jobspec(doc);
  arrcov::tools::check_limits(job, {.allow_large = opt.allow_large});
  return job;
}

void emit_json(const Options& opt, const Json& doc) {
  if (opt.json_path.empty()) return;
  std::ofstream out(opt.json_path);
  if (!out) throw arrcov::InputError("cannot write " + opt.json_path);
  out << doc.dump(2) << "\n";
}

std::string torsion_text(const Json& x) {
  std::ostringstream out;
  const auto rank = x["free_rank"];
  bool first = true;
  if (rank.is_number() && rank.get<std::size_t>() > 0) {
    out << "Z";
    if (rank.get<std::size_t>() > 1) out << "^" << rank.get<std::size_t>();
    first = false;
  }
  for (const auto& d : x["torsion"]) {
    out << (first ? "" : " + ") << "Z/" << (d.is_string() ? d.get<std::string>() : d.dump());
    first = false;
  }
  return first ? "0" : out.str();
}

void print_header(const Json& report) {
  const auto& a = report["arrangement"];
  const auto& c = report["character"];
  std::cout << "arrangement: n = " << a["n"] << ", multiplicities " << a["multiplicities"].dump() << "\n";
  std::cout << "character: " << c["mode"].get<std::string>();
  if (c.contains("modulus")) std::cout << " mod " << c["modulus"];
  std::cout << ", eps = " << c["eps"] << ", epsilon_i = " << c["epsilon_i"].dump() << "\n";
}

std::string bound_text(const Json& b) { return b.is_null() ? "n/a (eps hypothesis fails)" : b.dump(); }

void print_analysis(const Json& report) {
  print_header(report);
  for (const auto& r : report["results"]) {
    std::cout << "N = " << r["N"] << "\n";
    std::cout << "  bound: " << bound_text(r["bound"]) << "\n";
    std::cout << "  certificate: " << r["certificate"]["verdict"].get<std::string>() << "\n";
    if (!r["x_cover"]["free_rank"].is_null()) std::cout << "  H1(X cover): " << torsion_text(r["x_cover"]) << "\n";
    std::cout << "  betti:";
    for (const auto& [k, v] : r["x_cover"]["betti"].items()) std::cout << " " << (k == "0" ? "Q" : "F_" + k) << "=" << v;
    std::cout << "\n";
    if (!r["divisor"].is_null())
      std::cout << "  Alexander polynomial divides divisor over Q: " << (r["divisor"]["divides"].get<bool>() ? "yes" : "no")
                << "\n";
    if (!r["oracle_agrees"].is_null())
      std::cout << "  oracle: " << (r["oracle_agrees"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
  }
}

int finish_run(const Options& opt, const Json& report) {
  emit_json(opt, report);
  const auto bad = arrcov::tools::oracle_disagreements(report);
  if (bad.empty()) return 0;
  std::cerr << "error: Schreier oracle disagrees with the chain-complex homology at N =";
  for (auto n : bad) std::cerr << " " << n;
  std::cerr << "\n";
  return kInconsistent;
}

int cmd_analyze(const Options& opt, bool milnor) {
  const JobSpec job = load(opt, milnor);
  const Json report = arrcov::tools::run(job);
  print_analysis(report);
  return finish_run(opt, report);
}

int cmd_bound(const Options& opt) {
  const JobSpec job = load(opt);
  Json out = Json::array();
  for (auto n : job.n_list) {
    const bool ok = arrcov::eps_hypothesis_holds(job.character, n);
    const Json bound = ok ? Json(arrcov::betti_bound(job.arrangement, job.character, n)) : Json(nullptr);
    std::cout << "N = " << n << ": bound " << bound_text(bound) << "\n";
    out.push_back({{"N", n}, {"bound", bound}});
  }
  emit_json(opt, out);
  return 0;
}

int cmd_certify(const Options& opt) {
  const JobSpec job = load(opt);
  Json out = Json::array();
  for (auto n : job.n_list) {
    const auto cert = arrcov::certify(job.arrangement, job.character, n);
    std::cout << "N = " << n << ": " << arrcov::to_string(cert.verdict);
    if (cert.verdict == arrcov::CertificateVerdict::kTorsionFree) std::cout << " (H1 = Z^" << cert.rank << ")";
    if (cert.verdict == arrcov::CertificateVerdict::kBoundOnly) std::cout << " (b1 = " << cert.bound << ")";
    std::cout << "\n";
    Json log = Json::array();
    for (const auto& h : cert.hypotheses_log) {
      std::cout << "  [" << (h.passed ? "ok" : "fails") << "] " << h.hypothesis << "\n";
      log.push_back({{"hypothesis", h.hypothesis}, {"passed", h.passed}});
    }
    out.push_back({{"N", n}, {"verdict", arrcov::to_string(cert.verdict)}, {"hypotheses", log}});
  }
  emit_json(opt, out);
  return 0;
}

int cmd_divisor(const Options& opt) {
  const JobSpec job = load(opt);
  const arrcov::FieldSelector field(opt.divisor_char);
  const auto check = arrcov::divisor_check(job.arrangement, job.character, field);
  std::cout << "field: " << field.name() << "\n";
  std::cout << "Alexander polynomial: " << check.alexander_polynomial.to_string() << "\n";
  std::cout << "divisor: " << check.divisor.to_string() << "\n";
  std::cout << "divides: " << (check.divides ? "yes" : "no") << "\n";
  emit_json(opt, {{"field", opt.divisor_char},
                  {"poly", arrcov::tools::poly_json(arrcov::alexander_divisor(job.arrangement, job.character))},
                  {"divides", check.divides}});
  return 0;
}

int cmd_lemma(const Options& opt) {
  const auto sweep = arrcov::tools::lemma_sweep(opt.lemma_max_n, opt.lemma_chars);
  for (const auto& f : sweep.failures) std::cout << "FAIL " << f << "\n";
  std::cout << sweep.checks - sweep.failures.size() << "/" << sweep.checks << " rank checks pass\n";
  emit_json(opt, {{"max_n", opt.lemma_max_n}, {"checks", sweep.checks}, {"failures", sweep.failures}});
  return sweep.failures.empty() ? 0 : kInconsistent;
}

int cmd_oracle(Options opt) {
  opt.oracle = true;
  const JobSpec job = load(opt);
  const Json report = arrcov::tools::run(job);
  for (const auto& r : report["results"])
    std::cout << "N = " << r["N"] << ": " << (r["oracle_agrees"].get<bool>() ? "agree" : "DISAGREE") << "\n";
  return finish_run(opt, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of finite cyclic covers of line-arrangement complements"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  bool integral = true;
  bool oracle = true;
  auto* integral_flag = app.add_flag("--integral,!--no-integral", integral, "Compute integral homology of the covers");
  auto* oracle_flag = app.add_flag("--oracle,!--no-oracle", oracle, "Cross-check against the Schreier oracle");
  app.add_option("--n", opt.n_list, "Cover degrees N")->delimiter(',');
  app.add_option("--primes", opt.primes, "Field characteristics (0 = rationals)")->delimiter(',');
  app.add_option("--json", opt.json_path, "Write the machine-readable report here");
  app.add_flag("--allow-large", opt.allow_large, "Lift the N <= 64 and n*N <= 4096 guards");

  auto file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "Job description (JSON)")->required()->check(CLI::ExistingFile);
    return sub;
  };
  auto* analyze = file_command("analyze", "Full report for every N");
  auto* bound = file_command("bound", "Betti bound for every N");
  auto* certify = file_command("certify", "Torsion-freeness certificate for every N");
  auto* divisor = file_command("divisor", "Alexander polynomial divisibility check");
  divisor->add_option("--char", opt.divisor_char, "Field characteristic (0 = rationals)");
  auto* milnor = file_command("milnor", "Full report for the Milnor fiber character (N = n)");
  auto* oracle_cmd = file_command("oracle", "Compare chain-complex homology with the Schreier oracle");
  auto* lemma = app.add_subcommand("lemma", "Check rank(C_N^k - I) = N - gcd(k, N)");
  lemma->add_option("--max-n", opt.lemma_max_n, "Largest N")->check(CLI::PositiveNumber);
  lemma->add_option("--chars", opt.lemma_chars, "Field characteristics")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  if (integral_flag->count() > 0) opt.integral = integral;
  if (oracle_flag->count() > 0) opt.oracle = oracle;

  try {
    if (analyze->parsed()) return cmd_analyze(opt, false);
    if (milnor->parsed()) return cmd_analyze(opt, true);
    if (bound->parsed()) return cmd_bound(opt);
    if (certify->parsed()) return cmd_certify(opt);
    if (divisor->parsed()) return cmd_divisor(opt);
    if (oracle_cmd->parsed()) return cmd_oracle(opt);
    if (lemma->parsed()) return cmd_lemma(opt);
  } catch (const arrcov::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const arrcov::ConsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  }
  return kInputError;
}
