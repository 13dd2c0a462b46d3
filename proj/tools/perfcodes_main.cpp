// Command-line front end: every subcommand prints a JSON report envelope
// {command, parameters, result, timing, version} and exits with
//   0 all checks passed    1 a mathematical check failed
//   2 usage or input error 3 search budget exhausted (inconclusive)
// Reports are byte-identical across runs unless --timing is given.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "perfcodes/components.hpp"
#include "perfcodes/exact_cover.hpp"
#include "perfcodes/nordstrom_robinson.hpp"
#include "perfcodes/oracle.hpp"
#include "perfcodes/steiner.hpp"
#include "perfcodes/theorem.hpp"
#include "perfcodes/vasilev.hpp"
#include "perfcodes/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr const char* kVersion = "1.0.0";

using nlohmann::json;
using namespace perfcodes;

struct Outcome {
  json parameters;
  json result;
  int exit_code = kExitOk;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

void write_words(const std::string& path, const std::vector<Word>& words) {
  std::ostringstream text;
  for (const Word& w : words) text << w.to_string() << '\n';
  write_file(path, text.str());
}

json perfectness_json(const PerfectnessReport& r) {
  json j;
  j["is_perfect"] = r.is_perfect;
  j["mode"] = r.sampled ? "sampled" : "exhaustive";
  j["words_checked"] = r.words_checked;
  j["witness"] = r.witness ? json(r.witness->to_string()) : json();
  return j;
}

Triple parse_triple(const std::string& text) {
  Triple t{};
  std::istringstream in(text);
  char comma = 0;
  if (!(in >> t[0] >> comma >> t[1] >> comma >> t[2]) || !(in >> std::ws).eof())
    throw std::invalid_argument("expected a triple like 1,2,6");
  return t;
}

std::vector<int> parse_points(const std::string& text) {
  std::vector<int> points;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) points.push_back(std::stoi(item));
  return points;
}

json spec_file_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructions and checks around binary perfect codes"};
  app.require_subcommand(1);
  app.fallthrough();
  bool with_timing = false;
  std::string out_path;
  app.add_flag("--timing", with_timing, "include wall-clock timing in the report");
  app.add_option("--out", out_path, "write the report envelope to this file (except nr, see below)");

  // --- hamming ---------------------------------------------------------
  auto* cmd_hamming = app.add_subcommand("hamming", "canonical Hamming code H_n (recursive presentation)");
  int hamming_n = 15;
  std::string hamming_check_out, hamming_words_out;
  cmd_hamming->add_option("--n", hamming_n, "length, of the form 2^t - 1")->required();
  cmd_hamming->add_option("--parity-check-out", hamming_check_out, "write the parity-check matrix as text");
  cmd_hamming->add_option("--words-out", hamming_words_out, "write the codewords, one per line (n <= 15)");

  // --- vasilev ---------------------------------------------------------
  auto* cmd_vasilev = app.add_subcommand("vasilev", "perfect code from a spec file {\"k\":int,\"lambda\":{...}}");
  std::string vasilev_spec_path, vasilev_words_out;
  bool vasilev_verify = false;
  cmd_vasilev->add_option("--spec", vasilev_spec_path, "spec file path")->required();
  cmd_vasilev->add_flag("--verify", vasilev_verify, "run the exhaustive perfectness check");
  cmd_vasilev->add_option("--words-out", vasilev_words_out, "write the codewords, one per line (n <= 15)");

  // --- switch ----------------------------------------------------------
  auto* cmd_switch = app.add_subcommand("switch", "switch the component R(beta) of H_{2k+1}");
  int switch_k = 7;
  std::string switch_beta;
  bool switch_verify = false;
  cmd_switch->add_option("--k", switch_k, "half-length k, of the form 2^t - 1")->required();
  cmd_switch->add_option("--beta", switch_beta, "codeword of H_k labeling the component")->required();
  cmd_switch->add_flag("--verify", switch_verify, "run the exhaustive perfectness check");

  // --- verify-perfect ---------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify-perfect", "check that radius-1 balls tile the space");
  int verify_hamming_n = 0;
  std::string verify_spec_path, verify_beta;
  int verify_k = 0;
  std::uint64_t verify_samples = 0, verify_seed = 0;
  cmd_verify->add_option("--hamming", verify_hamming_n, "check the canonical H_n");
  cmd_verify->add_option("--spec", verify_spec_path, "check the code built from a spec file");
  cmd_verify->add_option("--k", verify_k, "with --beta: check the switched code");
  cmd_verify->add_option("--beta", verify_beta, "with --k: component label");
  cmd_verify->add_option("--sample", verify_samples, "sampled probe count for lengths above 20");
  cmd_verify->add_option("--seed", verify_seed, "seed for sampled mode");

  // --- sts ---------------------------------------------------------------
  auto* cmd_sts = app.add_subcommand("sts", "Steiner triple system of distance-3 neighbors around a codeword");
  int sts_hamming_n = 0;
  int sts_k = 0;
  std::string sts_beta, sts_alpha, sts_ts_out;
  cmd_sts->add_option("--hamming", sts_hamming_n, "use the canonical H_n");
  cmd_sts->add_option("--k", sts_k, "with --beta: use the switched code");
  cmd_sts->add_option("--beta", sts_beta, "with --k: component label");
  cmd_sts->add_option("--alpha", sts_alpha, "center codeword (defaults to zero)");
  cmd_sts->add_option("--ts-out", sts_ts_out, "write the triple system as JSON");

  // --- partition ----------------------------------------------------------
  auto* cmd_partition = app.add_subcommand("partition", "partition points into triples drawn from a system");
  std::string partition_sts_path, partition_require, partition_exclude;
  std::uint64_t partition_max_solutions = 0, partition_budget = 0;
  cmd_partition->add_option("--sts", partition_sts_path, "triple-system JSON file")->required();
  cmd_partition->add_option("--require", partition_require, "triple that must appear, e.g. 1,2,6");
  cmd_partition->add_option("--exclude", partition_exclude, "points to leave uncovered, e.g. 1,2,6");
  cmd_partition->add_option("--max-solutions", partition_max_solutions, "stop after this many (0 = all)");
  cmd_partition->add_option("--budget", partition_budget, "search node budget (0 = unlimited)");

  // --- nr ------------------------------------------------------------------
  auto* cmd_nr = app.add_subcommand("nr", "Nordstrom-Robinson code (15, 256, 5)");
  std::string nr_out;
  cmd_nr->add_option("--out", nr_out, "write the codewords, one per line");

  // --- enclosing -------------------------------------------------------------
  auto* cmd_enclosing = app.add_subcommand("enclosing", "linear perfect code enclosing Nordstrom-Robinson");
  std::string enclosing_check_out, enclosing_words_out;
  cmd_enclosing->add_option("--parity-check-out", enclosing_check_out, "write the parity-check matrix as text");
  cmd_enclosing->add_option("--words-out", enclosing_words_out, "write the codewords, one per line");

  // --- trace-check -------------------------------------------------------------
  app.add_subcommand("trace-check", "Nordstrom-Robinson traces on all 16 components of the enclosing code");

  // --- check-theorem -----------------------------------------------------------
  auto* cmd_theorem = app.add_subcommand("check-theorem",
                                         "certify that the switched code has no (n, 2^(n+1)/(n+1)^2, 5) subcode");
  int theorem_t = 2;
  std::string theorem_beta, theorem_mode = "algebraic", theorem_cert_out;
  std::uint64_t theorem_budget = 0;
  cmd_theorem->add_option("--t", theorem_t, "length parameter, n = 4^t - 1")->required();
  cmd_theorem->add_option("--beta", theorem_beta, "weight-3 codeword of H_{(n-1)/2} (default: smallest)");
  cmd_theorem->add_option("--mode", theorem_mode, "algebraic or exhaustive")
      ->check(CLI::IsMember({"algebraic", "exhaustive"}));
  cmd_theorem->add_option("--budget", theorem_budget, "exact-cover node budget per search (0 = unlimited)");
  cmd_theorem->add_option("--cert-out", theorem_cert_out, "write the bare certificate JSON to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string command;
  try {
    if (cmd_hamming->parsed()) {
      command = "hamming";
      CodeOracle code = canonical_hamming(hamming_n);
      outcome.parameters = {{"n", hamming_n}};
      outcome.result = {{"n", hamming_n}, {"cardinality", *code.cardinality}};
      if (!hamming_check_out.empty()) write_file(hamming_check_out, canonical_hamming_check_matrix(hamming_n).to_text());
      if (!hamming_words_out.empty()) write_words(hamming_words_out, code.enumerate());
    } else if (cmd_vasilev->parsed()) {
      command = "vasilev";
      VasilevSpec spec = VasilevSpec::from_json(spec_file_json(vasilev_spec_path));
      CodeOracle code = vasilev(spec);
      outcome.parameters = {{"spec", vasilev_spec_path}, {"verify", vasilev_verify}};
      outcome.result = {{"k", spec.k},
                        {"n", code.length},
                        {"cardinality", *code.cardinality},
                        {"lambda_nonzero", spec.lambda.size()},
                        {"verify", json()}};
      if (vasilev_verify) {
        PerfectnessReport report = verify_perfect(code);
        outcome.result["verify"] = perfectness_json(report);
        if (!report.is_perfect) outcome.exit_code = kExitCheckFailed;
      }
      if (!vasilev_words_out.empty()) write_words(vasilev_words_out, code.enumerate());
    } else if (cmd_switch->parsed()) {
      command = "switch";
      ComponentSpec spec(switch_k, Word::from_string(switch_beta));
      CodeOracle code = switched_code(spec);
      outcome.parameters = {{"k", switch_k}, {"beta", switch_beta}, {"verify", switch_verify}};
      outcome.result = {{"k", switch_k},
                        {"n", code.length},
                        {"beta", spec.beta.to_string()},
                        {"cardinality", *code.cardinality},
                        {"verify", json()}};
      if (switch_verify) {
        PerfectnessReport report = verify_perfect(code);
        outcome.result["verify"] = perfectness_json(report);
        if (!report.is_perfect) outcome.exit_code = kExitCheckFailed;
      }
    } else if (cmd_verify->parsed()) {
      command = "verify-perfect";
      CodeOracle code;
      if (verify_hamming_n > 0) {
        code = canonical_hamming(verify_hamming_n);
        outcome.parameters = {{"hamming", verify_hamming_n}};
      } else if (!verify_spec_path.empty()) {
        code = vasilev(VasilevSpec::from_json(spec_file_json(verify_spec_path)));
        outcome.parameters = {{"spec", verify_spec_path}};
      } else if (verify_k > 0 && !verify_beta.empty()) {
        code = switched_code(ComponentSpec(verify_k, Word::from_string(verify_beta)));
        outcome.parameters = {{"k", verify_k}, {"beta", verify_beta}};
      } else {
        throw std::invalid_argument("choose --hamming N, --spec FILE, or --k K --beta WORD");
      }
      VerifyOptions options;
      if (verify_samples > 0) options.samples = verify_samples;
      options.seed = verify_seed;
      if (verify_samples > 0) outcome.parameters["sample"] = verify_samples;
      PerfectnessReport report = verify_perfect(code, options);
      outcome.result = perfectness_json(report);
      if (!report.is_perfect) outcome.exit_code = kExitCheckFailed;
    } else if (cmd_sts->parsed()) {
      command = "sts";
      CodeOracle code;
      if (sts_hamming_n > 0) {
        code = canonical_hamming(sts_hamming_n);
        outcome.parameters = {{"hamming", sts_hamming_n}};
      } else if (sts_k > 0 && !sts_beta.empty()) {
        code = switched_code(ComponentSpec(sts_k, Word::from_string(sts_beta)));
        outcome.parameters = {{"k", sts_k}, {"beta", sts_beta}};
      } else {
        throw std::invalid_argument("choose --hamming N or --k K --beta WORD");
      }
      Word alpha = sts_alpha.empty() ? Word::zero(code.length) : Word::from_string(sts_alpha);
      outcome.parameters["alpha"] = alpha.to_string();
      TripleSystem ts = neighborhood_sts(code, alpha);
      bool valid = validate_sts(ts);
      outcome.result = {{"n", ts.n}, {"triple_count", ts.triples.size()}, {"valid_sts", valid}, {"triples", ts.to_json()["triples"]}};
      if (!sts_ts_out.empty()) write_file(sts_ts_out, ts.to_json().dump(2) + "\n");
      if (!valid) outcome.exit_code = kExitCheckFailed;
    } else if (cmd_partition->parsed()) {
      command = "partition";
      TripleSystem ts = TripleSystem::from_json(spec_file_json(partition_sts_path));
      PartitionConstraints constraints;
      if (!partition_require.empty()) constraints.required_triple = parse_triple(partition_require);
      if (!partition_exclude.empty()) constraints.excluded_points = parse_points(partition_exclude);
      outcome.parameters = {{"sts", partition_sts_path},
                            {"require", partition_require},
                            {"exclude", partition_exclude},
                            {"max_solutions", partition_max_solutions},
                            {"budget", partition_budget}};
      PartitionSearchResult search =
          find_triple_partitions(ts, constraints, partition_max_solutions == 0 ? kUnlimited : partition_max_solutions,
                                 partition_budget == 0 ? kUnlimited : partition_budget);
      json partitions = json::array();
      for (const std::vector<Triple>& p : search.partitions) {
        json jp = json::array();
        for (const Triple& tr : p) jp.push_back({tr[0], tr[1], tr[2]});
        partitions.push_back(jp);
      }
      outcome.result = {{"partition_count", search.partitions.size()},
                        {"nodes", search.nodes_visited},
                        {"status", to_string(search.status)},
                        {"partitions", partitions}};
      if (search.status == SearchStatus::budget_exhausted) outcome.exit_code = kExitInconclusive;
    } else if (cmd_nr->parsed()) {
      command = "nr";
      NRCode code = nordstrom_robinson();
      bool params_ok = verify_preparata_parameters(code.words, 15);
      outcome.result = {{"length", 15},
                        {"size", code.words.size()},
                        {"min_distance", min_pairwise_distance(code.words)},
                        {"origin_included", code.origin_included},
                        {"parameters_ok", params_ok}};
      if (!nr_out.empty()) write_words(nr_out, code.words);
      if (!params_ok) outcome.exit_code = kExitCheckFailed;
    } else if (cmd_enclosing->parsed()) {
      command = "enclosing";
      NRCode code = nordstrom_robinson();
      LinearCode enclosing = enclosing_hamming(code);
      PerfectnessReport report = verify_perfect(oracle_from_linear(enclosing));
      outcome.result = {{"length", enclosing.length()},
                        {"dimension", enclosing.dimension()},
                        {"size", enclosing.size()},
                        {"min_distance", enclosing.min_distance()},
                        {"is_perfect", report.is_perfect},
                        {"contains_code", true}};
      if (!enclosing_check_out.empty()) write_file(enclosing_check_out, enclosing.parity_check().to_text());
      if (!enclosing_words_out.empty()) {
        std::vector<Word> words = enclosing.codewords();
        std::sort(words.begin(), words.end());
        write_words(enclosing_words_out, words);
      }
      if (!report.is_perfect) outcome.exit_code = kExitCheckFailed;
    } else if (app.get_subcommand("trace-check")->parsed()) {
      command = "trace-check";
      NRCode code = nordstrom_robinson();
      LinearCode enclosing = enclosing_hamming(code);
      json components = json::array();
      bool all_pass = true;
      int total_trace = 0;
      for (const TransportedComponent& tc : transported_components(enclosing)) {
        TraceReport report = component_trace_check(code, tc.words);
        json degrees = json::object();
        for (auto [degree, count] : report.degree_histogram) degrees[std::to_string(degree)] = count;
        components.push_back({{"beta", tc.beta.to_string()},
                              {"trace_size", report.trace_size},
                              {"is_perfect_in_graph", report.is_perfect_in_graph},
                              {"degree_histogram", degrees}});
        all_pass = all_pass && report.is_perfect_in_graph && report.trace_size == 16;
        total_trace += report.trace_size;
      }
      outcome.result = {{"components", components},
                        {"all_pass", all_pass},
                        {"traces_cover_code", total_trace == 256}};
      if (!all_pass || total_trace != 256) outcome.exit_code = kExitCheckFailed;
    } else if (cmd_theorem->parsed()) {
      command = "check-theorem";
      int k = ((1 << (2 * theorem_t)) - 1 - 1) / 2;
      Word beta;
      if (theorem_beta.empty()) {
        std::vector<Word> candidates = canonical_hamming_weight3(k);
        if (candidates.empty()) throw std::invalid_argument("no weight-3 codeword available");
        beta = candidates.front();
      } else {
        beta = Word::from_string(theorem_beta);
      }
      outcome.parameters = {{"t", theorem_t}, {"beta", beta.to_string()}, {"mode", theorem_mode}, {"budget", theorem_budget}};
      TheoremCertificate cert =
          theorem_mode == "exhaustive"
              ? verify_theorem_exhaustive(theorem_t, beta, theorem_budget == 0 ? kUnlimited : theorem_budget)
              : verify_theorem_algebraic(theorem_t, beta);
      outcome.result = cert.to_json();
      if (!theorem_cert_out.empty()) write_file(theorem_cert_out, cert.to_json().dump(2) + "\n");
      if (cert.overall_status == TheoremStatus::fail) outcome.exit_code = kExitCheckFailed;
      if (cert.overall_status == TheoremStatus::inconclusive) outcome.exit_code = kExitInconclusive;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }

  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  json envelope;
  envelope["command"] = command;
  envelope["parameters"] = outcome.parameters.is_null() ? json::object() : outcome.parameters;
  envelope["result"] = outcome.result;
  envelope["timing"] = with_timing ? json{{"ms", elapsed.count()}} : json();
  envelope["version"] = kVersion;

  std::string text = envelope.dump(2) + "\n";
  if (!out_path.empty())
    write_file(out_path, text);
  else
    std::cout << text;
  return outcome.exit_code;
}
