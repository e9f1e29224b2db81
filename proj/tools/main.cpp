// xns: exact computations with divisor classes on blow-ups of projective
// space at general points. One binary, one subcommand per operation; every
// command understands --json and prints a single document in that mode.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xns/classify.hpp"
#include "xns/cremona.hpp"
#include "xns/dimension.hpp"
#include "xns/divisor.hpp"
#include "xns/fixtures.hpp"
#include "xns/oracle.hpp"
#include "xns/orbit.hpp"

namespace {

using nlohmann::json;
using namespace xns;

struct GlobalOptions {
  bool json_output = false;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
};

void emit(const GlobalOptions& opts, const json& doc,
          const std::string& human) {
  if (opts.json_output)
    std::cout << doc.dump() << "\n";
  else
    std::cout << human << "\n";
}

json divisor_json(const DivisorClass& d) { return d.to_json(); }

std::string both_formats(const DivisorClass& d) {
  std::ostringstream out;
  out << d.pretty() << "\n  compact: " << d.compact()
      << "\n  json:    " << d.to_json().dump();
  return out.str();
}

int default_threads() {
  if (const char* env = std::getenv("XNS_THREADS")) {
    int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 1;
}

json classification_json(const ClassificationResult& result) {
  json doc{{"verdict", std::string(to_string(result.verdict))},
           {"steps", result.steps}};
  if (result.witness) doc["witness"] = word_to_json(*result.witness);
  if (result.terminal) doc["terminal"] = divisor_json(*result.terminal);
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact divisor-class computations on blown-up projective space"};
  app.require_subcommand(1);

  GlobalOptions opts;
  opts.threads = default_threads();
  app.add_flag("--json", opts.json_output, "emit a single JSON document");
  app.add_option("--seed", opts.seed, "seed for all randomized computations");
  app.add_option("--threads", opts.threads, "worker thread cap")
      ->check(CLI::PositiveNumber);

  std::string divisor_text, a_text, b_text, indices_text, word_text, file_text;
  std::string method = "rnc";
  std::int64_t max_degree = -1;
  int max_iterations = 64;
  int orbit_n = 2, orbit_s = 1;
  std::int64_t orbit_max_degree = 0;
  std::uint64_t oracle_prime = kDefaultPrime;
  int oracle_trials = 3;
  bool invert = false, strata = false;

  std::optional<std::function<int()>> action;

  // let the global --json/--seed/--threads flags appear after the subcommand
  auto add_sub = [&app](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  auto pair_cmd = add_sub("pair", "Mukai pairing of two classes");
  pair_cmd->add_option("--a", a_text, "first divisor literal")->required();
  pair_cmd->add_option("--b", b_text, "second divisor literal")->required();
  pair_cmd->callback([&] {
    action = [&]() {
      std::int64_t value = mukai_pairing(DivisorClass::parse(a_text),
                                         DivisorClass::parse(b_text));
      emit(opts, json{{"pairing", value}}, std::to_string(value));
      return 0;
    };
  });

  auto adeg_cmd = add_sub("adeg", "anticanonical degree");
  adeg_cmd->add_option("--divisor", divisor_text, "divisor literal")
      ->required();
  adeg_cmd->callback([&] {
    action = [&]() {
      std::int64_t value = adeg(DivisorClass::parse(divisor_text));
      emit(opts, json{{"adeg", value}}, std::to_string(value));
      return 0;
    };
  });

  auto chi_cmd = add_sub("chi", "Euler characteristic");
  chi_cmd->add_option("--divisor", divisor_text, "divisor literal")
      ->required();
  chi_cmd->callback([&] {
    action = [&]() {
      std::int64_t value = chi(DivisorClass::parse(divisor_text));
      emit(opts, json{{"chi", value}}, std::to_string(value));
      return 0;
    };
  });

  auto cremona_cmd =
      add_sub("cremona", "standard Cremona transformation");
  cremona_cmd->add_option("--divisor", divisor_text, "divisor literal")
      ->required();
  cremona_cmd
      ->add_option("--indices", indices_text, "base points, e.g. 1,2,3,4")
      ->required();
  cremona_cmd->callback([&] {
    action = [&]() {
      DivisorClass d = DivisorClass::parse(divisor_text);
      std::vector<int> raw;
      std::stringstream stream{indices_text};
      for (std::string token; std::getline(stream, token, ',');)
        raw.push_back(std::stoi(token));
      IndexSet I(std::move(raw));
      DivisorClass image = cremona_apply(d, I);
      emit(opts,
           json{{"divisor", divisor_json(image)},
                {"compact", image.compact()},
                {"excess", excess(d, I)}},
           both_formats(image));
      return 0;
    };
  });

  auto word_cmd = add_sub("word", "apply a Weyl word");
  word_cmd->add_option("--divisor", divisor_text, "divisor literal")
      ->required();
  word_cmd
      ->add_option("--word", word_text,
                   "JSON array of index arrays, rightmost applied first")
      ->required();
  word_cmd->add_flag("--invert", invert, "apply the inverse word");
  word_cmd->callback([&] {
    action = [&]() {
      DivisorClass d = DivisorClass::parse(divisor_text);
      WeylWord w = word_from_json(json::parse(word_text));
      if (invert) w = invert_word(std::move(w));
      DivisorClass image = apply_word(d, w);
      emit(opts,
           json{{"divisor", divisor_json(image)},
                {"compact", image.compact()}},
           both_formats(image));
      return 0;
    };
  });

  auto classify_cmd =
      add_sub("classify", "decide whether a class is a (-1) class");
  classify_cmd->add_option("--divisor", divisor_text, "divisor literal")
      ->required();
  classify_cmd->callback([&] {
    action = [&]() {
      ClassificationResult result =
          classify_minus_one(DivisorClass::parse(divisor_text));
      std::ostringstream human;
      human << to_string(result.verdict) << " after " << result.steps
            << " step(s)";
      if (result.terminal) human << "\n  terminal: " << result.terminal->pretty();
      if (result.witness)
        human << "\n  witness:  " << word_to_json(*result.witness).dump();
      emit(opts, classification_json(result), human.str());
      return 0;
    };
  });

  auto peel_cmd = add_sub("peel", "peel obstructing (-1) classes");
  peel_cmd->add_option("--divisor", divisor_text, "divisor literal")
      ->required();
  peel_cmd->add_option("--max-degree", max_degree, "obstruction degree bound")
      ->required();
  peel_cmd->add_option("--max-iterations", max_iterations,
                       "peeling iteration budget");
  peel_cmd->callback([&] {
    action = [&]() {
      DivisorClass d = DivisorClass::parse(divisor_text);
      PeelResult result = base_locus_peel(d, max_degree, max_iterations);
      json components = json::array();
      std::ostringstream human;
      for (const auto& [component, count] : result.components) {
        components.push_back({{"obstructor", divisor_json(component)},
                              {"multiplicity", count}});
        human << count << " x (" << component.pretty() << ")\n";
      }
      human << "residual: " << result.residual.pretty();
      if (result.budget_exhausted) human << "\n(iteration budget exhausted)";
      emit(opts,
           json{{"components", components},
                {"residual", divisor_json(result.residual)},
                {"budget_exhausted", result.budget_exhausted}},
           human.str());
      return 0;
    };
  });

  auto reduce_cmd =
      add_sub("reduce", "greedy Cremona reduction to minimal degree");
  reduce_cmd->add_option("--divisor", divisor_text, "divisor literal")
      ->required();
  reduce_cmd->callback([&] {
    action = [&]() {
      ReduceResult result =
          cremona_reduce(DivisorClass::parse(divisor_text));
      std::ostringstream human;
      human << result.reduced.pretty() << "\n  word: "
            << word_to_json(result.word).dump();
      if (!result.complete) human << "\n(stopped before a negative degree)";
      emit(opts,
           json{{"reduced", divisor_json(result.reduced)},
                {"word", word_to_json(result.word)},
                {"complete", result.complete}},
           human.str());
      return 0;
    };
  });

  auto orbit_cmd =
      add_sub("orbit", "enumerate the (-1) class census");
  orbit_cmd->add_option("--n", orbit_n, "ambient dimension")->required();
  orbit_cmd->add_option("--s", orbit_s, "number of points")->required();
  orbit_cmd->add_option("--max-degree", orbit_max_degree, "degree bound")
      ->required();
  orbit_cmd->add_option("--out", file_text, "census JSONL output path");
  orbit_cmd->callback([&] {
    action = [&]() {
      OrbitTable table = enumerate_orbit(orbit_n, orbit_s, orbit_max_degree);
      if (!file_text.empty()) {
        std::ofstream out(file_text);
        if (!out) throw std::runtime_error("cannot open " + file_text);
        write_census(table, out);
      }
      json hist = json::object();
      std::ostringstream human;
      human << table.total() << " classes in " << table.entries.size()
            << " canonical forms";
      for (const auto& [degree, count] : degree_histogram(table)) {
        hist[std::to_string(degree)] = count;
        human << "\n  degree " << degree << ": " << count;
      }
      if (!table.complete) human << "\n(budget exceeded; table incomplete)";
      emit(opts,
           json{{"n", table.n},
                {"s", table.s},
                {"max_degree", table.max_degree},
                {"complete", table.complete},
                {"forms", table.entries.size()},
                {"total", table.total()},
                {"histogram", hist}},
           human.str());
      return 0;
    };
  });

  auto verify_cmd =
      add_sub("orbit-verify", "check a stored census");
  verify_cmd->add_option("--in", file_text, "census JSONL input path")
      ->required();
  verify_cmd->callback([&] {
    action = [&]() {
      std::ifstream in(file_text);
      if (!in) throw std::runtime_error("cannot open " + file_text);
      OrbitTable table = read_census(in);
      VerifyReport report = verify_table_report(table);
      json failures = json::array();
      std::ostringstream human;
      human << (report.ok ? "valid" : "INVALID") << " census with "
            << table.entries.size() << " forms, " << table.total()
            << " classes";
      for (const std::string& failure : report.failures) {
        failures.push_back(failure);
        human << "\n  " << failure;
      }
      emit(opts,
           json{{"valid", report.ok},
                {"forms", table.entries.size()},
                {"classes", table.total()},
                {"failures", failures}},
           human.str());
      return report.ok ? 0 : 1;
    };
  });

  auto expdim_cmd =
      add_sub("expdim", "conjectural expected dimension");
  expdim_cmd->add_option("--divisor", divisor_text, "divisor literal")
      ->required();
  expdim_cmd->add_option("--method", method, "rnc (s <= n+3) or ghh (n = 2)")
      ->check(CLI::IsMember({"rnc", "ghh"}));
  expdim_cmd->add_option("--max-degree", max_degree,
                         "curve enumeration bound for ghh");
  expdim_cmd->add_flag("--strata", strata, "dump every stratum (rnc only)");
  expdim_cmd->callback([&] {
    action = [&]() {
      DivisorClass d = DivisorClass::parse(divisor_text);
      json doc{{"method", method}, {"conjectural", true}};
      std::int64_t value = 0;
      if (method == "rnc") {
        value = rnc_expected_dim(d);
        if (strata) {
          json rows = json::array();
          for (const ConeStratum& stratum : rnc_strata(d))
            rows.push_back({{"I", stratum.I},
                            {"t", stratum.t},
                            {"r", stratum.r},
                            {"k", stratum.k},
                            {"term", stratum.term},
                            {"sign", stratum.sign}});
          doc["strata"] = rows;
        }
      } else {
        std::int64_t bound = max_degree >= 0 ? max_degree : d.degree();
        value = ghh_expected_dim(d, bound);
        doc["max_degree"] = bound;
      }
      doc["value"] = value;
      emit(opts, doc, std::to_string(value) + " (conjectural)");
      return 0;
    };
  });

  auto oracle_cmd =
      add_sub("oracle", "h^0 by exact modular rank computation");
  oracle_cmd->add_option("--divisor", divisor_text, "divisor literal")
      ->required();
  oracle_cmd->add_option("--seed", opts.seed, "sampling seed");
  oracle_cmd->add_option("--trials", oracle_trials, "independent trials")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--prime", oracle_prime, "field modulus");
  oracle_cmd->callback([&] {
    action = [&]() {
      OracleOptions oracle_opts;
      oracle_opts.seed = opts.seed;
      oracle_opts.trials = oracle_trials;
      oracle_opts.prime = std::uint32_t(oracle_prime);
      oracle_opts.threads = opts.threads;
      OracleResult result =
          h0_dimension(DivisorClass::parse(divisor_text), oracle_opts);
      std::ostringstream human;
      human << result.h0 << " (" << result.trials << " trials, "
            << (result.confident ? "confident" : "LOW CONFIDENCE") << ")";
      emit(opts,
           json{{"h0", result.h0},
                {"trials", result.trials},
                {"confident", result.confident}},
           human.str());
      return 0;
    };
  });

  auto fixtures_cmd =
      add_sub("fixtures", "run the pinned example suite");
  fixtures_cmd->callback([&] {
    action = [&]() {
      std::vector<FixtureResult> results = run_fixtures();
      int passed = 0;
      json rows = json::array();
      std::ostringstream human;
      for (const FixtureResult& result : results) {
        passed += result.passed;
        rows.push_back({{"name", result.name},
                        {"passed", result.passed},
                        {"detail", result.detail}});
        human << (result.passed ? "PASS " : "FAIL ") << result.name;
        if (!result.passed) human << " [" << result.detail << "]";
        human << "\n";
      }
      int failed = int(results.size()) - passed;
      human << passed << "/" << results.size() << " fixtures passed";
      emit(opts,
           json{{"results", rows},
                {"passed", passed},
                {"failed", failed},
                {"total", results.size()}},
           human.str());
      return failed == 0 ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return (*action)();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
