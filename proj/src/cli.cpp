#include "reglang/cli.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "reglang/components.hpp"
#include "reglang/dfa.hpp"
#include "reglang/error.hpp"
#include "reglang/graph.hpp"
#include "reglang/metrics.hpp"
#include "reglang/oracle.hpp"
#include "reglang/regex.hpp"
#include "reglang/spectral.hpp"

namespace reglang::cli {
namespace {

using nlohmann::json;

double round12(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e6) return x;
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

void round_floats(json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& child : j) round_floats(child);
  }
}

void emit(std::ostream& out, json j) {
  round_floats(j);
  out << j.dump(2) << '\n';
}

std::size_t state_cap(const CliConfig& config) {
  if (config.max_states) return config.max_states;
  if (const char* env = std::getenv("REGLANG_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw Error("REGLANG_MAX_STATES must be a positive integer, got '" + std::string(env) + "'");
    return static_cast<std::size_t>(v);
  }
  return kDefaultMaxStates;
}

// Common alphabet: the override if given (it must cover every literal),
// otherwise the union of the literals.
Alphabet common_alphabet(const std::vector<std::string>& regexes, const std::optional<std::string>& override) {
  Alphabet literals;
  for (const auto& r : regexes) literals = literals.united(literals_of(parse_regex(r)));
  if (override) {
    Alphabet chosen{*override};
    if (!chosen.includes(literals))
      throw AlphabetError("alphabet {" + chosen.symbols() + "} does not cover the literals {" +
                          literals.symbols() + "}");
    literals = chosen;
  }
  if (literals.empty()) throw AlphabetError("empty alphabet; pass --alphabet");
  return literals;
}

DistanceOptions distance_options(const CliConfig& config, std::size_t cap) {
  DistanceOptions options;
  options.n = config.n;
  options.max_states = cap;
  if (config.tol) options.cesaro.tolerance = *config.tol;
  options.cesaro.exact_length = config.prime;
  if (config.mode == "empirical") options.cesaro.mode = CesaroMode::Empirical;
  else if (config.mode == "analytic") options.cesaro.mode = CesaroMode::Analytic;
  else if (config.mode == "auto") options.cesaro.mode = CesaroMode::Auto;
  else throw Error("unknown mode '" + config.mode + "'");
  return options;
}

Metric metric_of(const CliConfig& config) {
  auto metric = metric_from_cli_name(config.metric);
  if (!metric) throw Error("unknown metric '" + config.metric + "'");
  if ((*metric == Metric::JnExact || *metric == Metric::JnCum) && !config.n)
    throw Error("metric " + config.metric + " needs --n");
  return *metric;
}

int entropy_command(const CliConfig& config, std::ostream& out) {
  const Alphabet alphabet = common_alphabet(config.regexes, config.alphabet);
  const Dfa dfa = dfa_from_regex(config.regexes.front(), alphabet, state_cap(config));
  json j = to_json(language_entropy(dfa));
  j["regex"] = config.regexes.front();
  j["alphabet"] = alphabet.symbols();
  emit(out, std::move(j));
  return kExitOk;
}

int distance_command(const CliConfig& config, std::ostream& out) {
  const Metric metric = metric_of(config);
  const std::size_t cap = state_cap(config);
  const Alphabet alphabet = common_alphabet(config.regexes, config.alphabet);
  const Dfa l1 = dfa_from_regex(config.regexes[0], alphabet, cap);
  const Dfa l2 = dfa_from_regex(config.regexes[1], alphabet, cap);
  emit(out, to_json(compute_distance(metric, l1, l2, distance_options(config, cap))));
  return kExitOk;
}

std::vector<std::string> read_regex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::vector<std::string> regexes;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) regexes.push_back(line);
  }
  if (regexes.empty()) throw Error("'" + path + "' has no regexes");
  return regexes;
}

int matrix_command(const CliConfig& config, std::ostream& out) {
  const Metric metric = metric_of(config);
  const std::size_t cap = state_cap(config);
  const auto regexes = read_regex_file(config.file);
  const Alphabet alphabet = common_alphabet(regexes, config.alphabet);
  std::vector<Dfa> dfas;
  for (const auto& r : regexes) dfas.push_back(dfa_from_regex(r, alphabet, cap));
  const DistanceOptions options = distance_options(config, cap);

  // Upper triangle in row-major order; rows print as soon as they complete.
  const std::size_t n = dfas.size();
  struct Task {
    std::size_t i, j;
  };
  std::vector<Task> tasks;
  std::vector<std::size_t> row_end;  // tasks of row i end at row_end[i]
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) tasks.push_back({i, j});
    row_end.push_back(tasks.size());
  }
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  std::vector<char> done(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::string error_pair;
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next++;
      if (t >= tasks.size() || failed) break;
      const auto [i, j] = tasks[t];
      try {
        const double value = compute_distance(metric, dfas[i], dfas[j], options).value;
        std::lock_guard lock(mu);
        d[i][j] = d[j][i] = value;
        done[t] = 1;
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failed) {
          error = std::current_exception();
          error_pair = "pair (" + std::to_string(i) + ", " + std::to_string(j) + "): ";
        }
        failed = true;
      }
      cv.notify_all();
    }
    cv.notify_all();
  };

  std::size_t workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);

  std::size_t checked = 0;
  for (std::size_t i = 0; i < n && !failed; ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] {
      while (checked < row_end[i] && done[checked]) ++checked;
      return checked == row_end[i] || failed;
    });
    if (failed) break;
    for (std::size_t j = 0; j < n; ++j) {
      json cell = round12(d[i][j]);
      out << (j ? "," : "") << cell.dump();
    }
    out << '\n' << std::flush;
  }
  for (auto& t : pool) t.join();
  if (error) {
    try {
      std::rethrow_exception(error);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(error_pair + e.what(), e.residual(), e.partial_value());
    } catch (const std::exception& e) {
      throw Error(error_pair + e.what());
    }
  }
  return kExitOk;
}

int analyze_command(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const std::string& text = config.regexes.front();
  const Alphabet alphabet = common_alphabet(config.regexes, config.alphabet);
  const RegexAst ast = parse_regex(text, alphabet);
  const Dfa dfa = dfa_from_regex(text, alphabet, state_cap(config));
  const LabeledGraph trimmed = trim(dfa);
  const SpectralReport spectrum = language_entropy(dfa);

  std::vector<oracle::CountRow> rows;
  if (config.counts) {
    CountStream stream(count_vectors(trimmed));
    for (;;) {
      rows.push_back({stream.length(), stream.exact(), stream.cumulative()});
      if (stream.length() >= *config.counts) break;
      stream.advance();
    }
  }

  std::optional<json> verification;
  bool verified = true;
  if (config.verify) {
    const oracle::OracleBudget budget;
    std::size_t n_max = std::min(budget.n_max, config.counts.value_or(budget.n_max));
    while (n_max > 0) {
      try {
        budget.check(alphabet, n_max);
        break;
      } catch (const LimitError&) {
        --n_max;
      }
    }
    const auto words = oracle::enumerate_words(alphabet, n_max, budget);
    std::size_t membership_mismatches = 0;
    for (const auto& w : words)
      if (oracle::ast_matches(ast, w) != dfa.accepts(w)) ++membership_mismatches;
    const auto expected = oracle::oracle_counts(oracle::membership_of(ast), alphabet, n_max, budget);
    CountStream stream(count_vectors(trimmed));
    std::size_t count_mismatches = 0;
    for (const auto& row : expected) {
      if (row.exact != stream.exact() || row.cumulative != stream.cumulative()) ++count_mismatches;
      stream.advance();
    }
    verified = membership_mismatches == 0 && count_mismatches == 0;
    verification = json{{"n_max", n_max},
                        {"words_checked", words.size()},
                        {"membership_mismatches", membership_mismatches},
                        {"count_mismatches", count_mismatches},
                        {"ok", verified}};
  }

  if (config.format == "csv") {
    out << "n,exact,cumulative\n";
    for (const auto& r : rows) out << r.n << ',' << r.exact.get_str() << ',' << r.cumulative.get_str() << '\n';
  } else {
    json j = {{"regex", to_string(ast)},
              {"alphabet", alphabet.symbols()},
              {"dfa_states", dfa.state_count()},
              {"trim_vertices", trimmed.vertex_count()},
              {"trim_edges", trimmed.edges().size()},
              {"components", to_json(scc_decompose(trimmed))},
              {"entropy", to_json(spectrum)}};
    if (config.counts) {
      json counts = json::array();
      for (const auto& r : rows)
        counts.push_back({{"n", r.n}, {"exact", r.exact.get_str()}, {"cumulative", r.cumulative.get_str()}});
      j["counts"] = std::move(counts);
    }
    if (config.dump) j["dfa"] = to_json(dfa);
    if (verification) j["verify"] = *verification;
    emit(out, std::move(j));
  }
  if (!verified) {
    err << "error: oracle verification failed\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace

std::optional<int> parse(int argc, const char* const* argv, CliConfig& config, std::ostream& out,
                         std::ostream& err) {
  CLI::App app{"Distances between regular languages"};
  app.require_subcommand(1);
  app.add_option("--max-states", config.max_states, "Cap on automaton size (default REGLANG_MAX_STATES or 1e6)");

  auto* entropy = app.add_subcommand("entropy", "Topological entropy of a regular language");
  entropy->add_option("regex", config.regexes, "Regular expression")->required()->expected(1);
  entropy->add_option("--alphabet", config.alphabet, "Alphabet symbols");

  const std::vector<std::string> metrics{"jn", "jnp", "jc", "h", "hs"};
  const std::vector<std::string> modes{"auto", "empirical", "analytic"};
  auto add_metric_options = [&](CLI::App* sub) {
    sub->add_option("--metric", config.metric, "jn, jnp, jc, h or hs")->required()->check(CLI::IsMember(metrics));
    sub->add_option("--n", config.n, "Length for jn/jnp; number of terms for empirical jc");
    sub->add_option("--mode", config.mode, "jc mode")->check(CLI::IsMember(modes));
    sub->add_option("--tol", config.tol, "jc per-residue tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--alphabet", config.alphabet, "Alphabet symbols");
    sub->add_flag("--prime", config.prime, "jc over exact-length distances");
  };

  auto* distance = app.add_subcommand("distance", "Distance between two languages");
  add_metric_options(distance);
  distance->add_option("regexes", config.regexes, "Two regular expressions")->required()->expected(2);

  auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix as CSV");
  add_metric_options(matrix);
  matrix->add_option("--file", config.file, "One regex per line")->required();
  matrix->add_option("--threads", config.threads, "Worker threads (0 = all cores)");

  auto* analyze = app.add_subcommand("analyze", "Automaton, components, entropy and counts");
  analyze->add_option("regex", config.regexes, "Regular expression")->required()->expected(1);
  analyze->add_option("--alphabet", config.alphabet, "Alphabet symbols");
  analyze->add_option("--counts", config.counts, "Print |W_n| and |W_<=n| for n up to N");
  analyze->add_flag("--dump", config.dump, "Include the minimal DFA");
  analyze->add_flag("--verify", config.verify, "Check against brute-force enumeration");
  analyze->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (entropy->parsed()) config.command = Command::Entropy;
  else if (distance->parsed()) config.command = Command::Distance;
  else if (matrix->parsed()) config.command = Command::Matrix;
  else config.command = Command::Analyze;
  return std::nullopt;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Entropy: return entropy_command(config, out);
      case Command::Distance: return distance_command(config, out);
      case Command::Matrix: return matrix_command(config, out);
      case Command::Analyze: return analyze_command(config, out, err);
    }
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what();
    if (e.partial_value()) err << "; partial value " << round12(*e.partial_value());
    err << "; residual " << e.residual() << '\n';
    return kExitConvergence;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    return kExitInput;
  } catch (const AlphabetError& e) {
    err << "alphabet error: " << e.what() << '\n';
    return kExitInput;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  if (auto code = parse(argc, argv, config, out, err)) return *code;
  return run(config, out, err);
}

}  // namespace reglang::cli
