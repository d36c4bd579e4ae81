#include "dyck/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>

#include "dyck/bijection.hpp"
#include "dyck/cycle.hpp"
#include "dyck/enumerate.hpp"
#include "dyck/error.hpp"
#include "dyck/sampler.hpp"
#include "dyck/series.hpp"

namespace dyck::cli {

namespace {

using nlohmann::json;

constexpr int kMaxCountN = 200;
constexpr int kMaxSeriesOrder = 100;
constexpr int kMaxSampleN = 100000;
constexpr std::uint64_t kMaxSampleCount = 10000000;

enum class Format { Text, Json };

struct CountArgs {
  int n = 0;
  bool brute_force = false;
};

struct VerifyArgs {
  int max_n = 0;
};

struct PhiArgs {
  std::string dir;
  std::string path;
  int times = 1;
};

struct CycleArgs {
  std::string seq;
};

struct SeriesArgs {
  int order = 0;
};

struct SampleArgs {
  int n = 0;
  std::optional<int> k;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

// Counts are emitted as decimal strings; they exceed 64 bits for n > 35.
json count_table_json(const CountTable& table) {
  json counts = json::array();
  for (std::size_t k = 0; k < table.counts.size(); ++k) {
    counts.push_back({{"k", k}, {"count", table.counts[k].str()}});
  }
  return {{"n", table.n}, {"counts", std::move(counts)}};
}

template <typename T>
std::string join_tabs(const std::vector<T>& values) {
  std::string out;
  for (const auto& v : values) {
    out += '\t';
    out += std::to_string(v);
  }
  return out;
}

int run_count(const CountArgs& args, Format format, std::ostream& out,
              std::ostream& err) {
  const CountTable table = count_table_recurrence(args.n);
  std::optional<std::size_t> mismatch;
  if (args.brute_force) {
    const CountTable brute = partition_by_negativity(args.n);
    for (std::size_t k = 0; k < table.counts.size() && !mismatch; ++k) {
      if (brute.counts[k] != table.counts[k]) mismatch = k;
    }
  }
  if (format == Format::Json) {
    json doc = count_table_json(table);
    if (args.brute_force) doc["brute_force_agrees"] = !mismatch.has_value();
    out << doc.dump() << '\n';
  } else {
    out << to_text(table);
  }
  if (mismatch) {
    err << "count: recurrence and brute force disagree at k=" << *mismatch
        << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& args, const CountingMethods& methods,
               Format format, std::ostream& out, std::ostream& err) {
  const auto rows = verify_theorem(args.max_n, methods);
  bool all_pass = true;
  json doc_rows = json::array();
  for (const auto& row : rows) {
    all_pass = all_pass && row.pass();
    if (format == Format::Json) {
      json failures = json::array();
      const std::string names = row.failures();
      std::size_t start = 0;
      while (start < names.size()) {
        const std::size_t comma = names.find(',', start);
        const std::size_t stop = comma == std::string::npos ? names.size() : comma;
        failures.push_back(names.substr(start, stop - start));
        start = stop + 1;
      }
      doc_rows.push_back({{"n", row.n},
                          {"catalan", row.catalan.str()},
                          {"pass", row.pass()},
                          {"failures", std::move(failures)}});
    } else {
      out << row.n << '\t' << row.catalan.str() << '\t'
          << (row.pass() ? "PASS" : "FAIL");
      if (!row.pass()) out << '\t' << row.failures();
      out << '\n';
    }
  }
  if (format == Format::Json) {
    out << json{{"max_n", args.max_n}, {"pass", all_pass},
                {"rows", std::move(doc_rows)}}
               .dump()
        << '\n';
  }
  if (!all_pass) {
    err << "verify: cross-check failed\n";
    return kExitDomainError;
  }
  return kExitOk;
}

int run_phi(const PhiArgs& args, Format format, std::ostream& out,
            std::ostream& err) {
  const bool up = args.dir == "up";
  LatticePath current = parse_path(args.path);
  json steps = json::array();
  int applied = 0;
  std::optional<Error> failure;
  for (; applied < args.times; ++applied) {
    try {
      current = up ? phi_plus(current) : phi_minus(current);
    } catch (const Error& e) {
      failure = e;
      break;
    }
    const int k = negativity(current);
    if (format == Format::Json) {
      steps.push_back({{"path", render_path(current)}, {"negativity", k}});
    } else {
      out << render_path(current) << '\t' << k << '\n';
    }
  }
  if (format == Format::Json) {
    out << json{{"direction", args.dir},
                {"start", args.path},
                {"requested", args.times},
                {"applied", applied},
                {"steps", std::move(steps)}}
               .dump()
        << '\n';
  }
  if (failure) {
    err << "phi: " << failure->what() << " (" << applied << " of "
        << args.times << " applications succeeded)\n";
    return kExitDomainError;
  }
  return kExitOk;
}

int run_cycle(const CycleArgs& args, Format format, std::ostream& out) {
  const CyclicSequence seq = parse_sequence(args.seq);
  const auto sums = partial_sums(seq);
  const auto ranks = rank_order(seq).ranks;
  const auto shifts = dominating_shifts(seq);
  std::optional<CanonicalRotation> canonical;
  if (seq.sum() == 1) canonical = canonical_rotation(seq);

  if (format == Format::Json) {
    json doc{{"sequence", args.seq},
             {"sum", seq.sum()},
             {"partial_sums", sums},
             {"ranks", ranks},
             {"dominating_shifts", shifts}};
    if (canonical) {
      doc["canonical"] = {{"shift", canonical->shift},
                          {"rotation", render_sequence(canonical->rotation)}};
    }
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << "sum\t" << seq.sum() << '\n';
  out << "partial_sums" << join_tabs(sums) << '\n';
  out << "ranks" << join_tabs(ranks) << '\n';
  out << "dominating" << join_tabs(shifts) << '\n';
  if (canonical) {
    out << "canonical\t" << canonical->shift << '\t'
        << render_sequence(canonical->rotation) << '\n';
  }
  return kExitOk;
}

int run_series(const SeriesArgs& args, Format format, std::ostream& out) {
  const BivariateSeries series = n_series(args.order);
  if (format == Format::Json) {
    json terms = json::array();
    for (int n = 0; n <= series.order(); ++n) {
      for (int k = 0; k <= n; ++k) {
        terms.push_back(
            {{"n", n}, {"k", k}, {"coefficient", series.coeff(n, k).str()}});
      }
    }
    out << json{{"order", args.order}, {"terms", std::move(terms)}}.dump()
        << '\n';
  } else {
    out << to_text(series);
  }
  return kExitOk;
}

int run_sample(const SampleArgs& args, Format format, std::ostream& out) {
  const int k = args.k.value_or(0);
  if (k < 0 || k > args.n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "negativity " + std::to_string(k) + " outside 0.." +
                    std::to_string(args.n));
  }
  RandomSource rng(args.seed);
  json paths = json::array();
  for (std::uint64_t i = 0; i < args.count; ++i) {
    const std::string path = render_path(sample_k_negative(args.n, k, rng));
    if (format == Format::Json) {
      paths.push_back(path);
    } else {
      out << path << '\n';
    }
  }
  if (format == Format::Json) {
    out << json{{"n", args.n},
                {"k", k},
                {"seed", args.seed},
                {"count", args.count},
                {"paths", std::move(paths)}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const CountingMethods& methods) {
  CLI::App app{"Lattice path toolkit: Dyck paths, negativity classes, cycle "
               "lemma and uniform sampling",
               "dyck"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Counts |S_k| for k = 0..n");
  count->add_option("--n", count_args.n, "Half-length")
      ->required()
      ->check(CLI::Range(0, kMaxCountN));
  count->add_flag("--brute-force", count_args.brute_force,
                  "Compare against exhaustive enumeration");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Cross-checks enumeration, recurrence, series and bijection");
  verify->add_option("--max-n", verify_args.max_n, "Largest half-length")
      ->required()
      ->check(CLI::NonNegativeNumber);

  PhiArgs phi_args;
  auto* phi = app.add_subcommand("phi", "Applies phi+ (up) or phi- (down)");
  phi->add_option("--dir", phi_args.dir, "up or down")
      ->required()
      ->check(CLI::IsMember({"up", "down"}));
  phi->add_option("--path", phi_args.path, "Path over U/D")->required();
  phi->add_option("--times", phi_args.times, "Number of applications")
      ->check(CLI::NonNegativeNumber);

  CycleArgs cycle_args;
  auto* cycle = app.add_subcommand("cycle", "Cycle lemma report");
  cycle->add_option("--seq", cycle_args.seq, "Sequence over +/-")->required();

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Dumps N(t,x) coefficients");
  series->add_option("--order", series_args.order, "Truncation order in x")
      ->required()
      ->check(CLI::Range(0, kMaxSeriesOrder));

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Uniform random paths");
  sample->add_option("--n", sample_args.n, "Half-length")
      ->required()
      ->check(CLI::Range(0, kMaxSampleN));
  sample->add_option("--k", sample_args.k, "Negativity (default 0)")
      ->check(CLI::NonNegativeNumber);
  sample->add_option("--count", sample_args.count, "Number of paths")
      ->required()
      ->check(CLI::Range(std::uint64_t{0}, kMaxSampleCount));
  sample->add_option("--seed", sample_args.seed, "64-bit seed")->required();

  std::vector<const char*> argv{"dyck"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  const Format format = format_name == "json" ? Format::Json : Format::Text;
  try {
    if (count->parsed()) return run_count(count_args, format, out, err);
    if (verify->parsed()) {
      return run_verify(verify_args, methods, format, out, err);
    }
    if (phi->parsed()) return run_phi(phi_args, format, out, err);
    if (cycle->parsed()) return run_cycle(cycle_args, format, out);
    if (series->parsed()) return run_series(series_args, format, out);
    if (sample->parsed()) return run_sample(sample_args, format, out);
  } catch (const Error& e) {
    err << app.get_subcommands().front()->get_name() << ": " << e.what()
        << '\n';
    return kExitDomainError;
  }
  return kExitUsageError;
}

}  // namespace dyck::cli
