#include "hlx/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "hlx/errors.hpp"
#include "hlx/exact_series.hpp"
#include "hlx/format.hpp"
#include "hlx/number_parse.hpp"
#include "hlx/output_table.hpp"
#include "hlx/prime_tuples.hpp"
#include "hlx/sequences.hpp"
#include "hlx/sieve.hpp"
#include "hlx/sieve_cache.hpp"
#include "hlx/special_functions.hpp"

namespace hlx {

namespace {

// A table plus the exit code the command wants once the table is written.
struct CommandResult {
  OutputTable table;
  int exit_code = kExitOk;
};

unsigned parse_k(const std::string& text) {
  const std::uint64_t k = parse_count(text);
  if (k < 1) throw DomainError("k must be >= 1");
  if (k > 1000) throw DomainError("k must be <= 1000");
  return static_cast<unsigned>(k);
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  for (const auto& item : split_list(text)) grid.push_back(parse_real(item));
  if (grid.empty()) throw std::invalid_argument("empty x grid");
  return grid;
}

TuplePattern parse_pattern(const std::string& text) {
  std::vector<std::uint64_t> offsets;
  for (const auto& item : split_list(text)) offsets.push_back(parse_count(item));
  return TuplePattern(std::move(offsets));
}

std::uint64_t sieve_cap(const std::string& flag) {
  if (!flag.empty()) return parse_count(flag);
  if (const char* env = std::getenv("HLX_SIEVE_CAP"); env && *env) return parse_count(env);
  return kDefaultSieveCap;
}

SieveRange obtain_sieve(std::uint64_t need, std::uint64_t cap, const std::string& cache_path,
                        std::ostream& err) {
  need = std::max<std::uint64_t>(need, 2);
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    try {
      auto cached = load_sieve_cache(cache_path);
      if (cached.limit() >= need) return cached;
    } catch (const SieveCacheError& e) {
      err << "warning: ignoring sieve cache: " << e.what() << '\n';
    }
  }
  auto s = sieve(need, {kDefaultSegmentBits, cap});
  if (!cache_path.empty()) save_sieve_cache(cache_path, s);
  return s;
}

Cell exact_cell(const ExactRational& q) {
  if (q.get_den() == 1) return BigInt(q.get_num());
  return q.get_str();
}

// ---- seq ----------------------------------------------------------------

struct SeqArgs {
  std::string k, n_max;
  bool brute_check = false;
};

CommandResult cmd_seq(const SeqArgs& a) {
  const unsigned k = parse_k(a.k);
  const std::uint64_t n_max = parse_count(a.n_max);
  if (a.brute_check && k != 1) throw DomainError("--brute-check applies to k = 1 only");
  const auto values = a_seq_prefix(k, n_max);

  std::vector<std::string> cols{"n", "a_n"};
  if (a.brute_check) cols.insert(cols.end(), {"brute_force", "match"});
  CommandResult r{OutputTable(cols)};
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    std::vector<Cell> row{n, values[n]};
    if (a.brute_check) {
      if (n + 1 <= kBruteForceCap) {
        const BigInt brute = indecomposable_bruteforce(static_cast<unsigned>(n + 1));
        const bool match = brute == values[n];
        if (!match) r.exit_code = kExitFailure;
        row.insert(row.end(), {brute, match});
      } else {
        row.insert(row.end(), {Empty{}, Empty{}});
      }
    }
    r.table.add_row(std::move(row));
  }
  return r;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string k, order;
};

CommandResult cmd_verify(const VerifyArgs& a) {
  const unsigned k = parse_k(a.k);
  const std::uint64_t order = parse_count(a.order);
  const auto result = verify_comtet(k, order);
  CommandResult r{OutputTable({"index", "residual"})};
  for (std::size_t i = 0; i <= result.residual.order(); ++i) {
    r.table.add_row({static_cast<std::uint64_t>(i), exact_cell(result.residual[i])});
  }
  if (!result.holds()) r.exit_code = kExitFailure;
  return r;
}

// ---- li -----------------------------------------------------------------

struct LiArgs {
  std::string k = "1", x;
  bool quadrature = false;
};

CommandResult cmd_li(const LiArgs& a) {
  const unsigned k = parse_k(a.k);
  const double x = parse_real(a.x);
  const double closed = li_k(k, x).value;
  if (!a.quadrature) {
    CommandResult r{OutputTable({"k", "x", "li_k"})};
    r.table.add_row({std::uint64_t{k}, x, closed});
    return r;
  }
  const double at_two = li_k(k, 2.0).value;
  const double quad = x >= 2.0 ? quad_li_k(k, 2.0, x).value : -quad_li_k(k, x, 2.0).value;
  const double diff = closed - (quad + at_two);
  CommandResult r{
      OutputTable({"k", "x", "li_k", "quad_2_to_x", "li_k_at_2", "difference", "relative_difference"})};
  r.table.add_row({std::uint64_t{k}, x, closed, quad, at_two, diff, diff / std::fabs(closed)});
  return r;
}

// ---- expand -------------------------------------------------------------

struct ExpandArgs {
  std::string k = "1", terms, x, reference = "li", sieve_limit, offsets, q_bound, sieve_cap;
};

CommandResult cmd_expand(const ExpandArgs& a, std::ostream& err) {
  const unsigned k = parse_k(a.k);
  const std::uint64_t terms = parse_count(a.terms);
  const auto grid = parse_grid(a.x);
  const double x_max = *std::max_element(grid.begin(), grid.end());
  const std::uint64_t cap = sieve_cap(a.sieve_cap);

  std::optional<SieveRange> sieve_store;
  std::optional<TuplePattern> pattern;
  Reference reference;
  if (a.reference == "li" || a.reference == "li_k") {
    reference = li_k_reference(k);
  } else if (a.reference == "pi") {
    if (k != 1) throw DomainError("--reference pi compares against the k = 1 expansion");
    const std::uint64_t limit = a.sieve_limit.empty()
                                    ? static_cast<std::uint64_t>(std::ceil(x_max))
                                    : parse_count(a.sieve_limit);
    sieve_store.emplace(obtain_sieve(limit, cap, "", err));
    reference = prime_count_reference(*sieve_store);
  } else if (a.reference == "tuples") {
    if (a.offsets.empty()) throw std::invalid_argument("--reference tuples needs --offsets");
    pattern.emplace(parse_pattern(a.offsets));
    if (k != pattern->k() + 1) {
      throw DomainError("--reference tuples with " + std::to_string(pattern->k()) +
                        " offsets compares against k = " + std::to_string(pattern->k() + 1));
    }
    const std::uint64_t q_bound = a.q_bound.empty() ? kDefaultQBound : parse_count(a.q_bound);
    const double constant = singular_series(*pattern, q_bound).value;
    const std::uint64_t limit = a.sieve_limit.empty() ? required_sieve_limit(*pattern, x_max)
                                                      : parse_count(a.sieve_limit);
    sieve_store.emplace(obtain_sieve(limit, cap, "", err));
    reference = tuple_count_reference(*sieve_store, *pattern, constant);
  } else {
    throw std::invalid_argument("unknown reference '" + a.reference + "' (li|pi|tuples)");
  }

  const auto report = error_ratio_report(k, terms, grid, reference);
  CommandResult r{OutputTable({"x", "reference", "partial_sum", "normalized_error"})};
  for (const auto& row : report.rows) {
    r.table.add_row({row.x, row.reference_value, row.partial_sum, row.normalized_error});
  }
  return r;
}

// ---- tuples -------------------------------------------------------------

struct TuplesArgs {
  std::string offsets, limit, terms = "2", q_bound, sieve_cache, x, sieve_cap;
  bool hl_compare = false;
};

std::vector<double> default_grid(std::uint64_t limit) {
  std::vector<double> grid;
  for (double x = 1e3; x < static_cast<double>(limit); x *= 10) grid.push_back(x);
  grid.push_back(static_cast<double>(limit));
  return grid;
}

CommandResult cmd_tuples(const TuplesArgs& a, std::ostream& err) {
  const TuplePattern pattern = parse_pattern(a.offsets);
  const std::uint64_t limit = parse_count(a.limit);
  const std::uint64_t cap = sieve_cap(a.sieve_cap);

  if (!a.hl_compare) {
    const auto s =
        obtain_sieve(required_sieve_limit(pattern, static_cast<double>(limit)), cap, a.sieve_cache, err);
    CommandResult r{OutputTable({"pattern", "limit", "count"})};
    r.table.add_row({pattern.to_string(), limit, tuple_count(s, pattern, static_cast<double>(limit))});
    return r;
  }

  if (const auto adm = is_admissible(pattern); !adm.admissible) {
    throw InadmissibleError("pattern (" + pattern.to_string() +
                                ") covers every residue class modulo " +
                                std::to_string(*adm.witness),
                            *adm.witness);
  }
  const std::uint64_t terms = parse_count(a.terms);
  const std::uint64_t q_bound = a.q_bound.empty() ? kDefaultQBound : parse_count(a.q_bound);
  const auto grid = a.x.empty() ? default_grid(limit) : parse_grid(a.x);
  const double x_max = *std::max_element(grid.begin(), grid.end());
  const auto s = obtain_sieve(required_sieve_limit(pattern, x_max), cap, a.sieve_cache, err);
  const auto cmp = hl_compare(s, pattern, grid, terms, q_bound);

  CommandResult r{OutputTable({"x", "count", "prediction_a", "ratio_a",
                               "prediction_b_conjectural", "ratio_b_conjectural",
                               "singular_series", "singular_series_error_bound"})};
  for (const auto& row : cmp.rows) {
    r.table.add_row({row.x, row.count, row.prediction_a, row.ratio_a, row.prediction_b,
                     row.ratio_b, cmp.constant.value, cmp.constant.error_bound.value_or(0.0)});
  }
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recurrence family a_n^(k), Comtet identity checks, Hardy-Littlewood integrals "
               "and prime-tuple comparisons",
               "hlx"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  std::string output_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output_path, "Write the table to PATH instead of stdout");

  std::function<CommandResult()> command;

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print a_n^(k) for n = 0..n-max");
  seq_cmd->add_option("--k", seq.k, "Sequence index k >= 1")->required();
  seq_cmd->add_option("--n-max", seq.n_max, "Largest n")->required();
  seq_cmd->add_flag("--brute-check", seq.brute_check,
                    "For k = 1, compare against enumerated indecomposable permutations");
  seq_cmd->callback([&] { command = [&] { return cmd_seq(seq); }; });

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exact residual of the generalized Comtet identity");
  verify_cmd->add_option("--k", verify.k, "k >= 1")->required();
  verify_cmd->add_option("--order", verify.order, "Truncation order")->required();
  verify_cmd->callback([&] { command = [&] { return cmd_verify(verify); }; });

  LiArgs li_args;
  auto* li_cmd = app.add_subcommand("li", "Hardy-Littlewood logarithmic integral li_k(x)");
  li_cmd->add_option("--k", li_args.k, "k >= 1")->capture_default_str();
  li_cmd->add_option("--x", li_args.x, "x > 1")->required();
  li_cmd->add_flag("--quadrature", li_args.quadrature,
                   "Also integrate from 2 numerically and report the difference");
  li_cmd->callback([&] { command = [&] { return cmd_li(li_args); }; });

  ExpandArgs expand;
  auto* expand_cmd =
      app.add_subcommand("expand", "Truncated expansion of 1/li_k(x) against a reference");
  expand_cmd->add_option("--k", expand.k, "k >= 1")->capture_default_str();
  expand_cmd->add_option("--terms", expand.terms, "Number N of a_n terms kept")->required();
  expand_cmd->add_option("--x", expand.x, "Comma-separated increasing x grid")->required();
  expand_cmd->add_option("--reference", expand.reference, "li | pi | tuples")
      ->capture_default_str();
  expand_cmd->add_option("--sieve-limit", expand.sieve_limit, "Sieve limit for pi/tuples");
  expand_cmd->add_option("--offsets", expand.offsets, "Tuple offsets for --reference tuples");
  expand_cmd->add_option("--q-bound", expand.q_bound, "Singular series prime bound");
  expand_cmd->add_option("--sieve-cap", expand.sieve_cap, "Override the sieve cap");
  expand_cmd->callback([&] { command = [&] { return cmd_expand(expand, err); }; });

  TuplesArgs tuples;
  auto* tuples_cmd = app.add_subcommand("tuples", "Count prime tuples p, p+2m_1, ..., p+2m_k");
  tuples_cmd->add_option("--offsets", tuples.offsets, "Even offsets, e.g. 0,2,6")->required();
  tuples_cmd->add_option("--limit", tuples.limit, "Count p <= limit")->required();
  tuples_cmd->add_flag("--hl-compare", tuples.hl_compare,
                       "Compare with the Hardy-Littlewood prediction");
  tuples_cmd->add_option("--terms", tuples.terms, "Expansion terms for prediction B")
      ->capture_default_str();
  tuples_cmd->add_option("--q-bound", tuples.q_bound, "Singular series prime bound");
  tuples_cmd->add_option("--sieve-cache", tuples.sieve_cache, "Sieve bitmap cache file");
  tuples_cmd->add_option("--x", tuples.x, "Comparison grid (default: decades up to limit)");
  tuples_cmd->add_option("--sieve-cap", tuples.sieve_cap, "Override the sieve cap");
  tuples_cmd->callback([&] { command = [&] { return cmd_tuples(tuples, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const CommandResult result = command();
    const OutputFormat fmt = format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (output_path.empty()) {
      result.table.write(out, fmt);
      out.flush();
    } else {
      std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "error: cannot open " << output_path << '\n';
        return kExitFailure;
      }
      result.table.write(file, fmt);
    }
    if (result.exit_code == kExitFailure) err << "error: verification failed\n";
    return result.exit_code;
  } catch (const InadmissibleError& e) {
    err << "error: " << e.what() << " (witness q=" << e.witness() << ")\n";
    return kExitInadmissible;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRange;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hlx
