// Command-line front end: sequence tables, identity verification, series
// inspection, and classical-limit comparison.
//
// Exit codes: 0 = all expectations met, 1 = an identity expectation was
// violated, 2 = usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degen/poly.hpp"
#include "degen/rational.hpp"
#include "degen/sequences.hpp"
#include "degen/series.hpp"
#include "degen/verifier.hpp"
#include "degen/version.hpp"

namespace {

using degen::PolyLambda;
using degen::Rational;
using nlohmann::ordered_json;

struct CommonOpts {
  std::string format = "text";
  bool ascii = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--ascii", opts.ascii, "render 'L' for the formal parameter and '*' for the dot");
}

// 1/k^m denominators grow quickly with m; exact arithmetic stays correct but
// slow, so orders above 8 need an explicit opt-in.
constexpr long kDefaultMCap = 8;

void check_m_cap(std::optional<long> m, bool no_cap) {
  if (!m || no_cap) return;
  long mag = *m < 0 ? -*m : *m;
  if (mag > kDefaultMCap)
    throw std::invalid_argument("order m is capped at 8 by default; pass --no-m-cap to lift it");
}

ordered_json poly_json(const PolyLambda& p, bool ascii) {
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : p.coeffs())
    coeffs.push_back({c.numerator().get_str(), c.denominator().get_str()});
  return ordered_json{{"text", p.str(ascii)}, {"coeffs", std::move(coeffs)}};
}

std::string poly_csv_coeffs(const PolyLambda& p) {
  std::string out;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ";";
    out += p.coeffs()[i].numerator().get_str() + "/" + p.coeffs()[i].denominator().get_str();
  }
  return out;
}

ordered_json json_header(const std::string& command) {
  return ordered_json{
      {"tool", degen::kToolName}, {"version", degen::kToolVersion}, {"command", command}};
}

struct IndexedRow {
  long index;
  PolyLambda value;
};

/// Shared emission for table/series rows: "<index>, <canonical text>".
void emit_rows(const std::string& command, const ordered_json& meta,
               const std::vector<IndexedRow>& rows, const CommonOpts& opts) {
  if (opts.format == "text") {
    for (const auto& row : rows)
      std::cout << row.index << ", " << row.value.str(opts.ascii) << "\n";
    return;
  }
  if (opts.format == "csv") {
    std::cout << "n,m,text,coeffs\n";
    std::string m = meta.contains("m") && !meta["m"].is_null()
                        ? std::to_string(meta["m"].get<long>())
                        : (meta.contains("k") && !meta["k"].is_null()
                               ? std::to_string(meta["k"].get<long>())
                               : std::string());
    for (const auto& row : rows)
      std::cout << row.index << "," << m << "," << degen::csv_quote(row.value.str(opts.ascii))
                << "," << degen::csv_quote(poly_csv_coeffs(row.value)) << "\n";
    return;
  }
  ordered_json doc = json_header(command);
  for (const auto& [key, val] : meta.items()) doc[key] = val;
  ordered_json jrows = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json jr{{"n", row.index}};
    ordered_json value = poly_json(row.value, opts.ascii);
    for (const auto& [key, val] : value.items()) jr[key] = val;
    jrows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(jrows);
  std::cout << doc.dump(2) << "\n";
}

int run_table(const std::string& seq_name, long n, std::optional<long> m,
              const std::optional<std::string>& lambda_str, bool no_m_cap,
              const CommonOpts& opts) {
  degen::SequenceId id = degen::parse_sequence_id(seq_name);
  if (id == degen::SequenceId::H_order || id == degen::SequenceId::K ||
      id == degen::SequenceId::harmonic_order)
    check_m_cap(m, no_m_cap);
  degen::SequenceTable table = degen::build_sequence_table(id, n, m);
  std::optional<Rational> lambda;
  if (lambda_str) lambda = Rational::parse(*lambda_str);

  std::vector<IndexedRow> rows;
  for (const auto& row : table.rows) {
    PolyLambda value = lambda ? PolyLambda(row.value.eval(*lambda)) : row.value;
    rows.push_back({row.index, std::move(value)});
  }
  ordered_json meta{{"seq", seq_name}, {"n", n}};
  meta["m"] = m ? ordered_json(*m) : ordered_json(nullptr);
  meta["lambda"] = lambda ? ordered_json(lambda->str()) : ordered_json(nullptr);
  emit_rows("table", meta, rows, opts);
  return 0;
}

int run_series(const std::string& gf_name, long terms, std::optional<long> m,
               std::optional<long> k, const std::string& x_str,
               const std::optional<std::string>& lambda_str, bool no_m_cap,
               const CommonOpts& opts) {
  if (terms < 1) throw std::invalid_argument("series: --terms must be >= 1");
  if (gf_name == "H_order" || gf_name == "K" || gf_name == "polylog") check_m_cap(m, no_m_cap);
  int order = static_cast<int>(terms);
  auto need_m = [&]() -> long {
    if (!m) throw std::invalid_argument("series: --gf " + gf_name + " requires --m");
    return *m;
  };
  auto need_k = [&]() -> long {
    if (!k) throw std::invalid_argument("series: --gf " + gf_name + " requires --k");
    return *k;
  };

  degen::TruncatedSeries s(order);
  if (gf_name == "H") s = degen::gf_H(order);
  else if (gf_name == "H_order") s = degen::gf_H_order(need_m(), order);
  else if (gf_name == "K") s = degen::gf_K(need_m(), order);
  else if (gf_name == "polylog") s = degen::gf_polylog(need_m(), order);
  else if (gf_name == "deglog") s = degen::gf_deg_log(order);
  else if (gf_name == "degexp") s = degen::gf_deg_exp(Rational::parse(x_str), order);
  else if (gf_name == "stirling1_unsigned") s = degen::gf_stirling_unsigned(need_k(), order);
  else if (gf_name == "lah") s = degen::gf_lah(need_k(), order);
  else if (gf_name == "deg_derangement") s = degen::gf_deg_derangement(order);
  else throw std::invalid_argument("unknown generating function id '" + gf_name + "'");

  std::optional<Rational> lambda;
  if (lambda_str) lambda = Rational::parse(*lambda_str);
  std::vector<IndexedRow> rows;
  for (int i = 0; i <= order; ++i) {
    PolyLambda value = lambda ? PolyLambda(s.coeff(i).eval(*lambda)) : s.coeff(i);
    rows.push_back({i, std::move(value)});
  }
  ordered_json meta{{"gf", gf_name}, {"terms", terms}};
  meta["m"] = m ? ordered_json(*m) : ordered_json(nullptr);
  meta["k"] = k ? ordered_json(*k) : ordered_json(nullptr);
  if (gf_name == "degexp") meta["x"] = x_str;
  meta["lambda"] = lambda ? ordered_json(lambda->str()) : ordered_json(nullptr);
  emit_rows("series", meta, rows, opts);
  return 0;
}

int run_limit(const std::string& seq_name, long n, std::optional<long> m,
              const CommonOpts& opts) {
  degen::SequenceId id = degen::parse_sequence_id(seq_name);
  if (!degen::sequence_has_classical_limit(id))
    throw std::invalid_argument("sequence '" + seq_name + "' has no classical counterpart");
  degen::SequenceTable table = degen::build_sequence_table(id, n, m);

  bool all_match = true;
  struct LimitRow {
    long index;
    Rational degenerate, classical;
    bool match;
  };
  std::vector<LimitRow> rows;
  for (const auto& row : table.rows) {
    Rational at_zero = row.value.eval(Rational(0));
    Rational classical = degen::classical_counterpart(id, row.index, m);
    bool match = (at_zero == classical);
    all_match = all_match && match;
    rows.push_back({row.index, at_zero, classical, match});
  }

  if (opts.format == "text") {
    for (const auto& row : rows)
      std::cout << row.index << ", " << row.degenerate.str() << ", " << row.classical.str()
                << ", " << (row.match ? "ok" : "MISMATCH") << "\n";
  } else if (opts.format == "csv") {
    std::cout << "n,degenerate,classical,match\n";
    for (const auto& row : rows)
      std::cout << row.index << "," << row.degenerate.str() << "," << row.classical.str() << ","
                << (row.match ? "true" : "false") << "\n";
  } else {
    ordered_json doc = json_header("limit");
    doc["seq"] = seq_name;
    doc["n"] = n;
    doc["m"] = m ? ordered_json(*m) : ordered_json(nullptr);
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows)
      jrows.push_back(ordered_json{{"n", row.index},
                                   {"degenerate", row.degenerate.str()},
                                   {"classical", row.classical.str()},
                                   {"match", row.match}});
    doc["rows"] = std::move(jrows);
    std::cout << doc.dump(2) << "\n";
  }
  return all_match ? 0 : 1;
}

int run_verify(const degen::SuiteConfig& cfg, const std::optional<std::string>& only,
               const CommonOpts& opts) {
  degen::VerificationReport report =
      only ? degen::run_identity(*only, cfg) : degen::run_all(cfg);
  if (opts.format == "json")
    std::cout << degen::verify_json_document(report).dump(2) << "\n";
  else if (opts.format == "csv")
    std::cout << degen::report_to_csv(report);
  else
    std::cout << degen::report_to_text(report, opts.ascii);
  return report.all_satisfied() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tables and machine verification for degenerate harmonic-type sequences"};
  app.require_subcommand(1);

  // table
  CommonOpts table_opts;
  std::string table_seq;
  long table_n = 0;
  std::optional<long> table_m;
  std::optional<std::string> table_lambda;
  bool table_no_m_cap = false;
  CLI::App* table_cmd = app.add_subcommand("table", "print a sequence table");
  table_cmd->add_option("--seq", table_seq, "sequence id")->required();
  table_cmd->add_option("--n", table_n, "largest index")->required()->check(CLI::PositiveNumber);
  table_cmd->add_option("--m,--k", table_m, "order m / column k where the sequence takes one");
  table_cmd->add_option("--lambda", table_lambda, "evaluate at a rational lambda (p/q)");
  table_cmd->add_flag("--no-m-cap", table_no_m_cap, "allow orders m above 8");
  add_common(table_cmd, table_opts);

  // series
  CommonOpts series_opts;
  std::string series_gf;
  long series_terms = 0;
  std::optional<long> series_m, series_k;
  std::string series_x = "1";
  std::optional<std::string> series_lambda;
  CLI::App* series_cmd = app.add_subcommand("series", "print generating-function coefficients");
  series_cmd->add_option("--gf", series_gf, "generating function id")->required();
  series_cmd->add_option("--terms", series_terms, "highest power of t")
      ->required()
      ->check(CLI::PositiveNumber);
  series_cmd->add_option("--m", series_m, "order (H_order, K, polylog; polylog accepts m <= 0)");
  series_cmd->add_option("--k", series_k, "power index (stirling1_unsigned, lah)");
  series_cmd->add_option("--x", series_x, "exponent for degexp (rational p/q)");
  series_cmd->add_option("--lambda", series_lambda, "evaluate coefficients at a rational lambda");
  bool series_no_m_cap = false;
  series_cmd->add_flag("--no-m-cap", series_no_m_cap, "allow orders |m| above 8");
  add_common(series_cmd, series_opts);

  // limit
  CommonOpts limit_opts;
  std::string limit_seq;
  long limit_n = 0;
  std::optional<long> limit_m;
  CLI::App* limit_cmd =
      app.add_subcommand("limit", "compare lambda=0 values against the classical sequence");
  limit_cmd->add_option("--seq", limit_seq, "sequence id")->required();
  limit_cmd->add_option("--n", limit_n, "largest index")->required()->check(CLI::PositiveNumber);
  limit_cmd->add_option("--m,--k", limit_m, "order m / column k where the sequence takes one");
  add_common(limit_cmd, limit_opts);

  // verify
  CommonOpts verify_opts;
  degen::SuiteConfig cfg;
  std::optional<std::string> verify_only;
  std::vector<std::string> verify_samples;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suites");
  verify_cmd->add_option("--max-n", cfg.max_n, "largest index n")->capture_default_str();
  verify_cmd->add_option("--max-m", cfg.max_m, "largest order m")->capture_default_str();
  verify_cmd->add_option("--series-order", cfg.series_order, "truncation order (>= max-n)")
      ->capture_default_str();
  verify_cmd->add_option("--trials", cfg.random_seq_trials, "random-sequence trials")
      ->capture_default_str();
  verify_cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--lambda-sample", verify_samples,
                         "rational lambda sample (repeatable; replaces the default list)");
  verify_cmd->add_option("--only", verify_only, "run a single identity id");
  add_common(verify_cmd, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*table_cmd)
      return run_table(table_seq, table_n, table_m, table_lambda, table_no_m_cap, table_opts);
    if (*series_cmd)
      return run_series(series_gf, series_terms, series_m, series_k, series_x, series_lambda,
                        series_no_m_cap, series_opts);
    if (*limit_cmd) return run_limit(limit_seq, limit_n, limit_m, limit_opts);
    if (*verify_cmd) {
      if (!verify_samples.empty()) {
        cfg.lambda_samples.clear();
        for (const auto& s : verify_samples) cfg.lambda_samples.push_back(Rational::parse(s));
      }
      return run_verify(cfg, verify_only, verify_opts);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
