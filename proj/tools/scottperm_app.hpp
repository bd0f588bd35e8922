#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "scottperm/cli.hpp"

namespace scottperm {

/// Parses argv-style arguments (without the program name), runs the
/// command, writes its streams and returns the process exit code.
inline int run_app(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scott-type permanents per(1/(x_i - y_j)) over the zeros of P(x) and Q(y)"};
  app.require_subcommand(1);

  std::string p_text, q_text, method = "auto";
  std::vector<std::string> params;
  auto* eval = app.add_subcommand("eval", "evaluate PER(P, Q) by one route; JSON on stdout");
  eval->add_option("P", p_text, "polynomial in x, e.g. \"x^3 - 1\" or \"[-1, 0, 0, 1]\"")->required();
  eval->add_option("Q", q_text, "polynomial in y")->required();
  eval->add_option("--method", method, "auto | theorem1 | fes | closed:<id> | oracle | involution");
  eval->add_option("--param", params, "catalog parameter name=value (closed:<id> only); lists as name=[c0,c1]");

  std::string vp_text, vq_text;
  auto* verify_cmd = app.add_subcommand("verify", "run every applicable route and report agreement");
  verify_cmd->add_option("P", vp_text)->required();
  verify_cmd->add_option("Q", vq_text)->required();

  std::optional<std::string> catalog_id;
  auto* catalog = app.add_subcommand("catalog", "list closed-form catalog entries as JSON");
  catalog->add_option("--id", catalog_id, "show a single entry");

  std::string n_range = "2..8", m_range = "2..8";
  BenchOptions bench_opts;
  bool bench_json = false;
  auto* bench = app.add_subcommand("bench", "time the brute-force oracle against the determinant route");
  bench->add_option("n_range", n_range, "a..b (default 2..8)");
  bench->add_option("m_range", m_range, "a..b (default 2..8)");
  bench->add_option("--seed", bench_opts.seed, "random seed");
  bench->add_option("--max-n", bench_opts.max_n, "largest n for the oracle leg (<= 10)");
  bench->add_flag("--json", bench_json, "JSON rows instead of CSV");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  CommandOutput result;
  if (*eval) {
    result = cmd_eval(p_text, q_text, method, params);
  } else if (*verify_cmd) {
    result = cmd_verify(vp_text, vq_text);
  } else if (*catalog) {
    result = cmd_catalog(catalog_id);
  } else {
    try {
      std::tie(bench_opts.n_min, bench_opts.n_max) = parse_range(n_range);
      std::tie(bench_opts.m_min, bench_opts.m_max) = parse_range(m_range);
      result = cmd_bench(bench_opts, bench_json);
    } catch (const Error& e) {
      result = error_output(e);
    }
  }
  out << result.out;
  err << result.err;
  return result.exit_code;
}

}  // namespace scottperm
