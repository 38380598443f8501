#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "repstab/oracle.hpp"
#include "repstab/serialize.hpp"
#include "repstab/stability.hpp"

namespace repstab::cli {

namespace {

using nlohmann::json;

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<Partition> kequal_types(int n, int k) {
  std::vector<int> parts(static_cast<std::size_t>(n - k + 1), 1);
  parts[0] = k;
  return {Partition(parts)};
}

std::string context_of(const RunConfig& c) {
  return c.k ? "k=" + std::to_string(*c.k) : "lambda=" + *c.lambda;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Exactly one of --k and --lambda, with k ≥ d+1.
void check_family(const RunConfig& c, bool lambda_allowed) {
  require(c.d >= 2, "--d must be at least 2");
  if (lambda_allowed) {
    require(c.k.has_value() != c.lambda.has_value(), "give exactly one of --k and --lambda");
  } else {
    require(c.k.has_value(), "--k is required");
    require(!c.lambda, "--lambda is not supported here");
  }
  if (c.k) require(*c.k >= c.d + 1, "--k must be at least d+1");
}

std::function<void(int, std::size_t)> progress_sink(const RunConfig& c, std::ostream& err,
                                                    std::mutex& mutex, int i) {
  if (c.quiet) return {};
  return [&err, &mutex, i](int n, std::size_t support) {
    std::lock_guard lock(mutex);
    err << "i=" << i << " n=" << n << " support=" << support << '\n';
  };
}

std::string bound_cell(const StabilityReport& r) {
  switch (r.status) {
    case BoundStatus::Certified: return std::to_string(*r.sharp_bound);
    case BoundStatus::Vacuous: return "vacuous";
    case BoundStatus::HorizonLimited: return "horizon-limited";
  }
  return "";
}

SharpBoundOptions sharp_options(const RunConfig& c) {
  SharpBoundOptions o;
  o.horizon = c.horizon;
  o.max_degree = c.max_degree;
  o.jobs = c.jobs;
  return o;
}

int cmd_char(const RunConfig& c, std::ostream& out) {
  check_family(c, true);
  require(c.n && *c.n >= 1, "--n is required and must be positive");
  require(c.i_hi >= c.i_lo && c.i_lo >= 0, "--i is required");
  std::optional<LambdaSet> lambda;
  if (c.lambda) lambda = parse_lambda_set(*c.lambda);
  json rows = json::array();
  if (c.format == Format::Csv) out << "d,context,i,n,char\n";
  for (int i = c.i_lo; i <= c.i_hi; ++i) {
    SymmetricFunction chi = c.k ? kequal_char(*c.n, i, c.d, *c.k)
                            : *c.n < lambda->n0()
                                ? SymmetricFunction(Basis::Schur)
                                : lambda_char_smalln(*c.n, c.d, *lambda, i, c.oracle_limit);
    switch (c.format) {
      case Format::Text: out << to_text(chi) << '\n'; break;
      case Format::Csv:
        out << c.d << ',' << csv_cell(context_of(c)) << ',' << i << ',' << *c.n << ','
            << csv_cell(to_text(chi)) << '\n';
        break;
      case Format::Json:
        rows.push_back({{"d", c.d}, {"context", context_of(c)}, {"i", i}, {"n", *c.n},
                        {"char", to_json(chi)}});
        break;
    }
  }
  if (c.format == Format::Json) out << rows.dump(2) << '\n';
  return kOk;
}

int cmd_table(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_family(c, false);
  require(c.i_hi >= c.i_lo && c.i_lo >= 0, "--i is required");
  require(!c.horizon || *c.horizon >= 1, "--horizon must be at least 1");
  std::mutex progress_mutex;
  std::vector<StabilityReport> reports;
  for (int i = c.i_lo; i <= c.i_hi; ++i) {
    SharpBoundOptions o = sharp_options(c);
    o.progress = progress_sink(c, err, progress_mutex, i);
    reports.push_back(sharp_bound_certified(c.d, *c.k, i, o));
  }
  switch (c.format) {
    case Format::Text: {
      std::ostringstream head, body;
      head << "i    ";
      body << "bound";
      for (const auto& r : reports) {
        std::string cell = bound_cell(r);
        std::size_t width = std::max(cell.size(), std::to_string(r.i).size());
        std::string i_text = std::to_string(r.i);
        head << " | " << i_text << std::string(width - i_text.size(), ' ');
        body << " | " << cell << std::string(width - cell.size(), ' ');
      }
      out << "k=" << *c.k << ", d=" << c.d << '\n' << head.str() << '\n' << body.str() << '\n';
      break;
    }
    case Format::Csv:
      out << "k,i,bound\n";
      for (const auto& r : reports) out << *c.k << ',' << r.i << ',' << bound_cell(r) << '\n';
      break;
    case Format::Json: {
      json rows = json::array();
      for (const auto& r : reports) rows.push_back(to_json(r));
      out << json{{"d", c.d}, {"k", *c.k}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_family(c, true);
  require(c.n_max.has_value(), "--n-max is required");
  if (*c.n_max > c.oracle_limit)
    throw OracleLimitExceeded("--n-max " + std::to_string(*c.n_max) +
                              " exceeds the oracle limit " + std::to_string(c.oracle_limit));
  std::optional<LambdaSet> lambda;
  if (c.lambda) lambda = parse_lambda_set(*c.lambda);
  int first = c.k ? *c.k : lambda->n0();
  bool all_match = true;
  json cases = json::array();
  if (c.format == Format::Csv) out << "n,d,context,i,formula,oracle,result\n";
  for (int n = first; n <= *c.n_max; ++n) {
    if (!c.quiet) err << "n=" << n << '\n';
    std::optional<ArrangementOracle> oracle;
    if (c.k) oracle.emplace(n, kequal_types(n, *c.k), c.oracle_limit);
    int hi = c.i_hi >= 0 ? c.i_hi : c.d * (n - 1);
    for (int i = c.i_lo; i <= hi; ++i) {
      SymmetricFunction formula = c.k ? kequal_char(n, i, c.d, *c.k)
                                      : lambda_char_decomposed(n, c.d, *lambda, i, c.oracle_limit);
      SymmetricFunction truth = c.k ? oracle->complement_char(c.d, i)
                                    : lambda_char_smalln(n, c.d, *lambda, i, c.oracle_limit);
      bool match = formula == truth;
      all_match = all_match && match;
      const char* verdict = match ? "MATCH" : "MISMATCH";
      switch (c.format) {
        case Format::Text:
          out << "n=" << n << " d=" << c.d << ' ' << context_of(c) << " i=" << i << ": "
              << verdict;
          if (!match) out << "  formula " << to_text(formula) << "  oracle " << to_text(truth);
          out << '\n';
          break;
        case Format::Csv:
          out << n << ',' << c.d << ',' << csv_cell(context_of(c)) << ',' << i << ','
              << csv_cell(to_text(formula)) << ',' << csv_cell(to_text(truth)) << ',' << verdict
              << '\n';
          break;
        case Format::Json:
          cases.push_back({{"n", n}, {"d", c.d}, {"context", context_of(c)}, {"i", i},
                           {"formula", to_json(formula)}, {"oracle", to_json(truth)},
                           {"result", verdict}});
          break;
      }
    }
  }
  if (c.format == Format::Json)
    out << json{{"cases", cases}, {"all_match", all_match}}.dump(2) << '\n';
  return all_match ? kOk : kMismatch;
}

int cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
  check_family(c, true);
  require(c.i_hi >= c.i_lo && c.i_lo >= 0, "--i is required");
  std::mutex progress_mutex;
  json rows = json::array();
  if (c.format == Format::Csv) out << "d,context,i,theorem_bound,sharp_bound\n";
  for (int i = c.i_lo; i <= c.i_hi; ++i) {
    std::vector<Rational> bounds;
    std::optional<StabilityReport> report;
    std::string note;
    if (c.k) {
      bounds = theorem_bounds(c.d, *c.k, i);
      SharpBoundOptions o = sharp_options(c);
      o.progress = progress_sink(c, err, progress_mutex, i);
      report = sharp_bound_certified(c.d, *c.k, i, o);
    } else {
      LambdaSet lambda = parse_lambda_set(*c.lambda);
      bounds = {general_bound(lambda, i, c.d)};
      int horizon = std::max(certification_horizon(bounds), lambda.n0());
      if (horizon <= c.oracle_limit)
        report = lambda_report(lambda, c.d, i, horizon, c.oracle_limit);
      else
        note = "oracle limit " + std::to_string(c.oracle_limit) + " below horizon " +
               std::to_string(horizon);
    }
    std::string theorem;
    for (const auto& b : bounds) theorem += (theorem.empty() ? "" : ";") + b.get_str();
    std::string sharp = report ? bound_cell(*report) : "not-computed";
    switch (c.format) {
      case Format::Text:
        out << context_of(c) << " d=" << c.d << " i=" << i << '\n'
            << (c.k ? "  theorem bounds: " : "  general bound: ") << theorem << '\n'
            << "  sharp bound: " << sharp;
        if (report && report->status == BoundStatus::Vacuous)
          out << " (identically zero up to n=" << report->horizon << ")";
        else if (report)
          out << " (" << to_string(report->status) << ", computed up to n=" << report->horizon << ")";
        if (!note.empty()) out << " (" << note << ")";
        out << '\n';
        break;
      case Format::Csv:
        out << c.d << ',' << csv_cell(context_of(c)) << ',' << i << ',' << csv_cell(theorem) << ','
            << sharp << '\n';
        break;
      case Format::Json: {
        json row{{"d", c.d}, {"context", context_of(c)}, {"i", i}, {"sharp_bound", sharp}};
        row["theorem_bounds"] = json::array();
        for (const auto& b : bounds) row["theorem_bounds"].push_back(to_fraction_string(b));
        if (report) row["report"] = to_json(*report);
        rows.push_back(row);
        break;
      }
    }
  }
  if (c.format == Format::Json) out << rows.dump(2) << '\n';
  return kOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  try {
    std::size_t dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "', expected N or A..B");
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t p = 0; p < line.size(); ++p) {
    char ch = line[p];
    if (quoted) {
      if (ch == '"' && p + 1 < line.size() && line[p + 1] == '"') {
        cells.back() += '"';
        ++p;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cells.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.emplace_back();
    } else {
      cells.back() += ch;
    }
  }
  return cells;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string i_text, format = "text";
  std::optional<int> k, n, n_max, horizon, max_degree;
  std::optional<std::string> lambda;

  CLI::App app{"Exact characters and stability bounds for diagonal arrangement complements",
               "repstab"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", c.d, "ambient dimension d >= 2");
    sub->add_option("--k", k, "k for the k-equal arrangement");
    sub->add_option("--lambda", lambda, "base partitions, e.g. \"[2,2];[3]\"");
    sub->add_option("--i", i_text, "cohomological degree N or range A..B");
    sub->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--output", c.output, "write results to this file");
    sub->add_option("--oracle-limit", c.oracle_limit, "largest n for the brute-force oracle")
        ->envname("REPSTAB_ORACLE_LIMIT");
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--quiet", c.quiet, "no progress on stderr");
  };
  auto* char_cmd = app.add_subcommand("char", "characteristic of one cohomology group");
  add_common(char_cmd);
  char_cmd->add_option("--n", n, "number of points");
  auto* table_cmd = app.add_subcommand("table", "sharp stability bounds for a range of i");
  add_common(table_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "formula against the brute-force oracle");
  add_common(verify_cmd);
  verify_cmd->add_option("--n-max", n_max, "largest n to check");
  auto* bounds_cmd = app.add_subcommand("bounds", "theorem bounds and the sharp bound");
  add_common(bounds_cmd);
  for (auto* sub : {table_cmd, bounds_cmd}) {
    sub->add_option("--horizon", horizon, "compute up to this n instead of the theorem horizon");
    sub->add_option("--max-degree", max_degree, "never compute beyond this n");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  c.command = app.get_subcommands().front()->get_name();
  c.k = k;
  c.lambda = lambda;
  c.n = n;
  c.n_max = n_max;
  c.horizon = horizon;
  c.max_degree = max_degree;
  c.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text;

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    if (!i_text.empty()) std::tie(c.i_lo, c.i_hi) = parse_range(i_text);
    if (!c.output.empty()) {
      file.open(c.output);
      require(file.good(), "cannot open " + c.output);
      sink = &file;
    }
    if (c.command == "char") return cmd_char(c, *sink);
    if (c.command == "table") return cmd_table(c, *sink, err);
    if (c.command == "verify") return cmd_verify(c, *sink, err);
    return cmd_bounds(c, *sink, err);
  } catch (const OracleLimitExceeded& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.get_subcommand(c.command)->help();
    return kUsage;
  }
}

}  // namespace repstab::cli
