// Copyright 2026 The homcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every command builds one JSON document; text output
// is rendered from that document so both forms carry the same numbers.

#ifndef HOMCOUNT_CLI_HPP_
#define HOMCOUNT_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homcount/counting.hpp"
#include "homcount/errors.hpp"
#include "homcount/exactpoly.hpp"
#include "homcount/minimizer.hpp"
#include "homcount/oracle.hpp"
#include "homcount/profiles.hpp"

namespace homcount::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kVerificationFailed = 2,  // also: variety refused below N
  kResourceLimit = 3,
};

struct Caps {
  std::size_t max_tuples = CountingLimits{}.max_tuples;
  std::uint64_t max_gl = oracle::kDefaultMaxGl;
};

struct RunConfig {
  std::string command;
  std::string group_text;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> q;
  std::vector<std::int64_t> eval_points;
  bool json = false;
  Caps caps;
  unsigned threads = 1;
};

/// Outcome of a command: the report document plus the exit code.
struct Outcome {
  Json doc;
  int exit_code = kSuccess;
  std::vector<std::string> warnings;
};

inline std::string tuple_text(const Json& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i].get<std::int64_t>());
  }
  return out + ")";
}

inline std::string rational_text(const Rational& v) {
  // Lowest terms; integers print without a denominator.
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline std::string term_text(std::int64_t coefficient, std::int64_t exponent) {
  return std::to_string(coefficient) + " * q^" + std::to_string(exponent);
}

namespace detail {

inline std::int64_t require(const std::optional<std::int64_t>& v, const char* flag, const std::string& command) {
  if (!v) throw ValidationError("command '" + command + "' requires " + flag);
  return *v;
}

inline Json header(const RunConfig& cfg, const DegreeProfile& p) {
  Json doc;
  doc["command"] = cfg.command;
  doc["group"] = p.label;
  doc["order"] = p.order;
  doc["degrees"] = p.degrees;
  return doc;
}

inline std::int64_t require_dimension(const RunConfig& cfg) {
  const auto n = require(cfg.n, "-n", cfg.command);
  if (n < 0) throw ValidationError("-n must be non-negative");
  return n;
}

}  // namespace detail

inline Outcome cmd_table(const RunConfig& cfg, const DegreeProfile& p) {
  const auto table = ResidueTable::build(p, cfg.threads);
  Outcome out;
  out.doc = detail::header(cfg, p);
  Json rows = Json::array();
  for (const auto& report : table.reports) {
    Json row;
    row["r"] = report.r;
    row["m"] = report.m_r();
    row["sample"] = report.tuples.front();
    row["S"] = report.s_r;
    row["eps"] = rational_text(report.eps_r);
    row["tuples"] = report.tuples;
    rows.push_back(std::move(row));
  }
  out.doc["rows"] = std::move(rows);
  out.doc["b"] = table.bound.b;
  out.doc["N"] = table.bound.n_threshold;
  return out;
}

inline Outcome cmd_poly(const RunConfig& cfg, const GroupSpec& g, const DegreeProfile& p) {
  const auto n = detail::require_dimension(cfg);
  const auto f = hom_count_poly(p, n, {cfg.caps.max_tuples});
  Outcome out;
  out.doc = detail::header(cfg, p);
  out.doc["n"] = n;
  out.doc["polynomial"] = to_json(f);
  Json evals = Json::array();
  for (auto q : cfg.eval_points) {
    Json e;
    e["q"] = q;
    e["value"] = eval_at(f, BigInt(q)).str();
    const auto check = splitting_field_check(g, q);
    e["hom_count"] = check.ok;
    e["reason"] = check.reason;
    evals.push_back(std::move(e));
  }
  out.doc["evaluations"] = std::move(evals);
  return out;
}

inline Outcome cmd_leading(const RunConfig& cfg, const DegreeProfile& p) {
  const auto n = detail::require_dimension(cfg);
  const auto table = ResidueTable::build(p, cfg.threads);
  const auto lt = leading_term(table, n);
  Outcome out;
  out.doc = detail::header(cfg, p);
  out.doc["n"] = n;
  out.doc["r"] = lt.r;
  out.doc["coefficient"] = lt.coefficient;
  out.doc["exponent"] = lt.exponent;
  out.doc["stable"] = lt.stable;
  out.doc["N"] = table.bound.n_threshold;
  if (!lt.stable) {
    const auto top = actual_leading_term(p, n);
    out.doc["actual"] = {{"coefficient", top.coefficient}, {"exponent", top.exponent}};
    out.warnings.push_back("n=" + std::to_string(n) + " is below N=" + std::to_string(table.bound.n_threshold) +
                           "; the leading-term formula is not guaranteed here");
  }
  return out;
}

inline Outcome cmd_bound(const RunConfig& cfg, const DegreeProfile& p) {
  const auto table = ResidueTable::build(p, cfg.threads);
  Outcome out;
  out.doc = detail::header(cfg, p);
  out.doc["b"] = table.bound.b;
  out.doc["N"] = table.bound.n_threshold;
  out.doc["ceiling"] = p.order * (p.order - 1);
  return out;
}

inline Outcome cmd_variety(const RunConfig& cfg, const DegreeProfile& p) {
  const auto n = detail::require_dimension(cfg);
  const auto v = variety_report(ResidueTable::build(p, cfg.threads), n);
  Outcome out;
  out.doc = detail::header(cfg, p);
  out.doc["n"] = n;
  out.doc["dimension"] = v.dimension;
  out.doc["components"] = v.top_components;
  return out;
}

inline Outcome cmd_verify(const RunConfig& cfg, const GroupSpec& g, const DegreeProfile& p) {
  const auto n = detail::require_dimension(cfg);
  const auto q = detail::require(cfg.q, "-q", cfg.command);
  const auto pr = oracle::builtin_presentation(g);
  if (!pr) throw ValidationError("no built-in presentation is paired with " + p.label);
  if (!is_prime(q)) throw ValidationError("verify needs a prime q, got " + std::to_string(q));
  if (n < 1 || n > oracle::PrimeFieldMatrix::kMaxDim) throw ValidationError("verify supports 1 <= n <= 3");
  const auto check = splitting_field_check(g, q);
  if (!check.ok) throw ValidationError(check.reason);

  const BigInt poly_value = eval_at(hom_count_poly(p, n, {cfg.caps.max_tuples}), BigInt(q));
  oracle::BruteForceOptions options;
  options.max_gl = cfg.caps.max_gl;
  options.max_assignments = cfg.caps.max_gl;
  const BigInt brute = oracle::hom_count_bruteforce(*pr, static_cast<int>(n), q, options);

  Outcome out;
  out.doc = detail::header(cfg, p);
  out.doc["n"] = n;
  out.doc["q"] = q;
  out.doc["presentation"] = pr->label;
  out.doc["poly"] = poly_value.str();
  out.doc["brute"] = brute.str();
  const bool pass = poly_value == brute;
  out.doc["result"] = pass ? "PASS" : "FAIL";
  out.exit_code = pass ? kSuccess : kVerificationFailed;
  return out;
}

/// Plain-text rendering of a command document.
inline std::string render_text(const Json& doc) {
  std::ostringstream os;
  const auto command = doc.at("command").get<std::string>();
  if (command == "table") {
    os << "group " << doc.at("group").get<std::string>() << ", order " << doc.at("order").get<std::int64_t>()
       << ", degrees " << tuple_text(doc.at("degrees")) << "\n";
    std::size_t sample_width = std::string("sample tuple").size();
    for (const auto& row : doc.at("rows")) sample_width = std::max(sample_width, tuple_text(row.at("sample")).size());
    const int w = static_cast<int>(sample_width);
    os << std::right << std::setw(4) << "r" << std::setw(6) << "m_r" << "  " << std::left << std::setw(w)
       << "sample tuple" << std::right << std::setw(6) << "S_r" << "  eps_r\n";
    for (const auto& row : doc.at("rows")) {
      os << std::right << std::setw(4) << row.at("r").get<std::int64_t>() << std::setw(6)
         << row.at("m").get<std::int64_t>() << "  " << std::left << std::setw(w) << tuple_text(row.at("sample"))
         << std::right << std::setw(6) << row.at("S").get<std::int64_t>() << "  "
         << row.at("eps").get<std::string>() << "\n";
    }
    os << "b=" << doc.at("b").get<std::int64_t>() << "\n";
    os << "N=" << doc.at("N").get<std::int64_t>() << "\n";
  } else if (command == "poly") {
    const auto n = doc.at("n").get<std::int64_t>();
    os << to_string(polynomial_from_json(doc.at("polynomial"))) << "\n";
    for (const auto& e : doc.at("evaluations")) {
      const auto q = e.at("q").get<std::int64_t>();
      os << "f(" << q << ") = " << e.at("value").get<std::string>();
      if (e.at("hom_count").get<bool>()) os << " = |Hom(A, GL_" << n << "(" << q << "))|";
      os << "\n";
    }
  } else if (command == "leading") {
    os << term_text(doc.at("coefficient"), doc.at("exponent"));
    if (doc.at("stable").get<bool>()) {
      os << " (stable)\n";
    } else {
      os << " (unstable: n < N=" << doc.at("N").get<std::int64_t>() << ")\n";
      const auto& actual = doc.at("actual");
      os << "actual leading term of f_n: " << term_text(actual.at("coefficient"), actual.at("exponent")) << "\n";
    }
  } else if (command == "bound") {
    os << "b=" << doc.at("b").get<std::int64_t>() << ", N=" << doc.at("N").get<std::int64_t>()
       << " (<= a(a-1)=" << doc.at("ceiling").get<std::int64_t>() << ")\n";
  } else if (command == "variety") {
    os << "dimension " << doc.at("dimension").get<std::int64_t>() << "\n";
    os << "components " << doc.at("components").get<std::int64_t>() << "\n";
  } else if (command == "verify") {
    os << "poly " << doc.at("poly").get<std::string>() << "\n";
    os << "brute " << doc.at("brute").get<std::string>() << "\n";
    os << doc.at("result").get<std::string>() << "\n";
  }
  return os.str();
}

/// Runs one command. Exit codes: 0 success, 1 input error, 2 verification
/// failure or unstable-regime refusal, 3 resource limit.
inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const GroupSpec g = parse_group_spec(cfg.group_text);
    const DegreeProfile p = profile_of(g);
    Outcome outcome;
    if (cfg.command == "table") {
      outcome = cmd_table(cfg, p);
    } else if (cfg.command == "poly") {
      outcome = cmd_poly(cfg, g, p);
    } else if (cfg.command == "leading") {
      outcome = cmd_leading(cfg, p);
    } else if (cfg.command == "bound") {
      outcome = cmd_bound(cfg, p);
    } else if (cfg.command == "variety") {
      outcome = cmd_variety(cfg, p);
    } else if (cfg.command == "verify") {
      outcome = cmd_verify(cfg, g, p);
    } else {
      throw ValidationError("unknown command '" + cfg.command + "'");
    }
    for (const auto& w : outcome.warnings) err << "warning: " << w << "\n";
    if (cfg.json) {
      out << outcome.doc.dump(2) << "\n";
    } else {
      out << render_text(outcome.doc);
    }
    return outcome.exit_code;
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const UnstableRegime& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

/// Parses argv and runs the selected command.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact counts of homomorphisms from a finite group into GL_n(q)", "homcount"};
  app.require_subcommand(1);
  app.add_option("--group", cfg.group_text, "Group spec, e.g. sym:4, cyclic:3, custom:order=6,degrees=1,1,2")
      ->required();
  app.add_option("-n", cfg.n, "Dimension n");
  app.add_option("-q", cfg.q, "Field size q");
  app.add_option("--eval", cfg.eval_points, "Comma-separated evaluation points")->delimiter(',');
  app.add_flag("--json", cfg.json, "Emit a single JSON document");
  app.add_option("--max-tuples", cfg.caps.max_tuples, "Cap on enumerated eligible tuples");
  app.add_option("--max-gl", cfg.caps.max_gl, "Cap on brute-force candidate matrices and assignments");
  app.add_option("--threads", cfg.threads, "Worker threads for per-residue searches");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"table", "Minimal-tuple table m_r, S_r, eps_r for every residue, with b and N"},
      {"poly", "Full polynomial f_n(q) = |Hom(A, GL_n(q))|"},
      {"leading", "Leading term m_r q^(n^2(1-1/a) - eps_r)"},
      {"bound", "Stability bound N = b a"},
      {"verify", "Compare f_n(q) against brute-force enumeration"},
      {"variety", "Dimension and top-dimensional component count of Hom(A, GL_n)"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->fallthrough()->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  return execute(cfg, out, err);
}

}  // namespace homcount::cli

#endif  // HOMCOUNT_CLI_HPP_
