//  Copyright 2026 The gnss Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "gnss/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gnss/algebra.hpp"
#include "gnss/decision.hpp"
#include "gnss/error.hpp"
#include "gnss/tabio/csv.hpp"
#include "gnss/tabio/structured.hpp"

namespace gnss::cli {
namespace {

enum class Format { Csv, Json };

// Thrown inside a command to stop with a specific exit code.
struct Failure {
  int code;
  std::string message;
};

struct Input {
  SoftSet set;
  Format format;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kParseFailure, "cannot read '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Format detect_format(const std::string& path, std::string_view text) {
  if (path.ends_with(".json")) return Format::Json;
  const auto first = text.find_first_not_of(" \t\r\n");
  return (first != std::string_view::npos && text[first] == '{') ? Format::Json : Format::Csv;
}

Input load_input(const std::string& arg, ConstraintMode mode) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    const std::string text = read_file(arg);
    const Format format = detect_format(arg, text);
    try {
      return {format == Format::Json ? parse_structured(text, mode) : parse_csv(text, mode), format};
    } catch (const Error& e) {
      const int code = e.kind() == ErrorKind::ConstraintViolation ? kDomainFailure : kParseFailure;
      throw Failure{code, arg + ": " + e.what()};
    }
  }
  if (is_fixture(arg)) {
    try {
      SoftSet set = soft_set_fixture(arg);
      if (const auto bad = set.first_violation(mode)) {
        throw Failure{kDomainFailure, arg + ": " + to_string(set.cell(bad->first, bad->second)) +
                                          " violates the '" + std::string(to_string(mode)) +
                                          "' constraint"};
      }
      return {std::move(set), Format::Csv};
    } catch (const Error& e) {
      throw Failure{kParseFailure, arg + ": " + e.what()};
    }
  }
  throw Failure{kParseFailure, "'" + arg + "' is neither a readable file nor a fixture name"};
}

void emit(const std::string& data, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!(file << data)) throw Failure{kParseFailure, "cannot write '" + out_path + "'"};
}

std::string serialize(const SoftSet& s, Format format) {
  return format == Format::Json ? serialize_structured(s) : serialize_csv(s);
}

Format output_format(const std::string& flag, Format fallback) {
  if (flag.empty()) return fallback;
  return flag == "json" ? Format::Json : Format::Csv;
}

// Decimal text for a sum of degree units, which may exceed 1.
std::string units_text(int units) {
  std::string text = Degree::from_units(units % Degree::kScale).to_string();
  const int whole = units / Degree::kScale;
  if (whole == 0) return text;
  return std::to_string(whole) + (text == "0" ? "" : text.substr(1));
}

std::string why_violated(const Triple& x, ConstraintMode mode) {
  const int sum = x.truth.units() + x.indeterminacy.units() + x.falsity.units();
  switch (mode) {
    case ConstraintMode::GnsMin:
      return "min " + std::min({x.truth, x.indeterminacy, x.falsity}).to_string() + " > 0.5";
    case ConstraintMode::GnsSumLiteral:
      return "sum " + units_text(sum) + " > 0.5";
    case ConstraintMode::NeutrosophicOnly:
      return "sum " + units_text(sum) + " > 3";
  }
  return {};
}

std::vector<ParamKey> parse_param_list(const std::string& list) {
  std::vector<ParamKey> keys;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string::npos) end = list.size();
    try {
      keys.push_back(ParamKey::parse(std::string_view(list).substr(start, end - start)));
    } catch (const Error& e) {
      throw Failure{kUsage, std::string("--params: ") + e.what()};
    }
    start = end + 1;
  }
  return keys;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& file, ConstraintMode mode, std::ostream& out) {
  const Input in = load_input(file, ConstraintMode::NeutrosophicOnly);
  const SoftSet& s = in.set;
  std::size_t violations = 0;
  for (std::size_t p = 0; p < s.param_count(); ++p) {
    for (std::size_t k = 0; k < s.object_count(); ++k) {
      const Triple& x = s.cell(p, k);
      if (satisfies(x, mode)) continue;
      ++violations;
      out << "(" << s.universe()[k].str() << "," << s.params()[p].to_string()
          << "): " << to_string(x) << " " << why_violated(x, mode) << "\n";
    }
  }
  if (violations == 0) {
    out << "valid: " << s.object_count() << " objects x " << s.param_count()
        << " parameters under '" << to_string(mode) << "'\n";
    return kOk;
  }
  out << violations << " violation(s) under '" << to_string(mode) << "'\n";
  return kDomainFailure;
}

int cmd_op(const std::string& kind, const std::vector<std::string>& inputs, ConstraintMode mode,
           const std::string& format_flag, const std::string& out_path, std::ostream& out) {
  const bool unary = kind == "complement" || kind == "not";
  const std::size_t want = unary ? 1 : 2;
  if (inputs.size() != want) {
    throw Failure{kUsage, "op " + kind + " takes " + std::to_string(want) + " input(s), got " +
                              std::to_string(inputs.size())};
  }
  const Input a = load_input(inputs[0], mode);
  const Format format = output_format(format_flag, a.format);

  if (kind == "not") {
    std::string text;
    for (const auto& key : negate(a.set.params())) text += key.to_string() + "\n";
    emit(text, out_path, out);
    return kOk;
  }
  if (kind == "complement") {
    emit(serialize(complement(a.set), format), out_path, out);
    return kOk;
  }

  const Input b = load_input(inputs[1], mode);
  SoftSet result = kind == "union"       ? unite(a.set, b.set)
                   : kind == "intersect" ? intersect(a.set, b.set)
                   : kind == "and"       ? conjoin(a.set, b.set)
                                         : disjoin(a.set, b.set);
  emit(serialize(result, format), out_path, out);
  return kOk;
}

SoftSet chosen_params(const SoftSet& s, const std::string& params_flag) {
  if (params_flag.empty()) return s;
  return restrict(s, parse_param_list(params_flag));
}

int cmd_rank(const std::string& file, const std::string& params_flag, bool with_matrix,
             ConstraintMode mode, const std::string& out_path, std::ostream& out) {
  const Input in = load_input(file, mode);
  const ComparisonMatrix matrix = comparison_matrix(chosen_params(in.set, params_flag));
  const ScoreVector score = scores(matrix);
  const Ranking ranking = rank(score);

  std::string text;
  if (with_matrix) text += "# comparison matrix\n" + serialize_matrix_csv(matrix);
  text += "# scores\n" + serialize_scores_csv(score);
  text += "# ranking\n";
  for (std::size_t k = 0; k < ranking.order.size();) {
    const RankEntry& head = ranking.order[k];
    text += std::to_string(head.place) + ". " + head.object.str();
    for (++k; k < ranking.order.size() && ranking.order[k].place == head.place; ++k) {
      text += ", " + ranking.order[k].object.str();
    }
    text += " (" + std::to_string(head.score) + ")\n";
  }
  text += "winners:";
  for (const auto& w : ranking.winners) text += " " + w.str();
  text += "\nchoice: " + ranking.choice().str() + "\n";
  emit(text, out_path, out);
  return kOk;
}

int cmd_matrix(const std::string& file, const std::string& params_flag, ConstraintMode mode,
               const std::string& out_path, std::ostream& out) {
  const Input in = load_input(file, mode);
  emit(serialize_matrix_csv(comparison_matrix(chosen_params(in.set, params_flag))), out_path, out);
  return kOk;
}

int cmd_fixture(const std::string& name, const std::string& format_flag, const std::string& out_path,
                std::ostream& out) {
  if (name.empty()) {
    std::string text;
    for (const auto n : fixture_names()) text += std::string(n) + "\n";
    emit(text, out_path, out);
    return kOk;
  }
  Fixture value = [&] {
    try {
      return fixture(name);
    } catch (const Error& e) {
      throw Failure{kUsage, e.what()};
    }
  }();
  if (const auto* s = std::get_if<SoftSet>(&value)) {
    emit(serialize(*s, output_format(format_flag, Format::Csv)), out_path, out);
    return kOk;
  }
  if (format_flag == "json") throw Failure{kUsage, "fixture '" + name + "' is an integer table; use --format csv"};
  emit(fixture_csv(name), out_path, out);
  return kOk;
}

int cmd_verify(const std::vector<std::string>& overrides, std::ostream& out) {
  std::map<std::string, std::string, std::less<>> replaced;
  for (const auto& spec : overrides) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || !is_fixture(spec.substr(0, eq))) {
      throw Failure{kUsage, "--override expects <fixture>=<path>, got '" + spec + "'"};
    }
    replaced[spec.substr(0, eq)] = read_file(spec.substr(eq + 1));
  }

  const FixtureLoader load = [&](std::string_view name) -> Fixture {
    const auto it = replaced.find(name);
    if (it == replaced.end()) return fixture(name);
    try {
      if (std::holds_alternative<ComparisonMatrix>(fixture(name))) return parse_matrix_csv(it->second);
      return parse_csv(it->second, ConstraintMode::NeutrosophicOnly);
    } catch (const Error& e) {
      throw Failure{kParseFailure, "override for " + it->first + ": " + e.what()};
    }
  };

  std::vector<TableCheck> checks;
  try {
    checks = verify_paper(load);
  } catch (const Error& e) {
    throw Failure{kDomainFailure, std::string("verify-paper: ") + e.what()};
  }

  std::size_t unexpected = 0;
  for (const auto& c : checks) {
    out << c.table << ": " << c.diff_count << " diffs";
    if (c.diff_count > 0) out << " at " << c.diff_locations;
    if (!c.matches_expected) {
      ++unexpected;
      out << " [unexpected; known errata: "
          << (c.expected_locations.empty() ? "none" : c.expected_locations) << "]";
    }
    out << "\n";
  }
  if (unexpected == 0) {
    out << "verify-paper: OK, every discrepancy is a known erratum\n";
    return kOk;
  }
  out << "verify-paper: FAIL, " << unexpected << " table(s) differ from the known errata list\n";
  return kDomainFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized neutrosophic soft sets: validate, combine and rank tables", "gnss"};
  app.require_subcommand(1);

  std::string mode_flag = "min";
  std::string format_flag;
  std::string out_path;
  std::string params_flag;
  bool with_matrix = false;
  const auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_flag, "Constraint on triples: min, sum-literal or none")
        ->check(CLI::IsMember({"min", "sum-literal", "none"}));
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the result to this file instead of stdout");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_flag, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check every triple against a constraint mode");
  validate->add_option("file", file, "Table file or fixture name")->required();
  add_mode(validate);

  std::string op_kind;
  std::vector<std::string> op_inputs;
  auto* op = app.add_subcommand("op", "Apply a soft-set operation");
  op->add_option("kind", op_kind, "union, intersect, and, or, complement or not")
      ->required()
      ->check(CLI::IsMember({"union", "intersect", "and", "or", "complement", "not"}));
  op->add_option("inputs", op_inputs, "Table files or fixture names")->required();
  add_mode(op);
  add_format(op);
  add_out(op);

  auto* rank_cmd = app.add_subcommand("rank", "Score and rank the objects of a table");
  rank_cmd->add_option("file", file, "Table file or fixture name")->required();
  rank_cmd->add_option("--params", params_flag, "Comma-separated choice parameters");
  rank_cmd->add_flag("--matrix", with_matrix, "Also print the comparison matrix");
  add_mode(rank_cmd);
  add_out(rank_cmd);

  auto* matrix_cmd = app.add_subcommand("matrix", "Print the comparison matrix of a table");
  matrix_cmd->add_option("file", file, "Table file or fixture name")->required();
  matrix_cmd->add_option("--params", params_flag, "Comma-separated choice parameters");
  add_mode(matrix_cmd);
  add_out(matrix_cmd);

  std::string fixture_name;
  auto* fixture_cmd = app.add_subcommand("fixture", "Print a reference table (no name lists them)");
  fixture_cmd->add_option("name", fixture_name, "Fixture name");
  add_format(fixture_cmd);
  add_out(fixture_cmd);

  std::vector<std::string> overrides;
  auto* verify = app.add_subcommand("verify-paper", "Recompute the reference tables and list errata");
  verify->add_option("--override", overrides, "Replace a fixture with a file: <fixture>=<path>");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const ConstraintMode mode = *parse_constraint_mode(mode_flag);
  try {
    if (validate->parsed()) return cmd_validate(file, mode, out);
    if (op->parsed()) return cmd_op(op_kind, op_inputs, mode, format_flag, out_path, out);
    if (rank_cmd->parsed()) return cmd_rank(file, params_flag, with_matrix, mode, out_path, out);
    if (matrix_cmd->parsed()) return cmd_matrix(file, params_flag, mode, out_path, out);
    if (fixture_cmd->parsed()) return cmd_fixture(fixture_name, format_flag, out_path, out);
    if (verify->parsed()) return cmd_verify(overrides, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}

}  // namespace gnss::cli
