#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sunisb.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, const std::string& seps) {
  std::vector<std::string> out(1);
  for (char c : text) {
    if (seps.find(c) != std::string::npos)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

int parse_int(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw UsageError("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + " entry '" + token + "'");
  }
}

std::vector<int> parse_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& tok : split(text, ",")) out.push_back(parse_int(tok, what));
  return out;
}

sunisb::IrrepLabel parse_label(int n, const std::string& rows) {
  try {
    return sunisb::IrrepLabel(n, parse_list(rows, "--rows"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid label: ") + e.what());
  }
}

// Rows separated by '/' or ';', colors within a row by ','. Empty rows are
// written as empty segments, e.g. "1/2/" for a label whose last row is 0.
sunisb::MultiIndex parse_multi_index(const std::string& text) {
  sunisb::MultiIndex idx;
  for (const auto& row : split(text, "/;")) idx.push_back(parse_list(row, "--idx"));
  return idx;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_dim(int n, const std::string& rows, const std::string& out_path) {
  const auto label = parse_label(n, rows);
  const auto w = sunisb::weyl_dimension(label);
  const auto d = sunisb::nullspace_dimension(label);
  const sunisb::Integer r(sunisb::monomial_rank(label));
  const bool agree = w == d && d == r;
  Output out(out_path);
  out.stream() << w << " " << d << " " << r << " " << (agree ? "agree" : "disagree") << "\n";
  return agree ? 0 : kExitFailure;
}

int cmd_build(int n, const std::string& rows, const std::string& idx_text, const std::string& out_path) {
  const auto label = parse_label(n, rows);
  const auto idx = parse_multi_index(idx_text);
  sunisb::Ket psi(n);
  try {
    psi = sunisb::build_monomial(label, idx);
  } catch (const sunisb::shape_mismatch& e) {
    throw UsageError(e.what());
  } catch (const sunisb::index_out_of_range& e) {
    throw UsageError(e.what());
  }
  const std::string doc = sunisb::serialize_ket(psi);
  if (sunisb::deserialize_ket(doc) != psi) {
    std::cerr << "error: ket document failed to round-trip\n";
    return kExitFailure;
  }
  Output out(out_path);
  out.stream() << doc;
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<int> n, std::optional<int> max_quanta,
               const std::string& format, const std::string& out_path) {
  const auto& table = sunisb::verify::suites();
  std::vector<std::string> names;
  if (suite == "all") {
    for (const auto& [name, fn] : table)
      if (name != "recurrence") names.push_back(name);
  } else if (table.count(suite)) {
    names.push_back(suite);
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  sunisb::verify::Options opt;
  if (n) {
    sunisb::require_rank(*n);
    opt.ranks = {*n};
  }
  if (max_quanta) {
    if (*max_quanta < 0) throw UsageError("--max-quanta must be non-negative");
    opt.max_quanta = *max_quanta;
  }

  sunisb::verify::Report report;
  if (names.size() == 1) {
    report = table.at(names.front())(opt);
  } else {
    report.suite = "all";
    for (const auto& name : names) report.merge(table.at(name)(opt));
  }
  if (n) report.config["n"] = std::to_string(*n);
  report.config["max_quanta"] = std::to_string(opt.max_quanta);

  Output out(out_path);
  if (format == "structured")
    out.stream() << report.to_json().dump(2) << "\n";
  else
    out.stream() << report.to_plain();
  return report.passed() ? 0 : kExitFailure;
}

int cmd_compare(const std::string& rows, int max_quanta, const std::string& out_path) {
  std::vector<sunisb::IrrepLabel> labels;
  if (!rows.empty())
    labels.push_back(parse_label(3, rows));
  else
    labels = sunisb::enumerate_labels(3, max_quanta);
  Output out(out_path);
  bool all = true;
  for (const auto& label : labels) {
    const auto cmp = sunisb::su3x::compare_languages(label);
    all = all && cmp.agree();
    out.stream() << label << " (n,m)=(" << cmp.n << "," << cmp.m << ") dim " << cmp.two_triplet_dimension << " "
                 << cmp.antitriplet_dimension << " C2 " << sunisb::to_string(cmp.two_triplet_casimir) << " "
                 << sunisb::to_string(cmp.antitriplet_casimir) << " " << (cmp.agree() ? "agree" : "disagree")
                 << "\n";
  }
  return all ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SU(N) irreps from irreducible Schwinger bosons"};
  app.require_subcommand(1);

  int n = 3;
  std::string rows, idx, out_path, suite = "all", format = "plain";
  std::optional<int> verify_n, verify_quanta;
  int compare_quanta = 4;

  auto* dim = app.add_subcommand("dim", "Weyl, null-space and monomial-rank dimensions of a label");
  dim->add_option("--n", n, "group rank N")->required();
  dim->add_option("--rows", rows, "row lengths, comma separated, non-increasing")->required();
  dim->add_option("--out", out_path, "write output to a file");

  auto* build = app.add_subcommand("build", "Ket document of one ordered monomial state");
  build->add_option("--n", n, "group rank N")->required();
  build->add_option("--rows", rows, "row lengths, comma separated")->required();
  build->add_option("--idx", idx, "colors per row: rows split by '/' or ';', colors by ','")->required();
  build->add_option("--out", out_path, "write the document to a file");

  auto* verify = app.add_subcommand("verify", "Run invariant suites and emit a report");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--n", verify_n, "restrict to a single group rank");
  verify->add_option("--max-quanta", verify_quanta, "bound on boxes / total occupation");
  verify->add_option("--format", format, "plain or structured")
      ->check(CLI::IsMember({"plain", "structured"}));
  verify->add_option("--out", out_path, "write the report to a file");

  auto* compare = app.add_subcommand("compare-su3", "Two-triplet vs triplet/antitriplet dimensions and C2");
  compare->add_option("--rows", rows, "a single SU(3) label; default is every label in range");
  compare->add_option("--max-quanta", compare_quanta, "bound on boxes when --rows is absent");
  compare->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dim) return cmd_dim(n, rows, out_path);
    if (*build) return cmd_build(n, rows, idx, out_path);
    if (*verify) return cmd_verify(suite, verify_n, verify_quanta, format, out_path);
    if (*compare) return cmd_compare(rows, compare_quanta, out_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sunisb::invalid_rank& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
