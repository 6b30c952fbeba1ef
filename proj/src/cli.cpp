#include "prmqc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prmqc/distance.hpp"
#include "prmqc/error.hpp"
#include "prmqc/prm.hpp"
#include "prmqc/quantum.hpp"
#include "prmqc/report.hpp"

namespace prmqc {

using nlohmann::json;

namespace {

struct Options {
  std::string format = "json";
  std::string verify;
  std::string budget_text;
  int q = 0, m = 0, s = 1, d = 0, d1 = 0, d2 = 0, lambda = 0;
  std::size_t c = 0;
};

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--budget", o.budget_text, "Distance search budget in elementary steps (e.g. 1e8)");
}

void add_verify(CLI::App* sub, std::string& verify) {
  sub->add_option("--verify", verify, "Verification level")->check(CLI::IsMember({"formulas", "rank", "distance"}));
}

void emit_record(const json& record, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << csv_header() << '\n' << csv_row(record) << '\n';
  } else if (format == "text") {
    out << text_line(record) << '\n';
  } else {
    out << record.dump(2) << '\n';
  }
}

bool is_usage_error(Errc code) {
  switch (code) {
    case Errc::PreconditionViolated:
    case Errc::DegreeOutOfRange:
    case Errc::TargetOutOfRange:
    case Errc::BinaryFieldUnsupported:
    case Errc::UnsupportedFieldSize:
    case Errc::NonPrimeP:
    case Errc::NotAQuadraticExtension:
    case Errc::InvalidSubfieldSize:
    case Errc::NotASubfield:
    case Errc::ParityMismatch:
      return true;
    default:
      return false;
  }
}

int cmd_prm(const Options& o, std::uint64_t budget, std::ostream& out) {
  if (!prime_power(o.q)) throw Error(Errc::PreconditionViolated, "q must be a prime power");
  check_prm_degree(o.q, o.m, o.d);
  const FieldPtr f = Field::of_order(o.q);
  json r;
  r["q"] = o.q;
  r["m"] = o.m;
  r["d"] = o.d;
  r["n"] = prm_length(o.q, o.m);
  r["k"] = prm_dimension_formula(o.q, o.m, o.d);
  r["wt"] = prm_min_distance_formula(o.q, o.m, o.d);
  r["dual_degree"] = prm_dual_degree(o.q, o.m, o.d);
  r["dual_with_all_ones"] = o.d % (o.q - 1) == 0;
  bool mismatch = false;
  std::vector<std::string> lines;
  if (o.verify == "rank" || o.verify == "distance") {
    const LinearCode code = prm_code(f, o.m, o.d);
    const bool rank_ok = code.dimension() == r["k"].get<std::uint64_t>();
    const bool dual_ok = prm_dual(f, o.m, o.d).code == dual(code);
    r["rank"] = code.dimension();
    r["rank_matches"] = rank_ok;
    r["dual_matches"] = dual_ok;
    mismatch = mismatch || !rank_ok || !dual_ok;
    lines.push_back("rank " + std::to_string(code.dimension()) + (rank_ok ? " = " : " != ") + "formula " +
                    std::to_string(r["k"].get<std::uint64_t>()) + ", dual " + (dual_ok ? "matches" : "differs"));
    if (o.verify == "distance") {
      const WeightCertificate cert = minimum_distance(code, budget);
      const std::uint64_t wt = r["wt"].get<std::uint64_t>();
      const bool bad = cert.exact() ? cert.value != wt : cert.value > wt;
      r["distance_certificate"] = certificate_json(cert);
      r["distance_matches"] = cert.exact() ? json(!bad) : json(nullptr);
      mismatch = mismatch || bad;
      lines.push_back(std::string("distance ") + std::string(to_string(cert.kind)) + "(" + std::to_string(cert.value) +
                      ")" + (cert.budget_exhausted ? " budget-limited" : ""));
    }
  }
  if (o.format == "json") {
    out << r.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "q,m,d,n,k,wt,rank\n"
        << o.q << ',' << o.m << ',' << o.d << ',' << r["n"] << ',' << r["k"] << ',' << r["wt"] << ','
        << (r.contains("rank") ? r["rank"].dump() : "") << '\n';
  } else {
    out << "PRM_" << o.d << "(" << o.q << "," << o.m << "): n=" << r["n"] << " k=" << r["k"] << " wt=" << r["wt"]
        << '\n';
    for (const auto& l : lines) out << l << '\n';
  }
  return mismatch ? kExitMismatch : kExitOk;
}

int cmd_table(const Options& o, std::uint64_t budget, std::ostream& out) {
  json rows = json::array();
  std::size_t pass = 0, limited = 0, fail = 0;
  if (o.format == "csv") out << csv_header() << '\n';
  for (const auto& row : table_rows()) {
    const RowOutcome res = run_table_row(row, budget);
    switch (res.status) {
      case RowStatus::Pass: ++pass; break;
      case RowStatus::BudgetLimited: ++limited; break;
      case RowStatus::Fail: ++fail; break;
    }
    if (o.format == "csv") {
      out << csv_row(res.record) << '\n';
    } else if (o.format == "text") {
      out << to_string(res.status) << "  " << row.label << "  ";
      if (res.record.contains("label"))
        out << text_line(res.record);
      for (const auto& p : res.problems) out << "  [" << p << "]";
      out << '\n';
    }
    rows.push_back(res.record);
  }
  if (o.format == "json") {
    json j;
    j["budget"] = budget;
    j["rows"] = rows;
    j["summary"] = {{"pass", pass}, {"budget_limited", limited}, {"fail", fail}};
    out << j.dump(2) << '\n';
  } else if (o.format == "text") {
    out << "summary: " << pass << " pass, " << limited << " budget-limited, " << fail << " fail\n";
  }
  return fail == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

std::uint64_t parse_budget(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(Errc::PreconditionViolated, "invalid budget '" + text + "'");
  }
  if (used != text.size() || !(v >= 0) || v > 1.8e19 || std::floor(v) != v)
    throw Error(Errc::PreconditionViolated, "invalid budget '" + text + "'");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PRMQC_BUDGET"); env && *env) return parse_budget(env);
  return 100'000'000;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projective Reed-Muller codes and the quantum codes built from them", "prmqc"};
  app.require_subcommand(1);
  Options o;

  auto* prm = app.add_subcommand("prm", "Parameters of PRM_d(q,m), optionally checked against the code");
  prm->add_option("--q", o.q)->required();
  prm->add_option("--m", o.m)->required();
  prm->add_option("--d", o.d)->required();
  add_output_options(prm, o);
  add_verify(prm, o.verify);

  auto* css = app.add_subcommand("css", "CSS code from PRM_d1, PRM_d2 with c entangled pairs");
  css->add_option("--q", o.q)->required();
  css->add_option("--m", o.m)->required();
  css->add_option("--d1", o.d1)->required();
  css->add_option("--d2", o.d2)->required();
  css->add_option("--c", o.c);

  auto* herm = app.add_subcommand("hermitian", "Hermitian construction from PRM_d(q^2,m)");
  herm->add_option("--q", o.q)->required();
  herm->add_option("--m", o.m)->required();
  herm->add_option("--d", o.d)->required();
  herm->add_option("--c", o.c);

  auto* css_sub = app.add_subcommand("css-subfield", "CSS code from subfield subcodes of PRM codes over GF(q^s)");
  css_sub->add_option("--q", o.q)->required();
  css_sub->add_option("--s", o.s)->required();
  css_sub->add_option("--m", o.m)->required();
  css_sub->add_option("--d1", o.d1)->required();
  css_sub->add_option("--d2", o.d2)->required();

  auto* herm_sub = app.add_subcommand("hermitian-subfield", "Hermitian code from a subfield subcode over GF(q^2)");
  herm_sub->add_option("--q", o.q)->required();
  herm_sub->add_option("--s", o.s)->required();
  herm_sub->add_option("--m", o.m)->required();
  herm_sub->add_option("--lambda", o.lambda)->required();

  auto* table = app.add_subcommand("paper-table", "Rebuild every stored parameter set and compare");

  for (auto* sub : {css, herm, css_sub, herm_sub}) {
    add_output_options(sub, o);
    add_verify(sub, o.verify);
  }
  add_output_options(table, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.verify.empty()) o.verify = prm->parsed() ? "formulas" : "distance";
  try {
    const std::uint64_t budget = o.budget_text.empty() ? default_budget() : parse_budget(o.budget_text);
    const std::uint64_t distance_budget = o.verify == "distance" ? budget : 0;
    if (prm->parsed()) return cmd_prm(o, budget, out);
    if (table->parsed()) return cmd_table(o, budget, out);
    json record;
    if (css->parsed()) record = to_json(construct_css_prm(o.q, o.m, o.d1, o.d2, o.c, distance_budget));
    if (herm->parsed()) record = to_json(construct_hermitian_prm(o.q, o.m, o.d, o.c, distance_budget));
    if (css_sub->parsed()) record = to_json(construct_css_subfield(o.q, o.s, o.m, o.d1, o.d2, distance_budget));
    if (herm_sub->parsed()) record = to_json(construct_hermitian_subfield(o.q, o.s, o.m, o.lambda, distance_budget));
    emit_record(record, o.format, out);
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsage : kExitConstruction;
  }
}

}  // namespace prmqc
