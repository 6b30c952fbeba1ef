#include "prmqc/report.hpp"

#include <sstream>

#include "prmqc/error.hpp"
#include "prmqc/gv.hpp"

namespace prmqc {

using nlohmann::json;

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

json optional_number(const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); }

json optional_bool(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

json provenance_json(const Provenance& p) {
  json j;
  j["construction"] = p.construction;
  j["q"] = p.q;
  j["s"] = p.s;
  j["m"] = p.m;
  j["degrees"] = p.degrees;
  j["lambda"] = p.lambda ? json(*p.lambda) : json(nullptr);
  j["witness_hash"] = hex(p.witness_hash);
  j["descriptor"] = p.describe();
  return j;
}

std::string dist_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "?"; }

std::string cert_text(const json& cert) {
  if (cert.is_null()) return "none";
  std::string s = cert["kind"].get<std::string>() + "(" + std::to_string(cert["value"].get<std::uint64_t>()) + ")";
  if (cert["budget_exhausted"].get<bool>()) s += ",budget-limited";
  return s;
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + csv_field(v[i]);
    return out;
  }
  return v.dump();
}

json field_or_null(const json& j, const char* key) { return j.contains(key) ? j[key] : json(nullptr); }

std::string cert_kind(const json& j, const char* key) {
  const json c = field_or_null(j, key);
  if (c.is_null()) return "";
  std::string s = c["kind"].get<std::string>();
  if (c["budget_exhausted"].get<bool>()) s += "(budget-limited)";
  return s;
}

}  // namespace

json certificate_json(const std::optional<WeightCertificate>& cert) {
  if (!cert) return nullptr;
  json j;
  j["kind"] = std::string(to_string(cert->kind));
  j["value"] = cert->value;
  j["budget_exhausted"] = cert->budget_exhausted;
  j["steps"] = cert->steps;
  return j;
}

json scaling_witness_json(const HullTarget& target) {
  json list = json::array();
  for (std::size_t i = 0; i < target.scaling_vector.size(); ++i)
    if (target.scaling_vector[i] != 1) list.push_back({{"coordinate", i}, {"scalar", target.scaling_vector[i]}});
  json j;
  j["mode"] = target.mode == HullMode::Hermitian ? "Hermitian" : "RelativeEuclidean";
  j["target_dim"] = target.target_dim;
  j["achieved_dim"] = target.achieved_dim;
  j["length"] = target.scaling_vector.size();
  j["non_unit_entries"] = std::move(list);
  return j;
}

std::optional<bool> gv_asymmetric_verdict(std::uint64_t n, std::uint64_t kappa, std::uint64_t c,
                                          std::uint64_t delta_z, std::uint64_t delta_x, int q) {
  if (kappa > n + c) return std::nullopt;
  const std::uint64_t l = n - kappa + c;
  try {
    return gv_asymmetric_exists(n, l, c, delta_z, delta_x, q);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<bool> gv_symmetric_verdict(std::uint64_t n, std::uint64_t kappa, std::uint64_t c, std::uint64_t delta,
                                         int q) {
  if (c != 0) return std::nullopt;
  try {
    return gv_symmetric_exists(n, kappa, delta, q);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string css_label(const CssParams& p) {
  return "[[" + std::to_string(p.n) + "," + std::to_string(p.kappa) + "," +
         dist_text(reported_distance(p.delta_z, p.delta_z_formula)) + "/" +
         dist_text(reported_distance(p.delta_x, p.delta_x_formula)) + ";" + std::to_string(p.c) + "]]_" +
         std::to_string(p.provenance.q);
}

std::string hermitian_label(const HermParams& p) {
  return "[[" + std::to_string(p.n) + "," + std::to_string(p.kappa) + "," +
         dist_text(reported_distance(p.delta, p.delta_formula)) + ";" + std::to_string(p.c) + "]]_" +
         std::to_string(p.provenance.q);
}

json to_json(const CssConstruction& con) {
  const CssParams& p = con.params;
  json j = provenance_json(p.provenance);
  j["label"] = css_label(p);
  j["n"] = p.n;
  j["k1"] = p.k1;
  j["k2"] = p.k2;
  j["c"] = p.c;
  j["kappa"] = p.kappa;
  const auto dz = reported_distance(p.delta_z, p.delta_z_formula);
  const auto dx = reported_distance(p.delta_x, p.delta_x_formula);
  j["delta_z"] = optional_number(dz);
  j["delta_x"] = optional_number(dx);
  j["delta_z_certificate"] = certificate_json(p.delta_z);
  j["delta_x_certificate"] = certificate_json(p.delta_x);
  j["delta_z_formula"] = optional_number(p.delta_z_formula);
  j["delta_x_formula"] = optional_number(p.delta_x_formula);
  j["purity"] = std::string(to_string(p.purity));
  j["degenerate"] = p.degenerate;
  std::optional<bool> asym, sym;
  if (dz && dx) {
    asym = gv_asymmetric_verdict(p.n, p.kappa, p.c, *dz, *dx, p.provenance.q);
    if (*dz == *dx) sym = gv_symmetric_verdict(p.n, p.kappa, p.c, *dz, p.provenance.q);
  }
  j["gv_asym"] = optional_bool(asym);
  j["gv_sym"] = optional_bool(sym);
  j["scaling_witness"] = con.hull ? scaling_witness_json(*con.hull) : json(nullptr);
  j["notes"] = p.notes;
  return j;
}

json to_json(const HermConstruction& con) {
  const HermParams& p = con.params;
  json j = provenance_json(p.provenance);
  j["label"] = hermitian_label(p);
  j["n"] = p.n;
  j["k"] = p.k;
  j["c"] = p.c;
  j["kappa"] = p.kappa;
  const auto d = reported_distance(p.delta, p.delta_formula);
  j["delta"] = optional_number(d);
  j["delta_certificate"] = certificate_json(p.delta);
  j["delta_formula"] = optional_number(p.delta_formula);
  j["purity"] = std::string(to_string(p.purity));
  std::optional<bool> asym, sym;
  if (d) {
    asym = gv_asymmetric_verdict(p.n, p.kappa, p.c, *d, *d, p.provenance.q);
    sym = gv_symmetric_verdict(p.n, p.kappa, p.c, *d, p.provenance.q);
  }
  j["gv_asym"] = optional_bool(asym);
  j["gv_sym"] = optional_bool(sym);
  j["scaling_witness"] = con.hull ? scaling_witness_json(*con.hull) : json(nullptr);
  j["notes"] = p.notes;
  return j;
}

std::string csv_header() {
  return "row,status,construction,q,s,m,degrees,lambda,c,n,kappa,delta_z,delta_x,delta,certificate_z,"
         "certificate_x,certificate,gv_asym,gv_sym,purity,witness_hash";
}

std::string csv_row(const json& r) {
  const json cols[] = {field_or_null(r, "row"),    field_or_null(r, "status"),  field_or_null(r, "construction"),
                       field_or_null(r, "q"),      field_or_null(r, "s"),       field_or_null(r, "m"),
                       field_or_null(r, "degrees"), field_or_null(r, "lambda"), field_or_null(r, "c"),
                       field_or_null(r, "n"),      field_or_null(r, "kappa"),   field_or_null(r, "delta_z"),
                       field_or_null(r, "delta_x"), field_or_null(r, "delta"),  json(cert_kind(r, "delta_z_certificate")),
                       json(cert_kind(r, "delta_x_certificate")), json(cert_kind(r, "delta_certificate")),
                       field_or_null(r, "gv_asym"), field_or_null(r, "gv_sym"), field_or_null(r, "purity"),
                       field_or_null(r, "witness_hash")};
  std::string out;
  bool first = true;
  for (const auto& c : cols) {
    if (!first) out += ',';
    first = false;
    std::string f = csv_field(c);
    if (f.find(',') != std::string::npos) f = "\"" + f + "\"";
    out += f;
  }
  return out;
}

std::string text_line(const json& r) {
  std::string s = r["label"].get<std::string>() + "  " + r["descriptor"].get<std::string>();
  if (r.contains("delta")) {
    s += "  delta: " + cert_text(r["delta_certificate"]);
  } else {
    s += "  delta_z: " + cert_text(r["delta_z_certificate"]) + "  delta_x: " + cert_text(r["delta_x_certificate"]);
  }
  auto verdict = [](const json& v) { return v.is_null() ? std::string("n/a") : std::string(v.get<bool>() ? "true" : "false"); };
  s += "  gv_asym: " + verdict(r["gv_asym"]) + "  gv_sym: " + verdict(r["gv_sym"]);
  s += "  " + r["purity"].get<std::string>();
  return s;
}

std::vector<TableRow> table_rows() {
  using K = TableRow::Kind;
  std::vector<TableRow> rows;
  for (int c = 0; c <= 3; ++c)
    rows.push_back({"css-prm q=8 m=2 d=1,4 c=" + std::to_string(c), K::CssPrm, {8, 2, 1, 4, c}, 8, 73,
                    static_cast<std::uint64_t>(55 + c), static_cast<std::uint64_t>(c), 6, 3, std::nullopt});
  rows.push_back({"css-subfield q=2 s=3 m=2 d=7,7", K::CssSubfield, {2, 3, 2, 7, 7}, 2, 73, 19, 0, 9, 9,
                  PrintedGeometry{2, 2, 2}});
  rows.push_back({"css-subfield q=3 s=2 m=2 d=4,4", K::CssSubfield, {3, 2, 2, 4, 4}, 3, 91, 73, 0, 4, 4, std::nullopt});
  rows.push_back({"css-subfield q=3 s=2 m=2 d=4,12", K::CssSubfield, {3, 2, 2, 4, 12}, 3, 91, 12, 0, 36, 4,
                  PrintedGeometry{2, 0, 2}});
  rows.push_back({"hermitian q=2 m=3 d=1", K::HermitianPrm, {2, 3, 1, 0}, 2, 85, 77, 0, 3, 0, std::nullopt});
  rows.push_back({"hermitian q=2 m=4 d=1", K::HermitianPrm, {2, 4, 1, 0}, 2, 341, 331, 0, 3, 0, std::nullopt});
  rows.push_back({"hermitian q=3 m=2 d=2", K::HermitianPrm, {3, 2, 2, 0}, 3, 91, 79, 0, 4, 0, std::nullopt});
  rows.push_back({"hermitian q=3 m=3 d=2", K::HermitianPrm, {3, 3, 2, 0}, 3, 820, 800, 0, 4, 0, std::nullopt});
  rows.push_back({"hermitian q=4 m=2 d=1 c=0", K::HermitianPrm, {4, 2, 1, 0}, 4, 273, 267, 0, 3, 0, std::nullopt});
  rows.push_back({"hermitian q=5 m=2 d=1 c=0", K::HermitianPrm, {5, 2, 1, 0}, 5, 651, 645, 0, 3, 0, std::nullopt});
  rows.push_back({"hermitian q=5 m=2 d=2 c=0", K::HermitianPrm, {5, 2, 2, 0}, 5, 651, 639, 0, 4, 0, std::nullopt});
  rows.push_back({"hermitian-subfield q=2 s=2 m=2 lambda=1", K::HermitianSubfield, {2, 2, 2, 1}, 2, 273, 255, 0, 4, 0,
                  std::nullopt});
  rows.push_back({"hermitian-subfield q=2 s=2 m=3 lambda=1", K::HermitianSubfield, {2, 2, 3, 1}, 2, 4369, 4337, 0, 4,
                  0, std::nullopt});
  return rows;
}

std::string_view to_string(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::BudgetLimited: return "budget-limited";
    case RowStatus::Fail: return "fail";
  }
  return "fail";
}

RowOutcome run_table_row(const TableRow& row, std::uint64_t budget) {
  RowOutcome out{row, RowStatus::Pass, {}, json::object()};
  bool limited = false;
  auto expect_eq = [&](const char* what, std::uint64_t got, std::uint64_t want) {
    if (got != want)
      out.problems.push_back(std::string(what) + " = " + std::to_string(got) + ", expected " + std::to_string(want));
  };
  auto check_distance = [&](const char* what, const std::optional<WeightCertificate>& cert,
                            const std::optional<std::uint64_t>& formula, std::uint64_t want) {
    if (!cert) {
      out.problems.push_back(std::string(what) + ": dual code is zero");
      return;
    }
    if (cert->exact()) {
      expect_eq(what, cert->value, want);
      return;
    }
    const std::uint64_t bound = std::max<std::uint64_t>(cert->value, formula.value_or(0));
    if (bound > want)
      out.problems.push_back(std::string(what) + " >= " + std::to_string(bound) + " contradicts " + std::to_string(want));
    limited = true;
  };

  const auto& a = row.args;
  try {
    switch (row.kind) {
      case TableRow::Kind::CssPrm:
      case TableRow::Kind::CssSubfield: {
        const CssConstruction con = row.kind == TableRow::Kind::CssPrm
                                        ? construct_css_prm(a[0], a[1], a[2], a[3], static_cast<std::size_t>(a[4]), budget)
                                        : construct_css_subfield(a[0], a[1], a[2], a[3], a[4], budget);
        out.record = to_json(con);
        const CssParams& p = con.params;
        expect_eq("q", static_cast<std::uint64_t>(p.provenance.q), static_cast<std::uint64_t>(row.q));
        expect_eq("n", p.n, row.n);
        expect_eq("kappa", p.kappa, row.kappa);
        expect_eq("c", p.c, row.c);
        check_distance("delta_z", p.delta_z, p.delta_z_formula, row.delta_z);
        check_distance("delta_x", p.delta_x, p.delta_x_formula, row.delta_x);
        const auto gv = gv_asymmetric_verdict(row.n, row.kappa, row.c, row.delta_z, row.delta_x, row.q);
        out.record["expected_gv_asym"] = optional_bool(gv);
        if (!gv || *gv) out.problems.push_back("asymmetric GV bound already guarantees these parameters");
        if (row.kind == TableRow::Kind::CssSubfield) {
          json geo = json::array();
          for (const auto& g : consistent_geometries(row.n, a[3] + a[4], p.provenance.q))
            geo.push_back({{"q", g.q}, {"s", g.s}, {"m", g.m}, {"lambda", g.lambda}});
          out.record["consistent_geometries"] = geo;
          if (row.printed) {
            const auto& pg = *row.printed;
            bool consistent = false;
            for (const auto& g : consistent_geometries(row.n, a[3] + a[4]))
              consistent = consistent || (g.q == pg.q && (pg.s == 0 || g.s == pg.s) && (pg.m == 0 || g.m == pg.m));
            out.record["printed_geometry"] = {{"q", pg.q}, {"s", pg.s}, {"m", pg.m}, {"consistent", consistent}};
          }
        }
        break;
      }
      case TableRow::Kind::HermitianPrm:
      case TableRow::Kind::HermitianSubfield: {
        const HermConstruction con =
            row.kind == TableRow::Kind::HermitianPrm
                ? construct_hermitian_prm(a[0], a[1], a[2], static_cast<std::size_t>(a[3]), budget)
                : construct_hermitian_subfield(a[0], a[1], a[2], a[3], budget);
        out.record = to_json(con);
        const HermParams& p = con.params;
        expect_eq("q", static_cast<std::uint64_t>(p.provenance.q), static_cast<std::uint64_t>(row.q));
        expect_eq("n", p.n, row.n);
        expect_eq("kappa", p.kappa, row.kappa);
        expect_eq("c", p.c, row.c);
        check_distance("delta", p.delta, p.delta_formula, row.delta_z);
        const auto gv = gv_symmetric_verdict(row.n, row.kappa, row.c, row.delta_z, row.q);
        out.record["expected_gv_sym"] = optional_bool(gv);
        if (!gv || *gv) out.problems.push_back("symmetric GV bound already guarantees these parameters");
        break;
      }
    }
  } catch (const Error& e) {
    out.problems.push_back(e.what());
  }
  out.status = !out.problems.empty() ? RowStatus::Fail : (limited ? RowStatus::BudgetLimited : RowStatus::Pass);
  out.record["row"] = row.label;
  out.record["status"] = std::string(to_string(out.status));
  out.record["problems"] = out.problems;
  return out;
}

}  // namespace prmqc
