#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3census/census.hpp"
#include "k3census/k3inv.hpp"
#include "k3census/wps.hpp"

namespace {

using k3census::Int;
using nlohmann::json;
namespace census = k3census::census;
namespace k3inv = k3census::k3inv;
namespace stratum = k3census::stratum;

std::vector<Int> parse_csv_ints(const std::string& text, const char* what) {
  std::vector<Int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw CLI::ValidationError(what, "empty entry");
    for (char c : tok)
      if (c < '0' || c > '9')
        throw CLI::ValidationError(what, "expected comma-separated integers");
    Int v = 0;
    for (char c : tok) v = v * 10 + (c - '0');
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError(what, "no values given");
  return out;
}

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

std::string join(const std::vector<Int>& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

json record_to_json(const k3inv::K3Record& rec) {
  json j;
  j["weights"] = json::array();
  for (const Int& w : rec.ws.weights) j["weights"].push_back(to_ll(w));
  j["degrees"] = json::array();
  for (const Int& d : rec.ws.degrees) j["degrees"].push_back(to_ll(d));
  j["basket"] = rec.basket.to_string();
  j["basket_entries"] = json::array();
  for (const auto& [n, mult] : rec.basket.counts())
    j["basket_entries"].push_back({{"n", to_ll(n)}, {"multiplicity", to_ll(mult)}});
  j["b2_orbifold"] = to_ll(rec.b2_orbifold);
  j["b2_link"] = to_ll(rec.b2_link);
  j["k"] = to_ll(rec.k);
  j["diffeo"] = rec.diffeo;
  j["moduli_dim"] = to_ll(rec.moduli);
  j["dolgachev_dim"] = to_ll(rec.dolgachev);
  if (rec.moduli_poly)
    j["moduli_dim_polynomial"] = to_ll(*rec.moduli_poly);
  else
    j["moduli_dim_polynomial"] = nullptr;
  j["period_quadric"] = {{"ambient_dim", to_ll(rec.quadric.ambient_dim)},
                         {"complex_dim", to_ll(rec.quadric.complex_dim)},
                         {"condition", rec.quadric.condition}};
  return j;
}

std::string record_csv_header() { return "id,codim,weights,degrees,basket,b2"; }

std::string record_to_csv(size_t id, const k3inv::K3Record& rec) {
  std::ostringstream os;
  os << id << ',' << rec.ws.codim() << ',' << join(rec.ws.weights, " ") << ','
     << join(rec.ws.degrees, " ") << ',' << rec.basket.to_string() << ','
     << rec.b2_orbifold;
  return os.str();
}

void print_record_md(const k3inv::K3Record& rec) {
  std::cout << "X_{" << join(rec.ws.degrees, ",") << "} in P("
            << join(rec.ws.weights, ",") << ")\n";
  std::cout << "basket: " << rec.basket.to_string() << "\n";
  std::cout << "b2(X): " << rec.b2_orbifold << "\n";
  std::cout << "b2(L): " << rec.b2_link << "\n";
  std::cout << "diffeo: " << rec.diffeo << "\n";
  std::cout << "moduli_dim: " << rec.moduli << "\n";
  if (rec.moduli_poly)
    std::cout << "moduli_dim_polynomial: " << *rec.moduli_poly << "\n";
  std::cout << "dolgachev_dim: " << rec.dolgachev << "\n";
  std::cout << "period_quadric: complex dim " << rec.quadric.complex_dim
            << " in CP^" << rec.quadric.ambient_dim << ", "
            << rec.quadric.condition << "\n";
}

int emit_records(const std::vector<k3inv::K3Record>& recs,
                 const std::string& format, bool summary) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : recs) arr.push_back(record_to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << record_csv_header() << "\n";
    for (size_t i = 0; i < recs.size(); ++i)
      std::cout << record_to_csv(i + 1, recs[i]) << "\n";
  } else {
    std::cout << "| id | weights | degrees | basket | b2(X) | b2(L) | diffeo "
                 "|\n|---|---|---|---|---|---|---|\n";
    for (size_t i = 0; i < recs.size(); ++i) {
      const auto& r = recs[i];
      std::cout << "| " << (i + 1) << " | " << join(r.ws.weights, ",")
                << " | " << join(r.ws.degrees, ",") << " | "
                << r.basket.to_string() << " | " << r.b2_orbifold << " | "
                << r.b2_link << " | " << r.diffeo << " |\n";
    }
  }
  if (summary && format != "json" && format != "csv")
    std::cout << "\n" << recs.size() << " weight systems\n";
  return 0;
}

const char* status_name(census::RowStatus s) {
  switch (s) {
    case census::RowStatus::Match:
      return "match";
    case census::RowStatus::B2Diff:
      return "b2-misprint";
    case census::RowStatus::BasketMisprint:
      return "basket-misprint";
    case census::RowStatus::BasketDiff:
      return "basket-diff";
    case census::RowStatus::Error:
      return "error";
  }
  return "?";
}

std::string int_set_to_string(const std::set<Int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const Int& v : s) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

int run_verify(const std::string& catalog, const std::string& format) {
  std::vector<census::CatalogRow> rows;
  try {
    rows = census::load_catalog_file(catalog);
  } catch (const std::exception& e) {
    std::cerr << "parse failure: " << e.what() << "\n";
    return 1;
  }
  const auto report = census::verify_catalog(rows);
  if (format == "json") {
    json j;
    j["rows"] = json::array();
    for (const auto& r : report.rows) {
      json row;
      row["id"] = to_ll(r.row.id);
      row["weights"] = join(r.row.ws.weights, " ");
      row["degrees"] = join(r.row.ws.degrees, " ");
      row["status"] = status_name(r.status);
      row["computed_basket"] = r.computed_basket;
      row["printed_basket"] = r.row.expected_basket.to_string();
      row["computed_b2"] =
          r.status == census::RowStatus::Error ? json() : json(to_ll(r.computed_b2));
      row["printed_b2"] = to_ll(r.row.expected_b2);
      row["note"] = r.note;
      j["rows"].push_back(row);
    }
    j["matches"] = report.matches;
    j["b2_misprints"] = report.b2_diffs;
    j["basket_misprints"] = report.basket_misprints;
    j["basket_diffs"] = report.basket_diffs;
    j["errors"] = report.errors;
    json orb = json::array(), link = json::array();
    for (const Int& v : report.realized_b2_orbifold) orb.push_back(to_ll(v));
    for (const Int& v : report.realized_b2_link) link.push_back(to_ll(v));
    j["realized_b2_orbifold"] = orb;
    j["realized_b2_link"] = link;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "id,status,computed_basket,printed_basket,computed_b2,"
                 "printed_b2,note\n";
    for (const auto& r : report.rows)
      std::cout << to_ll(r.row.id) << ',' << status_name(r.status) << ','
                << r.computed_basket << ','
                << r.row.expected_basket.to_string() << ','
                << (r.status == census::RowStatus::Error
                        ? std::string("-")
                        : r.computed_b2.str())
                << ',' << r.row.expected_b2 << ",\"" << r.note << "\"\n";
  } else {
    std::cout << rows.size() << " rows: " << report.matches << " matches, "
              << report.b2_diffs << " b2 misprints, "
              << report.basket_misprints << " basket misprints, "
              << report.basket_diffs << " basket diffs, " << report.errors
              << " errors\n";
    for (const auto& r : report.rows)
      if (r.status != census::RowStatus::Match)
        std::cout << "  No." << r.row.id << " (" << join(r.row.ws.weights, ",")
                  << "; " << join(r.row.ws.degrees, ",") << ") ["
                  << status_name(r.status) << "] " << r.note << "\n";
    std::cout << "realized b2(X): "
              << int_set_to_string(report.realized_b2_orbifold) << "\n";
    std::cout << "realized b2(L): "
              << int_set_to_string(report.realized_b2_link) << "\n";
  }
  return report.clean() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact census of weighted K3 complete intersections and the "
               "topology of their links"};
  app.require_subcommand(1);

  std::string format = "md";
  int jobs = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"md", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker count (output is order-independent)")
      ->check(CLI::PositiveNumber);

  std::string weights_arg, degrees_arg, catalog;
  long long max_weight = 40;
  long long l_arg = 0;

  auto* analyze = app.add_subcommand("analyze", "analyze one weight system");
  analyze->add_option("-w,--weights", weights_arg, "comma-separated weights")
      ->required();
  analyze->add_option("-d,--degrees", degrees_arg, "comma-separated degrees")
      ->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "enumerate codimension-1 systems");
  enumerate->add_option("--max-weight", max_weight, "largest weight to try")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "recompute a catalog");
  verify->add_option("--catalog", catalog, "catalog csv path")->required();

  auto* h0cmd = app.add_subcommand("h0", "monomial count in one degree");
  h0cmd->add_option("-w,--weights", weights_arg, "comma-separated weights")
      ->required();
  h0cmd->add_option("-l", l_arg, "degree")->check(CLI::NonNegativeNumber)
      ->required();

  auto* moduli = app.add_subcommand("moduli", "moduli dimension cross-check");
  moduli->add_option("-w,--weights", weights_arg, "comma-separated weights")
      ->required();
  moduli->add_option("-d,--degrees", degrees_arg, "comma-separated degrees")
      ->required();

  // Let global flags like --format appear after the subcommand name.
  for (auto* sub : {analyze, enumerate, verify, h0cmd, moduli})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed() || moduli->parsed()) {
      stratum::WeightSystem ws;
      ws.weights = parse_csv_ints(weights_arg, "--weights");
      ws.degrees = parse_csv_ints(degrees_arg, "--degrees");
      auto rec = k3inv::make_record(ws);
      if (!rec.ok()) {
        if (format == "json") {
          json j;
          j["error"] = {{"kind", rec.error().to_string()}};
          std::cout << j.dump(2) << "\n";
        } else {
          std::cerr << "analysis error: " << rec.error().to_string() << "\n";
        }
        return 2;
      }
      if (analyze->parsed()) {
        if (format == "json")
          std::cout << record_to_json(rec.value()).dump(2) << "\n";
        else if (format == "csv") {
          std::cout << record_csv_header() << "\n"
                    << record_to_csv(1, rec.value()) << "\n";
        } else
          print_record_md(rec.value());
        return 0;
      }
      const auto& r = rec.value();
      std::ostringstream line;
      line << r.moduli;
      bool agree = true;
      line << ' ' << 2 * r.dolgachev;
      agree = agree && 2 * r.dolgachev == r.moduli;
      if (r.moduli_poly) {
        line << ' ' << *r.moduli_poly;
        agree = agree && *r.moduli_poly == r.moduli;
      }
      std::cout << line.str() << (agree ? " (agree)" : " (disagree)") << "\n";
      return 0;
    }
    if (h0cmd->parsed()) {
      const auto weights = parse_csv_ints(weights_arg, "--weights");
      std::cout << k3census::wps::h0(weights, Int(l_arg)) << "\n";
      return 0;
    }
    if (enumerate->parsed()) {
      std::vector<k3inv::K3Record> recs;
      for (const auto& ws : census::enumerate_codim1(Int(max_weight))) {
        auto rec = k3inv::make_record(ws);
        if (!rec.ok()) {
          std::cerr << "analysis error: " << rec.error().to_string() << "\n";
          return 2;
        }
        recs.push_back(std::move(rec.value()));
      }
      return emit_records(recs, format, true);
    }
    if (verify->parsed()) return run_verify(catalog, format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
