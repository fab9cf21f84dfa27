#include "k3census/census.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "k3census/k3inv.hpp"
#include "k3census/wps.hpp"

namespace k3census::census {

ParseError::ParseError(size_t line_, size_t column_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + what_),
      line(line_),
      column(column_) {}

namespace {

Int parse_uint(const std::string& s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("empty ") + what);
  for (char c : s)
    if (c < '0' || c > '9')
      throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  Int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

std::vector<Int> parse_int_list(const std::string& s, const char* what) {
  std::vector<Int> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(parse_uint(tok, what));
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
  return out;
}

}  // namespace

stratum::Basket parse_basket(const std::string& text) {
  stratum::Basket basket;
  if (text == "-") return basket;
  if (text.empty()) throw std::invalid_argument("empty basket field");
  size_t pos = 0;
  while (true) {
    size_t end = text.find('+', pos);
    const std::string entry =
        text.substr(pos, end == std::string::npos ? end : end - pos);
    size_t a = entry.find('A');
    Int mult = 1;
    if (a == std::string::npos)
      throw std::invalid_argument("basket entry '" + entry + "' lacks 'A'");
    if (a > 0) {
      if (entry[a - 1] != 'x')
        throw std::invalid_argument("basket entry '" + entry +
                                    "': expected 'x' before 'A'");
      mult = parse_uint(entry.substr(0, a - 1), "multiplicity");
      if (mult < 1)
        throw std::invalid_argument("basket entry '" + entry +
                                    "': multiplicity must be positive");
    }
    const Int n = parse_uint(entry.substr(a + 1), "subscript");
    if (n < 1)
      throw std::invalid_argument("basket entry '" + entry +
                                  "': subscript must be positive");
    basket.entries.push_back({n, mult, {}});
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return basket;
}

std::vector<CatalogRow> load_catalog(std::istream& in) {
  std::vector<CatalogRow> rows;
  std::string line;
  size_t lineno = 0;
  static const std::string kHeader = "id,codim,weights,degrees,basket,b2";
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != kHeader)
        throw ParseError(1, 1, "expected header '" + kHeader + "'");
      continue;
    }
    std::vector<std::string> fields;
    std::vector<size_t> starts;
    size_t pos = 0;
    while (true) {
      starts.push_back(pos + 1);
      size_t comma = line.find(',', pos);
      fields.push_back(
          line.substr(pos, comma == std::string::npos ? comma : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (fields.size() != 6)
      throw ParseError(lineno, 1,
                       "expected 6 comma-separated fields, got " +
                           std::to_string(fields.size()));
    CatalogRow row;
    size_t field = 0;
    try {
      row.id = parse_uint(fields[0], "id");
      field = 1;
      const Int codim = parse_uint(fields[1], "codim");
      if (codim != 1 && codim != 2)
        throw std::invalid_argument("codim must be 1 or 2");
      row.codim = static_cast<int>(codim);
      field = 2;
      row.ws.weights = parse_int_list(fields[2], "weight");
      field = 3;
      row.ws.degrees = parse_int_list(fields[3], "degree");
      field = 4;
      row.expected_basket = parse_basket(fields[4]);
      field = 5;
      row.expected_b2 = parse_uint(fields[5], "b2");
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, starts[field], e.what());
    }
    if (row.ws.degrees.size() != static_cast<size_t>(row.codim))
      throw ParseError(lineno, starts[3],
                       "degree count does not match codim field");
    row.ws.canonicalize();
    for (const auto& prev : rows)
      if (prev.id == row.id)
        throw ParseError(lineno, starts[0], "duplicate id");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CatalogRow> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  return load_catalog(in);
}

std::string render_catalog_row(const CatalogRow& row) {
  std::ostringstream os;
  os << row.id << ',' << row.codim << ',';
  for (size_t i = 0; i < row.ws.weights.size(); ++i)
    os << (i ? " " : "") << row.ws.weights[i];
  os << ',';
  for (size_t i = 0; i < row.ws.degrees.size(); ++i)
    os << (i ? " " : "") << row.ws.degrees[i];
  os << ',' << row.expected_basket.to_string() << ',' << row.expected_b2;
  return os.str();
}

namespace {

// Is t a non-negative integer combination of the given weights?
bool representable(const std::vector<Int>& weights, const Int& t) {
  if (t < 0) return false;
  if (t == 0) return true;
  const long long target = t.convert_to<long long>();
  std::vector<char> hit(static_cast<size_t>(target) + 1, 0);
  hit[0] = 1;
  for (const Int& w : weights) {
    const long long step = w.convert_to<long long>();
    for (long long v = step; v <= target; ++v)
      if (hit[static_cast<size_t>(v - step)]) hit[static_cast<size_t>(v)] = 1;
  }
  return hit[static_cast<size_t>(target)];
}

}  // namespace

bool quasismooth_codim1(const stratum::WeightSystem& ws) {
  if (ws.codim() != 1)
    throw std::invalid_argument("quasismooth test implemented for codim 1");
  const size_t n = ws.weights.size();
  const Int d = ws.degrees[0];
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Int> inside;
    std::vector<size_t> outside;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (1u << i))
        inside.push_back(ws.weights[i]);
      else
        outside.push_back(i);
    }
    if (representable(inside, d)) continue;
    size_t external_hits = 0;
    for (size_t e : outside)
      if (representable(inside, d - ws.weights[e])) ++external_hits;
    if (external_hits < inside.size()) return false;
  }
  return true;
}

std::vector<stratum::WeightSystem> enumerate_codim1(const Int& max_weight) {
  if (max_weight < 1)
    throw std::invalid_argument("max_weight must be at least 1");
  std::vector<stratum::WeightSystem> out;
  for (Int w0 = 1; w0 <= max_weight; ++w0)
    for (Int w1 = w0; w1 <= max_weight; ++w1)
      for (Int w2 = w1; w2 <= max_weight; ++w2)
        for (Int w3 = w2; w3 <= max_weight; ++w3) {
          stratum::WeightSystem ws;
          ws.weights = {w0, w1, w2, w3};
          const Int d = w0 + w1 + w2 + w3;
          ws.degrees = {d};
          if (d == w3) continue;  // linear cone
          if (!wps::is_well_formed(ws.weights)) continue;
          if (!quasismooth_codim1(ws)) continue;
          if (!stratum::analyze(ws).ok()) continue;
          out.push_back(std::move(ws));
        }
  return out;
}

namespace {

// A printed entry A_n is realizable only if some coordinate stratum has
// stabilizer order n + 1, i.e. some proper subset of the weights has
// gcd n + 1.
bool entry_possible(const stratum::WeightSystem& ws, const Int& n) {
  const size_t count = ws.weights.size();
  for (unsigned mask = 1; mask < (1u << count); ++mask) {
    if (mask == (1u << count) - 1) continue;
    Int g = 0;
    for (size_t i = 0; i < count; ++i)
      if (mask & (1u << i)) g = gcd(g, ws.weights[i]);
    if (g == n + 1) return true;
  }
  return false;
}

}  // namespace

VerificationReport verify_catalog(const std::vector<CatalogRow>& rows) {
  VerificationReport report;
  for (const auto& row : rows) {
    RowResult res;
    res.row = row;
    res.computed_b2 = 0;
    auto analyzed = stratum::analyze(row.ws);
    if (!analyzed.ok()) {
      res.status = RowStatus::Error;
      res.note = analyzed.error().to_string();
      ++report.errors;
      report.rows.push_back(std::move(res));
      continue;
    }
    const stratum::Basket& computed = analyzed.value();
    res.computed_basket = computed.to_string();
    res.computed_b2 = k3inv::b2_orbifold(computed);
    report.realized_b2_orbifold.insert(res.computed_b2);
    report.realized_b2_link.insert(res.computed_b2 - 1);

    if (computed.counts() == row.expected_basket.counts()) {
      if (res.computed_b2 == row.expected_b2) {
        res.status = RowStatus::Match;
        ++report.matches;
      } else {
        res.status = RowStatus::B2Diff;
        std::ostringstream os;
        os << "printed b2 " << row.expected_b2
           << " contradicts 22 - sum n = " << res.computed_b2;
        res.note = os.str();
        ++report.b2_diffs;
      }
    } else {
      // Distinguish an outright misprint: an unrealizable printed entry
      // while the computed basket is the one consistent with printed b2.
      bool impossible = false;
      for (const auto& e : row.expected_basket.entries)
        if (!entry_possible(row.ws, e.n)) impossible = true;
      const Int printed_sum = row.expected_basket.sum_n();
      if (impossible && res.computed_b2 == row.expected_b2 &&
          22 - printed_sum != row.expected_b2) {
        res.status = RowStatus::BasketMisprint;
        std::ostringstream os;
        os << "printed basket " << row.expected_basket.to_string()
           << " is unrealizable here and contradicts printed b2 "
           << row.expected_b2 << "; computed " << res.computed_basket
           << " agrees with it";
        res.note = os.str();
        ++report.basket_misprints;
      } else {
        res.status = RowStatus::BasketDiff;
        std::ostringstream os;
        os << "computed " << res.computed_basket << ", printed "
           << row.expected_basket.to_string();
        res.note = os.str();
        ++report.basket_diffs;
      }
    }
    report.rows.push_back(std::move(res));
  }
  return report;
}

}  // namespace k3census::census
