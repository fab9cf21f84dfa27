#pragma once

#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3census/stratum.hpp"

namespace k3census::census {

struct CatalogRow {
  Int id;
  int codim;
  stratum::WeightSystem ws;
  stratum::Basket expected_basket;
  Int expected_b2;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, size_t column, const std::string& what);

  size_t line;
  size_t column;  // 1-based byte offset within the line
};

// Catalog grammar: "entry (+ entry)*" with entry := [mult "x"] "A" n,
// e.g. "3xA1+4xA2"; the empty basket is "-".
stratum::Basket parse_basket(const std::string& text);

// CSV with header "id,codim,weights,degrees,basket,b2"; weights and
// degrees are space-separated integers. Throws ParseError.
std::vector<CatalogRow> load_catalog(std::istream& in);
std::vector<CatalogRow> load_catalog_file(const std::string& path);

std::string render_catalog_row(const CatalogRow& row);

// Combinatorial quasismoothness test for a general hypersurface of
// degree d = degrees[0]: every nonempty index subset I either carries a
// monomial of degree d, or admits |I| monomials x^M x_e with pairwise
// distinct external indices e.
bool quasismooth_codim1(const stratum::WeightSystem& ws);

// All sorted weight vectors w0<=...<=w3 <= max_weight with d = sum(w),
// well-formed, not a linear cone, quasismooth, and carrying a Du Val
// basket. Lexicographic order.
std::vector<stratum::WeightSystem> enumerate_codim1(const Int& max_weight);

enum class RowStatus {
  Match,            // basket and b2 both reproduced
  B2Diff,           // basket reproduced, printed b2 contradicts 22 - sum n
  BasketMisprint,   // printed basket is structurally impossible for this
                    // weight system and the computed one matches printed b2
  BasketDiff,       // genuine basket mismatch
  Error,            // analysis failed
};

struct RowResult {
  CatalogRow row;
  RowStatus status;
  std::string computed_basket;  // empty on Error
  Int computed_b2;              // meaningful unless Error
  std::string note;             // error text or discrepancy description
};

struct VerificationReport {
  std::vector<RowResult> rows;
  size_t matches = 0;
  size_t b2_diffs = 0;
  size_t basket_misprints = 0;
  size_t basket_diffs = 0;
  size_t errors = 0;
  std::set<Int> realized_b2_orbifold;
  std::set<Int> realized_b2_link;

  // Documented discrepancies are permitted; hard failures are not.
  bool clean() const { return basket_diffs == 0 && errors == 0; }
};

// Recomputes every row; mismatches become report data, never exceptions.
VerificationReport verify_catalog(const std::vector<CatalogRow>& rows);

}  // namespace k3census::census
