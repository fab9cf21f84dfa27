#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3census/int_types.hpp"

namespace k3census::stratum {

// A candidate weighted complete intersection surface: 4 weights with one
// degree, or 5 weights with two degrees.
struct WeightSystem {
  std::vector<Int> weights;  // canonical: sorted non-decreasing
  std::vector<Int> degrees;  // sorted

  size_t codim() const { return degrees.size(); }
  Int weight_sum() const;
  Int degree_sum() const;
  bool is_k3() const { return degree_sum() == weight_sum(); }
  void canonicalize();

  bool operator==(const WeightSystem& o) const = default;
  bool operator<(const WeightSystem& o) const;
};

// One A_n contribution: n = stabilizer - 1 of the source stratum.
struct BasketEntry {
  Int n;
  Int multiplicity;
  std::vector<size_t> source;  // stratum index subset
};

struct Basket {
  std::vector<BasketEntry> entries;

  Int sum_n() const;                // sum of n * multiplicity
  std::map<Int, Int> counts() const;  // n -> total multiplicity
  // Canonical catalog-grammar string, e.g. "3xA1+4xA2"; "-" when empty.
  std::string to_string() const;
};

enum class ErrorKind {
  NotWellFormed,
  NotSurfaceCodimension,
  ContainedSingularStratum,
  NonIsolatedSingularLocus,
  QuasismoothnessFailureAtVertex,
  UnsupportedInput,
};

struct AnalysisError {
  ErrorKind kind;
  std::vector<size_t> indices;  // offending stratum / vertex, may be empty
  std::string detail;

  std::string to_string() const;
};

template <class T>
class Expected {
 public:
  Expected(T value) : v_(std::move(value)) {}
  Expected(AnalysisError error) : v_(std::move(error)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  const T& value() const { return std::get<T>(v_); }
  T& value() { return std::get<T>(v_); }
  const AnalysisError& error() const { return std::get<AnalysisError>(v_); }

 private:
  std::variant<T, AnalysisError> v_;
};

using MaybeEntry = std::optional<BasketEntry>;

// Singularity of the general member at the fixed point of coordinate i.
Expected<MaybeEntry> vertex_analysis(const WeightSystem& ws, size_t i);

// Singularities along the coordinate line spanned by {i, j}.
Expected<MaybeEntry> edge_analysis(const WeightSystem& ws, size_t i, size_t j);

// Codim-2 only: singularities in the open torus of the face {i, j, k},
// counted by the mixed volume of the two restricted Newton polygons.
Expected<MaybeEntry> face_analysis(const WeightSystem& ws, size_t i, size_t j,
                                   size_t k);

// Full Du Val basket of the general member over all singular strata.
Expected<Basket> analyze(const WeightSystem& ws);

}  // namespace k3census::stratum
