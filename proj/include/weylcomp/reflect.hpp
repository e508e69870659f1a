#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "weylcomp/exactmat.hpp"
#include "weylcomp/fingroup.hpp"

namespace weylcomp {

/// Hilbert series of the invariant ring, as numerator/denominator in lowest
/// terms with denominator(0) = 1, plus an expanded prefix.
struct MolienSeries {
  static constexpr std::size_t kDefaultPrefix = 64;

  ExactPoly numerator;
  ExactPoly denominator;
  std::vector<Rational> prefix;

  /// Equality of rational functions by cross-multiplication.
  bool same_function(const MolienSeries& other) const;
};

nlohmann::json to_json(const MolienSeries& m);

MolienSeries molien(const FinGroup& g, std::size_t prefix_terms = MolienSeries::kDefaultPrefix);

bool is_reflection_generated(const FinGroup& g);

struct DegreeVector {
  std::vector<std::size_t> degrees;

  std::size_t product() const;
  /// sum of (d - 1)
  std::size_t excess() const;
};

/// Greedy factorization of `series` as prod 1/(1 - t^d) with `dimension`
/// factors, d <= max_degree. Independent of any reflection count.
std::optional<DegreeVector> match_degrees(const MolienSeries& series, std::size_t dimension,
                                          std::size_t max_degree);

/// nullopt when g is not generated by reflections (the invariant ring is then
/// not polynomial). Throws DegreeExtractionFailed if a reflection group's
/// series does not factor.
std::optional<DegreeVector> invariant_degrees(const FinGroup& g);

/// Reflection generation and Molien factorization, computed separately and
/// compared. Throws InternalInconsistency when they disagree.
bool invariant_ring_polynomial(const FinGroup& g);

}  // namespace weylcomp
