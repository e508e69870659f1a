#include "weylcomp/reflect.hpp"

#include <map>

#include "weylcomp/error.hpp"
#include "weylcomp/weyl.hpp"

namespace weylcomp {

namespace {

void reduce(ExactPoly& num, ExactPoly& den) {
  ExactPoly g = gcd(num, den);
  if (!g.is_zero() && g.degree() > 0) {
    num = divide(num, g).quotient;
    den = divide(den, g).quotient;
  }
  Rational c = den.coeff(0);
  num = num * (1 / c);
  den = den * (1 / c);
}

bool is_count(const Rational& q) { return q.get_den() == 1 && sgn(q) >= 0; }

}  // namespace

bool MolienSeries::same_function(const MolienSeries& other) const {
  return numerator * other.denominator == other.numerator * denominator;
}

nlohmann::json to_json(const MolienSeries& m) {
  nlohmann::json j;
  j["numerator"] = to_json(m.numerator);
  j["denominator"] = to_json(m.denominator);
  auto prefix = nlohmann::json::array();
  for (const auto& c : m.prefix) prefix.push_back(c.get_str());
  j["prefix"] = std::move(prefix);
  return j;
}

MolienSeries molien(const FinGroup& g, std::size_t prefix_terms) {
  // det(I - t g) is a class function; sum once per distinct polynomial.
  std::map<std::vector<Rational>, std::size_t> classes;
  for (const auto& m : g.elements()) ++classes[det_one_minus_t(m).coefficients()];

  ExactPoly num;
  ExactPoly den = ExactPoly::constant(1);
  for (const auto& [coeffs, count] : classes) {
    ExactPoly p(coeffs);
    num = num * p + den * Rational(static_cast<long>(count));
    den = den * p;
    reduce(num, den);
  }
  den = den * Rational(static_cast<long>(g.order()));
  reduce(num, den);

  MolienSeries m;
  m.prefix = series_expand(num, den, prefix_terms);
  m.numerator = std::move(num);
  m.denominator = std::move(den);
  return m;
}

bool is_reflection_generated(const FinGroup& g) {
  auto refl = reflections_of(g);
  return subgroup_generated(g, refl).order() == g.order();
}

std::size_t DegreeVector::product() const {
  std::size_t p = 1;
  for (auto d : degrees) p *= d;
  return p;
}

std::size_t DegreeVector::excess() const {
  std::size_t s = 0;
  for (auto d : degrees) s += d - 1;
  return s;
}

std::optional<DegreeVector> match_degrees(const MolienSeries& series, std::size_t dimension,
                                          std::size_t max_degree) {
  ExactPoly num = series.numerator;
  ExactPoly den = series.denominator;
  DegreeVector out;
  for (std::size_t step = 0; step < dimension; ++step) {
    // Smallest positive degree carrying an invariant; every coefficient seen
    // on the way must still be a dimension count.
    std::optional<std::size_t> d;
    for (std::size_t terms = 64; !d; terms *= 2) {
      const std::size_t limit = std::min(terms, max_degree + 1);
      auto coeffs = series_expand(num, den, limit);
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!is_count(coeffs[k])) return std::nullopt;
        if (k > 0 && sgn(coeffs[k]) != 0) {
          d = k;
          break;
        }
      }
      if (!d && limit == max_degree + 1) return std::nullopt;
    }
    out.degrees.push_back(*d);
    num = num * ExactPoly::one_minus_t_pow(*d);
    reduce(num, den);
  }
  if (!(num == den)) return std::nullopt;
  return out;
}

std::optional<DegreeVector> invariant_degrees(const FinGroup& g) {
  if (!is_reflection_generated(g)) return std::nullopt;
  auto degrees = match_degrees(molien(g), g.dimension(), g.order());
  const std::size_t reflections = reflections_of(g).size();
  if (!degrees || degrees->product() != g.order() || degrees->excess() != reflections) {
    throw Error(Errc::DegreeExtractionFailed,
                "Molien series of a reflection group of order " + std::to_string(g.order()) +
                    " did not factor");
  }
  return degrees;
}

bool invariant_ring_polynomial(const FinGroup& g) {
  const bool generated = is_reflection_generated(g);
  auto degrees = match_degrees(molien(g), g.dimension(), g.order());
  const bool factors = degrees && degrees->product() == g.order() &&
                       degrees->excess() == reflections_of(g).size();
  if (generated != factors) {
    throw Error(Errc::InternalInconsistency,
                "reflection generation and Molien factorization disagree");
  }
  return generated;
}

}  // namespace weylcomp
