#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylcomp/exactmat.hpp"
#include "weylcomp/fingroup.hpp"

namespace weylcomp {

enum class Family { A, B, C, D, G, F };

/// A simple Lie type: A1..A6, B1..B6, C1..C6, D2..D6, G2, F4.
struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Case-insensitive, e.g. "A3", "b2", "F4". Throws Parse or UnsupportedType.
  static LieType parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Throws UnsupportedType unless `t` is within the supported table.
void validate(const LieType& t);

using RootVector = std::vector<Rational>;

/// Simple roots in ambient coordinates plus the lattice basis the Weyl group
/// matrices are written in. B, C, D act on Z^n with the standard basis; A, G2
/// and F4 act on their root lattice in the simple-root basis.
struct RootSystem {
  LieType type;
  std::vector<RootVector> simple_roots;
  /// cartan(i, j) = <alpha_i^vee, alpha_j>
  ExactMatrix cartan;
  /// Columns are the lattice basis vectors in ambient coordinates.
  ExactMatrix basis;
  /// basis^T basis
  ExactMatrix gram;
};

RootSystem root_system(const LieType& t);

/// Coordinates of each simple root in the lattice basis.
std::vector<RootVector> simple_root_coordinates(const RootSystem& rs);
/// Every root, in lattice-basis coordinates, by reflection closure.
std::vector<RootVector> all_roots(const RootSystem& rs);
/// (beta, beta) in the ambient inner product; beta in lattice coordinates.
Rational root_norm(const RootSystem& rs, const RootVector& beta);
/// Matrix of the reflection in `beta` acting on the lattice basis.
ExactMatrix reflection_matrix(const RootSystem& rs, const RootVector& beta);
std::vector<ExactMatrix> simple_reflections(const RootSystem& rs);

FinGroup weyl_group(const LieType& t, const GroupStore* store = nullptr,
                    std::size_t cap = FinGroup::kDefaultCap);

/// Elements g with rank(g - I) = 1.
std::vector<std::size_t> reflections_of(const FinGroup& g);

enum class SubsystemKind { Trivial, DInB, A1nInC, A2InG2, D4InF4 };

struct SubsystemSpec {
  SubsystemKind kind = SubsystemKind::Trivial;
  /// Rank of the subsystem (0 for the trivial one).
  int rank = 0;

  /// "T", "D3", "A1^2", "A2", "D4".
  std::string name() const;
  friend bool operator==(const SubsystemSpec&, const SubsystemSpec&) = default;
};

struct WeylPair {
  LieType ambient;
  SubsystemSpec sub;

  /// "D<B3", "D3<B3", "A1^2<C2", "A2<G2", "D4<F4", "T<G2".
  static WeylPair parse(std::string_view text);
  /// Canonical "D3<B3" form.
  std::string name() const;
};

/// Throws IncompatibleSpec when `spec` does not fit `ambient`.
void check_compatible(const LieType& ambient, const SubsystemSpec& spec);

/// The subsystem spec that fits `ambient`, if any (besides the trivial one).
std::vector<SubsystemSpec> catalog_subsystems(const LieType& ambient);

/// Roots (lattice coordinates) spanning the subsystem.
std::vector<RootVector> subsystem_roots(const RootSystem& rs, const SubsystemSpec& spec);

/// Subgroup of `weyl` = weyl_group(ambient) generated by the reflections in
/// the subsystem roots.
Subgroup subsystem_subgroup(const FinGroup& weyl, const LieType& ambient,
                            const SubsystemSpec& spec);

/// Catalog name of the component group the pair is expected to have.
std::string declared_component_group(const LieType& ambient, const SubsystemSpec& spec);

/// Transpose-inverse of every element, same element order.
FinGroup dual_group(const FinGroup& g);

}  // namespace weylcomp
