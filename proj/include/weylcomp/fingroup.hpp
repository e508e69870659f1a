#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "weylcomp/exactmat.hpp"

namespace weylcomp {

/// A finite group whose elements are the indices 0 .. order()-1, with 0 the
/// identity. Implemented by matrix groups and by coset tables.
class Group {
 public:
  virtual ~Group() = default;

  virtual std::size_t order() const = 0;
  virtual std::size_t mul(std::size_t a, std::size_t b) const = 0;
  virtual std::size_t inverse(std::size_t a) const = 0;
  virtual std::span<const std::size_t> generators() const = 0;
  /// Order of every element, indexed by element.
  virtual std::span<const std::size_t> element_orders() const = 0;

  static constexpr std::size_t identity() { return 0; }
  std::size_t element_order(std::size_t a) const { return element_orders()[a]; }
  std::size_t power(std::size_t a, std::uint64_t k) const;
  /// g h g^-1
  std::size_t conjugate(std::size_t g, std::size_t h) const {
    return mul(mul(g, h), inverse(g));
  }
  bool is_abelian() const;
};

/// Matrix group materialized from generators: identity first, then elements
/// in breadth-first discovery order under right multiplication.
class FinGroup final : public Group {
 public:
  static constexpr std::size_t kDefaultCap = 100000;

  /// Throws CapExceeded when the closure grows past `cap` elements.
  static FinGroup close(std::vector<ExactMatrix> generators, std::size_t cap = kDefaultCap);
  static FinGroup trivial(std::size_t dimension);
  /// Rebuilds a group from a previously closed element list without redoing
  /// the closure. Element 0 must be the identity.
  static FinGroup from_elements(std::vector<ExactMatrix> elements,
                                std::vector<std::size_t> generator_indices);

  std::size_t order() const override { return elements_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const override;
  std::size_t inverse(std::size_t a) const override;
  std::span<const std::size_t> generators() const override { return generators_; }
  std::span<const std::size_t> element_orders() const override;

  std::size_t dimension() const { return dimension_; }
  const ExactMatrix& element(std::size_t i) const { return elements_[i]; }
  std::span<const ExactMatrix> elements() const { return elements_; }
  std::vector<ExactMatrix> generator_matrices() const;
  std::optional<std::size_t> find(const ExactMatrix& m) const;
  /// Throws NotFound when `m` is not an element.
  std::size_t index_of(const ExactMatrix& m) const;

 private:
  struct PowerCache;

  FinGroup() = default;
  void build_index();

  std::size_t dimension_ = 0;
  std::vector<ExactMatrix> elements_;
  std::unordered_map<ExactMatrix, std::size_t, ExactMatrixHash> index_;
  std::vector<std::size_t> generators_;
  std::shared_ptr<PowerCache> cache_;
};

/// Member set of a subgroup of some parent group. The parent must outlive it.
class Subgroup {
 public:
  /// Checks identity membership, generator membership and Lagrange.
  Subgroup(const Group& parent, std::vector<std::size_t> elements,
           std::vector<std::size_t> generators);

  const Group& parent() const { return *parent_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::size_t g) const { return members_[g] != 0; }
  /// Sorted element indices.
  std::span<const std::size_t> elements() const { return elements_; }
  std::span<const std::size_t> generators() const { return generators_; }
  bool is_trivial() const { return elements_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  const Group* parent_;
  std::vector<char> members_;
  std::vector<std::size_t> elements_;
  std::vector<std::size_t> generators_;
};

/// G/N as a coset table. Coset 0 is N itself.
class QuotientGroup final : public Group {
 public:
  std::size_t order() const override { return reps_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const override { return table_[a * reps_.size() + b]; }
  std::size_t inverse(std::size_t a) const override { return inverse_[a]; }
  std::span<const std::size_t> generators() const override { return generators_; }
  std::span<const std::size_t> element_orders() const override { return orders_; }

  std::span<const std::size_t> representatives() const { return reps_; }
  std::size_t coset_of(std::size_t g) const { return coset_of_[g]; }

 private:
  friend QuotientGroup quotient(const Group& g, const Subgroup& n);
  QuotientGroup() = default;

  std::vector<std::size_t> reps_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> orders_;
};

/// A homomorphism fixed by generator images, expanded to every element.
class Homomorphism {
 public:
  /// `images[k]` is the image of source.generators()[k]. Throws
  /// NotAHomomorphism when the assignment does not respect the relations.
  Homomorphism(const Group& source, const Group& target, std::span<const std::size_t> images);

  std::size_t operator()(std::size_t g) const { return map_[g]; }
  std::span<const std::size_t> map() const { return map_; }
  const Group& source() const { return *source_; }
  const Group& target() const { return *target_; }
  Subgroup kernel() const;

 private:
  const Group* source_;
  const Group* target_;
  std::vector<std::size_t> map_;
};

Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);
Subgroup subgroup_generated(const Group& g, std::span<const std::size_t> subset);
/// Smallest subgroup containing `h` and `extra`.
Subgroup subgroup_join(const Subgroup& h, std::span<const std::size_t> extra);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(const Group& g, std::span<const std::size_t> subset);

/// Does every generator of `by` conjugate `h` into itself?
bool normalizes(const Group& g, std::span<const std::size_t> by, const Subgroup& h);
bool is_normal(const Group& g, const Subgroup& h);
/// Normality of `h` inside the subgroup `m` (h <= m).
bool is_normal_in(const Subgroup& m, const Subgroup& h);

/// The subgroup as a matrix group in its own right, generated by its
/// generator matrices.
FinGroup materialize(const FinGroup& g, const Subgroup& h);

/// Throws NotNormal.
QuotientGroup quotient(const Group& g, const Subgroup& n);

/// The largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

Subgroup sylow(const Group& g, std::uint64_t p);
bool is_nilpotent(const Group& g);
/// Subgroup generated by every element of order prime to p.
Subgroup p_prime_generated(const Group& g, std::uint64_t p);
bool is_p_nilpotent(const Group& g, std::uint64_t p);
Subgroup center(const Group& g);

struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t center_order = 0;
  std::map<std::size_t, std::size_t> order_histogram;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Group& g);
bool are_isomorphic(const Group& a, const Group& b);

/// Builtin groups addressable by name: trivial, Z<n> (also Z/<n>), Z2xZ2,
/// S<n> (symmetric, as permutation matrices), A<n>, D8, Q8. Throws
/// UnknownCatalogName.
FinGroup catalog_group(std::string_view name);
bool iso_to_catalog(const Group& g, std::string_view name);
/// First catalog name whose group is isomorphic to g, if any.
std::optional<std::string> identify_in_catalog(const Group& g);

/// Is there H <= G with H meet N trivial and |H||N| = |G|? Throws
/// SearchBudgetExceeded when |G| > budget.
bool has_complement(const Group& g, const Subgroup& n, std::size_t budget = 1000);

/// With M = ker q and nu normal in K, checks that nu meet M is normal in M.
bool kernel_normality_check(const Homomorphism& q, const Subgroup& nu);

/// Sum of |chi(g)|^2 for a group of realified complex matrices of complex
/// dimension `dim`. Throws MalformedRealification.
Rational rep_character_norm(const FinGroup& g, std::size_t dim);

/// Permutation matrix sending basis vector i to basis vector perm[i].
ExactMatrix permutation_matrix(std::span<const std::size_t> perm);
/// The quaternion group as realified 4x4 matrices of rho(x) = diag(i, -i),
/// rho(y) = [[0, -1], [1, 0]].
std::vector<ExactMatrix> quaternion_generators();

/// Cache format: {name, dimension, order, generators, elements}.
nlohmann::json group_to_json(const FinGroup& g, std::string_view name);
FinGroup group_from_json(const nlohmann::json& j);

/// Source of closed groups; lets callers substitute a persistent cache.
class GroupStore {
 public:
  virtual ~GroupStore() = default;
  virtual FinGroup close(std::string_view name, std::vector<ExactMatrix> generators,
                         std::size_t cap) const = 0;
};

FinGroup close_with(const GroupStore* store, std::string_view name,
                    std::vector<ExactMatrix> generators, std::size_t cap = FinGroup::kDefaultCap);

}  // namespace weylcomp
