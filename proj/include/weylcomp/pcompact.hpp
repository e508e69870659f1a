#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "weylcomp/exactmat.hpp"
#include "weylcomp/fingroup.hpp"
#include "weylcomp/weyl.hpp"

namespace weylcomp {

/// A set of primes: all of them, all but finitely many, all above a bound,
/// or a finite set.
class PrimeSpec {
 public:
  enum class Variant { All, AllExcept, GreaterThan, Finite };

  static PrimeSpec all();
  /// An empty exception list collapses to All.
  static PrimeSpec all_except(std::vector<std::uint64_t> primes);
  static PrimeSpec greater_than(std::uint64_t n);
  static PrimeSpec finite(std::vector<std::uint64_t> primes);

  Variant variant() const { return variant_; }
  /// Excluded primes (AllExcept) or members (Finite), sorted.
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  /// The n of GreaterThan(n).
  std::uint64_t bound() const { return bound_; }

  bool contains(std::uint64_t p) const;
  /// Canonical form: GreaterThan(n) becomes AllExcept(primes <= n).
  PrimeSpec normalized() const;
  bool same_set(const PrimeSpec& other) const;

  /// ASCII rendering: "Pi", "Pi - {3}", ">3", "{2,3}".
  std::string display() const;
  nlohmann::json to_json() const;
  static PrimeSpec from_json(const nlohmann::json& j);

  friend bool operator==(const PrimeSpec&, const PrimeSpec&) = default;

 private:
  Variant variant_ = Variant::All;
  std::vector<std::uint64_t> primes_;
  std::uint64_t bound_ = 0;
};

/// Do the two sets agree on every prime <= bound?
bool agree_on_primes(const PrimeSpec& a, const PrimeSpec& b, std::uint64_t bound);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Torus-by-finite group: a torus of rank `torus_rank` extended by pi0, which
/// acts on the torus lattice through integer matrices.
class ToralDesc {
 public:
  /// `action[k]` is the image of pi0.generators()[k]. Throws
  /// NotAHomomorphism or DimensionMismatch on bad data.
  ToralDesc(std::size_t torus_rank, FinGroup pi0, std::vector<ExactMatrix> action);

  /// {"torus_rank": r, "pi0_generators": [...], "action": [...]}
  static ToralDesc from_json(const nlohmann::json& j);

  std::size_t torus_rank() const { return torus_rank_; }
  const FinGroup& pi0() const { return pi0_; }
  const std::vector<ExactMatrix>& action() const { return action_; }
  bool acts_trivially(std::size_t element) const { return trivial_[element] != 0; }

 private:
  std::size_t torus_rank_;
  FinGroup pi0_;
  std::vector<ExactMatrix> action_;
  std::vector<char> trivial_;
};

/// Prime set of the torus normalizer: All when |W| is a power of 2, otherwise
/// every prime not dividing |W|.
PrimeSpec prime_set_nt(const LieType& t, const GroupStore* store = nullptr);
/// Primes at which the finite group is p-nilpotent.
PrimeSpec prime_set_finite(const Group& g);

/// pi0 nilpotent and acting trivially.
bool is_pi_compact_toral(const ToralDesc& d);
/// pi0 p-nilpotent and its normal p-complement acting trivially.
bool is_p_compact_toral(const ToralDesc& d, std::uint64_t p);
/// Primes at which `d` is p-compact toral.
PrimeSpec toral_prime_set(const ToralDesc& d);

struct PairVerdict {
  LieType ambient;
  SubsystemSpec sub;
  std::size_t weyl_order = 0;
  std::size_t sub_order = 0;
  /// Zero when the subgroup is not normal.
  std::size_t quotient_order = 0;
  bool proper = false;
  bool normal = false;
  /// Catalog name of W(G)/W(H0), "W(<type>)" for the trivial subgroup, or
  /// "Unknown".
  std::string quotient_catalog = "Unknown";
  bool quotient_nilpotent = false;
  bool admitted = false;

  nlohmann::json to_json() const;
};

/// Supported simple types up to the given classical rank, in canonical
/// order: A1.., B2.., C2.., D4.., G2, F4.
std::vector<LieType> supported_types(int max_classical_rank);

PairVerdict classify_pair(const LieType& ambient, const SubsystemSpec& sub,
                          const GroupStore* store = nullptr);
/// Every catalog pair (including the trivial subgroup) of every supported
/// type up to the rank. The C family only contributes its A1^n pairs since
/// W(Cn) = W(Bn).
std::vector<PairVerdict> classify_pairs(int max_classical_rank,
                                        const GroupStore* store = nullptr);

struct PairRealization {
  PrimeSpec prime_set;
  bool pi0_two_group = false;
  bool two_realizable = false;
  /// Realizability at the witness prime p0.
  bool realizable_at_p0 = false;

  nlohmann::json to_json() const;
};

/// Throws NotAdmitted.
PairRealization prime_set_pair(const PairVerdict& v, std::uint64_t p0);
/// Throws NotAdmitted, or NuNotTwoGroup for a non-(G2, A2) pair whose finite
/// normal subgroup is not a 2-group.
PrimeSpec prime_set_quotient(const PairVerdict& v, const std::vector<std::uint64_t>& nu_primes);

struct WreathVerdict {
  std::size_t n = 0;
  PrimeSpec prime_set;
  /// n = 3 only: is Z/3 on Q^3 generated by reflections.
  std::optional<bool> reflection_witness;
  /// n = 3 only: is S3 3-nilpotent.
  std::optional<bool> nilpotent3_witness;

  nlohmann::json to_json() const;
};

WreathVerdict prime_set_wreath(std::size_t n);

PrimeSpec central_ext_transfer(const PrimeSpec& inner);

/// Every prime dividing pi0_order divides |W(G)| / |W(H0)|.
bool divisibility_check(const LieType& ambient, const SubsystemSpec& sub, std::uint64_t pi0_order,
                        const GroupStore* store = nullptr);

/// Is psi w psi^-1 = {(g^T)^-1 : g in w} as sets?
bool conjugates_to_dual(const FinGroup& w, const ExactMatrix& psi);
/// First unimodular integer 2x2 psi with |entries| <= bound conjugating w
/// onto its dual, scanning outward from the identity.
std::optional<ExactMatrix> psi_search(const FinGroup& w, long bound);

/// Is there an invertible S over F_p with S a_g = b_g S for every paired
/// element? Both lists must have integer entries.
bool intertwiner_exists_mod(std::span<const ExactMatrix> a, std::span<const ExactMatrix> b,
                            std::uint64_t p);
/// True when no F_3 matrix intertwines w with its dual pointwise.
bool mod3_intertwiner_absent(const FinGroup& w);

/// W(D4) extended by an order-3 element of W(F4) outside it.
FinGroup triality_extension(const FinGroup& wf4, const Subgroup& wd4);

struct NTDesc {
  LieType type;
};
struct PairDesc {
  WeylPair pair;
};
struct WreathDesc {
  std::size_t n = 1;
};
struct LieDesc;
struct CentralExtDesc {
  std::shared_ptr<const LieDesc> inner;
};

/// Compact Lie groups the decision layer knows how to evaluate.
struct LieDesc {
  std::variant<ToralDesc, NTDesc, PairDesc, WreathDesc, CentralExtDesc> value;
};

/// For toral descriptors this is the p-compact toral set.
PrimeSpec prime_set(const LieDesc& d, const GroupStore* store = nullptr);

}  // namespace weylcomp
