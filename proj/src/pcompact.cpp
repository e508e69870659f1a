#include "weylcomp/pcompact.hpp"

#include <algorithm>
#include <sstream>

#include "weylcomp/error.hpp"
#include "weylcomp/reflect.hpp"

namespace weylcomp {

namespace {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (auto p : v)
    if (!is_prime(p)) throw Error(Errc::Parse, std::to_string(p) + " is not prime");
  return v;
}

std::string brace_list(const std::vector<std::uint64_t>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------- PrimeSpec

PrimeSpec PrimeSpec::all() { return {}; }

PrimeSpec PrimeSpec::all_except(std::vector<std::uint64_t> primes) {
  PrimeSpec s;
  s.primes_ = sorted_unique(std::move(primes));
  if (!s.primes_.empty()) s.variant_ = Variant::AllExcept;
  return s;
}

PrimeSpec PrimeSpec::greater_than(std::uint64_t n) {
  PrimeSpec s;
  s.variant_ = Variant::GreaterThan;
  s.bound_ = n;
  return s;
}

PrimeSpec PrimeSpec::finite(std::vector<std::uint64_t> primes) {
  PrimeSpec s;
  s.variant_ = Variant::Finite;
  s.primes_ = sorted_unique(std::move(primes));
  return s;
}

bool PrimeSpec::contains(std::uint64_t p) const {
  if (!is_prime(p)) return false;
  switch (variant_) {
    case Variant::All: return true;
    case Variant::AllExcept: return !std::binary_search(primes_.begin(), primes_.end(), p);
    case Variant::GreaterThan: return p > bound_;
    case Variant::Finite: return std::binary_search(primes_.begin(), primes_.end(), p);
  }
  return false;
}

PrimeSpec PrimeSpec::normalized() const {
  if (variant_ != Variant::GreaterThan) return *this;
  PrimeSpec candidate = all_except(primes_up_to(bound_));
  if (!agree_on_primes(*this, candidate, 2 * bound_ + 2)) {
    throw Error(Errc::InternalInconsistency, "prime set normalization changed membership");
  }
  return candidate;
}

bool PrimeSpec::same_set(const PrimeSpec& other) const {
  return normalized() == other.normalized();
}

std::string PrimeSpec::display() const {
  switch (variant_) {
    case Variant::All: return "Pi";
    case Variant::AllExcept: return "Pi - " + brace_list(primes_);
    case Variant::GreaterThan: return ">" + std::to_string(bound_);
    case Variant::Finite: return brace_list(primes_);
  }
  return "?";
}

nlohmann::json PrimeSpec::to_json() const {
  switch (variant_) {
    case Variant::All: return {{"variant", "all"}};
    case Variant::AllExcept: return {{"variant", "all_except"}, {"primes", primes_}};
    case Variant::GreaterThan: return {{"variant", "greater_than"}, {"n", bound_}};
    case Variant::Finite: return {{"variant", "finite"}, {"primes", primes_}};
  }
  return {};
}

PrimeSpec PrimeSpec::from_json(const nlohmann::json& j) {
  const auto variant = j.at("variant").get<std::string>();
  if (variant == "all") return all();
  if (variant == "all_except") return all_except(j.at("primes").get<std::vector<std::uint64_t>>());
  if (variant == "greater_than") return greater_than(j.at("n").get<std::uint64_t>());
  if (variant == "finite") return finite(j.at("primes").get<std::vector<std::uint64_t>>());
  throw Error(Errc::Parse, "unknown prime set variant '" + variant + "'");
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

bool agree_on_primes(const PrimeSpec& a, const PrimeSpec& b, std::uint64_t bound) {
  for (auto p : primes_up_to(bound))
    if (a.contains(p) != b.contains(p)) return false;
  return true;
}

// ---------------------------------------------------------------- ToralDesc

ToralDesc::ToralDesc(std::size_t torus_rank, FinGroup pi0, std::vector<ExactMatrix> action)
    : torus_rank_(torus_rank), pi0_(std::move(pi0)), action_(std::move(action)) {
  if (action_.size() != pi0_.generators().size()) {
    throw Error(Errc::DimensionMismatch, "one action matrix per pi0 generator required");
  }
  for (const auto& m : action_) {
    if (m.rows() != torus_rank_ || m.cols() != torus_rank_) {
      throw Error(Errc::DimensionMismatch, "action matrices must be torus_rank square");
    }
    if (!m.is_integral() || abs(determinant(m)) != 1) {
      throw Error(Errc::NotAHomomorphism, "action matrices must lie in GL(n, Z)");
    }
  }
  if (action_.empty()) {
    trivial_.assign(pi0_.order(), 1);
    return;
  }
  // A homomorphic image of a finite group is finite, so the closure cap only
  // trips on inconsistent data.
  FinGroup image = [&] {
    try {
      return FinGroup::close(action_, std::max<std::size_t>(1024, 2 * pi0_.order()));
    } catch (const Error& e) {
      if (e.code() != Errc::CapExceeded) throw;
      throw Error(Errc::NotAHomomorphism, "action generates an infinite or oversized group");
    }
  }();
  Homomorphism hom(pi0_, image, image.generators());
  trivial_.resize(pi0_.order());
  for (std::size_t g = 0; g < pi0_.order(); ++g) trivial_[g] = hom(g) == 0;
}

ToralDesc ToralDesc::from_json(const nlohmann::json& j) {
  const auto rank = j.at("torus_rank").get<std::size_t>();
  std::vector<ExactMatrix> pi0_gens, action;
  for (const auto& m : j.at("pi0_generators")) pi0_gens.push_back(matrix_from_json(m));
  for (const auto& m : j.at("action")) action.push_back(matrix_from_json(m));
  if (pi0_gens.empty()) throw Error(Errc::Parse, "pi0_generators must not be empty");
  return ToralDesc(rank, FinGroup::close(std::move(pi0_gens)), std::move(action));
}

bool is_pi_compact_toral(const ToralDesc& d) {
  for (std::size_t g = 0; g < d.pi0().order(); ++g)
    if (!d.acts_trivially(g)) return false;
  return is_nilpotent(d.pi0());
}

bool is_p_compact_toral(const ToralDesc& d, std::uint64_t p) {
  Subgroup complement = p_prime_generated(d.pi0(), p);
  if (complement.order() % p == 0) return false;
  for (std::size_t g : complement.elements())
    if (!d.acts_trivially(g)) return false;
  return true;
}

PrimeSpec toral_prime_set(const ToralDesc& d) {
  bool trivial_action = true;
  for (std::size_t g = 0; g < d.pi0().order(); ++g) trivial_action &= d.acts_trivially(g);
  std::vector<std::uint64_t> passing, failing;
  for (auto p : prime_divisors(d.pi0().order()))
    (is_p_compact_toral(d, p) ? passing : failing).push_back(p);
  // For p prime to |pi0| the complement is pi0 itself.
  return trivial_action ? PrimeSpec::all_except(failing) : PrimeSpec::finite(passing);
}

// ------------------------------------------------------------- prime sets

PrimeSpec prime_set_nt(const LieType& t, const GroupStore* store) {
  const std::uint64_t order = weyl_group(t, store).order();
  if (is_power_of_two(order)) return PrimeSpec::all();
  return PrimeSpec::all_except(prime_divisors(order));
}

PrimeSpec prime_set_finite(const Group& g) {
  std::vector<std::uint64_t> failing;
  for (auto p : prime_divisors(g.order()))
    if (!is_p_nilpotent(g, p)) failing.push_back(p);
  return PrimeSpec::all_except(failing);
}

// ------------------------------------------------------------------- pairs

nlohmann::json PairVerdict::to_json() const {
  return {{"ambient", ambient.name()},
          {"sub", sub.name()},
          {"pair", WeylPair{ambient, sub}.name()},
          {"weyl_order", weyl_order},
          {"sub_order", sub_order},
          {"quotient_order", quotient_order},
          {"proper", proper},
          {"normal", normal},
          {"quotient_catalog", quotient_catalog},
          {"quotient_nilpotent", quotient_nilpotent},
          {"admitted", admitted}};
}

std::vector<LieType> supported_types(int max_classical_rank) {
  if (max_classical_rank < 1 || max_classical_rank > 6) {
    throw Error(Errc::UnsupportedType, "classical rank must be between 1 and 6");
  }
  std::vector<LieType> out;
  for (int n = 1; n <= max_classical_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_classical_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_classical_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_classical_rank; ++n) out.push_back({Family::D, n});
  if (max_classical_rank >= 2) out.push_back({Family::G, 2});
  if (max_classical_rank >= 4) out.push_back({Family::F, 4});
  return out;
}

PairVerdict classify_pair(const LieType& ambient, const SubsystemSpec& sub,
                          const GroupStore* store) {
  check_compatible(ambient, sub);
  PairVerdict v;
  v.ambient = ambient;
  v.sub = sub;
  FinGroup w = weyl_group(ambient, store);
  Subgroup h = subsystem_subgroup(w, ambient, sub);
  v.weyl_order = w.order();
  v.sub_order = h.order();
  v.proper = h.order() < w.order();
  v.normal = is_normal(w, h);
  if (v.normal) {
    v.quotient_order = w.order() / h.order();
    if (h.is_trivial()) {
      // W(G)/1 is W(G) itself; skip the coset table.
      v.quotient_catalog = "W(" + ambient.name() + ")";
      v.quotient_nilpotent = is_nilpotent(w);
    } else {
      QuotientGroup q = quotient(w, h);
      v.quotient_catalog = identify_in_catalog(q).value_or("Unknown");
      v.quotient_nilpotent = is_nilpotent(q);
    }
  }
  v.admitted = v.proper && v.normal && v.quotient_nilpotent;
  return v;
}

std::vector<PairVerdict> classify_pairs(int max_classical_rank, const GroupStore* store) {
  std::vector<PairVerdict> out;
  for (const auto& t : supported_types(max_classical_rank)) {
    if (t.family != Family::C) out.push_back(classify_pair(t, {}, store));
    for (const auto& sub : catalog_subsystems(t)) out.push_back(classify_pair(t, sub, store));
  }
  return out;
}

nlohmann::json PairRealization::to_json() const {
  return {{"prime_set", prime_set.to_json()},
          {"set", prime_set.display()},
          {"pi0_two_group", pi0_two_group},
          {"two_realizable", two_realizable},
          {"realizable_at_p0", realizable_at_p0}};
}

PairRealization prime_set_pair(const PairVerdict& v, std::uint64_t p0) {
  if (!v.admitted) {
    throw Error(Errc::NotAdmitted, WeylPair{v.ambient, v.sub}.name() + " is not an admitted pair");
  }
  if (!is_prime(p0)) throw Error(Errc::Parse, std::to_string(p0) + " is not prime");
  PairRealization r;
  // Every admitted model has BH equivalent to BG away from 2 and is
  // Pi-compact.
  r.prime_set = PrimeSpec::all();
  // |pi0 H| = |W(G)/W(H0)|. A non-trivial 2-group component group is
  // incompatible with a 2-adic equivalence, so H would have to be G.
  r.pi0_two_group = is_power_of_two(v.quotient_order);
  r.two_realizable = !(r.pi0_two_group && v.quotient_order > 1 && v.proper);
  r.realizable_at_p0 = p0 != 2 || r.two_realizable;
  return r;
}

PrimeSpec prime_set_quotient(const PairVerdict& v, const std::vector<std::uint64_t>& nu_primes) {
  if (!v.admitted) {
    throw Error(Errc::NotAdmitted, WeylPair{v.ambient, v.sub}.name() + " is not an admitted pair");
  }
  if (v.ambient.family == Family::G && v.sub.kind == SubsystemKind::A2InG2) {
    return PrimeSpec::all_except({3});
  }
  for (auto p : nu_primes) {
    if (p != 2) {
      throw Error(Errc::NuNotTwoGroup,
                  "finite normal subgroup of order divisible by " + std::to_string(p));
    }
  }
  return PrimeSpec::all();
}

// ------------------------------------------------------------------ wreath

nlohmann::json WreathVerdict::to_json() const {
  nlohmann::json j = {{"n", n}, {"prime_set", prime_set.to_json()}, {"set", prime_set.display()}};
  j["reflection_witness"] = reflection_witness ? nlohmann::json(*reflection_witness) : nullptr;
  j["nilpotent3_witness"] = nilpotent3_witness ? nlohmann::json(*nilpotent3_witness) : nullptr;
  return j;
}

WreathVerdict prime_set_wreath(std::size_t n) {
  if (n < 1 || n > 8) throw Error(Errc::UnsupportedType, "wreath rank must be between 1 and 8");
  WreathVerdict v;
  v.n = n;
  FinGroup sym = catalog_group("S" + std::to_string(n));
  // Away from primes where Sn fails p-nilpotence the wreath product looks
  // like Sp(n); for n = 3 the index-2 subgroup with component group Z/3 is not
  // a reflection group on the cohomology of the torus, which removes p = 2.
  PrimeSpec derived = prime_set_finite(sym);
  if (n == 3) {
    FinGroup cyclic = catalog_group("Z3");
    v.reflection_witness = is_reflection_generated(cyclic);
    v.nilpotent3_witness = is_p_nilpotent(sym, 3);
    if (!*v.reflection_witness) {
      std::vector<std::uint64_t> excluded = derived.primes();
      excluded.push_back(2);
      derived = PrimeSpec::all_except(excluded);
    }
  }
  if (n <= 2) {
    v.prime_set = derived;
    return v;
  }
  PrimeSpec stated = PrimeSpec::greater_than(n);
  if (!agree_on_primes(derived, stated, 100)) {
    throw Error(Errc::InternalInconsistency,
                "wreath prime set " + derived.display() + " differs from " + stated.display());
  }
  v.prime_set = stated;
  return v;
}

PrimeSpec central_ext_transfer(const PrimeSpec& inner) { return inner; }

bool divisibility_check(const LieType& ambient, const SubsystemSpec& sub, std::uint64_t pi0_order,
                        const GroupStore* store) {
  FinGroup w = weyl_group(ambient, store);
  Subgroup h = subsystem_subgroup(w, ambient, sub);
  const std::uint64_t index = w.order() / h.order();
  for (auto p : prime_divisors(pi0_order))
    if (index % p != 0) return false;
  return true;
}

// ------------------------------------------------------------- conjugacy

bool conjugates_to_dual(const FinGroup& w, const ExactMatrix& psi) {
  if (sgn(determinant(psi)) == 0) return false;
  const ExactMatrix inv = mat_inverse(psi);
  FinGroup star = dual_group(w);
  std::vector<char> hit(star.order(), 0);
  for (const auto& g : w.elements()) {
    auto idx = star.find(psi * g * inv);
    if (!idx || hit[*idx]) return false;
    hit[*idx] = 1;
  }
  return true;
}

std::optional<ExactMatrix> psi_search(const FinGroup& w, long bound) {
  if (w.dimension() != 2) throw Error(Errc::DimensionMismatch, "psi_search needs a rank-2 group");
  FinGroup star = dual_group(w);
  auto within = [bound](long v) { return v >= -bound && v <= bound; };
  // Candidates are I + delta, ordered by max |delta| and then
  // lexicographically in delta.
  for (long shell = 0; shell <= bound + 1; ++shell) {
    for (long a = -shell; a <= shell; ++a)
      for (long b = -shell; b <= shell; ++b)
        for (long c = -shell; c <= shell; ++c)
          for (long d = -shell; d <= shell; ++d) {
            if (std::max({std::labs(a), std::labs(b), std::labs(c), std::labs(d)}) != shell) continue;
            const long p00 = 1 + a, p01 = b, p10 = c, p11 = 1 + d;
            if (!within(p00) || !within(p01) || !within(p10) || !within(p11)) continue;
            const long det = p00 * p11 - p01 * p10;
            if (det != 1 && det != -1) continue;
            ExactMatrix psi{{p00, p01}, {p10, p11}};
            ExactMatrix inv = mat_inverse(psi);
            bool ok = true;
            for (const auto& g : w.elements()) {
              if (!star.find(psi * g * inv)) {
                ok = false;
                break;
              }
            }
            if (ok) return psi;
          }
  }
  return std::nullopt;
}

bool intertwiner_exists_mod(std::span<const ExactMatrix> a, std::span<const ExactMatrix> b,
                            std::uint64_t p) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(Errc::DimensionMismatch, "intertwiner search needs paired non-empty lists");
  }
  const std::size_t n = a.front().rows();
  const auto mod = static_cast<long>(p);
  auto reduce = [&](const ExactMatrix& m) {
    if (!m.is_integral()) throw Error(Errc::DimensionMismatch, "mod-p reduction of non-integer matrix");
    std::vector<long> out(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      long v = mpz_fdiv_ui(m.entries()[i].get_num_mpz_t(), p);
      out[i] = v;
    }
    return out;
  };
  std::vector<std::vector<long>> ra, rb;
  for (const auto& m : a) ra.push_back(reduce(m));
  for (const auto& m : b) rb.push_back(reduce(m));

  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total *= p;
    if (total > 5'000'000) throw Error(Errc::SearchBudgetExceeded, "intertwiner search too large");
  }
  std::vector<long> s(n * n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& e : s) {
      e = static_cast<long>(c % p);
      c /= p;
    }
    ExactMatrix sm(n, n);
    for (std::size_t i = 0; i < n * n; ++i) sm(i / n, i % n) = s[i];
    if (mpz_fdiv_ui(determinant(sm).get_num_mpz_t(), p) == 0) continue;
    bool ok = true;
    for (std::size_t k = 0; k < ra.size() && ok; ++k) {
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          long lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < n; ++l) {
            lhs += s[i * n + l] * ra[k][l * n + j];
            rhs += rb[k][i * n + l] * s[l * n + j];
          }
          ok = (lhs - rhs) % mod == 0;
        }
    }
    if (ok) return true;
  }
  return false;
}

bool mod3_intertwiner_absent(const FinGroup& w) {
  std::vector<ExactMatrix> rep(w.elements().begin(), w.elements().end());
  std::vector<ExactMatrix> star;
  for (const auto& g : rep) star.push_back(dual(g));
  return !intertwiner_exists_mod(rep, star, 3);
}

FinGroup triality_extension(const FinGroup& wf4, const Subgroup& wd4) {
  for (std::size_t x = 1; x < wf4.order(); ++x) {
    if (wf4.element_order(x) != 3 || wd4.contains(x)) continue;
    const std::size_t by[] = {x};
    if (!normalizes(wf4, by, wd4)) continue;
    std::vector<ExactMatrix> gens;
    for (std::size_t s : wd4.generators()) gens.push_back(wf4.element(s));
    gens.push_back(wf4.element(x));
    return FinGroup::close(std::move(gens));
  }
  throw Error(Errc::NotFound, "no order-3 element normalizes the subgroup from outside");
}

// ------------------------------------------------------------- descriptors

PrimeSpec prime_set(const LieDesc& d, const GroupStore* store) {
  struct Visitor {
    const GroupStore* store;
    PrimeSpec operator()(const ToralDesc& t) const { return toral_prime_set(t); }
    PrimeSpec operator()(const NTDesc& nt) const { return prime_set_nt(nt.type, store); }
    PrimeSpec operator()(const PairDesc& p) const {
      return prime_set_pair(classify_pair(p.pair.ambient, p.pair.sub, store), 3).prime_set;
    }
    PrimeSpec operator()(const WreathDesc& w) const { return prime_set_wreath(w.n).prime_set; }
    PrimeSpec operator()(const CentralExtDesc& c) const {
      if (!c.inner) throw Error(Errc::Parse, "central extension without inner descriptor");
      return central_ext_transfer(prime_set(*c.inner, store));
    }
  };
  return std::visit(Visitor{store}, d.value);
}

}  // namespace weylcomp
