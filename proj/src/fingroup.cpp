#include "weylcomp/fingroup.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>

#include "weylcomp/error.hpp"

namespace weylcomp {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Right-multiplication closure of `elems` under `gens`, where the first
// `closed_prefix` elements are already closed under `gens` minus the newest
// generator.
void close_members(const Group& g, std::vector<std::size_t>& elems, std::vector<char>& members,
                   std::span<const std::size_t> gens, std::size_t closed_prefix) {
  for (std::size_t j = 0; j < elems.size(); ++j) {
    const std::size_t x = elems[j];
    auto use = j < closed_prefix ? gens.subspan(gens.size() - 1) : gens;
    for (std::size_t s : use) {
      std::size_t y = g.mul(x, s);
      if (!members[y]) {
        members[y] = 1;
        elems.push_back(y);
      }
    }
  }
}

Subgroup grow(const Group& g, std::vector<std::size_t> elems, std::vector<char> members,
              std::vector<std::size_t> gens, std::span<const std::size_t> extra) {
  for (std::size_t s : extra) {
    if (members[s]) continue;
    gens.push_back(s);
    close_members(g, elems, members, gens, elems.size());
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup(g, std::move(elems), std::move(gens));
}

// Extends a generator assignment to a map on all of `source`; nullopt when the
// assignment is inconsistent.
std::optional<std::vector<std::size_t>> extend_map(const Group& source, const Group& target,
                                                   std::span<const std::size_t> gens,
                                                   std::span<const std::size_t> images) {
  std::vector<std::size_t> map(source.order(), kUnset);
  map[0] = 0;
  std::vector<std::size_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t x = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t y = source.mul(x, gens[k]);
      std::size_t img = target.mul(map[x], images[k]);
      if (map[y] == kUnset) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order()) return std::nullopt;
  return map;
}

std::vector<std::size_t> reduced_generators(const Group& g) {
  Subgroup whole = subgroup_generated(g, g.generators());
  return {whole.generators().begin(), whole.generators().end()};
}

}  // namespace

// -------------------------------------------------------------------- Group

std::size_t Group::power(std::size_t a, std::uint64_t k) const {
  std::size_t result = identity();
  std::size_t base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool Group::is_abelian() const {
  auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
  return true;
}

// ----------------------------------------------------------------- FinGroup

struct FinGroup::PowerCache {
  std::once_flag once;
  std::vector<std::size_t> orders;
  std::vector<std::size_t> inverses;
};

FinGroup FinGroup::close(std::vector<ExactMatrix> generators, std::size_t cap) {
  if (generators.empty()) throw Error(Errc::DimensionMismatch, "close: no generators");
  const std::size_t n = generators.front().rows();
  for (const auto& m : generators) {
    if (!m.is_square() || m.rows() != n) {
      throw Error(Errc::DimensionMismatch, "close: generators must be square of equal size");
    }
    if (sgn(determinant(m)) == 0) throw Error(Errc::SingularMatrix, "close: singular generator");
  }
  FinGroup g;
  g.dimension_ = n;
  g.cache_ = std::make_shared<PowerCache>();
  g.elements_.push_back(ExactMatrix::identity(n));
  g.index_.emplace(g.elements_.front(), 0);
  for (const auto& m : generators) {
    auto [it, inserted] = g.index_.emplace(m, g.elements_.size());
    if (inserted) g.elements_.push_back(m);
    g.generators_.push_back(it->second);
  }
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : generators) {
      ExactMatrix y = mat_mul(g.elements_[i], s);
      if (g.index_.contains(y)) continue;
      if (g.elements_.size() >= cap) {
        throw Error(Errc::CapExceeded,
                    "closure exceeds " + std::to_string(cap) + " elements");
      }
      g.index_.emplace(y, g.elements_.size());
      g.elements_.push_back(std::move(y));
    }
  }
  return g;
}

FinGroup FinGroup::trivial(std::size_t dimension) {
  return from_elements({ExactMatrix::identity(dimension)}, {});
}

FinGroup FinGroup::from_elements(std::vector<ExactMatrix> elements,
                                 std::vector<std::size_t> generator_indices) {
  if (elements.empty() || !elements.front().is_identity()) {
    throw Error(Errc::Parse, "element list must start with the identity");
  }
  FinGroup g;
  g.dimension_ = elements.front().rows();
  g.elements_ = std::move(elements);
  g.generators_ = std::move(generator_indices);
  g.cache_ = std::make_shared<PowerCache>();
  g.build_index();
  for (std::size_t s : g.generators_) {
    if (s >= g.elements_.size()) throw Error(Errc::Parse, "generator index out of range");
  }
  return g;
}

void FinGroup::build_index() {
  index_.clear();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw Error(Errc::Parse, "duplicate element in group element list");
    }
  }
}

std::size_t FinGroup::mul(std::size_t a, std::size_t b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  auto it = index_.find(mat_mul(elements_[a], elements_[b]));
  if (it == index_.end()) throw Error(Errc::InternalInconsistency, "group is not closed");
  return it->second;
}

std::span<const std::size_t> FinGroup::element_orders() const {
  std::call_once(cache_->once, [this] {
    const std::size_t n = order();
    auto& orders = cache_->orders;
    auto& inverses = cache_->inverses;
    orders.assign(n, 0);
    inverses.assign(n, kUnset);
    orders[0] = 1;
    inverses[0] = 0;
    std::vector<std::size_t> powers;
    for (std::size_t a = 1; a < n; ++a) {
      if (orders[a]) continue;
      // powers[j] = a^(j+1); the walk ends at the identity.
      powers.assign(1, a);
      while (powers.back() != 0) powers.push_back(mul(powers.back(), a));
      const std::size_t k = powers.size();
      for (std::size_t j = 1; j <= k; ++j) {
        std::size_t x = powers[j - 1];
        if (orders[x]) continue;
        orders[x] = k / std::gcd(j, k);
        inverses[x] = j == k ? 0 : powers[k - j - 1];
      }
    }
  });
  return cache_->orders;
}

std::size_t FinGroup::inverse(std::size_t a) const {
  element_orders();
  return cache_->inverses[a];
}

std::vector<ExactMatrix> FinGroup::generator_matrices() const {
  std::vector<ExactMatrix> out;
  for (std::size_t s : generators_) out.push_back(elements_[s]);
  return out;
}

std::optional<std::size_t> FinGroup::find(const ExactMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinGroup::index_of(const ExactMatrix& m) const {
  auto i = find(m);
  if (!i) throw Error(Errc::NotFound, "matrix is not a group element: " + m.to_string());
  return *i;
}

// ----------------------------------------------------------------- Subgroup

Subgroup::Subgroup(const Group& parent, std::vector<std::size_t> elements,
                   std::vector<std::size_t> generators)
    : parent_(&parent),
      members_(parent.order(), 0),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {
  for (std::size_t e : elements_) members_[e] = 1;
  if (elements_.empty() || !members_[0]) {
    throw Error(Errc::InternalInconsistency, "subgroup must contain the identity");
  }
  if (parent.order() % elements_.size() != 0) {
    throw Error(Errc::InternalInconsistency, "subgroup order does not divide group order");
  }
  for (std::size_t s : generators_) {
    if (!members_[s]) throw Error(Errc::InternalInconsistency, "generator outside subgroup");
  }
}

// ------------------------------------------------------------- Homomorphism

Homomorphism::Homomorphism(const Group& source, const Group& target,
                           std::span<const std::size_t> images)
    : source_(&source), target_(&target) {
  if (images.size() != source.generators().size()) {
    throw Error(Errc::NotAHomomorphism, "one image per source generator required");
  }
  auto map = extend_map(source, target, source.generators(), images);
  if (!map) throw Error(Errc::NotAHomomorphism, "generator images violate a relation");
  map_ = std::move(*map);
}

Subgroup Homomorphism::kernel() const {
  std::vector<std::size_t> ker;
  for (std::size_t g = 0; g < map_.size(); ++g)
    if (map_[g] == 0) ker.push_back(g);
  return subgroup_generated(*source_, ker);
}

// ---------------------------------------------------------------- subgroups

Subgroup whole_group(const Group& g) { return subgroup_generated(g, g.generators()); }

Subgroup trivial_subgroup(const Group& g) { return Subgroup(g, {0}, {}); }

Subgroup subgroup_generated(const Group& g, std::span<const std::size_t> subset) {
  std::vector<char> members(g.order(), 0);
  members[0] = 1;
  return grow(g, {0}, std::move(members), {}, subset);
}

Subgroup subgroup_join(const Subgroup& h, std::span<const std::size_t> extra) {
  const Group& g = h.parent();
  std::vector<char> members(g.order(), 0);
  for (std::size_t e : h.elements()) members[e] = 1;
  return grow(g, {h.elements().begin(), h.elements().end()}, std::move(members),
              {h.generators().begin(), h.generators().end()}, extra);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<std::size_t> common;
  for (std::size_t e : a.elements())
    if (b.contains(e)) common.push_back(e);
  return subgroup_generated(a.parent(), common);
}

Subgroup normal_closure(const Group& g, std::span<const std::size_t> subset) {
  Subgroup h = subgroup_generated(g, subset);
  for (;;) {
    std::vector<std::size_t> missing;
    for (std::size_t x : g.generators())
      for (std::size_t s : h.generators()) {
        std::size_t c = g.conjugate(x, s);
        if (!h.contains(c)) missing.push_back(c);
      }
    if (missing.empty()) return h;
    h = subgroup_join(h, missing);
  }
}

bool normalizes(const Group& g, std::span<const std::size_t> by, const Subgroup& h) {
  for (std::size_t x : by)
    for (std::size_t s : h.generators())
      if (!h.contains(g.conjugate(x, s))) return false;
  return true;
}

bool is_normal(const Group& g, const Subgroup& h) { return normalizes(g, g.generators(), h); }

bool is_normal_in(const Subgroup& m, const Subgroup& h) {
  for (std::size_t e : h.elements()) {
    if (!m.contains(e)) throw Error(Errc::InternalInconsistency, "is_normal_in: h not inside m");
  }
  return normalizes(m.parent(), m.generators(), h);
}

FinGroup materialize(const FinGroup& g, const Subgroup& h) {
  if (h.generators().empty()) return FinGroup::trivial(g.dimension());
  std::vector<ExactMatrix> gens;
  for (std::size_t s : h.generators()) gens.push_back(g.element(s));
  return FinGroup::close(std::move(gens));
}

QuotientGroup quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(Errc::NotNormal, "quotient by a non-normal subgroup");
  QuotientGroup q;
  q.coset_of_.assign(g.order(), kUnset);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (q.coset_of_[x] != kUnset) continue;
    const std::size_t c = q.reps_.size();
    q.reps_.push_back(x);
    for (std::size_t y : n.elements()) q.coset_of_[g.mul(x, y)] = c;
  }
  const std::size_t m = q.reps_.size();
  q.table_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      q.table_[a * m + b] = q.coset_of_[g.mul(q.reps_[a], q.reps_[b])];
  // Independence of representatives, checked on every element.
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t s : g.generators())
      if (q.coset_of_[g.mul(x, s)] != q.table_[q.coset_of_[x] * m + q.coset_of_[s]]) {
        throw Error(Errc::InternalInconsistency, "coset multiplication is not well defined");
      }
  q.inverse_.resize(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (q.table_[a * m + b] == 0) q.inverse_[a] = b;
  q.orders_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = q.table_[x * m + a]) ++k;
    q.orders_[a] = k;
  }
  for (std::size_t s : g.generators()) {
    std::size_t c = q.coset_of_[s];
    if (c != 0 && std::find(q.generators_.begin(), q.generators_.end(), c) == q.generators_.end()) {
      q.generators_.push_back(c);
    }
  }
  return q;
}

// ---------------------------------------------------------- p-local theory

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t pk = 1;
  while (n % p == 0) {
    n /= p;
    pk *= p;
  }
  return pk;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Subgroup sylow(const Group& g, std::uint64_t p) {
  const std::uint64_t target = p_part(g.order(), p);
  if (target == 1) return trivial_subgroup(g);
  auto orders = g.element_orders();
  std::size_t start = 0;
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (p_part(orders[x], p) == orders[x] && orders[x] > orders[start]) start = x;
  }
  const std::size_t seed[] = {start};
  Subgroup sp = subgroup_generated(g, seed);
  // |N(P) : P| is divisible by p until P is Sylow, so some element of the
  // normalizer has p-th power in P without lying in P.
  while (sp.order() < target) {
    std::optional<std::size_t> next;
    for (std::size_t y = 1; y < g.order() && !next; ++y) {
      if (sp.contains(y)) continue;
      if (!sp.contains(g.power(y, p))) continue;
      const std::size_t by[] = {y};
      if (normalizes(g, by, sp)) next = y;
    }
    if (!next) throw Error(Errc::InternalInconsistency, "Sylow extension step failed");
    const std::size_t extra[] = {*next};
    sp = subgroup_join(sp, extra);
  }
  return sp;
}

bool is_nilpotent(const Group& g) {
  for (auto p : prime_divisors(g.order()))
    if (!is_normal(g, sylow(g, p))) return false;
  return true;
}

Subgroup p_prime_generated(const Group& g, std::uint64_t p) {
  auto orders = g.element_orders();
  std::vector<std::size_t> coprime;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (orders[x] % p != 0) coprime.push_back(x);
  return subgroup_generated(g, coprime);
}

bool is_p_nilpotent(const Group& g, std::uint64_t p) {
  return p_prime_generated(g, p).order() % p != 0;
}

Subgroup center(const Group& g) {
  std::vector<std::size_t> central;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (std::size_t s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        commutes = false;
        break;
      }
    if (commutes) central.push_back(x);
  }
  return subgroup_generated(g, central);
}

// ------------------------------------------------------------- isomorphism

Fingerprint fingerprint(const Group& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  f.center_order = center(g).order();
  for (std::size_t o : g.element_orders()) ++f.order_histogram[o];
  return f;
}

bool are_isomorphic(const Group& a, const Group& b) {
  if (!(fingerprint(a) == fingerprint(b))) return false;
  if (a.order() == 1) return true;
  auto gens_a = reduced_generators(a);
  auto gens_b = reduced_generators(b);
  const Group& src = gens_a.size() <= gens_b.size() ? a : b;
  const Group& dst = gens_a.size() <= gens_b.size() ? b : a;
  const auto& gens = gens_a.size() <= gens_b.size() ? gens_a : gens_b;

  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t y = 0; y < dst.order(); ++y)
      if (dst.element_order(y) == src.element_order(gens[k])) candidates[k].push_back(y);

  std::vector<std::size_t> images(gens.size());
  std::vector<char> seen(dst.order());
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      auto map = extend_map(src, dst, gens, images);
      if (!map) return false;
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t v : *map) {
        if (seen[v]) return false;
        seen[v] = 1;
      }
      return true;
    }
    for (std::size_t y : candidates[k]) {
      images[k] = y;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

ExactMatrix permutation_matrix(std::span<const std::size_t> perm) {
  ExactMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = 1;
  return m;
}

std::vector<ExactMatrix> quaternion_generators() {
  const GaussianRational x[] = {{0, 1}, {0, 0}, {0, 0}, {0, -1}};
  const GaussianRational y[] = {{0, 0}, {-1, 0}, {1, 0}, {0, 0}};
  return {ExactMatrix::realify(2, 2, x), ExactMatrix::realify(2, 2, y)};
}

namespace {

std::vector<std::size_t> cycle_perm(std::size_t n, std::span<const std::size_t> cycle) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return perm;
}

std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
  std::size_t v = 0;
  for (char c : name.substr(prefix.size())) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1000) return std::nullopt;
  }
  return v;
}

}  // namespace

FinGroup catalog_group(std::string_view name) {
  if (name == "trivial" || name == "1") return FinGroup::trivial(1);
  if (name == "Z2xZ2" || name == "Z/2xZ/2") {
    return FinGroup::close({ExactMatrix{{-1, 0}, {0, 1}}, ExactMatrix{{1, 0}, {0, -1}}});
  }
  if (name == "D8") return FinGroup::close({ExactMatrix{{-1, 0}, {0, 1}}, ExactMatrix{{0, 1}, {1, 0}}});
  if (name == "Q8") return FinGroup::close(quaternion_generators());

  auto n = suffix_number(name, "Z/");
  if (!n) n = suffix_number(name, "Z");
  if (n && *n >= 1 && *n <= 64) {
    if (*n == 1) return FinGroup::trivial(1);
    std::vector<std::size_t> all(*n);
    std::iota(all.begin(), all.end(), 0);
    return FinGroup::close({permutation_matrix(cycle_perm(*n, all))});
  }
  n = suffix_number(name, "Sigma");
  if (!n) n = suffix_number(name, "S");
  if (n && *n >= 1 && *n <= 8) {
    if (*n == 1) return FinGroup::trivial(1);
    std::vector<std::size_t> all(*n);
    std::iota(all.begin(), all.end(), 0);
    const std::size_t swap[] = {0, 1};
    return FinGroup::close(
        {permutation_matrix(cycle_perm(*n, swap)), permutation_matrix(cycle_perm(*n, all))});
  }
  n = suffix_number(name, "A");
  if (n && *n >= 3 && *n <= 8) {
    std::vector<ExactMatrix> gens;
    for (std::size_t k = 2; k < *n; ++k) {
      const std::size_t c[] = {0, 1, k};
      gens.push_back(permutation_matrix(cycle_perm(*n, c)));
    }
    return FinGroup::close(std::move(gens));
  }
  throw Error(Errc::UnknownCatalogName, std::string(name));
}

bool iso_to_catalog(const Group& g, std::string_view name) {
  FinGroup c = catalog_group(name);
  if (c.order() != g.order()) return false;
  return are_isomorphic(c, g);
}

std::optional<std::string> identify_in_catalog(const Group& g) {
  const std::size_t m = g.order();
  std::vector<std::string> names;
  if (m == 1) names.push_back("trivial");
  else names.push_back("Z/" + std::to_string(m));
  if (m == 4) names.push_back("Z/2xZ/2");
  if (m == 8) {
    names.push_back("D8");
    names.push_back("Q8");
  }
  std::size_t fact = 2;
  for (std::size_t k = 3; k <= 8; ++k) {
    fact *= k;
    if (fact == m) names.push_back("S" + std::to_string(k));
    if (k >= 4 && fact / 2 == m) names.push_back("A" + std::to_string(k));
  }
  for (const auto& name : names)
    if (iso_to_catalog(g, name)) return name;
  return std::nullopt;
}

// ----------------------------------------------------------- extensions

bool has_complement(const Group& g, const Subgroup& n, std::size_t budget) {
  if (!is_normal(g, n)) throw Error(Errc::NotNormal, "has_complement: N is not normal");
  if (n.is_trivial() || n.order() == g.order()) return true;
  if (g.order() > budget) {
    throw Error(Errc::SearchBudgetExceeded,
                "group of order " + std::to_string(g.order()) + " exceeds search budget");
  }
  const std::size_t m = g.order() / n.order();
  // A complement is isomorphic to G/N, so it needs no more generators than G/N.
  QuotientGroup q = quotient(g, n);
  const std::size_t depth_limit = std::max<std::size_t>(3, reduced_generators(q).size());

  std::set<std::vector<std::size_t>> visited;
  auto meets_n = [&](const Subgroup& h) {
    for (std::size_t e : h.elements())
      if (e != 0 && n.contains(e)) return true;
    return false;
  };
  auto search = [&](auto&& self, const Subgroup& h, std::size_t depth) -> bool {
    if (h.order() == m) return true;
    if (depth == depth_limit) return false;
    for (std::size_t x = 1; x < g.order(); ++x) {
      if (h.contains(x) || n.contains(x) || m % g.element_order(x) != 0) continue;
      const std::size_t extra[] = {x};
      Subgroup next = subgroup_join(h, extra);
      if (m % next.order() != 0 || meets_n(next)) continue;
      if (!visited.insert({next.elements().begin(), next.elements().end()}).second) continue;
      if (self(self, next, depth + 1)) return true;
    }
    return false;
  };
  return search(search, trivial_subgroup(g), 0);
}

bool kernel_normality_check(const Homomorphism& q, const Subgroup& nu) {
  const Group& k = q.source();
  if (&nu.parent() != &k) throw Error(Errc::InternalInconsistency, "nu must lie in the source");
  if (!is_normal(k, nu)) throw Error(Errc::NotNormal, "nu is not normal in K");
  Subgroup m = q.kernel();
  Subgroup nu_prime = intersection(nu, m);
  return is_normal_in(m, nu_prime);
}

Rational rep_character_norm(const FinGroup& g, std::size_t dim) {
  if (g.dimension() != 2 * dim) {
    throw Error(Errc::MalformedRealification, "matrix size is not twice the complex dimension");
  }
  Rational total = 0;
  for (const auto& m : g.elements()) {
    Rational re = 0, im = 0;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        const auto& a = m(2 * r, 2 * c);
        const auto& b = m(2 * r + 1, 2 * c);
        if (m(2 * r + 1, 2 * c + 1) != a || m(2 * r, 2 * c + 1) != -b) {
          throw Error(Errc::MalformedRealification, "block is not of the form [[a,-b],[b,a]]");
        }
        if (r == c) {
          re += a;
          im += b;
        }
      }
    total += re * re + im * im;
  }
  return total;
}

// -------------------------------------------------------------- persistence

nlohmann::json group_to_json(const FinGroup& g, std::string_view name) {
  nlohmann::json j;
  j["name"] = std::string(name);
  j["dimension"] = g.dimension();
  j["order"] = g.order();
  auto gens = nlohmann::json::array();
  for (const auto& m : g.generator_matrices()) gens.push_back(to_json(m));
  j["generators"] = std::move(gens);
  auto elems = nlohmann::json::array();
  for (const auto& m : g.elements()) elems.push_back(to_json(m));
  j["elements"] = std::move(elems);
  return j;
}

FinGroup group_from_json(const nlohmann::json& j) {
  std::vector<ExactMatrix> elements;
  for (const auto& e : j.at("elements")) elements.push_back(matrix_from_json(e));
  if (elements.size() != j.at("order").get<std::size_t>()) {
    throw Error(Errc::Parse, "cached order does not match element count");
  }
  std::vector<std::size_t> gens;
  for (const auto& gj : j.at("generators")) {
    ExactMatrix m = matrix_from_json(gj);
    auto it = std::find(elements.begin(), elements.end(), m);
    if (it == elements.end()) throw Error(Errc::Parse, "cached generator is not an element");
    gens.push_back(static_cast<std::size_t>(it - elements.begin()));
  }
  return FinGroup::from_elements(std::move(elements), std::move(gens));
}

FinGroup close_with(const GroupStore* store, std::string_view name,
                    std::vector<ExactMatrix> generators, std::size_t cap) {
  if (store) return store->close(name, std::move(generators), cap);
  return FinGroup::close(std::move(generators), cap);
}

}  // namespace weylcomp
