#include "weylcomp/weyl.hpp"

#include <cctype>
#include <set>

#include "weylcomp/error.hpp"

namespace weylcomp {

namespace {

RootVector unit(std::size_t n, std::size_t i, long scale = 1) {
  RootVector v(n);
  v[i] = scale;
  return v;
}

RootVector e_minus_e(std::size_t n, std::size_t i, std::size_t j) {
  RootVector v(n);
  v[i] = 1;
  v[j] = -1;
  return v;
}

Rational dot(const RootVector& a, const RootVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool uses_simple_root_basis(Family f) {
  return f == Family::A || f == Family::G || f == Family::F;
}

RootVector mat_vec(const ExactMatrix& m, const RootVector& v) {
  RootVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

// ------------------------------------------------------------------ LieType

LieType LieType::parse(std::string_view text) {
  std::string s = lower(text);
  if (s.size() < 2) throw Error(Errc::Parse, "Lie type '" + std::string(text) + "'");
  LieType t;
  switch (s[0]) {
    case 'a': t.family = Family::A; break;
    case 'b': t.family = Family::B; break;
    case 'c': t.family = Family::C; break;
    case 'd': t.family = Family::D; break;
    case 'g': t.family = Family::G; break;
    case 'f': t.family = Family::F; break;
    case 'e': throw Error(Errc::UnsupportedType, "E-series types are not supported");
    default: throw Error(Errc::Parse, "Lie type '" + std::string(text) + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) || rank > 100) {
      throw Error(Errc::Parse, "Lie type '" + std::string(text) + "'");
    }
    rank = rank * 10 + (s[i] - '0');
  }
  t.rank = rank;
  validate(t);
  return t;
}

std::string LieType::name() const {
  static constexpr char kLetters[] = {'A', 'B', 'C', 'D', 'G', 'F'};
  return kLetters[static_cast<int>(family)] + std::to_string(rank);
}

void validate(const LieType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C: ok = t.rank >= 1 && t.rank <= 6; break;
    case Family::D: ok = t.rank >= 2 && t.rank <= 6; break;
    case Family::G: ok = t.rank == 2; break;
    case Family::F: ok = t.rank == 4; break;
  }
  if (!ok) throw Error(Errc::UnsupportedType, "unsupported Lie type " + t.name());
}

// -------------------------------------------------------------- RootSystem

RootSystem root_system(const LieType& t) {
  validate(t);
  const auto n = static_cast<std::size_t>(t.rank);
  RootSystem rs;
  rs.type = t;
  std::size_t ambient = n;
  switch (t.family) {
    case Family::A:
      ambient = n + 1;
      for (std::size_t i = 0; i < n; ++i) rs.simple_roots.push_back(e_minus_e(ambient, i, i + 1));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (std::size_t i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(e_minus_e(n, i, i + 1));
      if (t.family == Family::B) rs.simple_roots.push_back(unit(n, n - 1));
      if (t.family == Family::C) rs.simple_roots.push_back(unit(n, n - 1, 2));
      if (t.family == Family::D) {
        RootVector last(n);
        last[n - 2] = 1;
        last[n - 1] = 1;
        rs.simple_roots.push_back(last);
      }
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long.
      ambient = 3;
      rs.simple_roots = {{1, -1, 0}, {-2, 1, 1}};
      break;
    case Family::F: {
      const Rational h(1, 2);
      rs.simple_roots = {{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}, {h, -h, -h, -h}};
      break;
    }
  }
  rs.cartan = ExactMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs.cartan(i, j) = 2 * dot(rs.simple_roots[i], rs.simple_roots[j]) /
                        dot(rs.simple_roots[i], rs.simple_roots[i]);
  if (uses_simple_root_basis(t.family)) {
    rs.basis = ExactMatrix(ambient, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < ambient; ++i) rs.basis(i, j) = rs.simple_roots[j][i];
  } else {
    rs.basis = ExactMatrix::identity(n);
  }
  rs.gram = mat_mul(rs.basis.transpose(), rs.basis);
  return rs;
}

std::vector<RootVector> simple_root_coordinates(const RootSystem& rs) {
  if (!uses_simple_root_basis(rs.type.family)) return rs.simple_roots;
  std::vector<RootVector> out;
  for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
    out.push_back(unit(rs.simple_roots.size(), i));
  return out;
}

Rational root_norm(const RootSystem& rs, const RootVector& beta) {
  return dot(beta, mat_vec(rs.gram, beta));
}

ExactMatrix reflection_matrix(const RootSystem& rs, const RootVector& beta) {
  const std::size_t n = beta.size();
  RootVector gb = mat_vec(rs.gram, beta);
  Rational norm = dot(beta, gb);
  ExactMatrix m = ExactMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= beta[i] * 2 * gb[j] / norm;
  return m;
}

std::vector<ExactMatrix> simple_reflections(const RootSystem& rs) {
  std::vector<ExactMatrix> out;
  for (const auto& beta : simple_root_coordinates(rs)) out.push_back(reflection_matrix(rs, beta));
  return out;
}

std::vector<RootVector> all_roots(const RootSystem& rs) {
  auto gens = simple_reflections(rs);
  auto simple = simple_root_coordinates(rs);
  std::vector<RootVector> roots(simple.begin(), simple.end());
  auto less = [](const RootVector& a, const RootVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
  };
  std::set<RootVector, decltype(less)> seen(roots.begin(), roots.end(), less);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (const auto& s : gens) {
      RootVector r = mat_vec(s, roots[i]);
      if (seen.insert(r).second) roots.push_back(std::move(r));
    }
  }
  return roots;
}

FinGroup weyl_group(const LieType& t, const GroupStore* store, std::size_t cap) {
  return close_with(store, "W(" + t.name() + ")", simple_reflections(root_system(t)), cap);
}

std::vector<std::size_t> reflections_of(const FinGroup& g) {
  std::vector<std::size_t> out;
  const ExactMatrix id = ExactMatrix::identity(g.dimension());
  for (std::size_t i = 1; i < g.order(); ++i)
    if (mat_rank(g.element(i) - id) == 1) out.push_back(i);
  return out;
}

// ------------------------------------------------------------ subsystems

std::string SubsystemSpec::name() const {
  switch (kind) {
    case SubsystemKind::Trivial: return "T";
    case SubsystemKind::DInB: return "D" + std::to_string(rank);
    case SubsystemKind::A1nInC: return "A1^" + std::to_string(rank);
    case SubsystemKind::A2InG2: return "A2";
    case SubsystemKind::D4InF4: return "D4";
  }
  return "?";
}

std::string WeylPair::name() const { return sub.name() + "<" + ambient.name(); }

void check_compatible(const LieType& ambient, const SubsystemSpec& spec) {
  validate(ambient);
  bool ok = false;
  switch (spec.kind) {
    case SubsystemKind::Trivial: ok = spec.rank == 0; break;
    case SubsystemKind::DInB:
      ok = ambient.family == Family::B && ambient.rank >= 2 && spec.rank == ambient.rank;
      break;
    case SubsystemKind::A1nInC:
      ok = ambient.family == Family::C && ambient.rank >= 2 && spec.rank == ambient.rank;
      break;
    case SubsystemKind::A2InG2: ok = ambient.family == Family::G && spec.rank == 2; break;
    case SubsystemKind::D4InF4: ok = ambient.family == Family::F && spec.rank == 4; break;
  }
  if (!ok) {
    throw Error(Errc::IncompatibleSpec, spec.name() + " does not fit in " + ambient.name());
  }
}

WeylPair WeylPair::parse(std::string_view text) {
  auto lt = text.find('<');
  if (lt == std::string_view::npos) {
    throw Error(Errc::Parse, "pair must look like SUB<TYPE: '" + std::string(text) + "'");
  }
  WeylPair p;
  p.ambient = LieType::parse(text.substr(lt + 1));
  std::string sub = lower(text.substr(0, lt));
  const int n = p.ambient.rank;
  if (sub == "t") {
    p.sub = {SubsystemKind::Trivial, 0};
  } else if (sub == "a2") {
    p.sub = {SubsystemKind::A2InG2, 2};
  } else if (sub.starts_with("a1")) {
    int k = n;
    if (sub.size() > 2) {
      if (sub[2] != '^') throw Error(Errc::Parse, "subsystem '" + sub + "'");
      k = std::stoi(sub.substr(3));
    }
    p.sub = {SubsystemKind::A1nInC, k};
  } else if (sub.starts_with("d")) {
    int k = sub.size() > 1 ? std::stoi(sub.substr(1)) : n;
    p.sub = {p.ambient.family == Family::F ? SubsystemKind::D4InF4 : SubsystemKind::DInB, k};
  } else {
    throw Error(Errc::Parse, "subsystem '" + sub + "'");
  }
  check_compatible(p.ambient, p.sub);
  return p;
}

std::vector<SubsystemSpec> catalog_subsystems(const LieType& ambient) {
  switch (ambient.family) {
    case Family::B:
      if (ambient.rank >= 2) return {{SubsystemKind::DInB, ambient.rank}};
      break;
    case Family::C:
      if (ambient.rank >= 2) return {{SubsystemKind::A1nInC, ambient.rank}};
      break;
    case Family::G: return {{SubsystemKind::A2InG2, 2}};
    case Family::F: return {{SubsystemKind::D4InF4, 4}};
    default: break;
  }
  return {};
}

std::vector<RootVector> subsystem_roots(const RootSystem& rs, const SubsystemSpec& spec) {
  check_compatible(rs.type, spec);
  if (spec.kind == SubsystemKind::Trivial) return {};
  // Every non-trivial catalog subsystem is the set of long roots.
  auto roots = all_roots(rs);
  Rational longest = 0;
  for (const auto& r : roots) longest = std::max(longest, root_norm(rs, r));
  std::vector<RootVector> out;
  for (const auto& r : roots)
    if (root_norm(rs, r) == longest) out.push_back(r);
  return out;
}

Subgroup subsystem_subgroup(const FinGroup& weyl, const LieType& ambient,
                            const SubsystemSpec& spec) {
  RootSystem rs = root_system(ambient);
  std::vector<std::size_t> gens;
  for (const auto& beta : subsystem_roots(rs, spec))
    gens.push_back(weyl.index_of(reflection_matrix(rs, beta)));
  return subgroup_generated(weyl, gens);
}

std::string declared_component_group(const LieType& ambient, const SubsystemSpec& spec) {
  check_compatible(ambient, spec);
  switch (spec.kind) {
    case SubsystemKind::DInB:
    case SubsystemKind::A2InG2: return "Z/2";
    case SubsystemKind::A1nInC: return "S" + std::to_string(spec.rank);
    case SubsystemKind::D4InF4: return "S3";
    case SubsystemKind::Trivial: break;
  }
  return "W(" + ambient.name() + ")";
}

FinGroup dual_group(const FinGroup& g) {
  std::vector<ExactMatrix> elems;
  elems.reserve(g.order());
  for (const auto& m : g.elements()) elems.push_back(dual(m));
  auto gens = g.generators();
  return FinGroup::from_elements(std::move(elems), {gens.begin(), gens.end()});
}

}  // namespace weylcomp
