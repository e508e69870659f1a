#include "weylcomp/report.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "weylcomp/error.hpp"
#include "weylcomp/pcompact.hpp"
#include "weylcomp/reflect.hpp"
#include "weylcomp/weyl.hpp"

namespace weylcomp {

namespace fs = std::filesystem;
using nlohmann::json;

// ------------------------------------------------------------ CachingStore

CachingStore::CachingStore(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

std::string CachingStore::digest(const std::vector<ExactMatrix>& generators) {
  json gens = json::array();
  for (const auto& m : generators) gens.push_back(to_json(m));
  const std::string text = gens.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return out.str();
}

FinGroup CachingStore::close(std::string_view name, std::vector<ExactMatrix> generators,
                             std::size_t cap) const {
  const std::string key = digest(generators);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  std::optional<FinGroup> group;
  fs::path file;
  if (dir_) {
    file = *dir_ / (key + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        json j = json::parse(in);
        FinGroup g = group_from_json(j);
        if (g.generator_matrices() == generators && g.order() <= cap) group = std::move(g);
      } catch (const std::exception&) {
        // Unreadable cache entries are recomputed and overwritten.
      }
    }
  }
  if (!group) {
    group = FinGroup::close(std::move(generators), cap);
    if (dir_) {
      std::error_code ec;
      fs::create_directories(*dir_, ec);
      fs::path tmp = file;
      tmp += ".tmp";
      {
        std::ofstream out(tmp);
        out << group_to_json(*group, name).dump();
      }
      fs::rename(tmp, file, ec);
    }
  }
  std::lock_guard lock(mutex_);
  return memo_.emplace(key, std::move(*group)).first->second;
}

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("WEYLCACHE_DIR"); env && *env) return env;
  return ".weylcache";
}

// ----------------------------------------------------------------- builtins

FinGroup builtin_group(std::string_view name, const GroupStore* store) {
  if (name == "Z3-cyclic") return catalog_group("Z3");
  if (name == "W(D4)xZ3") {
    const LieType f4{Family::F, 4};
    FinGroup w = weyl_group(f4, store);
    Subgroup d4 = subsystem_subgroup(w, f4, {SubsystemKind::D4InF4, 4});
    return triality_extension(w, d4);
  }
  std::string_view type = name;
  if (type.starts_with("W(") && type.ends_with(")")) {
    return weyl_group(LieType::parse(type.substr(2, type.size() - 3)), store);
  }
  try {
    return catalog_group(name);
  } catch (const Error& e) {
    if (e.code() != Errc::UnknownCatalogName) throw;
  }
  try {
    return weyl_group(LieType::parse(name), store);
  } catch (const Error&) {
    throw Error(Errc::UnknownCatalogName, "no builtin group named " + std::string(name));
  }
}

// ------------------------------------------------------------------ tables

namespace {

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace

std::string render_table(const json& rows) {
  std::vector<std::string> keys;
  std::set<std::string> seen;
  for (const auto& row : rows)
    for (const auto& [k, _] : row.items())
      if (seen.insert(k).second) keys.push_back(k);
  std::sort(keys.begin(), keys.end());

  std::vector<std::size_t> width(keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) {
    width[c] = keys[c].size();
    for (const auto& row : rows)
      width[c] = std::max(width[c], cell(row.value(keys[c], json())).size());
  }
  std::ostringstream out;
  auto line = [&](auto&& get) {
    for (std::size_t c = 0; c < keys.size(); ++c) {
      std::string s = get(c);
      out << s;
      if (c + 1 < keys.size()) out << std::string(width[c] - s.size() + 2, ' ');
    }
    out << "\n";
  };
  line([&](std::size_t c) { return keys[c]; });
  line([&](std::size_t c) { return std::string(width[c], '-'); });
  for (const auto& row : rows) line([&](std::size_t c) { return cell(row.value(keys[c], json())); });
  return out.str();
}

json ReportBundle::to_json() const {
  json sections_json = json::array();
  for (const auto& s : sections) {
    sections_json.push_back({{"title", s.title}, {"anchor", s.anchor}, {"rows", s.rows}});
  }
  return {{"sections", sections_json}};
}

std::string ReportBundle::to_table() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (i) out << "\n";
    out << "== " << sections[i].title << " [" << sections[i].anchor << "]\n";
    out << render_table(sections[i].rows);
  }
  return out.str();
}

// --------------------------------------------------------------- reproduce

namespace {

ReportSection nt_section(const GroupStore* store) {
  ReportSection s{"Prime sets of torus normalizers", "torus-normalizer-primes"};
  for (const auto& t : supported_types(6)) {
    PrimeSpec ps = prime_set_nt(t, store);
    s.rows.push_back({{"type", t.name()},
                      {"weyl_order", weyl_group(t, store).order()},
                      {"prime_set", ps.to_json()},
                      {"set", ps.display()}});
  }
  return s;
}

ReportSection symmetric_section() {
  ReportSection s{"Prime sets of symmetric groups", "symmetric-group-primes"};
  for (std::size_t n = 2; n <= 5; ++n) {
    FinGroup g = catalog_group("S" + std::to_string(n));
    PrimeSpec ps = prime_set_finite(g);
    json tests = json::object();
    for (std::uint64_t p : {2, 3, 5, 7}) tests[std::to_string(p)] = is_p_nilpotent(g, p);
    s.rows.push_back({{"group", "S" + std::to_string(n)},
                      {"order", g.order()},
                      {"p_nilpotent", tests},
                      {"prime_set", ps.to_json()},
                      {"set", ps.display()},
                      {"greater_than_n", agree_on_primes(ps, PrimeSpec::greater_than(n), 100)}});
  }
  return s;
}

ReportSection classify_section(const std::vector<PairVerdict>& verdicts) {
  ReportSection s{"Normal reflection subgroups with nilpotent quotient", "normal-weyl-pairs"};
  for (const auto& v : verdicts) s.rows.push_back(v.to_json());
  return s;
}

ReportSection realization_section(const std::vector<PairVerdict>& verdicts) {
  ReportSection s{"Realizability of admitted pairs", "pair-realizability"};
  for (const auto& v : verdicts) {
    if (!v.admitted) continue;
    PairRealization odd = prime_set_pair(v, 3);
    PairRealization two = prime_set_pair(v, 2);
    json row = odd.to_json();
    row.erase("realizable_at_p0");
    row["pair"] = WeylPair{v.ambient, v.sub}.name();
    row["realizable_at_3"] = odd.realizable_at_p0;
    row["realizable_at_2"] = two.realizable_at_p0;
    s.rows.push_back(row);
  }
  return s;
}

ReportSection quotient_section(const GroupStore* store) {
  ReportSection s{"Quotients by finite normal subgroups", "finite-quotients"};
  auto add = [&](const WeylPair& pair, std::vector<std::uint64_t> nu) {
    PairVerdict v = classify_pair(pair.ambient, pair.sub, store);
    PrimeSpec ps = prime_set_quotient(v, nu);
    s.rows.push_back(
        {{"pair", pair.name()}, {"nu_primes", nu}, {"prime_set", ps.to_json()}, {"set", ps.display()}});
  };
  for (int n = 2; n <= 4; ++n) add({{Family::B, n}, {SubsystemKind::DInB, n}}, {2});
  add({{Family::C, 2}, {SubsystemKind::A1nInC, 2}}, {});
  add({{Family::G, 2}, {SubsystemKind::A2InG2, 2}}, {3});
  return s;
}

ReportSection wreath_section() {
  ReportSection s{"Wreath products Sp(1) wr Sn", "wreath-sp1"};
  for (std::size_t n = 1; n <= 4; ++n) s.rows.push_back(prime_set_wreath(n).to_json());
  return s;
}

ReportSection triality_section(const GroupStore* store) {
  ReportSection s{"W(F4) over W(D4) and the triality subgroup", "f4-triality"};
  const LieType f4{Family::F, 4};
  FinGroup w = weyl_group(f4, store);
  Subgroup d4 = subsystem_subgroup(w, f4, {SubsystemKind::D4InF4, 4});
  FinGroup wd4 = materialize(w, d4);
  FinGroup ext = triality_extension(w, d4);
  QuotientGroup q = quotient(w, d4);
  auto row = [&](std::string name, const FinGroup& g) {
    s.rows.push_back({{"group", std::move(name)},
                      {"order", g.order()},
                      {"reflections", reflections_of(g).size()},
                      {"reflection_generated", is_reflection_generated(g)}});
  };
  row("W(F4)", w);
  row("W(D4)", wd4);
  row("W(D4)xZ3", ext);
  row("Z3-cyclic", catalog_group("Z3"));
  s.rows.push_back({{"group", "W(F4)/W(D4)"},
                    {"order", q.order()},
                    {"catalog", identify_in_catalog(q).value_or("Unknown")},
                    {"nilpotent", is_nilpotent(q)}});
  return s;
}

ReportSection g2_section(const GroupStore* store) {
  ReportSection s{"W(G2) against its dual", "g2-dual"};
  FinGroup w = weyl_group({Family::G, 2}, store);
  auto psi = psi_search(w, 3);
  json row = {{"type", "G2"}, {"bound", 3}};
  row["psi"] = psi ? to_json(*psi) : json();
  row["psi_verified"] = psi ? conjugates_to_dual(w, *psi) : false;
  row["mod3_intertwiner_absent"] = mod3_intertwiner_absent(w);
  s.rows.push_back(row);
  return s;
}

ReportSection quaternion_section() {
  ReportSection s{"Quaternion group extensions", "quaternion-extension"};
  FinGroup q8 = catalog_group("Q8");
  Subgroup z = center(q8);
  const std::size_t x[] = {q8.generators()[0]};
  FinGroup z4 = materialize(q8, subgroup_generated(q8, x));
  s.rows.push_back({{"group", "Q8"},
                    {"order", q8.order()},
                    {"center_order", z.order()},
                    {"complement_to_center", has_complement(q8, z)},
                    {"char_norm", rep_character_norm(q8, 2).get_str()},
                    {"irreducible", rep_character_norm(q8, 2) == static_cast<long>(q8.order())}});
  s.rows.push_back({{"group", "Z/4 = <rho(x)>"},
                    {"order", z4.order()},
                    {"char_norm", rep_character_norm(z4, 2).get_str()},
                    {"irreducible", rep_character_norm(z4, 2) == static_cast<long>(z4.order())}});

  ToralDesc central(1, catalog_group("Z2xZ2"), {ExactMatrix{{1}}, ExactMatrix{{1}}});
  FinGroup d8 = catalog_group("D8");
  ToralDesc nt_b2(2, d8, d8.generator_matrices());
  s.rows.push_back({{"group", "S1 . (Z/2 x Z/2), central"},
                    {"pi_compact_toral", is_pi_compact_toral(central)},
                    {"toral_set", toral_prime_set(central).display()}});
  s.rows.push_back({{"group", "NT(B2)"},
                    {"pi_compact_toral", is_pi_compact_toral(nt_b2)},
                    {"toral_set", toral_prime_set(nt_b2).display()}});
  return s;
}

ReportSection degrees_section(const GroupStore* store) {
  ReportSection s{"Invariant degrees of Weyl groups", "invariant-degrees"};
  for (const char* name : {"A1", "B2", "G2", "F4"}) {
    FinGroup w = weyl_group(LieType::parse(name), store);
    auto deg = invariant_degrees(w);
    s.rows.push_back({{"type", name},
                      {"order", w.order()},
                      {"reflections", reflections_of(w).size()},
                      {"degrees", deg ? json(deg->degrees) : json()}});
  }
  return s;
}

ReportSection central_section() {
  ReportSection s{"Central extensions preserve prime sets", "central-extension"};
  for (const auto& ps : {PrimeSpec::all(), PrimeSpec::all_except({3}), PrimeSpec::greater_than(3)}) {
    s.rows.push_back({{"inner", ps.display()}, {"cover", central_ext_transfer(ps).display()}});
  }
  return s;
}

}  // namespace

ReportBundle reproduce(const GroupStore* store) {
  CachingStore memo;
  if (!store) store = &memo;
  ReportBundle b;
  auto wrap = [](std::string_view section, auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      throw Error(e.code(), "in section " + std::string(section) + ": " + e.what());
    }
  };
  auto verdicts = wrap("classify", [&] { return classify_pairs(4, store); });
  b.sections.push_back(wrap("nt", [&] { return nt_section(store); }));
  b.sections.push_back(wrap("symmetric", [] { return symmetric_section(); }));
  b.sections.push_back(classify_section(verdicts));
  b.sections.push_back(wrap("realization", [&] { return realization_section(verdicts); }));
  b.sections.push_back(wrap("quotient", [&] { return quotient_section(store); }));
  b.sections.push_back(wrap("wreath", [] { return wreath_section(); }));
  b.sections.push_back(wrap("triality", [&] { return triality_section(store); }));
  b.sections.push_back(wrap("g2", [&] { return g2_section(store); }));
  b.sections.push_back(wrap("quaternion", [] { return quaternion_section(); }));
  b.sections.push_back(wrap("degrees", [&] { return degrees_section(store); }));
  b.sections.push_back(central_section());
  return b;
}

}  // namespace weylcomp
