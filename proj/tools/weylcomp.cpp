// weylcomp: command-line front end for the decision procedures.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weylcomp/error.hpp"
#include "weylcomp/exactmat.hpp"
#include "weylcomp/fingroup.hpp"
#include "weylcomp/pcompact.hpp"
#include "weylcomp/reflect.hpp"
#include "weylcomp/report.hpp"
#include "weylcomp/weyl.hpp"

namespace {

using namespace weylcomp;
using nlohmann::json;

constexpr const char* kGrammar =
    "usage: weylcomp [--format json|table] [--cache-dir DIR] <verb> ...\n"
    "  weyl {order|reflections|show} <type>\n"
    "  group {nilpotent|pnilpotent -p P|sylow -p P|center|iso <name>} --from <cachefile|builtin>\n"
    "  molien <type|builtin-action>\n"
    "  pcompact {nt <type>|finite <builtin>|toral <descfile> [-p P]|wreath <n>|\n"
    "            quotient <pair> --nu <primes>|pair <pair>}\n"
    "  classify --max-rank N\n"
    "  psi --bound B [--type G2]\n"
    "  reproduce [--format json|table]\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "table";
  std::optional<std::string> cache_dir;
  bool no_cache = false;
};

class Printer {
 public:
  explicit Printer(const Options& o) : json_(o.format == "json") {}

  bool json_mode() const { return json_; }

  /// Scalars print bare in both formats.
  void scalar(const json& v) const {
    std::cout << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  void object(const json& v, const std::string& table_text) const {
    if (json_) {
      std::cout << v.dump() << "\n";
    } else {
      std::cout << table_text;
    }
  }
  void rows(const json& r) const { object(r, render_table(r)); }

 private:
  bool json_;
};

std::string matrix_text(const ExactMatrix& m) { return m.to_string() + "\n"; }

FinGroup load_group(const std::string& from, const GroupStore* store) {
  if (std::filesystem::is_regular_file(from)) {
    std::ifstream in(from);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(Errc::Parse, "cannot parse " + from + ": " + e.what());
    }
    return group_from_json(j);
  }
  return builtin_group(from, store);
}

json index_list(const FinGroup& g, std::span<const std::size_t> idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(to_json(g.element(i)));
  return out;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      unsigned long long p = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(p);
    } catch (const std::exception&) {
      throw UsageError("bad prime list: " + text);
    }
  }
  return out;
}

/// The variant tag leads, then its payload.
void print_prime_spec(const Printer& out, const PrimeSpec& ps) {
  if (!out.json_mode()) {
    std::cout << ps.display() << "\n";
    return;
  }
  json j = ps.to_json();
  nlohmann::ordered_json o;
  o["variant"] = j["variant"];
  for (const auto& [k, v] : j.items())
    if (k != "variant") o[k] = v;
  std::cout << o.dump() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Weyl group and p-compactness computations", "weylcomp"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cache-dir", opt.cache_dir, "Group cache directory");
  app.add_flag("--no-cache", opt.no_cache, "Do not read or write the disk cache");

  std::string verb_arg, name_arg, from, nu_text;
  std::uint64_t p = 0;
  int max_rank = 4;
  long bound = 3;
  std::string psi_type = "G2";
  bool have_p = false;

  auto sub = [&](CLI::App* parent, const char* name, const char* desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  CLI::App* weyl = sub(&app, "weyl", "Weyl group data");
  weyl->require_subcommand(1);
  for (const char* w : {"order", "reflections", "show"})
    sub(weyl, w, "")->add_option("type", name_arg)->required();

  CLI::App* group = sub(&app, "group", "Finite group predicates");
  group->require_subcommand(1);
  group->add_option("--from", from, "Cache file or builtin group");
  sub(group, "nilpotent", "");
  sub(group, "center", "");
  for (const char* w : {"pnilpotent", "sylow"})
    sub(group, w, "")->add_option("-p", p)->required();
  sub(group, "iso", "")->add_option("name", name_arg)->required();
  for (auto* s : group->get_subcommands({})) {
    s->add_option("--from", from, "Cache file or builtin group");
  }

  CLI::App* molien_cmd = sub(&app, "molien", "Molien series and invariant degrees");
  molien_cmd->add_option("group", name_arg)->required();

  CLI::App* pc = sub(&app, "pcompact", "Prime sets of p-compactness");
  pc->require_subcommand(1);
  sub(pc, "nt", "")->add_option("type", name_arg)->required();
  sub(pc, "finite", "")->add_option("group", name_arg)->required();
  CLI::App* toral = sub(pc, "toral", "");
  toral->add_option("descfile", name_arg)->required();
  toral->add_option("-p", p)->each([&](const std::string&) { have_p = true; });
  sub(pc, "wreath", "")->add_option("n", verb_arg)->required();
  CLI::App* quot = sub(pc, "quotient", "");
  quot->add_option("pair", name_arg)->required();
  quot->add_option("--nu", nu_text, "Comma-separated primes dividing |nu|")->required();
  sub(pc, "pair", "")->add_option("pair", name_arg)->required();

  CLI::App* classify = sub(&app, "classify", "Normal reflection subgroups with nilpotent quotient");
  classify->add_option("--max-rank", max_rank)->check(CLI::Range(1, 6));

  CLI::App* psi = sub(&app, "psi", "Lattice isomorphism to the dual");
  psi->add_option("--bound", bound)->check(CLI::Range(0L, 6L));
  psi->add_option("--type", psi_type);

  sub(&app, "reproduce", "Recompute every table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e);
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n" << kGrammar;
    return 2;
  }

  std::optional<std::filesystem::path> dir;
  if (!opt.no_cache) dir = resolve_cache_dir(opt.cache_dir);
  CachingStore store(dir);
  Printer out(opt);

  auto chosen = [](CLI::App* a) { return a->get_subcommands().front(); };

  if (weyl->parsed()) {
    const std::string w = chosen(weyl)->get_name();
    LieType t = LieType::parse(name_arg);
    FinGroup g = weyl_group(t, &store);
    if (w == "order") {
      out.scalar(g.order());
    } else if (w == "reflections") {
      auto refl = reflections_of(g);
      std::string text = std::to_string(refl.size()) + " reflections\n";
      for (std::size_t i : refl) text += matrix_text(g.element(i));
      out.object({{"type", t.name()}, {"count", refl.size()}, {"reflections", index_list(g, refl)}},
                 text);
    } else {
      RootSystem rs = root_system(t);
      json gens = json::array();
      for (const auto& m : g.generator_matrices()) gens.push_back(to_json(m));
      std::string text = "type: " + t.name() + "\norder: " + std::to_string(g.order()) +
                         "\nreflections: " + std::to_string(reflections_of(g).size()) +
                         "\ncartan:\n" + matrix_text(rs.cartan) + "gram:\n" + matrix_text(rs.gram);
      out.object({{"type", t.name()},
                  {"order", g.order()},
                  {"reflections", reflections_of(g).size()},
                  {"cartan", to_json(rs.cartan)},
                  {"gram", to_json(rs.gram)},
                  {"generators", gens}},
                 text);
    }
    return 0;
  }

  if (group->parsed()) {
    const std::string w = chosen(group)->get_name();
    if (from.empty()) throw UsageError("group verbs need --from <cachefile|builtin>");
    FinGroup g = load_group(from, &store);
    if (w == "nilpotent") {
      out.scalar(is_nilpotent(g));
    } else if (w == "pnilpotent") {
      if (!is_prime(p)) throw UsageError("-p must be prime");
      out.scalar(is_p_nilpotent(g, p));
    } else if (w == "iso") {
      out.scalar(iso_to_catalog(g, name_arg));
    } else {
      if (w == "sylow" && !is_prime(p)) throw UsageError("-p must be prime");
      Subgroup h = w == "sylow" ? sylow(g, p) : center(g);
      json gens = index_list(g, h.generators());
      out.object({{"order", h.order()}, {"generators", gens}},
                 "order: " + std::to_string(h.order()) + "\n");
    }
    return 0;
  }

  if (molien_cmd->parsed()) {
    // Lie types take precedence here, so "A3" means W(A3) rather than the
    // alternating group.
    std::optional<FinGroup> weyl_g;
    try {
      weyl_g = weyl_group(LieType::parse(name_arg), &store);
    } catch (const Error&) {
    }
    FinGroup g = weyl_g ? std::move(*weyl_g) : builtin_group(name_arg, &store);
    MolienSeries m = molien(g);
    auto deg = invariant_degrees(g);
    json j = to_json(m);
    if (deg) j["degrees"] = deg->degrees;
    std::string text = "numerator: " + m.numerator.to_string() +
                       "\ndenominator: " + m.denominator.to_string() + "\nprefix:";
    for (std::size_t i = 0; i < 12 && i < m.prefix.size(); ++i) text += " " + to_string(m.prefix[i]);
    text += "\ndegrees: ";
    if (deg) {
      for (std::size_t i = 0; i < deg->degrees.size(); ++i)
        text += (i ? "," : "") + std::to_string(deg->degrees[i]);
    } else {
      text += "-";
    }
    out.object(j, text + "\n");
    return 0;
  }

  if (pc->parsed()) {
    const std::string w = chosen(pc)->get_name();
    if (w == "nt") {
      print_prime_spec(out, prime_set_nt(LieType::parse(name_arg), &store));
    } else if (w == "finite") {
      print_prime_spec(out, prime_set_finite(load_group(name_arg, &store)));
    } else if (w == "toral") {
      std::ifstream in(name_arg);
      if (!in) throw UsageError("cannot open descriptor " + name_arg);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("descriptor: ") + e.what());
      }
      ToralDesc d = ToralDesc::from_json(j);
      if (have_p) {
        if (!is_prime(p)) throw UsageError("-p must be prime");
        out.scalar(is_p_compact_toral(d, p));
      } else {
        print_prime_spec(out, toral_prime_set(d));
      }
    } else if (w == "wreath") {
      std::size_t n = 0;
      try {
        n = std::stoul(verb_arg);
      } catch (const std::exception&) {
        throw UsageError("wreath expects a positive integer");
      }
      WreathVerdict v = prime_set_wreath(n);
      out.object(v.to_json(), render_table(json::array({v.to_json()})));
    } else if (w == "quotient") {
      WeylPair pair = WeylPair::parse(name_arg);
      PairVerdict v = classify_pair(pair.ambient, pair.sub, &store);
      print_prime_spec(out, prime_set_quotient(v, parse_primes(nu_text)));
    } else {
      WeylPair pair = WeylPair::parse(name_arg);
      PairVerdict v = classify_pair(pair.ambient, pair.sub, &store);
      json j = prime_set_pair(v, 3).to_json();
      j["realizable_at_2"] = prime_set_pair(v, 2).realizable_at_p0;
      j["realizable_at_3"] = j["realizable_at_p0"];
      j.erase("realizable_at_p0");
      j["pair"] = pair.name();
      out.rows(json::array({j}));
    }
    return 0;
  }

  if (classify->parsed()) {
    json rows = json::array();
    for (const auto& v : classify_pairs(max_rank, &store)) rows.push_back(v.to_json());
    out.rows(rows);
    return 0;
  }

  if (psi->parsed()) {
    FinGroup w = weyl_group(LieType::parse(psi_type), &store);
    if (w.dimension() != 2) throw UsageError("psi search needs a rank-2 type");
    auto m = psi_search(w, bound);
    json j = {{"type", LieType::parse(psi_type).name()}, {"bound", bound}};
    j["psi"] = m ? to_json(*m) : json();
    j["verified"] = m ? conjugates_to_dual(w, *m) : false;
    j["mod3_intertwiner_absent"] = mod3_intertwiner_absent(w);
    std::string text = m ? "psi:\n" + matrix_text(*m) : std::string("psi: none within bound\n");
    text += "verified: " + j["verified"].dump() +
            "\nmod3_intertwiner_absent: " + j["mod3_intertwiner_absent"].dump() + "\n";
    out.object(j, text);
    return m ? 0 : 1;
  }

  ReportBundle b = reproduce(&store);
  out.object(b.to_json(), b.to_table());
  return 0;
}

bool is_usage(Errc c) {
  switch (c) {
    case Errc::Parse:
    case Errc::UnsupportedType:
    case Errc::UnknownCatalogName:
    case Errc::IncompatibleSpec:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << kGrammar;
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (is_usage(e.code())) {
      std::cerr << kGrammar;
      return 2;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
