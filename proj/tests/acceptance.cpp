// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--cli PATH]
//
// With --cli the classification and determinism criteria are also checked
// through the command-line binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "sampling.hpp"
#include "weylcomp/pcompact.hpp"
#include "weylcomp/reflect.hpp"
#include "weylcomp/report.hpp"
#include "weylcomp/weyl.hpp"

using namespace weylcomp;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kClassifySeconds = 60.0;
constexpr double kPsiSeconds = 5.0;
constexpr std::size_t kKernelSamples = 120;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Command {
  int status = -1;
  std::string out;
};

Command run_command(const std::string& cmd) {
  Command c;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

const std::set<std::string> kAdmitted = {"T<A1",  "T<B2",    "D2<B2", "D3<B3",
                                         "D4<B4", "A1^2<C2", "A2<G2"};

Outcome criterion_classify(const std::string& cli) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  auto verdicts = classify_pairs(4);
  const double secs = seconds_since(t0);
  std::set<std::string> admitted;
  std::map<std::string, PairVerdict> by_name;
  for (const auto& v : verdicts) {
    const std::string name = WeylPair{v.ambient, v.sub}.name();
    by_name.emplace(name, v);
    if (v.admitted) admitted.insert(name);
  }
  o.require(admitted == kAdmitted, "admitted set differs");
  auto rejected_with = [&](const char* pair, const char* quotient) {
    auto it = by_name.find(pair);
    o.require(it != by_name.end() && !it->second.admitted && it->second.normal &&
                  it->second.quotient_catalog == quotient,
              std::string(pair) + " not rejected with quotient " + quotient);
  };
  rejected_with("D4<F4", "S3");
  rejected_with("A1^3<C3", "S3");
  rejected_with("A1^4<C4", "S4");
  o.require(secs < kClassifySeconds, "library run took " + std::to_string(secs) + " s");
  std::ostringstream d;
  d << "library " << secs << " s";

  if (!cli.empty()) {
    const auto t1 = std::chrono::steady_clock::now();
    Command c = run_command(quote(cli) + " --no-cache --format json classify --max-rank 4");
    const double cli_secs = seconds_since(t1);
    std::set<std::string> cli_admitted;
    try {
      for (const auto& row : json::parse(c.out))
        if (row["admitted"] == true) cli_admitted.insert(row["pair"].get<std::string>());
    } catch (const std::exception&) {
      o.require(false, "cli output is not JSON");
    }
    o.require(c.status == 0, "cli exit status " + std::to_string(c.status));
    o.require(cli_admitted == kAdmitted, "cli admitted set differs");
    o.require(cli_secs < kClassifySeconds, "cli run took " + std::to_string(cli_secs) + " s");
    d << ", cli " << cli_secs << " s";
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome criterion_prime_tables() {
  Outcome o;
  // Re-derived from the p-nilpotence test alone over p in {2,3,5,7}.
  auto from_tests = [](const FinGroup& g) {
    std::vector<std::uint64_t> fail;
    for (std::uint64_t p : {2, 3, 5, 7})
      if (!is_p_nilpotent(g, p)) fail.push_back(p);
    return PrimeSpec::all_except(fail);
  };
  auto sym = [](int n) { return catalog_group("S" + std::to_string(n)); };
  o.require(from_tests(sym(2)) == PrimeSpec::all(), "S2");
  o.require(from_tests(sym(3)) == PrimeSpec::all_except({3}), "S3");
  for (int n : {4, 5}) {
    PrimeSpec derived = from_tests(sym(n));
    o.require(derived.same_set(PrimeSpec::greater_than(n)), "S" + std::to_string(n));
    o.require(prime_set_finite(sym(n)) == derived, "prime_set_finite S" + std::to_string(n));
  }
  o.require(prime_set_finite(sym(2)) == PrimeSpec::all(), "prime_set_finite S2");
  o.require(prime_set_finite(sym(3)) == PrimeSpec::all_except({3}), "prime_set_finite S3");

  auto nt = [](const char* t) { return prime_set_nt(LieType::parse(t)); };
  for (const char* t : {"A1", "B2", "C2"}) o.require(nt(t) == PrimeSpec::all(), t);
  o.require(nt("G2") == PrimeSpec::all_except({2, 3}), "G2");
  o.require(nt("F4") == PrimeSpec::all_except({2, 3}), "F4");
  o.require(nt("A6") == PrimeSpec::all_except({2, 3, 5, 7}), "A6");
  if (o.pass) o.detail = "S2..S5 and NT(A1,B2,C2,G2,F4,A6)";
  return o;
}

Outcome criterion_weyl_orders() {
  Outcome o;
  std::uint64_t fact = 1;
  std::size_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    fact *= n;
    const std::uint64_t two_n = std::uint64_t{1} << n;
    auto expect = [&](Family f, int rank, std::uint64_t order) {
      const LieType t{f, rank};
      const std::size_t got = weyl_group(t).order();
      o.require(got == order, t.name() + " gave " + std::to_string(got));
      ++checked;
    };
    expect(Family::A, n, fact * (n + 1));
    if (n >= 2) expect(Family::B, n, two_n * fact);
    if (n >= 4) expect(Family::D, n, two_n / 2 * fact);
  }
  o.require(weyl_group({Family::G, 2}).order() == 12, "G2");
  o.require(weyl_group({Family::F, 4}).order() == 1152, "F4");
  if (o.pass) o.detail = std::to_string(checked + 2) + " closures match";
  return o;
}

Outcome criterion_invariants() {
  Outcome o;
  auto degrees = [&](const char* t, std::vector<std::size_t> expect) {
    FinGroup w = weyl_group(LieType::parse(t));
    auto d = invariant_degrees(w);
    o.require(d && d->degrees == expect, std::string("degrees of ") + t);
    if (d) {
      o.require(d->product() == w.order(), std::string("product rule ") + t);
      o.require(d->excess() == reflections_of(w).size(), std::string("reflection count ") + t);
    }
  };
  degrees("A1", {2});
  degrees("B2", {2, 4});
  degrees("G2", {2, 6});
  degrees("F4", {2, 6, 8, 12});

  o.require(!is_reflection_generated(catalog_group("Z3")), "Z3 on Q^3");
  const LieType f4{Family::F, 4};
  FinGroup wf4 = weyl_group(f4);
  Subgroup d4 = subsystem_subgroup(wf4, f4, {SubsystemKind::D4InF4, 4});
  FinGroup ext = triality_extension(wf4, d4);
  o.require(ext.order() == 576, "triality extension order");
  o.require(!is_reflection_generated(ext), "W(D4) x| Z3");
  o.require(is_reflection_generated(wf4), "W(F4)");
  o.require(is_reflection_generated(materialize(wf4, d4)), "W(D4)");
  if (o.pass) o.detail = "degrees [2] [2,4] [2,6] [2,6,8,12]";
  return o;
}

Outcome criterion_wreath() {
  Outcome o;
  const PrimeSpec expect[] = {PrimeSpec::all(), PrimeSpec::all(), PrimeSpec::greater_than(3),
                              PrimeSpec::greater_than(4)};
  for (std::size_t n = 1; n <= 4; ++n) {
    WreathVerdict v = prime_set_wreath(n);
    o.require(v.prime_set == expect[n - 1], "n = " + std::to_string(n));
  }
  WreathVerdict w3 = prime_set_wreath(3);
  o.require(w3.reflection_witness == false, "reflection witness");
  o.require(w3.nilpotent3_witness == false, "3-nilpotence witness");
  if (o.pass) o.detail = "Pi, Pi, >3, >4";
  return o;
}

Outcome criterion_extensions() {
  Outcome o;
  FinGroup q8 = catalog_group("Q8");
  o.require(!has_complement(q8, center(q8)), "Q8 center has a complement");
  o.require(rep_character_norm(q8, 2) == 8, "character norm");
  auto triples = sampling::kernel_normality_triples(kKernelSamples, 20261019);
  std::size_t ok = 0;
  for (const auto& t : triples) ok += t.holds;
  o.require(triples.size() >= 100 && ok == triples.size(),
            std::to_string(ok) + "/" + std::to_string(triples.size()) + " triples");
  if (o.pass) o.detail = std::to_string(ok) + "/" + std::to_string(triples.size()) + " triples";
  return o;
}

Outcome criterion_psi() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  FinGroup w = weyl_group({Family::G, 2});
  auto psi = psi_search(w, 3);
  const bool verified = psi && conjugates_to_dual(w, *psi);
  const bool absent = mod3_intertwiner_absent(w);
  const double secs = seconds_since(t0);
  o.require(psi.has_value(), "no psi within bound 3");
  o.require(verified, "psi fails set conjugation");
  o.require(absent, "mod 3 intertwiner found");
  o.require(secs < kPsiSeconds, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "psi = " + psi->to_string() + ", " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion_determinism(const std::string& cli) {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "weylcomp-acceptance-cache";
  fs::remove_all(dir);
  auto library_run = [&] {
    CachingStore store(dir);
    return reproduce(&store).to_json().dump();
  };
  const std::string cold = library_run();
  const std::string warm = library_run();
  fs::remove_all(dir);
  const std::string again = library_run();
  o.require(cold == warm, "library: warm cache changed output");
  o.require(cold == again, "library: cache deletion changed output");
  std::ostringstream d;
  d << "library " << cold.size() << " bytes";

  if (!cli.empty()) {
    fs::remove_all(dir);
    const std::string cmd = quote(cli) + " --cache-dir " + quote(dir.string()) + " reproduce --format json";
    Command a = run_command(cmd);
    Command b = run_command(cmd);
    fs::remove_all(dir);
    Command c = run_command(cmd);
    o.require(a.status == 0 && b.status == 0 && c.status == 0, "cli exit status");
    o.require(a.out == b.out, "cli: consecutive runs differ");
    o.require(a.out == c.out, "cli: cache deletion changed output");
    o.require(!a.out.empty(), "cli: empty output");
    d << ", cli " << a.out.size() << " bytes";
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = d.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--cli" && i + 1 < argc) cli = argv[++i];
  }

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"classification of normal Weyl pairs", [&] { return criterion_classify(cli); }},
      {"prime set tables", criterion_prime_tables},
      {"Weyl group orders", criterion_weyl_orders},
      {"invariant theory", criterion_invariants},
      {"wreath products", criterion_wreath},
      {"extension suite", criterion_extensions},
      {"psi and mod 3 intertwiner", criterion_psi},
      {"determinism", [&] { return criterion_determinism(cli); }},
  };

  int failures = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << "criterion " << index++ << " " << (o.pass ? "PASS" : "FAIL") << "  " << name
              << " (" << o.detail << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
