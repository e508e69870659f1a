#pragma once

// Random (K, q, nu) triples for the kernel normality property: K from the
// builtin catalog, q the projection onto K/N for a random normal N, nu the
// normal closure of a random element.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "weylcomp/fingroup.hpp"

namespace sampling {

struct Triple {
  std::string group;
  std::size_t kernel_order = 0;
  std::size_t nu_order = 0;
  bool holds = false;
};

inline std::vector<Triple> kernel_normality_triples(std::size_t count, std::uint32_t seed) {
  using namespace weylcomp;
  static const char* names[] = {"S3", "S4", "D8", "Q8", "Z2xZ2", "A4", "Z6", "Z4"};
  std::vector<FinGroup> groups;
  for (const char* n : names) groups.push_back(catalog_group(n));

  std::mt19937 rng(seed);
  std::vector<Triple> out;
  while (out.size() < count) {
    const std::size_t gi = rng() % groups.size();
    const FinGroup& k = groups[gi];
    std::uniform_int_distribution<std::size_t> pick(0, k.order() - 1);
    const std::size_t a = pick(rng);
    Subgroup n = normal_closure(k, std::span<const std::size_t>(&a, 1));
    QuotientGroup q = quotient(k, n);
    std::vector<std::size_t> images;
    for (std::size_t g : k.generators()) images.push_back(q.coset_of(g));
    Homomorphism hom(k, q, images);
    const std::size_t b = pick(rng);
    Subgroup nu = normal_closure(k, std::span<const std::size_t>(&b, 1));
    out.push_back({names[gi], hom.kernel().order(), nu.order(), kernel_normality_check(hom, nu)});
  }
  return out;
}

}  // namespace sampling
