#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ordforge {

struct CheckReport {
  std::string suite;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;

  bool pass() const { return failures == 0; }
  void ok() { ++cases; }
  void fail(const std::string& msg) {
    ++cases;
    ++failures;
    if (messages.size() < 8) messages.push_back(msg);
  }
  void merge(const CheckReport& o);
};

std::vector<std::string> check_suite_names();

// Named suites behind `check --suite NAME`; iters scales the randomized
// parts, exhaustive parts ignore it.
CheckReport run_check_suite(const std::string& name, std::uint64_t seed, std::size_t iters);

// Granular checks reused by the acceptance harness.
CheckReport check_lemma_star_extend(std::uint64_t seed, std::size_t iters);
CheckReport check_lemma_indices_monotone(std::uint64_t seed, std::size_t iters);
CheckReport check_lemma_subterms_descend(std::uint64_t seed, std::size_t iters);
CheckReport check_lemma_h_star_monotone(std::uint64_t seed, std::size_t iters);
CheckReport check_embed_monotone_up(std::uint64_t seed, std::size_t iters_per_order);
CheckReport check_embed_monotone_down(std::uint64_t seed, std::size_t iters_per_order);

}  // namespace ordforge
