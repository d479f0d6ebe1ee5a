// Acceptance gate: runs every criterion suite and prints one pass/fail line
// per criterion. Exits nonzero when any criterion fails.

#include <cstdio>
#include <string>

#include "fincat/suites.hpp"
#include "oracles.hpp"

namespace {

bool report(int number, const std::string& title,
            const fincat::suites::Suite& s) {
  long long millis = 0;
  std::size_t count = 0;
  std::string witness;
  for (const auto& c : s.checks) {
    millis += c.millis;
    if (c.count && *c.count > count) count = *c.count;
    if (!c.pass && witness.empty()) witness = c.name + ": " + c.witness;
  }
  std::printf("criterion %2d (%s): %s (%zu instances, %lld ms)%s%s\n", number,
              title.c_str(), s.ok() ? "PASS" : "FAIL", count, millis,
              witness.empty() ? "" : " -- ", witness.c_str());
  std::fflush(stdout);
  return s.ok();
}

}  // namespace

int main() {
  using namespace fincat;
  const std::uint32_t seed = 20260826;
  bool ok = true;

  ok &= report(1, "coend/end engines match oracles",
               suites::coend_end_suite(seed, oracles::coend_class_count_oracle,
                                       oracles::end_family_count_oracle,
                                       oracles::coend_matches_oracle));
  ok &= report(2, "slice-hom bijection sweep, carriers <= 3",
               suites::dlens_lemma_suite(3));
  ok &= report(3, "dependent-lens comparison is an equivalence",
               suites::dlens_equivalence_suite(seed));
  ok &= report(4, "classical lens instance counts 64",
               suites::lens_count_suite());
  ok &= report(5, "free/cofree transpositions and comonad laws",
               suites::adjunction_suite(seed));
  ok &= report(6, "law checker soundness and mutation coverage",
               suites::mutation_suite(seed));
  ok &= report(7, "representation bijection with representable modules",
               suites::representation_suite());
  ok &= report(8, "compound-optics integrand bijection",
               suites::compound_suite(seed));
  ok &= report(9, "eval respects classes and composition",
               suites::eval_suite());
  ok &= report(10, "action/copresheaf round trips and unique lifts",
               suites::presentation_suite(seed));

  return ok ? 0 : 1;
}
