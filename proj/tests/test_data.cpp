#include <doctest.h>

#include "darboux/corpus.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("data") {
  TEST_CASE("shipped system files match the built-in corpus") {
    for (const auto& c : builtin_systems()) {
      CAPTURE(c.name);
      auto file = NaturalHamiltonian::from_definition(
          load_system_file(std::string(DARBOUX_DATA_DIR) + "/systems/" + c.name + ".dhs"));
      auto builtin = load_builtin(c.name);
      CHECK(file.field() == builtin.field());
      CHECK(file.mu() == builtin.mu());
      CHECK(file.hamiltonian() == builtin.hamiltonian());
    }
  }

  TEST_CASE("golden corpus passes") {
    auto checks = run_golden_corpus();
    CHECK(checks.size() >= 16);
    for (const auto& g : checks) {
      INFO(g.system << ": " << g.claim << " " << g.detail);
      CHECK(g.passed);
    }
  }
}
