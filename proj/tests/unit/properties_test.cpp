#include "doctest.h"
#include "propositions.hpp"

TEST_CASE("property suite") {
  auto all = props::all();
  CHECK(all.size() >= 25);
  for (const auto& p : all) {
    CAPTURE(p.name);
    CHECK(p.run() == "");
  }
}
