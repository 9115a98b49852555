#include <doctest.h>

#include "spinal/sob.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace spinal;

TEST_SUITE("sob") {
  TEST_CASE("zoo books validate") {
    for (const char* name : {"ob_s3.json", "ot.json", "cb3.json"}) {
      CAPTURE(name);
      CHECK(validate(testing::zoo_book(name)).ok());
    }
  }

  TEST_CASE("each corruption is reported with its code") {
    const SpinalOpenBook good = testing::zoo_book("ot.json");

    SpinalOpenBook dup = good;
    dup.papers[1].id = dup.papers[0].id;
    CHECK(validate(dup).contains("DUP-ID"));

    SpinalOpenBook closed_vertebra = good;
    closed_vertebra.vertebrae[0].surface = Surface::orientable(1, 0);
    CHECK(validate(closed_vertebra).contains("VERTEBRA-SURFACE"));

    SpinalOpenBook circles = good;
    circles.vertebrae[0].circles.pop_back();
    CHECK(validate(circles).contains("VERTEBRA-CIRCLES"));

    SpinalOpenBook nonorientable = good;
    nonorientable.papers[0].page = Surface::nonorientable(1, 1);
    CHECK(validate(nonorientable).contains("PAGE-SURFACE"));

    SpinalOpenBook closed_page = good;
    closed_page.papers[1].page = Surface::orientable(1, 0);
    closed_page.papers[1].sigma.clear();
    closed_page.papers[1].orbits.clear();
    CHECK(validate(closed_page).contains("PAGE-1"));

    SpinalOpenBook sigma = good;
    sigma.papers[0].sigma = {2};
    CHECK(validate(sigma).contains("SIGMA"));

    SpinalOpenBook orbit = testing::zoo_book("cb3.json");
    orbit.papers[0].orbits[0].labels.push_back(orbit.papers[0].orbits[1].labels.front());
    CHECK(validate(orbit).contains("ORBIT-CYCLE"));

    SpinalOpenBook twice = good;
    twice.papers[1].orbits[0].target = twice.papers[0].orbits[0].target;
    CHECK(validate(twice).contains("INC-1"));

    SpinalOpenBook torus = good;
    torus.boundary_tori.push_back({BoundaryTorusId{0}, 0});
    CHECK(validate(torus).contains("INC-2"));

    SpinalOpenBook missing = good;
    missing.papers[0].orbits[0].target = SpineCircleId{99};
    CHECK(validate(missing).contains("INC-3"));

    CHECK_THROWS_AS(require_valid(missing), InvalidBook);
  }

  TEST_CASE("generalized books may have closed pages") {
    SpinalOpenBook sob = testing::zoo_book("ob_s3.json");
    PaperComponent closed;
    closed.id = PaperId{7};
    closed.page = Surface::orientable(2, 0);
    sob.papers.push_back(closed);
    CHECK(validate(sob).contains("PAGE-1"));
    sob.generalized = true;
    CHECK(validate(sob).ok());
  }

  TEST_CASE("permutation cycles start at their minimum") {
    const auto cycles = permutation_cycles({3, 1, 2, 5, 4, 6});
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0] == std::vector<int>{1, 3, 2});
    CHECK(cycles[1] == std::vector<int>{4, 5});
    CHECK(cycles[2] == std::vector<int>{6});
    CHECK(is_permutation_of({2, 1, 3}, 3));
    CHECK_FALSE(is_permutation_of({2, 2, 3}, 3));
    CHECK_FALSE(is_permutation_of({1, 2}, 3));
  }

  TEST_CASE("multiplicity, adjacency and components") {
    const SpinalOpenBook cb3 = testing::zoo_book("cb3.json");
    CHECK(connected_components(cb3) == 1);
    const Adjacency adj = adjacency(cb3);
    CHECK(adj.vertebrae.size() == cb3.vertebrae.size());
    CHECK(adj.papers.size() == cb3.papers.size());
    for (const auto& e : adj.edges) CHECK(e.multiplicity == multiplicity(cb3, e.circle));
    CHECK(interior_paper_components(cb3).size() == cb3.papers.size());
  }

  TEST_CASE("random books are valid and their incidences are consistent") {
    testing::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      const SpinalOpenBook sob = testing::random_book(rng);
      CAPTURE(i);
      REQUIRE(validate(sob).ok());
      int orbits = 0;
      int circles = 0;
      for (const auto& p : sob.papers) orbits += static_cast<int>(p.orbits.size());
      for (const auto& v : sob.vertebrae) circles += static_cast<int>(v.circles.size());
      CHECK(orbits == circles + static_cast<int>(sob.boundary_tori.size()));
      int chi = 0;
      for (const auto& v : sob.vertebrae) chi += v.surface.euler();
      CHECK(spine_euler(sob) == chi);
    }
  }
}
