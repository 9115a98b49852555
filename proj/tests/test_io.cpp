#include <doctest.h>

#include "spinal/io.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace spinal;

TEST_SUITE("io") {
  TEST_CASE("zoo entries round-trip to an identical canonical form") {
    for (const char* name : {"ob_s3.json", "ot.json", "cb3.json"}) {
      CAPTURE(name);
      const SpinalOpenBook sob = testing::zoo_book(name);
      const SpinalOpenBook canon = canonicalize(sob);
      const std::string text = dump(to_json(canon));
      const SpinalOpenBook again = canonicalize(book_from_json(parse_json(text)));
      CHECK(again == canon);
      CHECK(dump(to_json(again)) == text);
    }
    for (const char* name : {"cb3_multicurve.json", "mobius_multicurve.json", "sym2_multicurve.json",
                             "nonorientable2_multicurve.json"}) {
      CAPTURE(name);
      const MulticurveData mc = testing::zoo_multicurve(name);
      CHECK(multicurve_from_json(to_json(mc)) == mc);
    }
    for (const char* name : {"lf_disk_annulus.json", "lf_annulus_annulus.json"}) {
      const LefschetzDescriptor lf = testing::zoo_descriptor(name);
      CHECK(descriptor_from_json(to_json(lf)) == lf);
    }
  }

  TEST_CASE("random books round-trip and canonicalization is idempotent") {
    testing::Rng rng(4);
    for (int i = 0; i < 100; ++i) {
      const SpinalOpenBook sob = testing::random_book(rng);
      CAPTURE(i);
      CHECK(book_from_json(to_json(sob)) == sob);
      const SpinalOpenBook canon = canonicalize(sob);
      CHECK(validate(canon).ok());
      CHECK(canonicalize(canon) == canon);
    }
  }

  TEST_CASE("random multicurves and descriptors round-trip") {
    testing::Rng rng(6);
    for (int i = 0; i < 30; ++i) {
      const MulticurveData mc = testing::random_multicurve(rng);
      CHECK(multicurve_from_json(to_json(mc)) == mc);
      const LefschetzDescriptor lf = testing::random_descriptor(rng);
      CHECK(descriptor_from_json(to_json(lf)) == lf);
    }
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS(parse_json("{\"vertebrae\": ["));
    CHECK_THROWS_AS(book_from_json(parse_json("{\"vertebrae\": 3}")), ParseError);
    CHECK_THROWS_AS(surface_from_json(parse_json("{\"genus\": 1}")), ParseError);
    CHECK_THROWS(read_json_file("no/such/file.json"));
  }

  TEST_CASE("exactness flags from json") {
    const SpinalOpenBook cb3 = testing::zoo_book("cb3.json");
    const ExactnessFlags exact = flags_from_json(parse_json("{\"default\": \"Exact\"}"), cb3);
    for (const auto& v : cb3.vertebrae) CHECK(exact.at(v.id) == Exactness::Exact);
    const ExactnessFlags mixed =
        flags_from_json(parse_json("{\"default\": \"disk-rule\", \"vertebrae\": {\"1\": \"NotExact\"}}"), cb3);
    CHECK(mixed.at(VertebraId{1}) == Exactness::NotExact);
    CHECK_THROWS_AS(flags_from_json(parse_json("{\"default\": \"maybe\"}"), cb3), ParseError);
    CHECK_THROWS_AS(flags_from_json(parse_json("{\"vertebrae\": {\"x\": \"Exact\"}}"), cb3), ParseError);
  }

  TEST_CASE("verdict json carries the citation") {
    const SpinalOpenBook ot = testing::zoo_book("ot.json");
    const Json j = to_json(verdict(ot, ExactnessFlags::disk_rule(ot)));
    REQUIRE(j.is_array());
    for (const auto& v : j) {
      CHECK(v.contains("citation"));
      CHECK(v.contains("verdict"));
      CHECK(v["witness"]["order"] == 0);
    }
  }
}

TEST_SUITE("io") {
  TEST_CASE("every zoo entry reproduces its expected verdicts") {
    const auto entries = load_zoo(SPINAL_ZOO_DIR);
    CHECK(entries.size() >= 9);
    for (const auto& e : entries) {
      CAPTURE(e.name);
      CHECK_FALSE(e.citation.empty());
      CHECK(zoo_verdicts(e) == e.expected_verdicts);
      if (const auto* sob = std::get_if<SpinalOpenBook>(&e.data)) {
        const SpinalOpenBook canon = canonicalize(*sob);
        CHECK(canonicalize(book_from_json(parse_json(dump(to_json(canon))))) == canon);
      }
    }
  }
}
