#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "spinal/surgery.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace spinal;

namespace {

std::set<VertebraId> random_subset(testing::Rng& rng, const SpinalOpenBook& sob) {
  std::set<VertebraId> out;
  for (const auto& v : sob.vertebrae)
    if (std::bernoulli_distribution(0.4)(rng)) out.insert(v.id);
  return out;
}

}  // namespace

TEST_SUITE("surgery") {
  TEST_CASE("spine removal on the OB_S3 book closes the page") {
    const SpineRemoval r = spine_remove(testing::zoo_book("ob_s3.json"), {VertebraId{0}});
    CHECK(r.book.vertebrae.empty());
    CHECK(r.book.generalized);
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0] == kClosedPagesNote);
    CHECK(r.book.papers[0].page == Surface::orientable(0, 0));
    CHECK(r.record.euler_delta_pages == 1);
    CHECK(validate(r.book).ok());
  }

  TEST_CASE("spine removal bookkeeping and commutativity") {
    testing::Rng rng(21);
    for (int i = 0; i < 150; ++i) {
      const SpinalOpenBook sob = testing::random_book(rng);
      const std::set<VertebraId> a = random_subset(rng, sob);
      std::set<VertebraId> b;
      for (const auto& v : sob.vertebrae)
        if (!a.count(v.id) && std::bernoulli_distribution(0.5)(rng)) b.insert(v.id);
      CAPTURE(i);
      const SpineRemoval once = spine_remove(sob, a);
      REQUIRE(validate(once.book).ok());
      std::map<PaperId, int> capped;
      for (const auto& c : once.record.capped_orbits) {
        capped[c.paper] += c.cap_count;
        CHECK(c.cap_count == static_cast<int>(c.labels.size()));
      }
      for (const auto& p : sob.papers) {
        const PaperComponent* q = once.book.find_paper(p.id);
        REQUIRE(q != nullptr);
        CHECK(q->page.euler() == p.page.euler() + capped[p.id]);
      }
      CHECK(once.book.vertebrae.size() == sob.vertebrae.size() - a.size());

      std::set<VertebraId> both = a;
      both.insert(b.begin(), b.end());
      const SpinalOpenBook ab = spine_remove(once.book, b).book;
      const SpinalOpenBook ba = spine_remove(spine_remove(sob, b).book, a).book;
      const SpinalOpenBook joint = spine_remove(sob, both).book;
      CHECK(ab == joint);
      CHECK(ba == joint);
      CHECK(validate(joint).ok());
    }
  }

  TEST_CASE("blow-up turns disk vertebrae into boundary tori") {
    const SpinalOpenBook ob = testing::zoo_book("ob_s3.json");
    const SpinalOpenBook up = blow_up(ob, {VertebraId{0}});
    CHECK(up.vertebrae.empty());
    REQUIRE(up.boundary_tori.size() == 1);
    CHECK(up.boundary_tori[0].framing == 0);
    CHECK(up.papers[0].orbits[0].target == Target{BoundaryTorusId{0}});
    CHECK(validate(up).ok());
    try {
      blow_up(testing::zoo_book("ot.json"), {VertebraId{0}});
      CHECK(false);
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("blow-up requires disk vertebrae") != std::string::npos);
    }
  }

  TEST_CASE("binding sum lowers spine euler characteristic by two") {
    testing::Rng rng(8);
    for (int i = 0; i < 100; ++i) {
      const auto c = testing::random_binding_sum_case(rng);
      CAPTURE(i);
      REQUIRE(validate(c.book).ok());
      const SpinalOpenBook out = binding_sum(c.book, c.c1, c.c2);
      CHECK(validate(out).ok());
      CHECK(spine_euler(out) == spine_euler(c.book) - 2);
      CHECK(out.vertebrae.size() + 1 == c.book.vertebrae.size());
      CHECK(out.papers == c.book.papers);
    }
    const SpinalOpenBook ot = testing::zoo_book("ot.json");
    CHECK_THROWS_AS(binding_sum(ot, SpineCircleId{0}, SpineCircleId{1}), PreconditionError);
  }

  TEST_CASE("fiber sum of pages") {
    testing::Rng rng(9);
    for (int i = 0; i < 100; ++i) {
      const auto c = testing::random_fiber_sum_case(rng);
      CAPTURE(i);
      REQUIRE(validate(c.book).ok());
      const int b = c.book.find_paper(c.j0)->page.boundary();
      for (FiberSumOrder order : {FiberSumOrder::FirstThenSecond, FiberSumOrder::SecondThenFirst}) {
        const SpinalOpenBook out = fiber_sum_pages(c.book, c.j0, c.j1, c.ident, order);
        CHECK(validate(out).ok());
        CHECK(spine_euler(out) == spine_euler(c.book) - b);
        CHECK(out.papers.size() + 1 == c.book.papers.size());
        const PaperComponent* merged = out.find_paper(std::min(c.j0, c.j1));
        REQUIRE(merged != nullptr);
        CHECK(merged->page == c.book.find_paper(c.j0)->page);
      }
    }
  }

  TEST_CASE("fiber sum of two OB_S3 copies") {
    SpinalOpenBook two;
    two.vertebrae = {{VertebraId{0}, Surface::disk(), {SpineCircleId{0}}},
                     {VertebraId{1}, Surface::disk(), {SpineCircleId{1}}}};
    two.papers = {{PaperId{0}, Surface::disk(), {1}, {{{1}, SpineCircleId{0}}}},
                  {PaperId{1}, Surface::disk(), {1}, {{{1}, SpineCircleId{1}}}}};
    const SpinalOpenBook out = fiber_sum_pages(two, PaperId{0}, PaperId{1}, {1});
    CHECK(validate(out).ok());
    REQUIRE(out.vertebrae.size() == 1);
    CHECK(out.vertebrae[0].surface == Surface::disk());
    CHECK(out.papers.size() == 1);
    CHECK(spine_euler(out) == 1);
  }

  TEST_CASE("fiber sum preconditions") {
    const SpinalOpenBook ot = testing::zoo_book("ot.json");
    CHECK_THROWS_AS(fiber_sum_pages(ot, PaperId{0}, PaperId{0}, {1}), PreconditionError);
    CHECK_THROWS_AS(fiber_sum_pages(ot, PaperId{0}, PaperId{1}, {1}), PreconditionError);
    const SpinalOpenBook cb3 = testing::zoo_book("cb3.json");
    CHECK_THROWS_AS(fiber_sum_pages(cb3, PaperId{0}, PaperId{1}, {1, 1}), PreconditionError);
  }
}
