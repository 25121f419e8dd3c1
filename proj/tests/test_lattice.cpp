#include <doctest.h>

#include <set>

#include "fcadi/lattice.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using fcadi::Bitset;
using fcadi::ConceptLattice;
using fcadi::FormalContext;
using fcadi::InputError;
using fcadi::Lattice;
using fcadi::StructureError;

namespace {

Bitset concept_bits(const ConceptLattice& lat, std::initializer_list<int> idx) {
  Bitset b(lat.concepts.size());
  for (int i : idx) b.set(i);
  return b;
}

int concept_of(const ConceptLattice& lat, const std::vector<std::string>& extent) {
  int idx = lat.index_of_extent(lat.context.object_set(extent));
  REQUIRE(idx >= 0);
  return idx;
}

}  // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("concept counts") {
  CHECK(fcadi::enumerate_concepts(fixtures::load("fig2.cxt")).concepts.size() == 8);
  CHECK(fcadi::enumerate_concepts(fixtures::load("fig3.cxt")).concepts.size() == 9);
  CHECK(fcadi::enumerate_concepts(fixtures::load("fig4.cxt")).concepts.size() == 9);
  CHECK(fcadi::enumerate_concepts(fixtures::load("fig5.cxt")).concepts.size() == 12);
  CHECK(fcadi::enumerate_concepts(fixtures::load("fig1.cxt")).concepts.size() == 11);
  CHECK(fcadi::enumerate_concepts(fixtures::load("empty.cxt")).concepts.size() == 1);
  CHECK(fcadi::enumerate_concepts(fixtures::load("chain3.cxt")).concepts.size() == 3);
}

TEST_CASE("enumeration agrees with the powerset oracle") {
  std::mt19937_64 rng(3);
  std::vector<FormalContext> pool = fixtures::all_small_contexts(3, 3);
  for (int t = 0; t < 60; ++t) pool.push_back(fixtures::random_context(rng, 5, 4, 0.4));
  for (const FormalContext& ctx : pool) {
    ConceptLattice lat = fcadi::enumerate_concepts(ctx);
    oracle::Concepts cs = oracle::enumerate(ctx);
    REQUIRE(lat.concepts.size() == cs.size());
    std::set<Bitset> got, want(cs.extents.begin(), cs.extents.end());
    for (const auto& c : lat.concepts) {
      REQUIRE(ctx.derive_objects(c.extent) == c.intent);
      REQUIRE(ctx.derive_attributes(c.intent) == c.extent);
      got.insert(c.extent);
    }
    REQUIRE(got == want);
  }
}

TEST_CASE("lectic order starts at the top and ends at the bottom") {
  ConceptLattice lat = fcadi::enumerate_concepts(fixtures::load("fig3.cxt"));
  CHECK(lat.order.top == 0);
  CHECK(lat.order.bottom == static_cast<int>(lat.concepts.size()) - 1);
  CHECK(lat.concepts.front().extent.count() == lat.context.object_count());
  CHECK(lat.concepts.back().intent.count() == lat.context.attribute_count());
}

TEST_CASE("join and meet") {
  ConceptLattice fig2 = fcadi::enumerate_concepts(fixtures::load("fig2.cxt"));
  SUBCASE("join of two object concepts") {
    int j = fig2.order.join(fig2.gamma("1"), fig2.gamma("2"));
    CHECK(j == fig2.mu("a"));
    CHECK(fig2.concepts[j].extent == fig2.context.object_set({"1", "2"}));
  }
  SUBCASE("join is idempotent") {
    for (std::size_t c = 0; c < fig2.concepts.size(); ++c) {
      Bitset single(fig2.concepts.size());
      single.set(c);
      CHECK(fig2.order.join_set(single) == static_cast<int>(c));
    }
  }
  SUBCASE("join in the 6x6 fixture") {
    ConceptLattice fig3 = fcadi::enumerate_concepts(fixtures::load("fig3.cxt"));
    int j = fig3.order.join(fig3.gamma("4"), fig3.gamma("5"));
    CHECK(fig3.concepts[j].extent == fig3.context.object_set({"4", "5", "6"}));
    CHECK(fig3.concepts[j].intent == fig3.context.attribute_set({"a", "b", "c"}));
  }
  SUBCASE("empty join and meet hit the bounds") {
    Bitset none(fig2.concepts.size());
    CHECK(fig2.order.join_set(none) == fig2.order.bottom);
    CHECK(fig2.order.meet_set(none) == fig2.order.top);
  }
}

TEST_CASE("lattice axioms on the fixtures") {
  for (const char* name : {"fig2.cxt", "fig4.cxt", "fig5.cxt", "fig1.cxt"}) {
    const Lattice& l = fcadi::enumerate_concepts(fixtures::load(name)).order;
    const int n = static_cast<int>(l.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        REQUIRE(l.join(a, b) == l.join(b, a));
        REQUIRE(l.meet(a, b) == l.meet(b, a));
        REQUIRE(l.join(a, l.meet(a, b)) == a);  // absorption
        REQUIRE(l.meet(a, l.join(a, b)) == a);
        for (int c = 0; c < n; ++c) {
          REQUIRE(l.join(a, l.join(b, c)) == l.join(l.join(a, b), c));
          REQUIRE(l.meet(a, l.meet(b, c)) == l.meet(l.meet(a, b), c));
        }
      }
    }
  }
}

TEST_CASE("filter, ideal and interval") {
  ConceptLattice fig2 = fcadi::enumerate_concepts(fixtures::load("fig2.cxt"));
  int g1 = fig2.gamma("1");
  int mua = fig2.mu("a");
  int bot = fig2.order.bottom;

  CHECK(fig2.order.ideal_set(mua) == concept_bits(fig2, {bot, g1, fig2.gamma("2"), mua}));
  CHECK(fig2.order.interval_set(g1, g1) == concept_bits(fig2, {g1}));
  CHECK(fig2.order.interval_set(g1, mua) == concept_bits(fig2, {g1, mua}));
  CHECK_THROWS_AS((void)fig2.order.interval_set(mua, g1), InputError);
  CHECK_THROWS_AS((void)fcadi::make_interval(fig2.order, fig2.gamma("1"), fig2.gamma("2")),
                  InputError);

  // order, extents and intents line up
  for (std::size_t a = 0; a < fig2.concepts.size(); ++a) {
    for (std::size_t b = 0; b < fig2.concepts.size(); ++b) {
      bool ext = fig2.concepts[a].extent.is_subset_of(fig2.concepts[b].extent);
      bool in = fig2.concepts[b].intent.is_subset_of(fig2.concepts[a].intent);
      REQUIRE(fig2.order.leq(static_cast<int>(a), static_cast<int>(b)) == ext);
      REQUIRE(ext == in);
    }
  }
}

TEST_CASE("object and attribute concepts") {
  ConceptLattice fig2 = fcadi::enumerate_concepts(fixtures::load("fig2.cxt"));
  CHECK(fig2.concepts[fig2.gamma("1")].extent == fig2.context.object_set({"1"}));
  CHECK(fig2.concepts[fig2.gamma("1")].intent == fig2.context.attribute_set({"a", "b"}));

  ConceptLattice fig3 = fcadi::enumerate_concepts(fixtures::load("fig3.cxt"));
  CHECK(fig3.concepts[fig3.mu("b")].extent == fig3.context.object_set({"2", "4", "5", "6"}));

  // a full column's attribute concept is the top
  FormalContext full = FormalContext::from_labels({"1", "2"}, {"a", "b"},
                                                  {{"1", "a"}, {"2", "a"}, {"2", "b"}});
  ConceptLattice lat = fcadi::enumerate_concepts(full);
  CHECK(lat.mu("a") == lat.order.top);

  CHECK_THROWS_AS((void)fig2.gamma("9"), InputError);
}

TEST_CASE("lower and upper star") {
  ConceptLattice fig2 = fcadi::enumerate_concepts(fixtures::load("fig2.cxt"));
  CHECK(fig2.order.lower_star(fig2.gamma("1")) == fig2.order.bottom);
  CHECK(fig2.order.upper_star(fig2.order.top) == fig2.order.top);
  CHECK(fig2.order.lower_star(fig2.order.bottom) == fig2.order.bottom);

  ConceptLattice fig3 = fcadi::enumerate_concepts(fixtures::load("fig3.cxt"));
  int mid = concept_of(fig3, {"4", "5", "6"});
  CHECK(fig3.order.upper_star(fig3.mu("b")) == fig3.order.top);
  CHECK(fig3.order.lower_star(fig3.mu("b")) == mid);
}

TEST_CASE("irreducibility") {
  ConceptLattice fig2 = fcadi::enumerate_concepts(fixtures::load("fig2.cxt"));
  CHECK(fig2.order.sup_irreducible(fig2.gamma("1")));
  CHECK_FALSE(fig2.order.doubly_irreducible(fig2.gamma("1")));  // two upper covers
  CHECK_FALSE(fig2.order.sup_irreducible(fig2.order.bottom));
  CHECK_FALSE(fig2.order.inf_irreducible(fig2.order.top));

  ConceptLattice chain = fcadi::enumerate_concepts(fixtures::load("chain3.cxt"));
  REQUIRE(chain.concepts.size() == 3);
  int mid = 1;  // lectic order: top, middle, bottom
  CHECK(chain.order.doubly_irreducible(mid));

  ConceptLattice fig4 = fcadi::enumerate_concepts(fixtures::load("fig4.cxt"));
  CHECK_FALSE(fig4.order.doubly_irreducible(concept_of(fig4, {"3"})));
  CHECK_FALSE(fig4.order.doubly_irreducible(concept_of(fig4, {"2", "3", "4"})));
}

TEST_CASE("concepts are generated by object and attribute concepts") {
  for (const char* name : {"fig2.cxt", "fig3.cxt", "fig4.cxt", "fig1.cxt"}) {
    ConceptLattice lat = fcadi::enumerate_concepts(fixtures::load(name));
    for (std::size_t c = 0; c < lat.concepts.size(); ++c) {
      Bitset objs(lat.concepts.size()), attrs(lat.concepts.size());
      for (std::size_t g = 0; g < lat.context.object_count(); ++g) {
        if (lat.order.leq(lat.object_concept[g], static_cast<int>(c))) {
          objs.set(lat.object_concept[g]);
        }
      }
      for (std::size_t m = 0; m < lat.context.attribute_count(); ++m) {
        if (lat.order.leq(static_cast<int>(c), lat.attribute_concept[m])) {
          attrs.set(lat.attribute_concept[m]);
        }
      }
      REQUIRE(lat.order.join_set(objs) == static_cast<int>(c));
      REQUIRE(lat.order.meet_set(attrs) == static_cast<int>(c));
    }
  }
}

TEST_CASE("primality oracles") {
  ConceptLattice fig2 = fcadi::enumerate_concepts(fixtures::load("fig2.cxt"));
  SUBCASE("sup-prime in an ideal") {
    CHECK(fig2.order.sup_prime_in(fig2.gamma("1"), fig2.order.ideal_set(fig2.mu("a"))));
  }
  SUBCASE("the bottom is sup-prime in any ideal") {
    for (std::size_t c = 0; c < fig2.concepts.size(); ++c) {
      CHECK(fig2.order.sup_prime_in(fig2.order.bottom, fig2.order.ideal_set(static_cast<int>(c))));
    }
  }
  SUBCASE("failing conjuncts in the 6x6 fixture") {
    ConceptLattice fig3 = fcadi::enumerate_concepts(fixtures::load("fig3.cxt"));
    int g5 = fig3.gamma("5");
    int mb = fig3.mu("b");
    bool inf_side = fig3.order.inf_prime_in(mb, fig3.order.filter_set(g5));
    bool sup_side = fig3.order.sup_prime_in(g5, fig3.order.ideal_set(mb));
    CHECK_FALSE(inf_side);
    CHECK_FALSE((inf_side && sup_side));
    oracle::Concepts cs = oracle::enumerate(fig3.context);
    int ou = cs.index_of(fig3.concepts[g5].extent);
    int ov = cs.index_of(fig3.concepts[mb].extent);
    CHECK(cs.inf_prime_in(ov, cs.filter(ou)) == inf_side);
    CHECK(cs.sup_prime_in(ou, cs.ideal(ov)) == sup_side);
  }
  SUBCASE("carriers are validated") {
    Bitset bad(fig2.concepts.size());
    bad.set(fig2.gamma("1"));
    bad.set(fig2.gamma("2"));  // join μa is missing
    CHECK_THROWS_AS((void)fig2.order.sup_prime_in(fig2.gamma("1"), bad), InputError);
    Bitset without(fig2.concepts.size());
    without.set(fig2.order.top);
    CHECK_THROWS_AS((void)fig2.order.sup_prime_in(fig2.gamma("1"), without), InputError);
  }
  SUBCASE("prime implies irreducible away from the bounds") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
      FormalContext ctx = fixtures::random_context(rng, 4, 4, 0.5);
      ConceptLattice lat = fcadi::enumerate_concepts(ctx);
      Bitset all = fcadi::full_set(lat.concepts.size());
      for (std::size_t c = 0; c < lat.concepts.size(); ++c) {
        int ci = static_cast<int>(c);
        if (ci != lat.order.bottom && lat.order.sup_prime_in(ci, all)) {
          REQUIRE(lat.order.sup_irreducible(ci));
        }
        if (ci != lat.order.top && lat.order.inf_prime_in(ci, all)) {
          REQUIRE(lat.order.inf_irreducible(ci));
        }
      }
    }
  }
}

TEST_CASE("lattice construction and validation") {
  SUBCASE("covers of a diamond") {
    Lattice l = Lattice::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(l.bottom == 0);
    CHECK(l.top == 3);
    CHECK(l.join(1, 2) == 3);
    CHECK(l.meet(1, 2) == 0);
  }
  SUBCASE("two maximal elements are refused") {
    std::vector<Bitset> up(2, Bitset(2));
    up[0].set(0);
    up[1].set(1);
    CHECK_THROWS_AS((void)Lattice::from_order(std::move(up)), StructureError);
  }
  SUBCASE("a hexagon without a join is refused") {
    // two incomparable pairs over a shared bottom and two maximal elements
    CHECK_THROWS_AS((void)Lattice::from_covers(
                        6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}}),
                    StructureError);
  }
  SUBCASE("fixture Hasse diagrams validate") {
    CHECK(fixtures::lattice11().size() == 11);
    CHECK(fixtures::lattice12().size() == 12);
  }
}

TEST_CASE("standard context") {
  SUBCASE("two-element chain") {
    Lattice chain2 = Lattice::from_covers(2, {{0, 1}});
    fcadi::StandardContext sc = fcadi::standard_context(chain2);
    CHECK(sc.context.object_count() == 1);
    CHECK(sc.context.attribute_count() == 1);
    CHECK(sc.context.incidence_pairs().empty());
    CHECK(fcadi::enumerate_concepts(sc.context).concepts.size() == 2);
  }
  SUBCASE("the 12-element lattice yields the 6x4 fixture") {
    std::vector<std::string> labels;
    for (int i = 1; i <= 12; ++i) labels.push_back(std::to_string(i));
    fcadi::StandardContext sc = fcadi::standard_context(fixtures::lattice12(), labels);
    FormalContext fig5 = fixtures::load("fig5.cxt");
    CHECK(sc.context.objects == fig5.objects);
    CHECK(sc.context.attributes == fig5.attributes);
    CHECK(sc.context.rows == fig5.rows);
  }
  SUBCASE("the 3x3 fixture reproduces itself up to labels") {
    ConceptLattice fig2 = fcadi::enumerate_concepts(fixtures::load("fig2.cxt"));
    fcadi::StandardContext sc = fcadi::standard_context(fig2.order);
    REQUIRE(sc.context.object_count() == 3);
    REQUIRE(sc.context.attribute_count() == 3);
    // object i of the standard context is γ(objects[i]) and the incidence
    // pattern matches the original one under that relabeling
    for (std::size_t g = 0; g < 3; ++g) {
      int elem = sc.object_elements[g];
      auto ext = fcadi::set_bits(fig2.concepts[elem].extent);
      REQUIRE(ext.size() == 1);
      for (std::size_t m = 0; m < 3; ++m) {
        int melem = sc.attribute_elements[m];
        auto in = fcadi::set_bits(fig2.concepts[melem].intent);
        REQUIRE(in.size() == 1);
        CHECK(sc.context.incident(g, m) == fig2.context.incident(ext[0], in[0]));
      }
    }
  }
  SUBCASE("the lattice of the standard context is isomorphic to the input") {
    std::vector<Lattice> pool = {fixtures::lattice11(), fixtures::lattice12(),
                                 Lattice::from_covers(2, {{0, 1}}),
                                 Lattice::from_covers(1, {})};
    for (const char* name : {"fig2.cxt", "fig3.cxt", "fig4.cxt"}) {
      pool.push_back(fcadi::enumerate_concepts(fixtures::load(name)).order);
    }
    std::mt19937_64 rng(17);
    while (pool.size() < 24) {
      Lattice l = fcadi::enumerate_concepts(fixtures::random_context(rng, 4, 4, 0.5)).order;
      if (l.size() <= 16) pool.push_back(std::move(l));
    }
    for (const Lattice& l : pool) {
      fcadi::StandardContext sc = fcadi::standard_context(l);
      ConceptLattice b = fcadi::enumerate_concepts(sc.context);
      REQUIRE(b.concepts.size() == l.size());
      // canonical matching: concept -> join of its extent's irreducibles
      std::vector<int> to_elem(b.concepts.size());
      std::vector<bool> hit(l.size(), false);
      for (std::size_t c = 0; c < b.concepts.size(); ++c) {
        int e = fcadi::standard_concept_element(l, sc, b.concepts[c]);
        to_elem[c] = e;
        REQUIRE_FALSE(hit[e]);
        hit[e] = true;
      }
      for (std::size_t x = 0; x < b.concepts.size(); ++x) {
        for (std::size_t y = 0; y < b.concepts.size(); ++y) {
          REQUIRE(b.order.leq(static_cast<int>(x), static_cast<int>(y)) ==
                  l.leq(to_elem[x], to_elem[y]));
        }
      }
    }
  }
  SUBCASE("the empty lattice is refused") {
    Lattice none;
    none.finish(false);
    CHECK_THROWS_AS((void)fcadi::standard_context(none), StructureError);
  }
}

TEST_CASE("dot export") {
  ConceptLattice fig2 = fcadi::enumerate_concepts(fixtures::load("fig2.cxt"));
  std::string plain = fcadi::to_dot(fig2);
  CHECK(std::count(plain.begin(), plain.end(), '[') >= 8);
  CHECK(plain.find("fillcolor") == std::string::npos);

  Bitset mark = fig2.order.interval_set(fig2.gamma("1"), fig2.mu("a"));
  std::string marked = fcadi::to_dot(fig2, &mark);
  std::size_t fills = 0;
  for (std::size_t at = marked.find("fillcolor"); at != std::string::npos;
       at = marked.find("fillcolor", at + 1)) {
    ++fills;
  }
  CHECK(fills == 2);
  // edge count equals the number of cover pairs of the 8-element lattice
  std::size_t edges = 0;
  for (std::size_t at = marked.find("->"); at != std::string::npos;
       at = marked.find("->", at + 1)) {
    ++edges;
  }
  CHECK(edges == 12);
}

TEST_SUITE_END();
