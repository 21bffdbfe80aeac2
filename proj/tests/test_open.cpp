#include "doctest.h"
#include "fixtures.hpp"
#include "opn/generate.hpp"
#include "opn/laws.hpp"
#include "opn/open.hpp"

using namespace opn;
using namespace fixtures;

TEST_CASE("open net construction") {
  auto p = intro_p();
  CHECK(p.inputs()->size() == 3);
  CHECK(p.input_map().apply("3") == "B");
  CHECK(p.output_map().apply("5") == "D");
  CHECK(lax_q().inputs()->atoms() == std::vector<Atom>{"2", "3", "4"});
  CHECK_THROWS(OpenPetriNet::make(p.net(), {{"1", "Z"}}, {}));
}

TEST_CASE("identity open nets") {
  auto u = identity_open(empty_carrier());
  CHECK(u.net().num_places() == 0);
  auto one = identity_open(make_carrier({"1"}));
  CHECK(one.net().num_places() == 1);
  CHECK(one.net().num_transitions() == 0);
  CHECK(one.input_map() == one.output_map());
}

TEST_CASE("composite from the introduction") {
  auto qp = compose_open(intro_p(), intro_q());
  const auto& net = qp.net();
  CHECK(net.num_places() == 4);
  CHECK(net.num_transitions() == 3);
  auto alpha_target = net.target("α").to_counts();
  REQUIRE(alpha_target.size() == 1);
  CHECK(alpha_target.begin()->second == 2);
  CHECK(net.source("β").to_counts() == AtomCounts{{alpha_target.begin()->first, 1}});
  CHECK(*qp.inputs() == *intro_p().inputs());
  CHECK(*qp.outputs() == *intro_q().outputs());
  CHECK(qp.net().places()->atoms() == std::vector<Atom>{"A", "B", "C", "F"});

  auto iso = iso_open(qp, intro_composite_drawn());
  CHECK(iso.status == IsoSearch::Status::found);
  REQUIRE(iso.iso);
  CHECK(iso.iso->is_invertible());
}

TEST_CASE("composite of the laxness example") {
  auto qp = compose_open(lax_p(), lax_q());
  CHECK(qp.net().places()->atoms() == std::vector<Atom>{"A", "B", "C", "D", "E"});
  CHECK(qp.net().transitions()->atoms() == std::vector<Atom>{"α", "β", "γ", "δ"});
  CHECK(qp.net().source("γ") == qp.net().marking({{"B", 1}}));
  CHECK(qp.net().target("δ") == qp.net().marking({{"E", 1}}));
}

TEST_CASE("composition requires matching boundaries") {
  CHECK_THROWS(compose_open(intro_p(), intro_p()));
}

TEST_CASE("tensor of the introduction nets") {
  auto t = tensor_open(intro_p(), intro_q());
  CHECK(t.net().num_places() == 6);
  CHECK(t.net().num_transitions() == 3);
  CHECK(t.inputs()->size() == 5);
  CHECK(t.outputs()->size() == 3);
  auto unit = OpenPetriNet();
  auto with_unit = tensor_open(intro_p(), unit);
  CHECK(iso_open(with_unit, intro_p()).status == IsoSearch::Status::found);
  CHECK(iso_open(tensor_open(intro_p(), intro_q()), tensor_open(intro_q(), intro_p())).status ==
        IsoSearch::Status::found);
}

TEST_CASE("iso search") {
  auto p = intro_p();
  auto self = iso_open(p, p);
  REQUIRE(self.iso);
  CHECK(*self.iso == OpenNetMorphism::identity(p));
  CHECK(iso_open(p, intro_q()).status == IsoSearch::Status::absent);
  CHECK(iso_open(intro_composite_drawn(), compose_open(intro_p(), intro_q()), 1).status ==
        IsoSearch::Status::aborted);
}

TEST_CASE("2-morphisms") {
  auto id = OpenNetMorphism::identity(intro_p());
  CHECK(id.is_globular());
  auto simp = simplification();
  CHECK(simp.on_inputs().apply("1′") == "1");
  // breaking the output square
  auto src = simple();
  auto two = make_carrier({"2", "2b"});
  auto dst = OpenPetriNet::make(src.net(), {{"1", "A"}}, {{"2", "B"}, {"2b", "A"}});
  CHECK_THROWS_AS(OpenNetMorphism(src, dst, FinFunction::identity(src.inputs()),
                                  FinFunction::from_table(src.outputs(), two, {{"2", "2b"}}),
                                  PetriMorphism::identity(src.net())),
                  SquareViolation);
}

TEST_CASE("vertical composition") {
  auto simp = simplification();
  auto sect = simplification_section();
  CHECK(vcompose(simp, sect) == OpenNetMorphism::identity(simple()));
  CHECK(vcompose(simp, OpenNetMorphism::identity(primed())) == simp);
  CHECK(vcompose(OpenNetMorphism::identity(simple()), simp) == simp);
  CHECK_THROWS_AS(vcompose(sect, sect), EndpointMismatch);

  Rng rng(3);
  NetShape shape;
  for (int k = 0; k < 30; ++k) {
    auto a = random_chain(rng, shape, 1).front();
    auto f = random_square(rng, shape, a);
    auto g = random_square(rng, shape, f.target());
    auto h = random_square(rng, shape, g.target());
    CHECK(vcompose(h, vcompose(g, f)) == vcompose(vcompose(h, g), f));
  }
}

TEST_CASE("horizontal composition of squares") {
  auto p = intro_p();
  auto q = intro_q();
  auto ids = hcompose(OpenNetMorphism::identity(p), OpenNetMorphism::identity(q));
  CHECK(ids == OpenNetMorphism::identity(compose_open(p, q)));

  auto tail = identity_open(simple().outputs());
  auto sq = hcompose(simplification(), OpenNetMorphism::identity(tail));
  CHECK(sq.source() == compose_open(primed(), tail));
  CHECK(sq.target() == compose_open(simple(), tail));
  CHECK(sq.on_net().on_transitions().is_surjective());
  CHECK_FALSE(sq.on_net().on_places().is_injective());

  CHECK_THROWS(hcompose(simplification(), simplification()));
}

TEST_CASE("coherence isomorphisms") {
  auto p = intro_p();
  auto chain = std::vector<OpenPetriNet>{lax_p(), lax_q(), identity_open(lax_q().outputs())};
  auto [lhs, rhs] = coherence_sides(coherence::Associator{chain[0], chain[1], chain[2]});
  auto assoc = canonical_iso(lhs, rhs, coherence::Associator{chain[0], chain[1], chain[2]});
  CHECK(assoc.is_globular());
  CHECK(assoc.is_invertible());

  CHECK(check_unitors(p).passed);
  CHECK(check_symmetry(p, intro_q()).passed);
  CHECK(check_symmetry(p, p).passed);
  CHECK(check_triangle(intro_p(), intro_q()).passed);
  CHECK(check_pentagon(lax_p(), lax_q(), identity_open(lax_q().outputs()), identity_open(lax_q().outputs())).passed);

  CHECK_THROWS_AS(canonical_iso(p, p, coherence::Symmetry{p, intro_q()}), EndpointMismatch);
}

TEST_CASE("law suite on random instances") {
  ExplorationCaps caps{4, 12, 5000};
  auto report = run_law_suite(5, 10, caps);
  for (const auto& t : report.tallies) {
    INFO(t.law << ": " << t.first_failure);
    CHECK(t.failures == 0);
    CHECK(t.instances == 10);
  }
}
