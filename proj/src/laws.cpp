#include "opn/laws.hpp"

#include <algorithm>

namespace opn {

namespace {

LawResult fail(LawResult r, std::string why) {
  r.passed = false;
  r.detail = std::move(why);
  return r;
}

template <class F>
LawResult guarded(std::string law, F&& body) {
  LawResult r{std::move(law), true, {}};
  try {
    if (auto why = body(); !why.empty()) return fail(std::move(r), std::move(why));
  } catch (const std::exception& e) {
    return fail(std::move(r), std::string("exception: ") + e.what());
  }
  return r;
}

std::string check_invertible(const OpenNetMorphism& iso) {
  if (!iso.is_invertible()) return "comparison is not invertible";
  OpenNetMorphism inv = iso.inverse();
  if (!(vcompose(inv, iso) == OpenNetMorphism::identity(iso.source())))
    return "inverse ∘ iso is not the identity";
  if (!(vcompose(iso, inv) == OpenNetMorphism::identity(iso.target())))
    return "iso ∘ inverse is not the identity";
  return {};
}

OpenNetMorphism iso_for(const CoherenceCase& c) {
  auto [lhs, rhs] = coherence_sides(c);
  return canonical_iso(lhs, rhs, c);
}

OpenNetMorphism associator(const OpenPetriNet& p, const OpenPetriNet& q, const OpenPetriNet& r) {
  return iso_for(coherence::Associator{p, q, r});
}

}  // namespace

LawResult check_unitors(const OpenPetriNet& p) {
  return guarded("unitors", [&]() -> std::string {
    for (const auto& iso : {iso_for(coherence::LeftUnitor{p}), iso_for(coherence::RightUnitor{p})}) {
      if (!iso.is_globular()) return "unitor has non-identity boundary maps";
      if (auto why = check_invertible(iso); !why.empty()) return why;
    }
    return {};
  });
}

LawResult check_associator(const OpenPetriNet& p, const OpenPetriNet& q, const OpenPetriNet& r) {
  return guarded("associator", [&]() -> std::string {
    auto iso = associator(p, q, r);
    if (!iso.is_globular()) return "associator has non-identity boundary maps";
    return check_invertible(iso);
  });
}

LawResult check_pentagon(const OpenPetriNet& p, const OpenPetriNet& q, const OpenPetriNet& r,
                         const OpenPetriNet& s) {
  return guarded("pentagon", [&]() -> std::string {
    const OpenPetriNet pq = compose_open(p, q);
    const OpenPetriNet qr = compose_open(q, r);
    const OpenPetriNet rs = compose_open(r, s);
    // ((PQ)R)S ⇒ (PQ)(RS) ⇒ P(Q(RS))
    OpenNetMorphism top = vcompose(associator(p, q, rs), associator(pq, r, s));
    // ((PQ)R)S ⇒ (P(QR))S ⇒ P((QR)S) ⇒ P(Q(RS))
    OpenNetMorphism bottom =
        vcompose(hcompose(OpenNetMorphism::identity(p), associator(q, r, s)),
                 vcompose(associator(p, qr, s), hcompose(associator(p, q, r), OpenNetMorphism::identity(s))));
    if (!(top == bottom)) return "the two associator paths differ";
    return {};
  });
}

LawResult check_triangle(const OpenPetriNet& p, const OpenPetriNet& q) {
  return guarded("triangle", [&]() -> std::string {
    const OpenPetriNet unit = identity_open(p.outputs());
    OpenNetMorphism via_associator =
        vcompose(hcompose(OpenNetMorphism::identity(p), iso_for(coherence::LeftUnitor{q})), associator(p, unit, q));
    OpenNetMorphism via_right_unitor =
        hcompose(iso_for(coherence::RightUnitor{p}), OpenNetMorphism::identity(q));
    if (!(via_associator == via_right_unitor)) return "triangle does not commute";
    return {};
  });
}

LawResult check_interchange(Rng& rng, const NetShape& shape, const OpenPetriNet& p, const OpenPetriNet& q) {
  return guarded("interchange", [&]() -> std::string {
    auto [alpha, beta] = random_square_pair(rng, shape, p, q);
    auto [alpha2, beta2] = random_square_pair(rng, shape, alpha.target(), beta.target());
    OpenNetMorphism vertical_first = hcompose(vcompose(alpha2, alpha), vcompose(beta2, beta));
    OpenNetMorphism horizontal_first = vcompose(hcompose(alpha2, beta2), hcompose(alpha, beta));
    if (!(vertical_first == horizontal_first)) return "interchange law fails";
    return {};
  });
}

LawResult check_square_units(Rng& rng, const NetShape& shape, const OpenPetriNet& p) {
  return guarded("square units", [&]() -> std::string {
    OpenNetMorphism alpha = random_square(rng, shape, p);
    if (!(vcompose(alpha, OpenNetMorphism::identity(alpha.source())) == alpha) ||
        !(vcompose(OpenNetMorphism::identity(alpha.target()), alpha) == alpha))
      return "vertical identity law fails";
    OpenNetMorphism ids = hcompose(OpenNetMorphism::identity(p), OpenNetMorphism::identity(identity_open(p.outputs())));
    if (!(ids == OpenNetMorphism::identity(ids.source()))) return "horizontal composite of identities is not an identity";
    return {};
  });
}

LawResult check_symmetry(const OpenPetriNet& p1, const OpenPetriNet& p2) {
  return guarded("symmetry", [&]() -> std::string {
    OpenNetMorphism there = iso_for(coherence::Symmetry{p1, p2});
    OpenNetMorphism back = iso_for(coherence::Symmetry{p2, p1});
    if (!(vcompose(back, there) == OpenNetMorphism::identity(there.source())))
      return "braiding is not self-inverse";
    return check_invertible(there);
  });
}

LawResult check_lax_law(const OpenPetriNet& p, const OpenPetriNet& q, const ExplorationCaps& caps) {
  return guarded("lax composition", [&]() -> std::string {
    auto report = check_lax_composition(p, q, caps);
    if (!report.holds())
      return "pair (" + report.violations.front().first.to_string() + ", " +
             report.violations.front().second.to_string() + ") of ■Q∘■P missing from ■(Q⊙P)";
    return {};
  });
}

LawResult check_monoidal_law(const OpenPetriNet& p, const OpenPetriNet& p2, const ExplorationCaps& caps) {
  return guarded("monoidality", [&]() -> std::string {
    auto report = check_monoidality(p, p2, caps);
    if (report.equal) return {};
    const auto& pr = report.only_left.empty() ? report.only_right.front() : report.only_left.front();
    return "■(P⊗P') and ■P×■P' differ at (" + pr.first.to_string() + ", " + pr.second.to_string() + ")";
  });
}

LawResult check_identity_law(const CarrierPtr& boundary, const ExplorationCaps& caps) {
  return guarded("identity comparison", [&]() -> std::string {
    if (!check_identity_comparison(boundary, caps).equal) return "■(U_X) is not the identity relation";
    return {};
  });
}

LawResult check_square_semantics(const OpenNetMorphism& square, const ExplorationCaps& caps) {
  return guarded("square semantics", [&]() -> std::string {
    auto report = rel_map_included(square.on_inputs(), square.on_outputs(), reach_relation(square.source(), caps),
                                   reach_relation(square.target(), caps));
    if (report.included) return {};
    return "image of (" + report.counterexample->first.to_string() + ", " +
           report.counterexample->second.to_string() + ") missing from the target relation";
  });
}

bool LawSuiteReport::passed() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const LawTally& t) { return t.failures == 0; });
}

void LawSuiteReport::record(const LawResult& r) {
  auto it = std::find_if(tallies.begin(), tallies.end(), [&](const LawTally& t) { return t.law == r.law; });
  if (it == tallies.end()) {
    tallies.push_back({r.law, 0, 0, {}});
    it = tallies.end() - 1;
  }
  ++it->instances;
  if (!r.passed) {
    if (it->failures == 0) it->first_failure = r.detail;
    ++it->failures;
  }
}

LawSuiteReport run_law_suite(std::uint64_t seed, std::size_t instances, const ExplorationCaps& caps) {
  LawSuiteReport report;
  report.seed = seed;
  Rng rng(seed);
  NetShape shape;
  NetShape small = shape;
  small.max_places = 3;
  small.max_transitions = 2;
  small.max_boundary = 2;
  for (std::size_t k = 0; k < instances; ++k) {
    auto chain = random_chain(rng, shape, 4);
    report.record(check_unitors(chain[0]));
    report.record(check_associator(chain[0], chain[1], chain[2]));
    report.record(check_pentagon(chain[0], chain[1], chain[2], chain[3]));
    report.record(check_triangle(chain[0], chain[1]));
    report.record(check_interchange(rng, shape, chain[1], chain[2]));
    report.record(check_square_units(rng, shape, chain[3]));
    report.record(check_symmetry(chain[0], chain[2]));

    auto pair = random_chain(rng, small, 2);
    report.record(check_lax_law(pair[0], pair[1], caps));
    report.record(check_monoidal_law(pair[0], pair[1], caps));
    report.record(check_identity_law(pair[0].inputs(), caps));
    report.record(check_square_semantics(random_square(rng, small, pair[0]), caps));
  }
  return report;
}

LawSuiteReport run_law_suite_on(const std::vector<OpenPetriNet>& nets, const ExplorationCaps& caps) {
  LawSuiteReport report;
  for (const auto& p : nets) {
    report.record(check_unitors(p));
    report.record(check_identity_law(p.inputs(), caps));
  }
  for (const auto& p : nets)
    for (const auto& q : nets) {
      report.record(check_symmetry(p, q));
      report.record(check_monoidal_law(p, q, caps));
      if (!same_carrier(p.outputs(), q.inputs())) continue;
      report.record(check_lax_law(p, q, caps));
      report.record(check_triangle(p, q));
      for (const auto& r : nets)
        if (same_carrier(q.outputs(), r.inputs())) report.record(check_associator(p, q, r));
    }
  return report;
}

}  // namespace opn
