#pragma once

// Small nets shared by the test suites.

#include "opn/open.hpp"

namespace fixtures {

using namespace opn;

// α: A+B → C+D, X = {1,2,3}, Y = {4,5}.
inline OpenPetriNet intro_p() {
  auto net = PetriNet::make({"α"}, {"A", "B", "C", "D"}, {{"α", {{"A", 1}, {"B", 1}}}},
                            {{"α", {{"C", 1}, {"D", 1}}}});
  return OpenPetriNet::make(net, {{"1", "A"}, {"2", "B"}, {"3", "B"}}, {{"4", "C"}, {"5", "D"}});
}

// β: E → F, γ: F → E, Y = {4,5} both onto E, Z = {6}.
inline OpenPetriNet intro_q() {
  auto net = PetriNet::make({"β", "γ"}, {"E", "F"}, {{"β", {{"E", 1}}}, {"γ", {{"F", 1}}}},
                            {{"β", {{"F", 1}}}, {"γ", {{"E", 1}}}});
  return OpenPetriNet::make(net, {{"4", "E"}, {"5", "E"}}, {{"6", "F"}});
}

// The composite as drawn: α: A+B → 2C.
inline OpenPetriNet intro_composite_drawn() {
  auto net = PetriNet::make({"α", "β", "γ"}, {"A", "B", "C", "F"},
                            {{"α", {{"A", 1}, {"B", 1}}}, {"β", {{"C", 1}}}, {"γ", {{"F", 1}}}},
                            {{"α", {{"C", 2}}}, {"β", {{"F", 1}}}, {"γ", {{"C", 1}}}});
  return OpenPetriNet::make(net, {{"1", "A"}, {"2", "B"}, {"3", "B"}}, {{"6", "F"}});
}

// α: A → B, β: C → D, X = {1}, Y = {2,3,4}.
inline OpenPetriNet lax_p() {
  auto net = PetriNet::make({"α", "β"}, {"A", "B", "C", "D"}, {{"α", {{"A", 1}}}, {"β", {{"C", 1}}}},
                            {{"α", {{"B", 1}}}, {"β", {{"D", 1}}}});
  return OpenPetriNet::make(net, {{"1", "A"}}, {{"2", "B"}, {"3", "C"}, {"4", "D"}});
}

// γ: B → C, δ: D → E, Y = {2,3,4}, Z = {5}.
inline OpenPetriNet lax_q() {
  auto net = PetriNet::make({"γ", "δ"}, {"B", "C", "D", "E"}, {{"γ", {{"B", 1}}}, {"δ", {{"D", 1}}}},
                            {{"γ", {{"C", 1}}}, {"δ", {{"E", 1}}}});
  return OpenPetriNet::make(net, {{"2", "B"}, {"3", "C"}, {"4", "D"}}, {{"5", "E"}});
}

// Two parallel transitions α: A → B, α′: A′ → B, X = {1,1′}, Y = {2}.
inline OpenPetriNet primed() {
  auto net = PetriNet::make({"α", "α′"}, {"A", "A′", "B"}, {{"α", {{"A", 1}}}, {"α′", {{"A′", 1}}}},
                            {{"α", {{"B", 1}}}, {"α′", {{"B", 1}}}});
  return OpenPetriNet::make(net, {{"1", "A"}, {"1′", "A′"}}, {{"2", "B"}});
}

// α: A → B, X = {1}, Y = {2}.
inline OpenPetriNet simple() {
  auto net = PetriNet::make({"α"}, {"A", "B"}, {{"α", {{"A", 1}}}}, {{"α", {{"B", 1}}}});
  return OpenPetriNet::make(net, {{"1", "A"}}, {{"2", "B"}});
}

inline OpenNetMorphism simplification() {
  auto src = primed();
  auto dst = simple();
  auto& sn = src.net();
  auto& dn = dst.net();
  return OpenNetMorphism(src, dst, FinFunction::from_table(src.inputs(), dst.inputs(), {{"1", "1"}, {"1′", "1"}}),
                         FinFunction::identity(dst.outputs()),
                         PetriMorphism(sn, dn,
                                       FinFunction::from_table(sn.transitions(), dn.transitions(),
                                                               {{"α", "α"}, {"α′", "α"}}),
                                       FinFunction::from_table(sn.places(), dn.places(),
                                                               {{"A", "A"}, {"A′", "A"}, {"B", "B"}})));
}

inline OpenNetMorphism simplification_section() {
  auto src = simple();
  auto dst = primed();
  auto& sn = src.net();
  auto& dn = dst.net();
  return OpenNetMorphism(src, dst, FinFunction::from_table(src.inputs(), dst.inputs(), {{"1", "1"}}),
                         FinFunction::identity(dst.outputs()),
                         PetriMorphism(sn, dn, FinFunction::from_table(sn.transitions(), dn.transitions(), {{"α", "α"}}),
                                       FinFunction::from_table(sn.places(), dn.places(), {{"A", "A"}, {"B", "B"}})));
}

inline Multiset ms(const CarrierPtr& carrier, const AtomCounts& counts) { return Multiset(carrier, counts); }

}  // namespace fixtures
