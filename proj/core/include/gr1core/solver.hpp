#pragma once

#include "gr1core/game.hpp"
#include "gr1core/reduction.hpp"

namespace gr1core {

/// Winning region of the system: the greatest fixed point
///
///   W = nuZ. AND_j muY. OR_i nuX. [ (Jsys_j & cpre(Z)) | cpre(Y)
///                                   | (!Jenv_i & cpre(X)) ]
///
/// computed exactly, with round iteration to set equality. An empty justice
/// list on either side is treated as the single justice "all states": with
/// no justice guarantees the winning condition holds on every infinite play
/// regardless of the justice assumptions.
StateSet winning_region(const GameStructure& g);

/// True iff every environment initial choice in theta_e can be extended by
/// the system to a full state in theta_s that lies inside w. Implemented
/// with a constant number of set operations (intersection, projection,
/// containment).
bool sys_win(const StateSet& theta_e, const StateSet& theta_s,
             const StateSet& w, const StateSpace& space);

/// Projects the problem to the given element IDs and checks GR(1)
/// realizability: for all initial environment choices the system can enter
/// a winning state.
bool is_realizable(const Gr1Problem& problem, const ElementSet& asm_ids,
                   const ElementSet& gar_ids);

}  // namespace gr1core
