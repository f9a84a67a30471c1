#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coprimes/gf2poly.hpp"

namespace coprimes {

/// Record of one full run of Euclid's algorithm.
///
/// For coprime inputs the run's final division is of some remainder r by 1,
/// so the last quotient equals r and the terminal pair is (1, 0). Replaying
/// the quotients backward from final_pair reconstructs the inputs.
struct EuclidTrace {
    std::vector<Gf2Poly> quotients;          ///< division order, first quotient first
    std::pair<Gf2Poly, Gf2Poly> final_pair;  ///< (gcd, 0)
};

/// Runs Euclid's algorithm on (f, g), recording every quotient, until the
/// remainder vanishes. Requires g != 0 and degree(f) >= degree(g); callers
/// swap their pair first when needed.
EuclidTrace euclid_trace(const Gf2Poly& f, const Gf2Poly& g);

/// One backward step: (a, b) -> (q*a + b, a).
inline void dilcue_step(Gf2Poly& a, Gf2Poly& b, const Gf2Poly& q) {
    Gf2Poly next = q * a + b;
    b = std::move(a);
    a = std::move(next);
}

/// Replays Euclid's algorithm backward from `start`. The quotients are given
/// in division order and consumed from the back: the last recorded quotient
/// is applied first.
std::pair<Gf2Poly, Gf2Poly> dilcue_apply(std::pair<Gf2Poly, Gf2Poly> start,
                                         std::span<const Gf2Poly> quotients);

/// The involution between coprime and non-coprime pairs of one degree:
/// rerun the recorded quotients backward with the terminal remainder flipped
/// between 1 and 0. Requires degree(f) == degree(g) >= 1; constant terms are
/// unconstrained. Applying the map twice returns the original pair.
std::pair<Gf2Poly, Gf2Poly> bijection_flip(const Gf2Poly& f, const Gf2Poly& g);

/// Arrow-notation rendering of the Euclid run, one line per division:
/// "(<r_i>, <r_{i+1}>) --q=<quotient>--> (<r_{i+1}>, <r_{i+2}>)".
std::string render_trace(const Gf2Poly& f, const Gf2Poly& g, PolyFormat format);

}  // namespace coprimes
