#include "coprimes/euclid.hpp"

#include <stdexcept>

namespace coprimes {

EuclidTrace euclid_trace(const Gf2Poly& f, const Gf2Poly& g) {
    if (g.is_zero()) throw std::domain_error("euclid: second input must be nonzero");
    if (f.is_zero() || *f.degree() < *g.degree())
        throw std::invalid_argument("euclid: degree(f) must be >= degree(g)");
    EuclidTrace trace;
    Gf2Poly a = f;
    Gf2Poly b = g;
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        trace.quotients.push_back(std::move(q));
        a = std::move(b);
        b = std::move(r);
    }
    trace.final_pair = {std::move(a), Gf2Poly{}};
    return trace;
}

std::pair<Gf2Poly, Gf2Poly> dilcue_apply(std::pair<Gf2Poly, Gf2Poly> start,
                                         std::span<const Gf2Poly> quotients) {
    for (auto it = quotients.rbegin(); it != quotients.rend(); ++it)
        dilcue_step(start.first, start.second, *it);
    return start;
}

std::pair<Gf2Poly, Gf2Poly> bijection_flip(const Gf2Poly& f, const Gf2Poly& g) {
    if (f.is_zero() || g.is_zero() || f.degree() != g.degree())
        throw std::invalid_argument("bijection: inputs must have equal degrees");
    if (*f.degree() < 1) throw std::invalid_argument("bijection: degree must be at least 1");
    EuclidTrace trace = euclid_trace(f, g);
    if (trace.final_pair.first.is_one()) {
        // Coprime side: the last quotient doubles as the second-to-last
        // remainder. Drop it and restart from (that remainder, 0).
        Gf2Poly r = std::move(trace.quotients.back());
        trace.quotients.pop_back();
        return dilcue_apply({std::move(r), Gf2Poly{}}, trace.quotients);
    }
    // Non-coprime side: restart from (gcd, 1) with the full quotient list.
    return dilcue_apply({trace.final_pair.first, Gf2Poly::one()}, trace.quotients);
}

std::string render_trace(const Gf2Poly& f, const Gf2Poly& g, PolyFormat format) {
    const EuclidTrace trace = euclid_trace(f, g);
    std::string out;
    Gf2Poly a = f;
    Gf2Poly b = g;
    for (const Gf2Poly& q : trace.quotients) {
        Gf2Poly r = a + q * b;  // the remainder this division produced
        out += '(';
        out += to_text(a, format);
        out += ", ";
        out += to_text(b, format);
        out += ") --q=";
        out += to_text(q, format);
        out += "--> (";
        out += to_text(b, format);
        out += ", ";
        out += to_text(r, format);
        out += ")\n";
        a = std::move(b);
        b = std::move(r);
    }
    return out;
}

}  // namespace coprimes
