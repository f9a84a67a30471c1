#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coprimes/bigint.hpp"

namespace coprimes {

/// An ordered sequence of positive parts summing to n.
struct Composition {
    std::vector<int> parts;
    int n = 0;  ///< sum of parts
    bool operator==(const Composition&) const = default;
};

/// Decodes the box string written between n ones: '0' separates two parts
/// ("comma"), '1' merges adjacent ones ("plus"). A string of length n-1
/// yields a composition of n with (number of '0') + 1 parts.
Composition from_boxes(std::string_view boxes);

/// Inverse of from_boxes.
std::string to_boxes(const Composition& c);

/// Number of compositions of n into exactly k parts: C(n-1, k-1).
/// Out-of-range k yields 0, matching the empty enumeration.
BigInt count_compositions(int n, int k);

/// Iteration over the compositions of n into k parts, ordered by their box
/// string ('0' < '1').
std::optional<Composition> first_composition(int n, int k);
std::optional<Composition> next_composition(const Composition& c);

}  // namespace coprimes
