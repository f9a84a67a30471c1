#include "coprimes/compositions.hpp"

#include <algorithm>
#include <stdexcept>

namespace coprimes {

namespace {
BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after each round
    }
    return r;
}
}  // namespace

Composition from_boxes(std::string_view boxes) {
    Composition c;
    c.n = static_cast<int>(boxes.size()) + 1;
    int run = 1;
    for (char b : boxes) {
        if (b == '1') {
            ++run;
        } else if (b == '0') {
            c.parts.push_back(run);
            run = 1;
        } else {
            throw std::invalid_argument("boxes must be over {0,1}");
        }
    }
    c.parts.push_back(run);
    return c;
}

std::string to_boxes(const Composition& c) {
    if (c.parts.empty()) throw std::invalid_argument("composition needs at least one part");
    std::string boxes;
    for (std::size_t j = 0; j < c.parts.size(); ++j) {
        if (c.parts[j] < 1) throw std::invalid_argument("composition parts must be positive");
        if (j > 0) boxes.push_back('0');
        boxes.append(static_cast<std::size_t>(c.parts[j] - 1), '1');
    }
    return boxes;
}

BigInt count_compositions(int n, int k) {
    if (k < 1 || k > n) return 0;
    return binomial(n - 1, k - 1);
}

std::optional<Composition> first_composition(int n, int k) {
    if (k < 1 || k > n) return std::nullopt;
    std::string boxes(static_cast<std::size_t>(k - 1), '0');
    boxes.append(static_cast<std::size_t>(n - k), '1');
    return from_boxes(boxes);
}

std::optional<Composition> next_composition(const Composition& c) {
    std::string boxes = to_boxes(c);
    if (!std::next_permutation(boxes.begin(), boxes.end())) return std::nullopt;
    return from_boxes(boxes);
}

}  // namespace coprimes
