#include "coprimes/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <ostream>

namespace coprimes {

namespace {
constexpr std::size_t kWordBits = 64;

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " (at index " + std::to_string(position) + ")"),
      position_(position) {}

Gf2Poly Gf2Poly::one() { return from_mask(1); }

Gf2Poly Gf2Poly::monomial(std::size_t exponent) {
    Gf2Poly p;
    p.flip(exponent);
    return p;
}

Gf2Poly Gf2Poly::from_mask(std::uint64_t coeff_bits) {
    Gf2Poly p;
    if (coeff_bits != 0) p.words_.push_back(coeff_bits);
    return p;
}

std::optional<std::size_t> Gf2Poly::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return (words_.size() - 1) * kWordBits + (std::bit_width(words_.back()) - 1);
}

bool Gf2Poly::coeff(std::size_t exponent) const noexcept {
    const std::size_t w = exponent / kWordBits;
    if (w >= words_.size()) return false;
    return (words_[w] >> (exponent % kWordBits)) & 1u;
}

void Gf2Poly::flip(std::size_t exponent) {
    const std::size_t w = exponent / kWordBits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= std::uint64_t{1} << (exponent % kWordBits);
    trim();
}

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
    if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
    trim();
    return *this;
}

void Gf2Poly::xor_shifted(const Gf2Poly& src, std::size_t shift) {
    if (src.words_.empty()) return;
    const std::size_t word_shift = shift / kWordBits;
    const unsigned bit_shift = shift % kWordBits;
    const std::size_t needed = src.words_.size() + word_shift + (bit_shift != 0 ? 1 : 0);
    if (needed > words_.size()) words_.resize(needed, 0);
    for (std::size_t i = 0; i < src.words_.size(); ++i) {
        const std::uint64_t w = src.words_[i];
        words_[i + word_shift] ^= w << bit_shift;
        if (bit_shift != 0) words_[i + word_shift + 1] ^= w >> (kWordBits - bit_shift);
    }
    trim();
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly product;
    // Carry-less schoolbook product: XOR b shifted onto every set bit of a.
    for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
        std::uint64_t w = a.words_[wi];
        while (w != 0) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(w));
            product.xor_shifted(b, wi * kWordBits + bit);
            w &= w - 1;
        }
    }
    return product;
}

Gf2Poly& Gf2Poly::operator*=(const Gf2Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) noexcept {
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    return std::lexicographical_compare_three_way(a.words_.rbegin(), a.words_.rend(),
                                                  b.words_.rbegin(), b.words_.rend());
}

std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& dividend, const Gf2Poly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("gf2poly: division by the zero polynomial");
    Gf2Poly quotient;
    Gf2Poly remainder = dividend;
    const std::size_t divisor_degree = *divisor.degree();
    while (!remainder.is_zero() && *remainder.degree() >= divisor_degree) {
        const std::size_t shift = *remainder.degree() - divisor_degree;
        quotient.flip(shift);
        remainder.xor_shifted(divisor, shift);
    }
    return {std::move(quotient), std::move(remainder)};
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gf2poly: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Gf2Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool in_sn(const Gf2Poly& p, std::size_t n) noexcept {
    return p.degree() == n && p.constant_term();
}

Gf2Poly parse(std::string_view text, PolyFormat format) {
    if (text.empty()) throw ParseError("empty input", 0);
    Gf2Poly p;
    switch (format) {
    case PolyFormat::bin:
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c != '0' && c != '1') throw ParseError("expected a binary digit", i);
            if (c == '1') p.flip(text.size() - 1 - i);
        }
        return p;

    case PolyFormat::hex:
        for (std::size_t i = 0; i < text.size(); ++i) {
            const int d = hex_value(text[i]);
            if (d < 0) throw ParseError("expected a hex digit", i);
            const std::size_t base = (text.size() - 1 - i) * 4;
            for (int b = 0; b < 4; ++b)
                if ((d >> b) & 1) p.flip(base + static_cast<std::size_t>(b));
        }
        return p;

    case PolyFormat::human: {
        if (text == "0") return p;
        std::size_t pos = 0;
        while (true) {
            if (pos >= text.size()) throw ParseError("expected a term", pos);
            const char c = text[pos];
            if (c == '1') {
                p.flip(0);
                ++pos;
            } else if (c == 'x') {
                ++pos;
                std::size_t exponent = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    const std::size_t digits_at = pos;
                    while (pos < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    if (pos == digits_at) throw ParseError("expected an exponent", digits_at);
                    const char* first = text.data() + digits_at;
                    const char* last = text.data() + pos;
                    const auto res = std::from_chars(first, last, exponent);
                    if (res.ec != std::errc{} || res.ptr != last)
                        throw ParseError("exponent out of range", digits_at);
                }
                p.flip(exponent);
            } else {
                throw ParseError("expected '1' or 'x'", pos);
            }
            if (pos == text.size()) return p;
            if (text[pos] != '+') throw ParseError("expected '+'", pos);
            ++pos;
        }
    }
    }
    throw std::logic_error("unknown format");
}

std::string to_text(const Gf2Poly& p, PolyFormat format) {
    const auto deg = p.degree();
    switch (format) {
    case PolyFormat::bin: {
        if (!deg) return "0";
        std::string out;
        out.reserve(*deg + 1);
        for (std::size_t i = 0; i <= *deg; ++i) out.push_back(p.coeff(*deg - i) ? '1' : '0');
        return out;
    }
    case PolyFormat::hex: {
        if (!deg) return "0";
        static constexpr char kDigits[] = "0123456789abcdef";
        const std::size_t nibbles = *deg / 4 + 1;
        std::string out;
        out.reserve(nibbles);
        for (std::size_t i = 0; i < nibbles; ++i) {
            const std::size_t base = (nibbles - 1 - i) * 4;
            int v = 0;
            for (int b = 3; b >= 0; --b) v = (v << 1) | static_cast<int>(p.coeff(base + b));
            out.push_back(kDigits[v]);
        }
        return out;
    }
    case PolyFormat::human: {
        if (!deg) return "0";
        std::string out;
        for (std::size_t i = 0; i <= *deg; ++i) {
            const std::size_t e = *deg - i;
            if (!p.coeff(e)) continue;
            if (!out.empty()) out.push_back('+');
            if (e == 0)
                out += '1';
            else if (e == 1)
                out += 'x';
            else {
                out += "x^";
                out += std::to_string(e);
            }
        }
        return out;
    }
    }
    throw std::logic_error("unknown format");
}

std::ostream& operator<<(std::ostream& os, const Gf2Poly& p) {
    return os << to_text(p, PolyFormat::human);
}

}  // namespace coprimes
