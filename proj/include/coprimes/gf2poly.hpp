#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coprimes {

/// Text encodings for polynomials.
///
/// `bin` lists coefficients from the highest degree down to the constant
/// ("1011" is x^3+x+1, "0" is the zero polynomial). `hex` packs the same
/// bitstring into hexadecimal digits, most significant first, without
/// padding to an even length. `human` spells the terms out in descending
/// exponent order with no spaces ("x^3+x+1", "1" for the constant).
enum class PolyFormat { bin, hex, human };

/// Thrown by parse(); position() is the offending character index.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A polynomial over F_2, stored as a bitset of coefficients: bit i holds
/// the coefficient of x^i. The limb vector never keeps a trailing zero
/// word, so equality is plain memberwise comparison and the zero polynomial
/// is the empty vector. Every nonzero value is monic, as any nonzero F_2
/// polynomial is. Values are immutable through the public interface; all
/// operations are pure and safe to call concurrently.
class Gf2Poly {
public:
    Gf2Poly() = default;  ///< the zero polynomial

    static Gf2Poly one();
    static Gf2Poly monomial(std::size_t exponent);       ///< x^exponent
    static Gf2Poly from_mask(std::uint64_t coeff_bits);  ///< coefficients 0..63

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

    /// Index of the highest set coefficient. The zero polynomial has no
    /// degree; callers must branch on the empty optional rather than rely
    /// on a numeric stand-in.
    std::optional<std::size_t> degree() const noexcept;

    bool coeff(std::size_t exponent) const noexcept;
    bool constant_term() const noexcept { return coeff(0); }

    Gf2Poly& operator+=(const Gf2Poly& rhs);
    Gf2Poly& operator*=(const Gf2Poly& rhs);
    friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) {
        a += b;
        return a;
    }
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);

    bool operator==(const Gf2Poly&) const = default;
    /// Total order: by degree, then by the numeric value of the coefficient
    /// bits. Coincides with lexicographic order on the bin encoding for
    /// equal degrees.
    friend std::strong_ordering operator<=>(const Gf2Poly& a, const Gf2Poly& b) noexcept;

    friend std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& dividend, const Gf2Poly& divisor);
    friend Gf2Poly parse(std::string_view text, PolyFormat format);

private:
    void flip(std::size_t exponent);
    void xor_shifted(const Gf2Poly& src, std::size_t shift);  // *this += src * x^shift
    void trim();

    std::vector<std::uint64_t> words_;
};

/// Euclidean division: dividend = quotient * divisor + remainder, with
/// remainder zero or of degree strictly below the divisor's. Throws
/// std::domain_error for a zero divisor.
std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& dividend, const Gf2Poly& divisor);

/// Greatest common divisor; gcd(a, 0) == a. Throws std::domain_error when
/// both arguments are zero.
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

/// Membership in S_n: degree exactly n and a nonzero constant term.
bool in_sn(const Gf2Poly& p, std::size_t n) noexcept;

/// Reads a polynomial in the given format; rejects malformed text with a
/// ParseError naming the position. Repeated `human` terms add (cancel).
Gf2Poly parse(std::string_view text, PolyFormat format);

/// Canonical text in the given format; parse(to_text(p, f), f) == p.
std::string to_text(const Gf2Poly& p, PolyFormat format);

/// Prints the human form (diagnostics and test output).
std::ostream& operator<<(std::ostream& os, const Gf2Poly& p);

}  // namespace coprimes
