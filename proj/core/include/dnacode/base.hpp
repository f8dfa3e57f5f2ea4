#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace dnacode {

/// One DNA symbol. The underlying value is the two-bit code used for
/// binary conversion: A=00, T=01, C=10, G=11 (high bit first). Numeric
/// order of the values is also the canonical enumeration order A < T < C < G.
enum class Base : std::uint8_t { A = 0, T = 1, C = 2, G = 3 };

inline constexpr std::array<Base, 4> kAllBases{Base::A, Base::T, Base::C, Base::G};

/// The three non-identity bases, i.e. every possible substitution value.
inline constexpr std::array<Base, 3> kErrorBases{Base::T, Base::C, Base::G};

struct BitPair {
    std::uint8_t hi;
    std::uint8_t lo;
    friend constexpr bool operator==(BitPair, BitPair) = default;
};

constexpr std::uint8_t to_index(Base b) noexcept { return static_cast<std::uint8_t>(b); }

/// DNA XOR. {A,T,C,G} under this operation is the Klein four-group with A as
/// identity; with the two-bit encoding above it is plain bitwise XOR.
constexpr Base dnax(Base a, Base b) noexcept {
    return static_cast<Base>(to_index(a) ^ to_index(b));
}

/// Watson-Crick complement: A<->T, G<->C.
constexpr Base complement(Base b) noexcept {
    switch (b) {
        case Base::A: return Base::T;
        case Base::T: return Base::A;
        case Base::C: return Base::G;
        case Base::G: return Base::C;
    }
    return b;
}

constexpr BitPair base_to_bits(Base b) noexcept {
    const auto v = to_index(b);
    return {static_cast<std::uint8_t>(v >> 1), static_cast<std::uint8_t>(v & 1)};
}

constexpr Base bits_to_base(std::uint8_t hi, std::uint8_t lo) noexcept {
    return static_cast<Base>(((hi & 1) << 1) | (lo & 1));
}

/// Multiplication of a base by a binary digit. A zero digit yields A, the
/// group identity, so scaled rows stay inside the base alphabet.
constexpr Base scale(Base b, std::uint8_t bit) noexcept { return (bit & 1) ? b : Base::A; }

constexpr char to_char(Base b) noexcept {
    constexpr std::array<char, 4> letters{'A', 'T', 'C', 'G'};
    return letters[to_index(b)];
}

/// Accepts upper- or lowercase a/t/g/c.
constexpr std::optional<Base> base_from_char(char c) noexcept {
    switch (c) {
        case 'A': case 'a': return Base::A;
        case 'T': case 't': return Base::T;
        case 'C': case 'c': return Base::C;
        case 'G': case 'g': return Base::G;
        default: return std::nullopt;
    }
}

}  // namespace dnacode
