#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnacode/bit_matrix.hpp"
#include "dnacode/word.hpp"

namespace dnacode {

/// Largest information length for which brute-force enumeration (codebook,
/// minimum distance) is allowed by default: 4^10 codewords.
inline constexpr std::size_t kDefaultEnumerationLimit = 10;

/// Systematic DNA (n, k) linear block code defined by a binary k x (n-k)
/// parity matrix P.
///
/// Layout is fixed: parity bases at positions 0..n-k-1, information bases at
/// n-k..n-1. Hence G = [P | I_k] and H = [I_{n-k} | P^T]. Any binary P is
/// accepted, including ones giving a minimum distance of 1.
class DnaLinearCode {
public:
    /// Throws ConstructionError unless n > k >= 1 and P is k x (n-k).
    DnaLinearCode(std::size_t n, std::size_t k, BitMatrix parity);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t redundancy() const noexcept { return n_ - k_; }

    const BitMatrix& parity() const noexcept { return parity_; }
    const BitMatrix& generator() const noexcept { return generator_; }
    const BitMatrix& parity_check() const noexcept { return parity_check_; }

    friend bool operator==(const DnaLinearCode& a, const DnaLinearCode& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.parity_ == b.parity_;
    }

private:
    std::size_t n_;
    std::size_t k_;
    BitMatrix parity_;
    BitMatrix generator_;
    BitMatrix parity_check_;
};

/// Names accepted by builtin_code(): "dna-7-4", "dna-6-3".
std::vector<std::string> builtin_code_names();

/// Throws LookupError listing the available names if `name` is unknown.
DnaLinearCode builtin_code(std::string_view name);

/// c = u G, computed as the DNAX sum of u_i scaled by generator row i.
/// Throws DimensionError if u.size() != k.
DnaWord encode(const DnaLinearCode& code, const DnaWord& information);

/// r H^T: component j is the DNAX sum of the bases of r selected by row j of H.
/// Throws DimensionError if r.size() != n.
DnaWord syndrome(const DnaLinearCode& code, const DnaWord& received);

bool is_codeword(const DnaLinearCode& code, const DnaWord& word);

/// Last k bases of a codeword.
DnaWord information_part(const DnaLinearCode& code, const DnaWord& codeword);

/// The index-th word of length `length` in A < T < C < G lexicographic order
/// (index read as base-4 digits, most significant first).
DnaWord word_at_index(std::uint64_t index, std::size_t length);

struct CodebookEntry {
    DnaWord information;
    DnaWord codeword;
};

/// All 4^k (information, codeword) pairs, ordered by information word.
struct Codebook {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<CodebookEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
};

/// Throws BudgetError when k exceeds `max_information_length`.
Codebook enumerate_codebook(const DnaLinearCode& code,
                            std::size_t max_information_length = kDefaultEnumerationLimit);

/// Minimum non-A weight over all nonzero codewords, by brute force.
std::size_t min_distance(const DnaLinearCode& code,
                         std::size_t max_information_length = kDefaultEnumerationLimit);

/// floor((d_min - 1) / 2).
constexpr std::size_t error_capability(std::size_t d_min) noexcept {
    return d_min == 0 ? 0 : (d_min - 1) / 2;
}
std::size_t error_capability(const DnaLinearCode& code,
                             std::size_t max_information_length = kDefaultEnumerationLimit);

/// Splits a word into the sequence of high bits and the sequence of low bits
/// of each base's two-bit code.
struct BinaryComponents {
    std::vector<std::uint8_t> hi;
    std::vector<std::uint8_t> lo;
};
BinaryComponents binary_components(const DnaWord& word);
DnaWord from_binary_components(std::span<const std::uint8_t> hi, std::span<const std::uint8_t> lo);

}  // namespace dnacode
