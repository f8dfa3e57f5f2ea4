#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnacode/base.hpp"

namespace dnacode {

/// Fixed-length base sequence read 5' to 3'. Used for information words,
/// codewords, received words, error patterns and syndromes alike.
///
/// Ordering (operator<=>) is lexicographic under A < T < C < G.
class DnaWord {
public:
    DnaWord() = default;
    explicit DnaWord(std::vector<Base> bases) : bases_(std::move(bases)) {}
    DnaWord(std::initializer_list<Base> bases) : bases_(bases) {}

    /// Parses a base string; lowercase is normalized. Throws ParseError on any
    /// other character, reporting its offset.
    static DnaWord parse(std::string_view text);

    /// Word of `length` copies of A (the group identity).
    static DnaWord all_a(std::size_t length) { return DnaWord(std::vector<Base>(length, Base::A)); }

    std::size_t size() const noexcept { return bases_.size(); }
    bool empty() const noexcept { return bases_.empty(); }
    Base operator[](std::size_t i) const noexcept { return bases_[i]; }
    Base at(std::size_t i) const { return bases_.at(i); }

    std::span<const Base> bases() const noexcept { return bases_; }
    auto begin() const noexcept { return bases_.begin(); }
    auto end() const noexcept { return bases_.end(); }

    /// Contiguous sub-word [offset, offset + count).
    DnaWord slice(std::size_t offset, std::size_t count) const;

    bool is_all_a() const noexcept;

    std::string to_string() const;

    friend bool operator==(const DnaWord&, const DnaWord&) = default;
    friend std::strong_ordering operator<=>(const DnaWord& x, const DnaWord& y) noexcept;

private:
    std::vector<Base> bases_;
};

std::ostream& operator<<(std::ostream& os, const DnaWord& w);

/// Element-wise DNAX; throws DimensionError when lengths differ.
DnaWord word_dnax(const DnaWord& x, const DnaWord& y);
inline DnaWord operator^(const DnaWord& x, const DnaWord& y) { return word_dnax(x, y); }

DnaWord reverse(const DnaWord& w);
DnaWord complement_word(const DnaWord& w);
/// Complement read in reverse so the result is again 5' to 3'.
DnaWord reverse_complement(const DnaWord& w);

/// Number of non-A positions.
std::size_t weight(const DnaWord& w) noexcept;

/// Number of differing positions; throws DimensionError when lengths differ.
std::size_t hamming_distance(const DnaWord& x, const DnaWord& y);

/// Concatenation of several words.
DnaWord concat(std::span<const DnaWord> words);

}  // namespace dnacode
