#include "dnacode/word.hpp"

#include <algorithm>
#include <ostream>

#include "dnacode/errors.hpp"

namespace dnacode {

namespace {

void require_same_length(const DnaWord& x, const DnaWord& y, const char* op) {
    if (x.size() != y.size()) {
        throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(x.size()) +
                             " vs " + std::to_string(y.size()) + ")");
    }
}

}  // namespace

DnaWord DnaWord::parse(std::string_view text) {
    std::vector<Base> bases;
    bases.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto b = base_from_char(text[i]);
        if (!b) {
            throw ParseError("invalid base '" + std::string(1, text[i]) + "' at offset " +
                             std::to_string(i));
        }
        bases.push_back(*b);
    }
    return DnaWord(std::move(bases));
}

DnaWord DnaWord::slice(std::size_t offset, std::size_t count) const {
    if (offset > bases_.size() || count > bases_.size() - offset) {
        throw DimensionError("slice [" + std::to_string(offset) + ", +" + std::to_string(count) +
                             ") out of range for length " + std::to_string(bases_.size()));
    }
    const auto first = bases_.begin() + static_cast<std::ptrdiff_t>(offset);
    return DnaWord(std::vector<Base>(first, first + static_cast<std::ptrdiff_t>(count)));
}

bool DnaWord::is_all_a() const noexcept {
    return std::all_of(bases_.begin(), bases_.end(), [](Base b) { return b == Base::A; });
}

std::string DnaWord::to_string() const {
    std::string out;
    out.reserve(bases_.size());
    for (Base b : bases_) out.push_back(to_char(b));
    return out;
}

std::strong_ordering operator<=>(const DnaWord& x, const DnaWord& y) noexcept {
    return std::lexicographical_compare_three_way(x.bases_.begin(), x.bases_.end(),
                                                  y.bases_.begin(), y.bases_.end());
}

std::ostream& operator<<(std::ostream& os, const DnaWord& w) { return os << w.to_string(); }

DnaWord word_dnax(const DnaWord& x, const DnaWord& y) {
    require_same_length(x, y, "word_dnax");
    std::vector<Base> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = dnax(x[i], y[i]);
    return DnaWord(std::move(out));
}

DnaWord reverse(const DnaWord& w) {
    return DnaWord(std::vector<Base>(w.bases().rbegin(), w.bases().rend()));
}

DnaWord complement_word(const DnaWord& w) {
    std::vector<Base> out;
    out.reserve(w.size());
    for (Base b : w) out.push_back(complement(b));
    return DnaWord(std::move(out));
}

DnaWord reverse_complement(const DnaWord& w) { return reverse(complement_word(w)); }

std::size_t weight(const DnaWord& w) noexcept {
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [](Base b) { return b != Base::A; }));
}

std::size_t hamming_distance(const DnaWord& x, const DnaWord& y) {
    require_same_length(x, y, "hamming_distance");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

DnaWord concat(std::span<const DnaWord> words) {
    std::vector<Base> out;
    for (const auto& w : words) out.insert(out.end(), w.begin(), w.end());
    return DnaWord(std::move(out));
}

}  // namespace dnacode
