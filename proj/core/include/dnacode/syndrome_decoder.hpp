#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "dnacode/block_code.hpp"
#include "dnacode/errors.hpp"
#include "dnacode/word.hpp"

namespace dnacode {

/// Largest n - k for which a syndrome table may be built by default.
inline constexpr std::size_t kDefaultTableLimit = 10;

/// Substitution pattern e with r = c (+) e. Weight is the non-A count.
class ErrorPattern {
public:
    ErrorPattern() = default;
    explicit ErrorPattern(DnaWord word) : word_(std::move(word)), weight_(dnacode::weight(word_)) {}

    const DnaWord& word() const noexcept { return word_; }
    std::size_t weight() const noexcept { return weight_; }

    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;

private:
    DnaWord word_;
    std::size_t weight_ = 0;
};

enum class Coverage { Complete, Partial };

/// Syndrome -> coset leader map for one code.
///
/// Leaders are minimal-weight patterns (up to the build's max_weight); ties
/// go to the lexicographically smallest pattern under A < T < C < G. The
/// all-A syndrome always maps to the all-A pattern.
class SyndromeTable {
public:
    using Entries = std::map<DnaWord, ErrorPattern>;

    const DnaLinearCode& code() const noexcept { return code_; }
    std::size_t max_weight() const noexcept { return max_weight_; }

    /// Entries iterate in syndrome order.
    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// 4^(n-k).
    std::size_t syndrome_space() const noexcept { return std::size_t{1} << (2 * code_.redundancy()); }
    Coverage coverage() const noexcept {
        return entries_.size() == syndrome_space() ? Coverage::Complete : Coverage::Partial;
    }

    const ErrorPattern* find(const DnaWord& syndrome) const;

private:
    friend SyndromeTable build_table(const DnaLinearCode&, std::size_t, std::size_t);

    SyndromeTable(DnaLinearCode code, std::size_t max_weight)
        : code_(std::move(code)), max_weight_(max_weight) {}

    DnaLinearCode code_;
    std::size_t max_weight_;
    Entries entries_;
};

/// Enumerates error patterns of weight 1..max_weight (error values T, C, G)
/// and records, per syndrome, the first leader found. Stops early once every
/// syndrome is covered.
///
/// Throws ValidationError if max_weight == 0, BudgetError if n - k exceeds
/// `max_redundancy` or the pattern count grows beyond an internal limit.
SyndromeTable build_table(const DnaLinearCode& code, std::size_t max_weight,
                          std::size_t max_redundancy = kDefaultTableLimit);

struct DecodeResult {
    DnaWord corrected;
    ErrorPattern error_pattern;
    DnaWord information;
};

/// Raised when a received word's syndrome has no table entry, i.e. more
/// errors occurred than the table can correct.
class UncorrectableError : public Error {
public:
    explicit UncorrectableError(DnaWord syndrome)
        : Error("uncorrectable: syndrome " + syndrome.to_string() + " not in decoding table"),
          syndrome_(std::move(syndrome)) {}

    const DnaWord& syndrome() const noexcept { return syndrome_; }

private:
    DnaWord syndrome_;
};

/// Syndrome, table lookup, DNAX correction.
///
/// Throws DimensionError on a wrong-length word, ValidationError if the table
/// belongs to a different code, UncorrectableError for an untabled syndrome.
DecodeResult decode(const DnaLinearCode& code, const SyndromeTable& table, const DnaWord& received);

/// As decode(), but an untabled syndrome yields std::nullopt.
std::optional<DecodeResult> try_decode(const DnaLinearCode& code, const SyndromeTable& table,
                                       const DnaWord& received);

enum class ReportStyle {
    Flat,     ///< one row per entry
    Grouped,  ///< rows differing only in the error letter folded into "(T/G/C)"
};

/// Human-readable table: a '#' summary line, then syndrome/pattern rows in
/// syndrome order.
std::string table_report(const SyndromeTable& table, ReportStyle style = ReportStyle::Flat);

/// TSV export: header "syndrome\terror_pattern\tweight", one row per entry in
/// syndrome order. Output is byte-identical for the same code and max_weight.
void write_table_tsv(std::ostream& os, const SyndromeTable& table);

}  // namespace dnacode
