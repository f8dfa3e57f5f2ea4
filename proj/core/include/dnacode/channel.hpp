#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "dnacode/block_code.hpp"
#include "dnacode/syndrome_decoder.hpp"
#include "dnacode/word.hpp"

namespace dnacode {

/// How substitutions are injected into a transmitted word.
class ErrorModel {
public:
    enum class Kind {
        FixedCount,   ///< exactly `count` distinct positions substituted
        PerBaseRate,  ///< each base substituted independently with probability `rate`
        FixedPattern, ///< a given error pattern, applied verbatim
    };

    static ErrorModel fixed_count(std::size_t count);
    /// Throws ModelError unless 0 <= rate <= 1.
    static ErrorModel per_base_rate(double rate);
    static ErrorModel fixed_pattern(DnaWord pattern);

    Kind kind() const noexcept { return kind_; }
    std::size_t count() const noexcept { return count_; }
    double rate() const noexcept { return rate_; }
    const DnaWord& pattern() const noexcept { return pattern_; }

    /// Throws ModelError if the model cannot be applied to words of length n.
    void validate_for(std::size_t n) const;

    /// "fixed-count:2", "rate:0.05", "pattern:AAAGAAA".
    std::string describe() const;

private:
    ErrorModel() = default;

    Kind kind_ = Kind::FixedCount;
    std::size_t count_ = 0;
    double rate_ = 0.0;
    DnaWord pattern_;
};

struct Injection {
    DnaWord received;
    ErrorPattern true_error;
};

/// received = word (+) true_error. Error values are uniform over {T, C, G};
/// fixed-count positions are drawn without replacement. Deterministic in
/// (word, model, seed).
Injection inject(const DnaWord& word, const ErrorModel& model, std::uint64_t seed);

enum class Outcome { Corrected, Undetected, Miscorrected, DetectedUncorrectable };

std::string_view to_string(Outcome outcome) noexcept;

/// `decoded` is the decoder's result, or std::nullopt when it reported the
/// syndrome as uncorrectable.
Outcome classify(const DnaLinearCode& code, const DnaWord& sent, const ErrorPattern& true_error,
                 const std::optional<DecodeResult>& decoded);

struct ChannelReport {
    std::uint64_t trials = 0;
    std::uint64_t corrected = 0;
    std::uint64_t undetected = 0;
    std::uint64_t miscorrected = 0;
    std::uint64_t detected_uncorrectable = 0;
    std::uint64_t seed = 0;

    void record(Outcome outcome) noexcept;
    ChannelReport& operator+=(const ChannelReport& other) noexcept;
    friend bool operator==(const ChannelReport&, const ChannelReport&) = default;
};

/// Per-trial seed derived from the master seed and the trial index, so each
/// trial's randomness is independent of scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Runs `trials` independent transmissions of uniformly random codewords
/// through the model and tallies outcomes. The result depends only on the
/// arguments, never on `threads`.
///
/// Throws ValidationError if trials == 0, ModelError if the model does not
/// fit the code.
ChannelReport run_experiment(const DnaLinearCode& code, const SyndromeTable& table, const ErrorModel& model,
                             std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

enum class ReportFormat { Tsv, Json };

/// Fields in fixed order: code, model, trials, corrected, undetected,
/// miscorrected, detected_uncorrectable, seed.
void write_report(std::ostream& os, const ChannelReport& report, std::string_view code_name,
                  const ErrorModel& model, ReportFormat format);

}  // namespace dnacode
