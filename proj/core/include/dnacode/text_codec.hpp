#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnacode/block_code.hpp"
#include "dnacode/errors.hpp"
#include "dnacode/syndrome_decoder.hpp"
#include "dnacode/word.hpp"

namespace dnacode {

/// Four bases per byte, most significant bit pair first (00->A, 01->T,
/// 10->C, 11->G).
DnaWord bytes_to_bases(std::span<const std::uint8_t> data);

/// Inverse of bytes_to_bases; throws FramingError unless the length is a
/// multiple of 4.
std::vector<std::uint8_t> bases_to_bytes(const DnaWord& bases);

/// A byte string carried as a sequence of codewords. The final information
/// block is right-padded with `pad_bases` A's (0 <= pad_bases < k).
struct EncodedMessage {
    std::string code_ref;  ///< built-in code name or code-spec path
    std::size_t pad_bases = 0;
    std::vector<DnaWord> blocks;

    std::size_t block_count() const noexcept { return blocks.size(); }
    friend bool operator==(const EncodedMessage&, const EncodedMessage&) = default;
};

EncodedMessage message_encode(const DnaLinearCode& code, std::span<const std::uint8_t> data,
                              std::string code_ref = {});

/// A block of an EncodedMessage could not be decoded.
class BlockDecodeError : public Error {
public:
    BlockDecodeError(std::size_t block_index, const std::string& reason)
        : Error("block " + std::to_string(block_index) + ": " + reason), block_index_(block_index) {}

    std::size_t block_index() const noexcept { return block_index_; }

private:
    std::size_t block_index_;
};

/// Decodes every block (correcting what the table allows), strips the pad and
/// converts back to bytes. Throws BlockDecodeError naming the first failing
/// block, DimensionError/ValidationError on malformed messages and
/// FramingError when the payload is not a whole number of bytes.
std::vector<std::uint8_t> message_decode(const DnaLinearCode& code, const SyndromeTable& table,
                                         const EncodedMessage& message);

/// Text form:
///
///     #code dna-7-4
///     #pad 0
///     CGGATCA
///     ...
void write_encoded_message(std::ostream& os, const EncodedMessage& message);

/// Parses the text form; blank lines are skipped. Other '#' lines after the
/// header are treated as comments.
EncodedMessage read_encoded_message(std::istream& is);

/// Symbol-wise substitution through a user-supplied table mapping single
/// characters to base strings of one common length.
class SubstitutionCodec {
public:
    /// Throws ValidationError on an empty, ragged or non-injective table.
    explicit SubstitutionCodec(std::vector<std::pair<char, DnaWord>> table);

    /// Two-column TSV, "symbol<TAB>bases" per line; '#' lines and blank lines
    /// are skipped.
    static SubstitutionCodec load_tsv(std::istream& is);

    std::size_t code_length() const noexcept { return code_length_; }

    /// Throws ValidationError on a symbol absent from the table.
    DnaWord encode(std::string_view text) const;

    /// Throws ValidationError (with the base offset) on an unmapped chunk and
    /// FramingError when the length is not a multiple of code_length().
    std::string decode(const DnaWord& bases) const;

private:
    std::size_t code_length_ = 0;
    std::map<char, DnaWord> forward_;
    std::map<DnaWord, char> backward_;
};

}  // namespace dnacode
