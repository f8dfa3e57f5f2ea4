#include "dnacode/text_codec.hpp"

#include <istream>
#include <ostream>

namespace dnacode {

namespace {

std::string trim_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::string printable(char c) {
    if (c >= 0x20 && c < 0x7f) return std::string(1, c);
    return "\\x" + std::string(1, "0123456789abcdef"[(c >> 4) & 0xf]) + "0123456789abcdef"[c & 0xf];
}

}  // namespace

DnaWord bytes_to_bases(std::span<const std::uint8_t> data) {
    std::vector<Base> out;
    out.reserve(data.size() * 4);
    for (std::uint8_t byte : data) {
        for (int shift = 6; shift >= 0; shift -= 2) out.push_back(static_cast<Base>((byte >> shift) & 3));
    }
    return DnaWord(std::move(out));
}

std::vector<std::uint8_t> bases_to_bytes(const DnaWord& bases) {
    if (bases.size() % 4 != 0) {
        throw FramingError("base count " + std::to_string(bases.size()) + " is not a multiple of 4");
    }
    std::vector<std::uint8_t> out;
    out.reserve(bases.size() / 4);
    for (std::size_t i = 0; i < bases.size(); i += 4) {
        std::uint8_t byte = 0;
        for (std::size_t j = 0; j < 4; ++j) byte = static_cast<std::uint8_t>((byte << 2) | to_index(bases[i + j]));
        out.push_back(byte);
    }
    return out;
}

EncodedMessage message_encode(const DnaLinearCode& code, std::span<const std::uint8_t> data,
                              std::string code_ref) {
    const DnaWord payload = bytes_to_bases(data);
    const std::size_t k = code.k();
    EncodedMessage msg;
    msg.code_ref = std::move(code_ref);
    msg.pad_bases = (k - payload.size() % k) % k;

    std::vector<Base> padded(payload.begin(), payload.end());
    padded.resize(payload.size() + msg.pad_bases, Base::A);
    const DnaWord all(std::move(padded));
    msg.blocks.reserve(all.size() / k);
    for (std::size_t off = 0; off < all.size(); off += k) msg.blocks.push_back(encode(code, all.slice(off, k)));
    return msg;
}

std::vector<std::uint8_t> message_decode(const DnaLinearCode& code, const SyndromeTable& table,
                                         const EncodedMessage& message) {
    if (message.pad_bases >= code.k()) {
        throw ValidationError("pad of " + std::to_string(message.pad_bases) + " bases must be below k = " +
                              std::to_string(code.k()));
    }
    if (message.blocks.empty() && message.pad_bases != 0) {
        throw ValidationError("empty message cannot carry padding");
    }
    std::vector<Base> info;
    info.reserve(message.blocks.size() * code.k());
    for (std::size_t i = 0; i < message.blocks.size(); ++i) {
        const DnaWord& block = message.blocks[i];
        if (block.size() != code.n()) {
            throw BlockDecodeError(i, "length " + std::to_string(block.size()) + ", expected " +
                                          std::to_string(code.n()));
        }
        auto result = try_decode(code, table, block);
        if (!result) {
            throw BlockDecodeError(i, "uncorrectable, syndrome " + syndrome(code, block).to_string());
        }
        info.insert(info.end(), result->information.begin(), result->information.end());
    }
    info.resize(info.size() - message.pad_bases);
    return bases_to_bytes(DnaWord(std::move(info)));
}

void write_encoded_message(std::ostream& os, const EncodedMessage& message) {
    os << "#code " << message.code_ref << '\n' << "#pad " << message.pad_bases << '\n';
    for (const auto& b : message.blocks) os << b << '\n';
}

EncodedMessage read_encoded_message(std::istream& is) {
    EncodedMessage msg;
    bool have_code = false;
    bool have_pad = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        line = trim_cr(std::move(line));
        if (line.empty()) continue;
        if (line.rfind("#code", 0) == 0 && !have_code && msg.blocks.empty()) {
            if (line.size() < 7 || line[5] != ' ') throw ParseError("line " + std::to_string(line_no) + ": malformed #code header");
            msg.code_ref = line.substr(6);
            have_code = true;
            continue;
        }
        if (line.rfind("#pad", 0) == 0 && !have_pad && msg.blocks.empty()) {
            const std::string value = line.size() > 5 && line[4] == ' ' ? line.substr(5) : std::string();
            if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError("line " + std::to_string(line_no) + ": malformed #pad header");
            }
            msg.pad_bases = std::stoull(value);
            have_pad = true;
            continue;
        }
        if (line.front() == '#') continue;
        try {
            msg.blocks.push_back(DnaWord::parse(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_code) throw ParseError("encoded message: missing #code header");
    if (!have_pad) throw ParseError("encoded message: missing #pad header");
    return msg;
}

SubstitutionCodec::SubstitutionCodec(std::vector<std::pair<char, DnaWord>> table) {
    if (table.empty()) throw ValidationError("substitution table is empty");
    code_length_ = table.front().second.size();
    if (code_length_ == 0) throw ValidationError("substitution table maps to empty base strings");
    for (auto& [symbol, bases] : table) {
        if (bases.size() != code_length_) {
            throw ValidationError("ragged substitution table: '" + printable(symbol) + "' maps to " +
                                  std::to_string(bases.size()) + " bases, expected " +
                                  std::to_string(code_length_));
        }
        if (forward_.count(symbol)) throw ValidationError("symbol '" + printable(symbol) + "' listed twice");
        auto [it, inserted] = backward_.emplace(bases, symbol);
        if (!inserted) {
            throw ValidationError("not injective: '" + printable(it->second) + "' and '" + printable(symbol) +
                                  "' both map to " + bases.to_string());
        }
        forward_.emplace(symbol, std::move(bases));
    }
}

SubstitutionCodec SubstitutionCodec::load_tsv(std::istream& is) {
    std::vector<std::pair<char, DnaWord>> table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        line = trim_cr(std::move(line));
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two tab-separated columns");
        }
        if (tab != 1) throw ParseError("line " + std::to_string(line_no) + ": symbol must be one character");
        try {
            table.emplace_back(line[0], DnaWord::parse(std::string_view(line).substr(tab + 1)));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return SubstitutionCodec(std::move(table));
}

DnaWord SubstitutionCodec::encode(std::string_view text) const {
    std::vector<Base> out;
    out.reserve(text.size() * code_length_);
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto it = forward_.find(text[i]);
        if (it == forward_.end()) {
            throw ValidationError("symbol '" + printable(text[i]) + "' at offset " + std::to_string(i) +
                                  " has no table entry");
        }
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return DnaWord(std::move(out));
}

std::string SubstitutionCodec::decode(const DnaWord& bases) const {
    if (bases.size() % code_length_ != 0) {
        throw FramingError("base count " + std::to_string(bases.size()) + " is not a multiple of " +
                           std::to_string(code_length_));
    }
    std::string out;
    for (std::size_t off = 0; off < bases.size(); off += code_length_) {
        DnaWord chunk = bases.slice(off, code_length_);
        auto it = backward_.find(chunk);
        if (it == backward_.end()) {
            throw ValidationError("unmapped base string " + chunk.to_string() + " at offset " + std::to_string(off));
        }
        out.push_back(it->second);
    }
    return out;
}

}  // namespace dnacode
