#include "dnacode/block_code.hpp"

#include <algorithm>
#include <limits>

#include "dnacode/errors.hpp"

namespace dnacode {

namespace {

void require_length(const DnaWord& w, std::size_t expected, const char* what) {
    if (w.size() != expected) {
        throw DimensionError(std::string(what) + ": expected length " + std::to_string(expected) +
                             ", got " + std::to_string(w.size()));
    }
}

void require_budget(const DnaLinearCode& code, std::size_t limit) {
    if (code.k() > limit) {
        throw BudgetError("enumeration refused: k = " + std::to_string(code.k()) +
                          " exceeds the limit of " + std::to_string(limit) + " (4^" +
                          std::to_string(limit) + " codewords)");
    }
}

}  // namespace

DnaLinearCode::DnaLinearCode(std::size_t n, std::size_t k, BitMatrix parity)
    : n_(n), k_(k), parity_(std::move(parity)) {
    if (k_ < 1) throw ConstructionError("k must be at least 1");
    if (n_ <= k_) {
        throw ConstructionError("n must exceed k (n = " + std::to_string(n_) +
                                ", k = " + std::to_string(k_) + ")");
    }
    if (parity_.rows() != k_) {
        throw ConstructionError("parity matrix has " + std::to_string(parity_.rows()) +
                                " rows, expected k = " + std::to_string(k_));
    }
    if (parity_.cols() != n_ - k_) {
        throw ConstructionError("parity matrix has " + std::to_string(parity_.cols()) +
                                " columns, expected n - k = " + std::to_string(n_ - k_));
    }
    generator_ = parity_.hconcat(BitMatrix::identity(k_));
    parity_check_ = BitMatrix::identity(n_ - k_).hconcat(parity_.transpose());
}

std::vector<std::string> builtin_code_names() { return {"dna-7-4", "dna-6-3"}; }

DnaLinearCode builtin_code(std::string_view name) {
    if (name == "dna-7-4") return DnaLinearCode(7, 4, BitMatrix::from_rows({"110", "011", "111", "101"}));
    if (name == "dna-6-3") return DnaLinearCode(6, 3, BitMatrix::from_rows({"011", "101", "110"}));
    std::string available;
    for (const auto& n : builtin_code_names()) available += (available.empty() ? "" : ", ") + n;
    throw LookupError("unknown code '" + std::string(name) + "'; available: " + available);
}

DnaWord encode(const DnaLinearCode& code, const DnaWord& information) {
    require_length(information, code.k(), "encode");
    const BitMatrix& g = code.generator();
    std::vector<Base> out(code.n(), Base::A);
    for (std::size_t i = 0; i < code.k(); ++i) {
        const Base u = information[i];
        auto row = g.row(i);
        for (std::size_t j = 0; j < code.n(); ++j) out[j] = dnax(out[j], scale(u, row[j]));
    }
    return DnaWord(std::move(out));
}

DnaWord syndrome(const DnaLinearCode& code, const DnaWord& received) {
    require_length(received, code.n(), "syndrome");
    const BitMatrix& h = code.parity_check();
    std::vector<Base> out(code.redundancy(), Base::A);
    for (std::size_t j = 0; j < h.rows(); ++j) {
        auto row = h.row(j);
        for (std::size_t l = 0; l < code.n(); ++l) out[j] = dnax(out[j], scale(received[l], row[l]));
    }
    return DnaWord(std::move(out));
}

bool is_codeword(const DnaLinearCode& code, const DnaWord& word) {
    return syndrome(code, word).is_all_a();
}

DnaWord information_part(const DnaLinearCode& code, const DnaWord& codeword) {
    require_length(codeword, code.n(), "information_part");
    return codeword.slice(code.redundancy(), code.k());
}

DnaWord word_at_index(std::uint64_t index, std::size_t length) {
    std::vector<Base> out(length, Base::A);
    for (std::size_t i = length; i-- > 0;) {
        out[i] = static_cast<Base>(index & 3);
        index >>= 2;
    }
    return DnaWord(std::move(out));
}

Codebook enumerate_codebook(const DnaLinearCode& code, std::size_t max_information_length) {
    require_budget(code, max_information_length);
    Codebook book{code.n(), code.k(), {}};
    const std::uint64_t count = std::uint64_t{1} << (2 * code.k());
    book.entries.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        DnaWord u = word_at_index(i, code.k());
        DnaWord c = encode(code, u);
        book.entries.push_back({std::move(u), std::move(c)});
    }
    return book;
}

std::size_t min_distance(const DnaLinearCode& code, std::size_t max_information_length) {
    require_budget(code, max_information_length);
    const std::uint64_t count = std::uint64_t{1} << (2 * code.k());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t i = 1; i < count; ++i) {
        best = std::min(best, weight(encode(code, word_at_index(i, code.k()))));
    }
    return best;
}

std::size_t error_capability(const DnaLinearCode& code, std::size_t max_information_length) {
    return error_capability(min_distance(code, max_information_length));
}

BinaryComponents binary_components(const DnaWord& word) {
    BinaryComponents out;
    out.hi.reserve(word.size());
    out.lo.reserve(word.size());
    for (Base b : word) {
        const auto bits = base_to_bits(b);
        out.hi.push_back(bits.hi);
        out.lo.push_back(bits.lo);
    }
    return out;
}

DnaWord from_binary_components(std::span<const std::uint8_t> hi, std::span<const std::uint8_t> lo) {
    if (hi.size() != lo.size()) {
        throw DimensionError("from_binary_components: component lengths differ");
    }
    std::vector<Base> out;
    out.reserve(hi.size());
    for (std::size_t i = 0; i < hi.size(); ++i) out.push_back(bits_to_base(hi[i], lo[i]));
    return DnaWord(std::move(out));
}

}  // namespace dnacode
