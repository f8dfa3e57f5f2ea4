#include "dnacode/bit_matrix.hpp"

#include <algorithm>

#include "dnacode/errors.hpp"

namespace dnacode {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw ConstructionError("bit matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                " needs " + std::to_string(rows_ * cols_) + " entries, got " +
                                std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > 1) {
            throw ConstructionError("non-binary entry " + std::to_string(entries_[i]) + " at (" +
                                    std::to_string(i / (cols_ ? cols_ : 1)) + ", " +
                                    std::to_string(cols_ ? i % cols_ : 0) + ")");
        }
    }
}

BitMatrix BitMatrix::from_rows(std::span<const std::string> rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    std::vector<std::uint8_t> entries;
    entries.reserve(rows.size() * cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw ConstructionError("row " + std::to_string(r) + " has length " +
                                    std::to_string(rows[r].size()) + ", expected " +
                                    std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const char ch = rows[r][c];
            if (ch != '0' && ch != '1') {
                throw ConstructionError("non-binary entry '" + std::string(1, ch) + "' at (" +
                                        std::to_string(r) + ", " + std::to_string(c) + ")");
            }
            entries.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    return BitMatrix(rows.size(), cols, std::move(entries));
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> owned(rows.begin(), rows.end());
    return from_rows(std::span<const std::string>(owned));
}

BitMatrix BitMatrix::zeros(std::size_t rows, std::size_t cols) {
    return BitMatrix(rows, cols, std::vector<std::uint8_t>(rows * cols, 0));
}

BitMatrix BitMatrix::identity(std::size_t size) {
    std::vector<std::uint8_t> entries(size * size, 0);
    for (std::size_t i = 0; i < size; ++i) entries[i * size + i] = 1;
    return BitMatrix(size, size, std::move(entries));
}

BitMatrix BitMatrix::transpose() const {
    std::vector<std::uint8_t> out(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[c * rows_ + r] = (*this)(r, c);
    return BitMatrix(cols_, rows_, std::move(out));
}

BitMatrix BitMatrix::hconcat(const BitMatrix& right) const {
    if (rows_ != right.rows_) {
        throw DimensionError("hconcat: row counts differ (" + std::to_string(rows_) + " vs " +
                             std::to_string(right.rows_) + ")");
    }
    std::vector<std::uint8_t> out;
    out.reserve(rows_ * (cols_ + right.cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        auto a = row(r);
        auto b = right.row(r);
        out.insert(out.end(), a.begin(), a.end());
        out.insert(out.end(), b.begin(), b.end());
    }
    return BitMatrix(rows_, cols_ + right.cols_, std::move(out));
}

BitMatrix BitMatrix::multiply(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionError("multiply: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " times " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    }
    std::vector<std::uint8_t> out(rows_ * rhs.cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
            std::uint8_t acc = 0;
            for (std::size_t i = 0; i < cols_; ++i) acc ^= (*this)(r, i) & rhs(i, c);
            out[r * rhs.cols_ + c] = acc;
        }
    return BitMatrix(rows_, rhs.cols_, std::move(out));
}

bool BitMatrix::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint8_t v) { return v == 0; });
}

std::vector<std::string> BitMatrix::row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::string s;
        for (auto v : row(r)) s.push_back(static_cast<char>('0' + v));
        out.push_back(std::move(s));
    }
    return out;
}

std::string BitMatrix::to_string() const {
    std::string out;
    for (const auto& s : row_strings()) {
        if (!out.empty()) out.push_back('\n');
        out += s;
    }
    return out;
}

std::vector<std::uint8_t> binary_encode(const BitMatrix& generator, std::span<const std::uint8_t> u) {
    if (u.size() != generator.rows()) {
        throw DimensionError("binary_encode: information length " + std::to_string(u.size()) +
                             " does not match generator rows " + std::to_string(generator.rows()));
    }
    std::vector<std::uint8_t> out(generator.cols(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 1) throw ConstructionError("non-binary information digit at " + std::to_string(i));
        if (!u[i]) continue;
        auto g = generator.row(i);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] ^= g[j];
    }
    return out;
}

}  // namespace dnacode
