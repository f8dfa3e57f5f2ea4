#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dnacode {

/// Dense row-major matrix of binary digits.
class BitMatrix {
public:
    BitMatrix() = default;

    /// Throws ConstructionError if `entries` has the wrong size or holds a
    /// value other than 0/1.
    BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries);

    /// Builds a matrix from rows written as '0'/'1' strings ("110", "011", ...).
    /// All rows must have the same length. With zero rows, `cols` gives the width.
    static BitMatrix from_rows(std::span<const std::string> rows, std::size_t cols = 0);
    static BitMatrix from_rows(std::initializer_list<std::string_view> rows);

    static BitMatrix zeros(std::size_t rows, std::size_t cols);
    static BitMatrix identity(std::size_t size);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t operator()(std::size_t r, std::size_t c) const noexcept {
        return entries_[r * cols_ + c];
    }
    std::span<const std::uint8_t> row(std::size_t r) const noexcept {
        return {entries_.data() + r * cols_, cols_};
    }

    BitMatrix transpose() const;

    /// [this | right]; row counts must agree.
    BitMatrix hconcat(const BitMatrix& right) const;

    /// Matrix product over GF(2).
    BitMatrix multiply(const BitMatrix& rhs) const;

    bool is_zero() const noexcept;

    /// Rows joined by '\n', each as a '0'/'1' string.
    std::string to_string() const;
    std::vector<std::string> row_strings() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> entries_;
};

/// Row-vector times matrix over GF(2): returns u * G. Throws DimensionError
/// when u.size() != G.rows() and ConstructionError on non-binary input.
std::vector<std::uint8_t> binary_encode(const BitMatrix& generator, std::span<const std::uint8_t> u);

}  // namespace dnacode
