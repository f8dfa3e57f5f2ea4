#include <gtest/gtest.h>

#include <vector>

#include "dnacode/bit_matrix.hpp"
#include "dnacode/errors.hpp"

using namespace dnacode;

TEST(BitMatrix, FromRows) {
    const auto m = BitMatrix::from_rows({"110", "011"});
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m(0, 1), 1);
    EXPECT_EQ(m(1, 0), 0);
    EXPECT_EQ(m.to_string(), "110\n011");
}

TEST(BitMatrix, RejectsBadInput) {
    EXPECT_THROW((void)BitMatrix::from_rows({"110", "01"}), ConstructionError);
    EXPECT_THROW((void)BitMatrix::from_rows({"120"}), ConstructionError);
    EXPECT_THROW(BitMatrix(2, 2, {1, 0, 1}), ConstructionError);
    EXPECT_THROW(BitMatrix(1, 2, {1, 2}), ConstructionError);
}

TEST(BitMatrix, TransposeConcatMultiply) {
    const auto p = BitMatrix::from_rows({"110", "011", "111", "101"});
    EXPECT_EQ(p.transpose(), BitMatrix::from_rows({"1011", "1110", "0111"}));
    EXPECT_EQ(p.transpose().transpose(), p);
    EXPECT_EQ(BitMatrix::identity(2).hconcat(BitMatrix::from_rows({"1", "0"})), BitMatrix::from_rows({"101", "010"}));
    EXPECT_THROW((void)BitMatrix::identity(2).hconcat(BitMatrix::identity(3)), DimensionError);
    EXPECT_EQ(p.multiply(BitMatrix::identity(3)), p);
    // rows 110 and 011 sum to 101 mod 2
    EXPECT_EQ(BitMatrix::from_rows({"11"}).multiply(BitMatrix::from_rows({"110", "011"})),
              BitMatrix::from_rows({"101"}));
    EXPECT_THROW((void)p.multiply(p), DimensionError);
}

TEST(BinaryEncode, ReferenceCode) {
    const auto g = BitMatrix::from_rows({"1101000", "0110100", "1110010", "1010001"});
    EXPECT_EQ(binary_encode(g, std::vector<std::uint8_t>{1, 0, 0, 1}), (std::vector<std::uint8_t>{0, 1, 1, 1, 0, 0, 1}));
    EXPECT_EQ(binary_encode(g, std::vector<std::uint8_t>{0, 0, 0, 0}), std::vector<std::uint8_t>(7, 0));
    EXPECT_EQ(binary_encode(g, std::vector<std::uint8_t>{1, 1, 1, 1}), std::vector<std::uint8_t>(7, 1));
    EXPECT_THROW((void)binary_encode(g, std::vector<std::uint8_t>{1, 0, 0}), DimensionError);
}
