#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "dnacode/block_code.hpp"
#include "dnacode/errors.hpp"
#include "test_util.hpp"

using namespace dnacode;
using dnacode::testing::W;

namespace {

const DnaLinearCode kCode74 = builtin_code("dna-7-4");
const DnaLinearCode kCode63 = builtin_code("dna-6-3");

// Parity equations of the (7,4) code, written out term by term.
DnaWord equations_74(const DnaWord& u) {
    return DnaWord{dnax(dnax(u[0], u[2]), u[3]), dnax(dnax(u[0], u[1]), u[2]), dnax(dnax(u[1], u[2]), u[3]),
                   u[0], u[1], u[2], u[3]};
}

// Parity equations of the (6,3) code.
DnaWord equations_63(const DnaWord& u) {
    return DnaWord{dnax(u[1], u[2]), dnax(u[0], u[2]), dnax(u[0], u[1]), u[0], u[1], u[2]};
}

// Binary (7,4) reference code, information word -> codeword, as tabulated.
const std::array<std::pair<std::string_view, std::string_view>, 16> kBinaryTable{{
    {"0000", "0000000"}, {"1000", "1101000"}, {"0100", "0110100"}, {"1100", "1011100"},
    {"0010", "1110010"}, {"1010", "0011010"}, {"0110", "1000110"}, {"1110", "0101110"},
    {"0001", "1010001"}, {"1001", "0111001"}, {"0101", "1100101"}, {"1101", "0001101"},
    {"0011", "0100011"}, {"1011", "1001011"}, {"0111", "0010111"}, {"1111", "1111111"},
}};

std::vector<std::uint8_t> bits(std::string_view s) {
    std::vector<std::uint8_t> out;
    for (char c : s) out.push_back(static_cast<std::uint8_t>(c - '0'));
    return out;
}

}  // namespace

TEST(NewCode, AssemblesSystematicGenerator) {
    EXPECT_EQ(kCode74.generator(), BitMatrix::from_rows({"1101000", "0110100", "1110010", "1010001"}));
    EXPECT_EQ(kCode63.generator(), BitMatrix::from_rows({"011100", "101010", "110001"}));
}

TEST(NewCode, AssemblesParityCheck) {
    EXPECT_EQ(kCode74.parity_check(), BitMatrix::from_rows({"1001011", "0101110", "0010111"}));
    EXPECT_EQ(kCode63.parity_check(), BitMatrix::from_rows({"100011", "010101", "001110"}));
}

TEST(NewCode, RejectsBadShapes) {
    EXPECT_THROW(DnaLinearCode(7, 4, BitMatrix::from_rows({"110", "011", "111"})), ConstructionError);
    EXPECT_THROW(DnaLinearCode(7, 4, BitMatrix::from_rows({"11", "01", "11", "10"})), ConstructionError);
    EXPECT_THROW(DnaLinearCode(4, 4, BitMatrix::zeros(4, 0)), ConstructionError);
    EXPECT_THROW(DnaLinearCode(3, 0, BitMatrix::zeros(0, 3)), ConstructionError);
}

TEST(NewCode, GeneratorIsOrthogonalToParityCheck) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const std::size_t k = 1 + rng() % 6;
        const std::size_t n = k + 1 + rng() % 6;
        std::vector<std::uint8_t> p(k * (n - k));
        for (auto& v : p) v = rng() & 1;
        const DnaLinearCode code(n, k, BitMatrix(k, n - k, p));
        EXPECT_TRUE(code.generator().multiply(code.parity_check().transpose()).is_zero());
    }
    EXPECT_TRUE(kCode74.generator().multiply(kCode74.parity_check().transpose()).is_zero());
}

TEST(BuiltinCode, UnknownNameListsAvailable) {
    try {
        (void)builtin_code("dna-9-5");
        FAIL() << "expected LookupError";
    } catch (const LookupError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("dna-7-4"), std::string::npos);
        EXPECT_NE(msg.find("dna-6-3"), std::string::npos);
    }
}

TEST(Encode, PublishedSevenFourPairs) {
    const std::array<std::pair<const char*, const char*>, 5> pairs{{
        {"ATCA", "CGGATCA"}, {"GCTG", "TAAGCTG"}, {"TGGC", "ATCTGGC"}, {"CATC", "TGGCATC"}, {"TCAG", "CGTTCAG"},
    }};
    for (auto [u, c] : pairs) EXPECT_EQ(encode(kCode74, W(u)), W(c)) << u;
}

TEST(Encode, PublishedSixThreePairs) {
    const std::array<std::pair<const char*, const char*>, 5> pairs{{
        {"AAT", "TTAAAT"}, {"AAC", "CCAAAC"}, {"TTT", "AAATTT"}, {"TTC", "GGATTC"}, {"CGC", "TATCGC"},
    }};
    for (auto [u, c] : pairs) EXPECT_EQ(encode(kCode63, W(u)), W(c)) << u;
}

TEST(Encode, AllAIsAllA) {
    EXPECT_EQ(encode(kCode74, DnaWord::all_a(4)), DnaWord::all_a(7));
    EXPECT_EQ(encode(kCode63, DnaWord::all_a(3)), DnaWord::all_a(6));
}

TEST(Encode, WrongLengthIsDimensionError) {
    EXPECT_THROW((void)encode(kCode74, W("TCA")), DimensionError);
    EXPECT_THROW((void)syndrome(kCode74, W("TCAG")), DimensionError);
    EXPECT_THROW((void)is_codeword(kCode63, W("TTAAATA")), DimensionError);
}

TEST(Encode, MatchesParityEquationsExhaustively) {
    for (std::uint64_t i = 0; i < 256; ++i) {
        const auto u = word_at_index(i, 4);
        ASSERT_EQ(encode(kCode74, u), equations_74(u)) << u;
    }
    for (std::uint64_t i = 0; i < 64; ++i) {
        const auto u = word_at_index(i, 3);
        ASSERT_EQ(encode(kCode63, u), equations_63(u)) << u;
    }
}

TEST(BinaryReference, TableReproducedByGenerator) {
    const auto g = BitMatrix::from_rows({"1101000", "0110100", "1110010", "1010001"});
    for (auto [u, c] : kBinaryTable) EXPECT_EQ(binary_encode(g, bits(u)), bits(c)) << u;
}

TEST(BinaryReference, DnaCodeIsTwoInterleavedBinaryCodes) {
    // Generator rows taken from the binary table's unit-vector entries.
    const auto g = BitMatrix::from_rows({"1101000", "0110100", "1110010", "1010001"});
    std::set<std::vector<std::uint8_t>> binary_codewords;
    for (auto [u, c] : kBinaryTable) binary_codewords.insert(bits(c));

    for (std::uint64_t i = 0; i < 256; ++i) {
        const auto u = word_at_index(i, 4);
        const auto uc = binary_components(u);
        const auto cc = binary_components(encode(kCode74, u));
        ASSERT_EQ(cc.hi, binary_encode(g, uc.hi)) << u;
        ASSERT_EQ(cc.lo, binary_encode(g, uc.lo)) << u;
        ASSERT_TRUE(binary_codewords.count(cc.hi));
        ASSERT_TRUE(binary_codewords.count(cc.lo));
    }
}

TEST(BinaryComponents, Example) {
    const auto c = binary_components(W("CGTTCAG"));
    EXPECT_EQ(c.hi, bits("1100101"));
    EXPECT_EQ(c.lo, bits("0111001"));
    EXPECT_EQ(from_binary_components(c.hi, c.lo), W("CGTTCAG"));
    const auto z = binary_components(DnaWord::all_a(5));
    EXPECT_EQ(z.hi, bits("00000"));
    EXPECT_EQ(z.lo, bits("00000"));
}

TEST(Syndrome, PublishedExamples) {
    EXPECT_EQ(syndrome(kCode74, W("TGGCATC")), W("AAA"));
    EXPECT_EQ(syndrome(kCode74, W("TGGTATC")), W("GGA"));
    EXPECT_EQ(syndrome(kCode63, W("GGATTC")), W("AAA"));
    EXPECT_EQ(syndrome(kCode63, W("GAATTC")), W("AGA"));
    EXPECT_EQ(syndrome(kCode74, W("CGGGTCA")), W("GGA"));
    EXPECT_EQ(syndrome(kCode74, W("CGTTAAG")), W("ACC"));
}

TEST(IsCodeword, Examples) {
    EXPECT_TRUE(is_codeword(kCode74, W("TGGCATC")));
    EXPECT_FALSE(is_codeword(kCode74, W("TGGTATC")));
    EXPECT_TRUE(is_codeword(kCode74, DnaWord::all_a(7)));
    EXPECT_TRUE(is_codeword(kCode63, W("CCATTG")));
}

TEST(Codebook, SizesOrderAndSystematicForm) {
    for (const auto* code : {&kCode74, &kCode63}) {
        const auto book = enumerate_codebook(*code);
        ASSERT_EQ(book.size(), std::size_t{1} << (2 * code->k()));
        std::set<DnaWord> distinct;
        for (std::size_t i = 0; i < book.size(); ++i) {
            const auto& e = book.entries[i];
            if (i > 0) EXPECT_LT(book.entries[i - 1].information, e.information);
            EXPECT_EQ(information_part(*code, e.codeword), e.information);
            EXPECT_TRUE(syndrome(*code, e.codeword).is_all_a());
            distinct.insert(e.codeword);
        }
        EXPECT_EQ(distinct.size(), book.size());
    }
    EXPECT_EQ(enumerate_codebook(kCode74).size(), 256u);
    EXPECT_EQ(enumerate_codebook(kCode63).size(), 64u);
}

TEST(Codebook, ContainsPublishedEntry) {
    const auto book = enumerate_codebook(kCode74);
    const auto it = std::find_if(book.entries.begin(), book.entries.end(),
                                 [](const CodebookEntry& e) { return e.information == W("GCTG"); });
    ASSERT_NE(it, book.entries.end());
    EXPECT_EQ(it->codeword, W("TAAGCTG"));
    EXPECT_EQ(book.entries.front().information, W("AAAA"));
    EXPECT_EQ(book.entries[1].information, W("AAAT"));
    EXPECT_EQ(book.entries.back().information, W("GGGG"));
}

TEST(Codebook, ClosedUnderDnax) {
    const auto small = enumerate_codebook(kCode63);
    for (const auto& x : small.entries)
        for (const auto& y : small.entries) ASSERT_TRUE(is_codeword(kCode63, x.codeword ^ y.codeword));

    const auto big = enumerate_codebook(kCode74);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 10000; ++i) {
        const auto& x = big.entries[rng() % big.size()].codeword;
        const auto& y = big.entries[rng() % big.size()].codeword;
        ASSERT_TRUE(is_codeword(kCode74, x ^ y));
    }
}

TEST(Codebook, BudgetRefusal) {
    const DnaLinearCode wide(12, 11, BitMatrix::zeros(11, 1));
    EXPECT_THROW((void)enumerate_codebook(wide), BudgetError);
    EXPECT_THROW((void)min_distance(wide), BudgetError);
    EXPECT_NO_THROW((void)enumerate_codebook(kCode63, 3));
    EXPECT_THROW((void)enumerate_codebook(kCode63, 2), BudgetError);
}

TEST(MinDistance, BuiltinCodes) {
    EXPECT_EQ(min_distance(kCode74), 3u);
    EXPECT_EQ(min_distance(kCode63), 3u);
    EXPECT_EQ(error_capability(kCode74), 1u);
    EXPECT_EQ(error_capability(kCode63), 1u);
}

TEST(MinDistance, EqualsPairwiseMinimum) {
    for (const auto* code : {&kCode74, &kCode63}) {
        const auto book = enumerate_codebook(*code);
        std::size_t pairwise = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < book.size(); ++i)
            for (std::size_t j = i + 1; j < book.size(); ++j)
                pairwise = std::min(pairwise, hamming_distance(book.entries[i].codeword, book.entries[j].codeword));
        EXPECT_EQ(min_distance(*code), pairwise);
    }
}

TEST(MinDistance, DegenerateCodeAccepted) {
    const DnaLinearCode trivial(2, 1, BitMatrix::zeros(1, 1));
    EXPECT_EQ(min_distance(trivial), 1u);
    EXPECT_EQ(error_capability(trivial), 0u);
}

TEST(ErrorCapability, Arithmetic) {
    EXPECT_EQ(error_capability(std::size_t{5}), 2u);
    EXPECT_EQ(error_capability(std::size_t{4}), 1u);
    EXPECT_EQ(error_capability(std::size_t{3}), 1u);
    EXPECT_EQ(error_capability(std::size_t{1}), 0u);
}

TEST(WordAtIndex, BaseFourDigits) {
    EXPECT_EQ(word_at_index(0, 3), W("AAA"));
    EXPECT_EQ(word_at_index(1, 3), W("AAT"));
    EXPECT_EQ(word_at_index(2, 3), W("AAC"));
    EXPECT_EQ(word_at_index(3, 3), W("AAG"));
    EXPECT_EQ(word_at_index(4, 3), W("ATA"));
    EXPECT_EQ(word_at_index(63, 3), W("GGG"));
}
