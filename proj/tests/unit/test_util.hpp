#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "dnacode/word.hpp"

namespace dnacode::testing {

inline DnaWord W(std::string_view s) { return DnaWord::parse(s); }

inline DnaWord random_word(std::mt19937_64& rng, std::size_t length) {
    std::vector<Base> bases(length);
    for (auto& b : bases) b = static_cast<Base>(rng() & 3);
    return DnaWord(std::move(bases));
}

}  // namespace dnacode::testing
