#include "dnacode/syndrome_decoder.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace dnacode {

namespace {

// Upper bound on the number of error patterns examined while building a table.
constexpr std::uint64_t kPatternBudget = std::uint64_t{1} << 26;

// Syndromes packed two bits per component, component 0 in the highest slot.
using PackedSyndrome = std::uint64_t;

DnaWord unpack(PackedSyndrome s, std::size_t length) { return word_at_index(s, length); }

std::uint64_t patterns_of_weight(std::size_t n, std::size_t w) {
    // C(n, w) * 3^w, saturating.
    long double count = 1;
    for (std::size_t i = 0; i < w; ++i) count = count * static_cast<long double>(n - i) / (i + 1) * 3;
    return count > static_cast<long double>(UINT64_MAX) ? UINT64_MAX
                                                        : static_cast<std::uint64_t>(count + 0.5L);
}

// For each position, the H column as a packed word holding 1 in every slot
// where H has a 1. Multiplying by a base value 0..3 scales the column.
std::vector<PackedSyndrome> column_masks(const DnaLinearCode& code) {
    const auto& h = code.parity_check();
    const std::size_t r = code.redundancy();
    std::vector<PackedSyndrome> masks(code.n(), 0);
    for (std::size_t i = 0; i < code.n(); ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (h(j, i)) masks[i] |= PackedSyndrome{1} << (2 * (r - 1 - j));
    return masks;
}

void require_same_code(const DnaLinearCode& code, const SyndromeTable& table) {
    if (!(table.code() == code)) throw ValidationError("syndrome table was built for a different code");
}

bool single_letter(const DnaWord& w, Base& letter) {
    bool found = false;
    for (Base b : w) {
        if (b == Base::A) continue;
        if (found && b != letter) return false;
        letter = b;
        found = true;
    }
    return found;
}

std::string wildcard(const DnaWord& w) {
    std::string out;
    for (Base b : w) out += b == Base::A ? std::string("A") : std::string("(T/G/C)");
    return out;
}

std::string summary_line(const SyndromeTable& table) {
    std::ostringstream os;
    os << "# syndrome table n=" << table.code().n() << " k=" << table.code().k()
       << " max_weight=" << table.max_weight() << " entries=" << table.size() << '/'
       << table.syndrome_space()
       << " coverage=" << (table.coverage() == Coverage::Complete ? "complete" : "partial") << '\n';
    return os.str();
}

}  // namespace

const ErrorPattern* SyndromeTable::find(const DnaWord& syndrome) const {
    auto it = entries_.find(syndrome);
    return it == entries_.end() ? nullptr : &it->second;
}

SyndromeTable build_table(const DnaLinearCode& code, std::size_t max_weight, std::size_t max_redundancy) {
    if (max_weight == 0) throw ValidationError("max_weight must be at least 1");
    const std::size_t r = code.redundancy();
    if (r > max_redundancy) {
        throw BudgetError("syndrome table refused: n - k = " + std::to_string(r) +
                          " exceeds the limit of " + std::to_string(max_redundancy));
    }
    const std::size_t n = code.n();
    max_weight = std::min(max_weight, n);

    SyndromeTable table(code, max_weight);
    table.entries_.emplace(DnaWord::all_a(r), ErrorPattern(DnaWord::all_a(n)));

    const auto masks = column_masks(code);
    std::uint64_t examined = 0;

    for (std::size_t w = 1; w <= max_weight && table.coverage() != Coverage::Complete; ++w) {
        const std::uint64_t count = patterns_of_weight(n, w);
        if (count > kPatternBudget || examined + count > kPatternBudget) {
            throw BudgetError("syndrome table refused: weight-" + std::to_string(w) + " enumeration needs " +
                              std::to_string(count) + " patterns (limit " +
                              std::to_string(kPatternBudget) + " total)");
        }
        examined += count;

        // Per-syndrome smallest pattern of this weight; merged after the pass
        // so that lighter leaders from earlier passes always win.
        std::unordered_map<PackedSyndrome, DnaWord> best;

        std::vector<std::size_t> positions(w);
        for (std::size_t i = 0; i < w; ++i) positions[i] = i;
        std::vector<std::size_t> values(w, 0);  // index into kErrorBases
        std::vector<Base> pattern(n, Base::A);

        while (true) {
            std::fill(values.begin(), values.end(), 0);
            while (true) {
                PackedSyndrome s = 0;
                std::fill(pattern.begin(), pattern.end(), Base::A);
                for (std::size_t i = 0; i < w; ++i) {
                    const Base b = kErrorBases[values[i]];
                    pattern[positions[i]] = b;
                    s ^= masks[positions[i]] * to_index(b);
                }
                DnaWord candidate(pattern);
                auto it = best.find(s);
                if (it == best.end()) {
                    best.emplace(s, std::move(candidate));
                } else if (candidate < it->second) {
                    it->second = std::move(candidate);
                }
                // next value tuple
                std::size_t v = w;
                while (v > 0 && values[v - 1] == kErrorBases.size() - 1) values[--v] = 0;
                if (v == 0) break;
                ++values[v - 1];
            }
            // next position combination
            std::size_t i = w;
            while (i > 0 && positions[i - 1] == n - w + (i - 1)) --i;
            if (i == 0) break;
            ++positions[i - 1];
            for (std::size_t j = i; j < w; ++j) positions[j] = positions[j - 1] + 1;
        }

        for (auto& [s, word] : best) {
            table.entries_.try_emplace(unpack(s, r), ErrorPattern(std::move(word)));
        }
    }
    return table;
}

std::optional<DecodeResult> try_decode(const DnaLinearCode& code, const SyndromeTable& table,
                                       const DnaWord& received) {
    require_same_code(code, table);
    DnaWord s = syndrome(code, received);
    if (s.is_all_a()) {
        return DecodeResult{received, ErrorPattern(DnaWord::all_a(code.n())), information_part(code, received)};
    }
    const ErrorPattern* leader = table.find(s);
    if (!leader) return std::nullopt;
    DnaWord corrected = word_dnax(received, leader->word());
    DnaWord info = information_part(code, corrected);
    return DecodeResult{std::move(corrected), *leader, std::move(info)};
}

DecodeResult decode(const DnaLinearCode& code, const SyndromeTable& table, const DnaWord& received) {
    auto result = try_decode(code, table, received);
    if (!result) throw UncorrectableError(syndrome(code, received));
    return std::move(*result);
}

std::string table_report(const SyndromeTable& table, ReportStyle style) {
    std::ostringstream os;
    os << summary_line(table);
    if (style == ReportStyle::Flat) {
        for (const auto& [s, e] : table.entries()) os << s << '\t' << e.word() << '\n';
        return os.str();
    }

    // Fold entries of the form (x*b, x*s) for x in {T,C,G} into one row when
    // all three letters are present.
    struct Family {
        DnaWord syndrome_shape;
        DnaWord pattern_shape;
        int letters = 0;
    };
    std::map<std::pair<std::string, std::string>, Family> families;
    for (const auto& [s, e] : table.entries()) {
        Base ls{}, le{};
        if (single_letter(s, ls) && single_letter(e.word(), le) && ls == le) {
            auto& f = families[{wildcard(s), wildcard(e.word())}];
            f.syndrome_shape = s;
            f.pattern_shape = e.word();
            f.letters |= 1 << to_index(ls);
        }
    }

    std::vector<std::pair<DnaWord, std::string>> rows;
    for (const auto& [s, e] : table.entries()) {
        Base ls{}, le{};
        if (single_letter(s, ls) && single_letter(e.word(), le) && ls == le) {
            const auto& f = families.at({wildcard(s), wildcard(e.word())});
            if (f.letters == 0b1110) {
                // emit once, keyed by the family's smallest (T) member
                if (ls == Base::T) rows.emplace_back(s, wildcard(s) + '\t' + wildcard(e.word()));
                continue;
            }
        }
        rows.emplace_back(s, s.to_string() + '\t' + e.word().to_string());
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& row : rows) os << row.second << '\n';
    return os.str();
}

void write_table_tsv(std::ostream& os, const SyndromeTable& table) {
    os << "syndrome\terror_pattern\tweight\n";
    for (const auto& [s, e] : table.entries()) os << s << '\t' << e.word() << '\t' << e.weight() << '\n';
}

}  // namespace dnacode
