#include "dnacode/channel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <thread>
#include <vector>

#include <json.hpp>

namespace dnacode {

namespace {

// mt19937_64 output is fully specified by the standard; the distributions
// are not, so the draws below are done by hand to keep runs bit-identical
// across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Base random_error_base(std::mt19937_64& rng) { return kErrorBases[uniform_below(rng, kErrorBases.size())]; }

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string format_rate(double rate) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, rate);
    return ec == std::errc{} ? std::string(buf, end) : std::to_string(rate);
}

ChannelReport run_range(const DnaLinearCode& code, const SyndromeTable& table, const ErrorModel& model,
                        std::uint64_t first, std::uint64_t last, std::uint64_t seed) {
    ChannelReport local;
    std::vector<Base> info(code.k());
    for (std::uint64_t trial = first; trial < last; ++trial) {
        std::mt19937_64 rng(derive_seed(seed, trial));
        for (std::size_t i = 0; i < info.size(); i += 32) {
            std::uint64_t bits = rng();
            for (std::size_t j = i; j < info.size() && j < i + 32; ++j, bits >>= 2) {
                info[j] = static_cast<Base>(bits & 3);
            }
        }
        const DnaWord sent = encode(code, DnaWord(info));
        Injection inj = inject(sent, model, rng());
        local.record(classify(code, sent, inj.true_error, try_decode(code, table, inj.received)));
    }
    local.trials = last - first;
    return local;
}

}  // namespace

ErrorModel ErrorModel::fixed_count(std::size_t count) {
    ErrorModel m;
    m.kind_ = Kind::FixedCount;
    m.count_ = count;
    return m;
}

ErrorModel ErrorModel::per_base_rate(double rate) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw ModelError("substitution rate must lie in [0, 1], got " + format_rate(rate));
    ErrorModel m;
    m.kind_ = Kind::PerBaseRate;
    m.rate_ = rate;
    return m;
}

ErrorModel ErrorModel::fixed_pattern(DnaWord pattern) {
    ErrorModel m;
    m.kind_ = Kind::FixedPattern;
    m.count_ = weight(pattern);
    m.pattern_ = std::move(pattern);
    return m;
}

void ErrorModel::validate_for(std::size_t n) const {
    switch (kind_) {
        case Kind::FixedCount:
            if (count_ > n) {
                throw ModelError("error count " + std::to_string(count_) + " exceeds word length " + std::to_string(n));
            }
            break;
        case Kind::PerBaseRate:
            break;
        case Kind::FixedPattern:
            if (pattern_.size() != n) {
                throw ModelError("error pattern length " + std::to_string(pattern_.size()) +
                                 " does not match word length " + std::to_string(n));
            }
            break;
    }
}

std::string ErrorModel::describe() const {
    switch (kind_) {
        case Kind::FixedCount: return "fixed-count:" + std::to_string(count_);
        case Kind::PerBaseRate: return "rate:" + format_rate(rate_);
        case Kind::FixedPattern: return "pattern:" + pattern_.to_string();
    }
    return {};
}

Injection inject(const DnaWord& word, const ErrorModel& model, std::uint64_t seed) {
    const std::size_t n = word.size();
    model.validate_for(n);
    std::mt19937_64 rng(seed);
    std::vector<Base> error(n, Base::A);

    switch (model.kind()) {
        case ErrorModel::Kind::FixedCount: {
            std::vector<std::size_t> positions(n);
            std::iota(positions.begin(), positions.end(), std::size_t{0});
            for (std::size_t i = 0; i < model.count(); ++i) {
                const auto j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
                std::swap(positions[i], positions[j]);
                error[positions[i]] = random_error_base(rng);
            }
            break;
        }
        case ErrorModel::Kind::PerBaseRate:
            for (std::size_t i = 0; i < n; ++i) {
                if (uniform_unit(rng) < model.rate()) error[i] = random_error_base(rng);
            }
            break;
        case ErrorModel::Kind::FixedPattern:
            error.assign(model.pattern().begin(), model.pattern().end());
            break;
    }

    DnaWord e(std::move(error));
    DnaWord received = word_dnax(word, e);
    return {std::move(received), ErrorPattern(std::move(e))};
}

std::string_view to_string(Outcome outcome) noexcept {
    switch (outcome) {
        case Outcome::Corrected: return "corrected";
        case Outcome::Undetected: return "undetected";
        case Outcome::Miscorrected: return "miscorrected";
        case Outcome::DetectedUncorrectable: return "detected_uncorrectable";
    }
    return "unknown";
}

Outcome classify(const DnaLinearCode& code, const DnaWord& sent, const ErrorPattern& true_error,
                 const std::optional<DecodeResult>& decoded) {
    if (!decoded) return Outcome::DetectedUncorrectable;
    if (decoded->corrected == sent) return Outcome::Corrected;
    if (true_error.weight() > 0 && is_codeword(code, true_error.word())) return Outcome::Undetected;
    return Outcome::Miscorrected;
}

void ChannelReport::record(Outcome outcome) noexcept {
    switch (outcome) {
        case Outcome::Corrected: ++corrected; break;
        case Outcome::Undetected: ++undetected; break;
        case Outcome::Miscorrected: ++miscorrected; break;
        case Outcome::DetectedUncorrectable: ++detected_uncorrectable; break;
    }
}

ChannelReport& ChannelReport::operator+=(const ChannelReport& other) noexcept {
    trials += other.trials;
    corrected += other.corrected;
    undetected += other.undetected;
    miscorrected += other.miscorrected;
    detected_uncorrectable += other.detected_uncorrectable;
    return *this;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(master) ^ (index * 0xd1b54a32d192ed03ULL));
}

ChannelReport run_experiment(const DnaLinearCode& code, const SyndromeTable& table, const ErrorModel& model,
                             std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    if (trials == 0) throw ValidationError("trials must be at least 1");
    model.validate_for(code.n());
    if (!(table.code() == code)) throw ValidationError("syndrome table was built for a different code");

    threads = std::max(1u, threads);
    const std::uint64_t workers = std::min<std::uint64_t>(threads, trials);
    std::vector<ChannelReport> partial(workers);
    if (workers == 1) {
        partial[0] = run_range(code, table, model, 0, trials, seed);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (trials + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t first = w * chunk;
            const std::uint64_t last = std::min(trials, first + chunk);
            pool.emplace_back([&, w, first, last] {
                if (first < last) partial[w] = run_range(code, table, model, first, last, seed);
            });
        }
    }

    ChannelReport total;
    for (const auto& p : partial) total += p;
    total.seed = seed;
    return total;
}

void write_report(std::ostream& os, const ChannelReport& report, std::string_view code_name,
                  const ErrorModel& model, ReportFormat format) {
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json doc;
        doc["code"] = std::string(code_name);
        doc["model"] = model.describe();
        doc["trials"] = report.trials;
        doc["corrected"] = report.corrected;
        doc["undetected"] = report.undetected;
        doc["miscorrected"] = report.miscorrected;
        doc["detected_uncorrectable"] = report.detected_uncorrectable;
        doc["seed"] = report.seed;
        os << doc.dump(2) << '\n';
        return;
    }
    os << "code\tmodel\ttrials\tcorrected\tundetected\tmiscorrected\tdetected_uncorrectable\tseed\n"
       << code_name << '\t' << model.describe() << '\t' << report.trials << '\t' << report.corrected << '\t'
       << report.undetected << '\t' << report.miscorrected << '\t' << report.detected_uncorrectable << '\t'
       << report.seed << '\n';
}

}  // namespace dnacode
