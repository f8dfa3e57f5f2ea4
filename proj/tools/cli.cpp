#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnacode/dnacode.hpp"

namespace dnacode::cli {

namespace {

struct Options {
    std::string code_name;
    std::string spec_path;
    std::vector<std::string> files;
    std::uint64_t seed = 0;
    std::optional<std::size_t> count;
    std::optional<double> rate;
    std::string pattern;
    std::uint64_t trials = 1000;
    std::optional<std::size_t> max_weight;
    std::string format = "tsv";
    bool lenient = false;
    bool grouped = false;
    unsigned threads = 1;
};

// Thrown for argument problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputLine {
    std::string where;
    std::string text;
};

std::string first_field(const std::string& line) { return line.substr(0, line.find('\t')); }

/// Non-blank, non-'#' lines from the named files (or `in`), first TSV column only.
std::vector<InputLine> read_lines(const Options& opt, std::istream& in) {
    std::vector<InputLine> lines;
    auto consume = [&](std::istream& is, const std::string& name) {
        std::string line;
        std::size_t no = 0;
        while (std::getline(is, line)) {
            ++no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '#') continue;
            lines.push_back({name + ":" + std::to_string(no), first_field(line)});
        }
    };
    if (opt.files.empty()) {
        consume(in, "<stdin>");
    } else {
        for (const auto& f : opt.files) {
            std::ifstream is(f);
            if (!is) throw UsageError("cannot open '" + f + "'");
            consume(is, f);
        }
    }
    return lines;
}

std::string read_all(const Options& opt, std::istream& in) {
    std::string data;
    if (opt.files.empty()) {
        data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        return data;
    }
    for (const auto& f : opt.files) {
        std::ifstream is(f, std::ios::binary);
        if (!is) throw UsageError("cannot open '" + f + "'");
        data.append(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
    }
    return data;
}

struct Selected {
    DnaLinearCode code;
    std::string ref;
};

Selected select_code(const Options& opt) {
    if (opt.code_name.empty() == opt.spec_path.empty()) {
        throw UsageError("exactly one of --code or --spec is required");
    }
    if (!opt.code_name.empty()) return {builtin_code(opt.code_name), opt.code_name};
    return {load_code_spec(opt.spec_path), opt.spec_path};
}

DnaWord parse_sized(const std::string& text, std::size_t length) {
    DnaWord w = DnaWord::parse(text);
    if (w.size() != length) {
        throw DimensionError("expected " + std::to_string(length) + " bases, got " + std::to_string(w.size()));
    }
    return w;
}

std::size_t table_weight(const Options& opt, const DnaLinearCode& code) {
    if (opt.max_weight) return *opt.max_weight;
    if (code.k() <= kDefaultEnumerationLimit) return std::max<std::size_t>(1, error_capability(code));
    return 1;
}

ErrorModel select_model(const Options& opt, std::size_t n) {
    const int chosen = opt.count.has_value() + opt.rate.has_value() + !opt.pattern.empty();
    if (chosen != 1) throw UsageError("exactly one of --count, --rate or --pattern is required");
    if (opt.count) return ErrorModel::fixed_count(*opt.count);
    if (opt.rate) return ErrorModel::per_base_rate(*opt.rate);
    return ErrorModel::fixed_pattern(parse_sized(opt.pattern, n));
}

/// Applies `fn` to each input line. Stops at the first failing line unless
/// --lenient, in which case the line is reported and skipped.
int for_each_line(const Options& opt, std::istream& in, std::ostream& err,
                  const std::function<void(const InputLine&, std::size_t)>& fn) {
    const auto lines = read_lines(opt, in);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int status = kOk;
        try {
            fn(lines[i], i);
            continue;
        } catch (const ParseError& e) {
            err << lines[i].where << ": " << e.what() << '\n';
            status = kUsageError;
        } catch (const Error& e) {
            err << lines[i].where << ": " << e.what() << '\n';
            status = kDomainError;
        }
        if (!opt.lenient) return status;
    }
    return kOk;
}

int cmd_codebook(const Options& opt, std::ostream& out) {
    const auto sel = select_code(opt);
    const auto book = enumerate_codebook(sel.code);
    out << "information\tcodeword\n";
    for (const auto& e : book.entries) out << e.information << '\t' << e.codeword << '\n';
    return kOk;
}

int cmd_encode(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto sel = select_code(opt);
    return for_each_line(opt, in, err, [&](const InputLine& line, std::size_t) {
        out << encode(sel.code, parse_sized(line.text, sel.code.k())) << '\n';
    });
}

int cmd_decode(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto sel = select_code(opt);
    const auto table = build_table(sel.code, table_weight(opt, sel.code));
    return for_each_line(opt, in, err, [&](const InputLine& line, std::size_t) {
        const auto r = decode(sel.code, table, parse_sized(line.text, sel.code.n()));
        out << r.corrected << '\t' << r.error_pattern.word() << '\t' << r.information << '\n';
    });
}

int cmd_syndrome(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto sel = select_code(opt);
    return for_each_line(opt, in, err, [&](const InputLine& line, std::size_t) {
        out << syndrome(sel.code, parse_sized(line.text, sel.code.n())) << '\n';
    });
}

int cmd_check(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto sel = select_code(opt);
    return for_each_line(opt, in, err, [&](const InputLine& line, std::size_t) {
        out << (is_codeword(sel.code, parse_sized(line.text, sel.code.n())) ? "ok" : "not-codeword") << '\n';
    });
}

int cmd_corrupt(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto sel = select_code(opt);
    const ErrorModel model = select_model(opt, sel.code.n());
    model.validate_for(sel.code.n());
    return for_each_line(opt, in, err, [&](const InputLine& line, std::size_t index) {
        const auto inj = inject(parse_sized(line.text, sel.code.n()), model, derive_seed(opt.seed, index));
        out << inj.received << '\t' << inj.true_error.word() << '\n';
    });
}

int cmd_analyze(const Options& opt, std::ostream& out) {
    const auto sel = select_code(opt);
    const std::size_t d = min_distance(sel.code);
    const std::size_t size = std::size_t{1} << (2 * sel.code.k());
    if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["code"] = sel.ref;
        doc["n"] = sel.code.n();
        doc["k"] = sel.code.k();
        doc["d_min"] = d;
        doc["t"] = error_capability(d);
        doc["codewords"] = size;
        out << doc.dump(2) << '\n';
        return kOk;
    }
    out << "code\t" << sel.ref << "\nn\t" << sel.code.n() << "\nk\t" << sel.code.k() << "\nd_min\t" << d
        << "\nt\t" << error_capability(d) << "\ncodewords\t" << size << '\n';
    return kOk;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
    const auto sel = select_code(opt);
    const ErrorModel model = select_model(opt, sel.code.n());
    const auto table = build_table(sel.code, table_weight(opt, sel.code));
    const auto report = run_experiment(sel.code, table, model, opt.trials, opt.seed, opt.threads);
    write_report(out, report, sel.ref, model, opt.format == "json" ? ReportFormat::Json : ReportFormat::Tsv);
    return kOk;
}

int cmd_text_encode(const Options& opt, std::istream& in, std::ostream& out) {
    const auto sel = select_code(opt);
    const std::string data = read_all(opt, in);
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(data.data());
    write_encoded_message(out, message_encode(sel.code, {bytes, data.size()}, sel.ref));
    return kOk;
}

int cmd_text_decode(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto sel = select_code(opt);
    std::istringstream text(read_all(opt, in));
    const EncodedMessage msg = read_encoded_message(text);
    if (msg.code_ref != sel.ref) {
        err << "message was encoded with '" << msg.code_ref << "', not '" << sel.ref << "'\n";
        return kDomainError;
    }
    const auto table = build_table(sel.code, table_weight(opt, sel.code));
    const auto bytes = message_decode(sel.code, table, msg);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return kOk;
}

int cmd_table(const Options& opt, std::ostream& out) {
    const auto sel = select_code(opt);
    const auto table = build_table(sel.code, table_weight(opt, sel.code));
    if (opt.grouped) {
        out << table_report(table, ReportStyle::Grouped);
    } else {
        write_table_tsv(out, table);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"DNA (n,k) linear block codes: encode, decode, analyze, simulate", "dnacode"};
    app.require_subcommand(1, 1);
    Options opt;

    auto add_selector = [&](CLI::App* sub) {
        auto* code = sub->add_option("--code", opt.code_name, "Built-in code (dna-7-4, dna-6-3)");
        auto* spec = sub->add_option("--spec", opt.spec_path, "Code-spec JSON file");
        code->excludes(spec);
        spec->excludes(code);
    };
    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("files", opt.files, "Input files (default: standard input)");
        sub->add_flag("--lenient", opt.lenient, "Report and skip bad lines instead of aborting");
    };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--count", opt.count, "Substitutions per word");
        sub->add_option("--rate", opt.rate, "Per-base substitution probability");
        sub->add_option("--pattern", opt.pattern, "Fixed error pattern applied to every word");
        sub->add_option("--seed", opt.seed, "Master random seed")->default_val(0);
    };
    auto add_weight = [&](CLI::App* sub) {
        sub->add_option("--max-weight", opt.max_weight, "Heaviest error pattern in the decoding table (default: t)");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    };

    struct Sub {
        CLI::App* app;
        std::function<int()> handler;
    };
    std::vector<Sub> subs;
    auto define = [&](const char* name, const char* help, std::function<int()> fn) {
        auto* sub = app.add_subcommand(name, help);
        add_selector(sub);
        subs.push_back({sub, std::move(fn)});
        return sub;
    };

    define("codebook", "List all (information, codeword) pairs", [&] { return cmd_codebook(opt, out); });
    add_inputs(define("encode", "Encode information words", [&] { return cmd_encode(opt, in, out, err); }));
    {
        auto* s = define("decode", "Correct received words", [&] { return cmd_decode(opt, in, out, err); });
        add_inputs(s);
        add_weight(s);
    }
    add_inputs(define("syndrome", "Compute syndromes", [&] { return cmd_syndrome(opt, in, out, err); }));
    add_inputs(define("check", "Report whether each word is a codeword", [&] { return cmd_check(opt, in, out, err); }));
    {
        auto* s = define("corrupt", "Inject substitution errors", [&] { return cmd_corrupt(opt, in, out, err); });
        add_inputs(s);
        add_model(s);
    }
    add_format(define("analyze", "Brute-force code metrics", [&] { return cmd_analyze(opt, out); }));
    {
        auto* s = define("simulate", "Channel simulation", [&] { return cmd_simulate(opt, out); });
        add_model(s);
        add_weight(s);
        add_format(s);
        s->add_option("--trials", opt.trials, "Number of transmissions")->default_val(1000)->check(CLI::PositiveNumber);
        s->add_option("--threads", opt.threads, "Worker threads")->default_val(1)->check(CLI::PositiveNumber);
    }
    {
        auto* s = define("text-encode", "Encode bytes into an encoded-message file", [&] { return cmd_text_encode(opt, in, out); });
        s->add_option("files", opt.files, "Input files (default: standard input)");
    }
    {
        auto* s = define("text-decode", "Decode an encoded-message file to bytes",
                         [&] { return cmd_text_decode(opt, in, out, err); });
        s->add_option("files", opt.files, "Encoded-message file (default: standard input)");
        add_weight(s);
    }
    {
        auto* s = define("table", "Syndrome decoding table", [&] { return cmd_table(opt, out); });
        add_weight(s);
        s->add_flag("--grouped", opt.grouped, "Fold T/G/C families into wildcard rows");
    }

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("dnacode");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        for (const auto& s : subs) {
            if (s.app->parsed()) return s.handler();
        }
        return kUsageError;
    } catch (const UsageError& e) {
        err << "dnacode: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParseError& e) {
        err << "dnacode: " << e.what() << '\n';
        return kUsageError;
    } catch (const LookupError& e) {
        err << "dnacode: " << e.what() << '\n';
        return kUsageError;
    } catch (const ConstructionError& e) {
        err << "dnacode: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "dnacode: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace dnacode::cli
