#pragma once

// Command implementations behind the `tfp` executable. Each command writes
// line-oriented output to `out` and returns the process exit code:
// 0 = success / yes, 1 = no / invalid, 2 = error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bracket.hpp"
#include "exact_solver.hpp"
#include "generator.hpp"
#include "io.hpp"
#include "reductions.hpp"
#include "structure.hpp"
#include "tournament.hpp"
#include "width_params.hpp"

namespace tfp::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

inline Tournament load_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

/// Runs `body`, mapping any exception to an `error=` line and exit code 2.
template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        err << "error=" << e.what() << '\n';
        return kExitError;
    }
}

inline std::string render_arcs(const std::vector<Arc>& arcs) {
    std::string s;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(arcs[i].first) + ">" + std::to_string(arcs[i].second);
    }
    return s;
}

inline void print_witness(std::ostream& out, const Tournament& d, const Bracket& b) {
    out << "bracket=" << render_bracket(b) << '\n';
    const auto seq = play(d, b).sequence;
    for (std::size_t r = 0; r < seq.size(); ++r) {
        out << "round" << (r + 1) << '=';
        for (std::size_t i = 0; i < seq[r].size(); ++i)
            out << (i ? " " : "") << seq[r][i].winner << '>' << seq[r][i].loser;
        out << '\n';
    }
}

enum class Method { Dp, Enum };

struct SolveOptions {
    std::filesystem::path instance;
    Method method = Method::Dp;
    bool witness = false;
    std::optional<std::filesystem::path> witness_out;
};

inline int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Tournament d = load_instance(opt.instance);
        std::optional<Bracket> bracket;
        bool yes = false;
        if (opt.method == Method::Dp) {
            ExactSolver solver(d);
            yes = solver.can_win(d.favorite(), d.players());
            if (yes && (opt.witness || opt.witness_out)) bracket = solver.witness_bracket(d.favorite(), d.players());
        } else {
            bracket = winning_bracket_by_enumeration(d, d.favorite(), d.players());
            yes = bracket.has_value();
        }
        out << "result=" << (yes ? "yes" : "no") << '\n';
        if (yes && opt.witness) print_witness(out, d, *bracket);
        if (yes && opt.witness_out) write_file(*opt.witness_out, render_bracket(*bracket) + "\n");
        return yes ? kExitYes : kExitNo;
    });
}

inline void print_params(std::ostream& out, const Tournament& d, const ParameterReport& r) {
    out << "n=" << d.size() << '\n'
        << "favorite=" << d.favorite() << '\n'
        << "fas=" << r.fas << '\n'
        << "fvs=" << r.fvs << '\n'
        << "sfas_v=" << r.sfas_v << '\n'
        << "sfvs_v=" << r.sfvs_v << '\n'
        << "sfas_in=" << r.sfas_in << '\n'
        << "sfas_out=" << r.sfas_out << '\n'
        << "in_degree=" << r.in_degree << '\n'
        << "out_degree=" << r.out_degree << '\n';
}

inline int cmd_params(const std::filesystem::path& instance, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Tournament d = load_instance(instance);
        print_params(out, d, report(d));
        return kExitYes;
    });
}

/// Prints the condition report. With `with_bracket`, also prints a winning
/// bracket: from the constructive seeding when its conditions hold,
/// otherwise from the exact solver when any sufficient condition holds.
inline int cmd_conditions(const std::filesystem::path& instance, bool with_bracket, std::ostream& out,
                          std::ostream& err) {
    return guarded(err, [&] {
        const Tournament d = load_instance(instance);
        const ConditionReport r = condition_report(d);
        auto flag = [&](const char* key, bool value) { out << key << '=' << (value ? "true" : "false") << '\n'; };
        flag("is_king", r.is_king);
        flag("is_3king", r.is_3king);
        flag("neighbor_acyclic", r.neighbor_acyclic);
        flag("lemma6_holds", r.lemma6_holds);
        flag("lemma8_holds", r.lemma8_holds);
        flag("thm7_holds", r.thm7_holds);
        flag("thm9_holds", r.thm9_holds);
        if (r.matching) out << "matching=" << render_arcs(*r.matching) << '\n';
        if (with_bracket) {
            if (r.thm7_holds) {
                out << "bracket_source=seed_thm7\n";
                print_witness(out, d, seed_thm7(d, d.favorite()));
            } else if (r.lemma6_holds || r.lemma8_holds || r.thm9_holds) {
                out << "bracket_source=exact_solver\n";
                print_witness(out, d, witness_bracket(d));
            }
        }
        return kExitYes;
    });
}

enum class ReduceTarget { SfasV, SfasIn };

inline std::string render_gadget(const GadgetOutput& g) {
    std::string s = render_instance(g.instance);
    s += "# a_star=" + std::to_string(g.a_star) + " b_star=" + std::to_string(g.b_star) + "\n";
    s += "# embedding:";
    for (std::size_t i = 0; i < g.embedding.size(); ++i)
        s += " " + std::to_string(i) + "->" + std::to_string(g.embedding[i]);
    s += "\n";
    return s;
}

inline GadgetOutput make_gadget(const Tournament& d, ReduceTarget target) {
    return target == ReduceTarget::SfasV ? make_special_sfasv(d, d.favorite()) : make_special_sfasin(d, d.favorite());
}

inline int cmd_reduce(const std::filesystem::path& instance, ReduceTarget target,
                      const std::filesystem::path& output, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const GadgetOutput g = make_gadget(load_instance(instance), target);
        write_file(output, render_gadget(g));
        out << "n=" << g.instance.size() << '\n' << "a_star=" << g.a_star << '\n' << "b_star=" << g.b_star << '\n';
        return kExitYes;
    });
}

enum class GenKind { Random, NeighborAcyclic, Tight, SpecialSfasV, SpecialSfasIn };

struct GenOptions {
    GenKind kind = GenKind::Random;
    int n = 8;
    std::uint64_t seed = 1;
    std::optional<int> a_size;
    Enforce enforce = Enforce::None;
    std::filesystem::path output;
};

/// The text `gen` writes. Special kinds draw a random core of n players and
/// emit its 4n-player gadget.
inline std::string generate_text(const GenOptions& opt) {
    switch (opt.kind) {
    case GenKind::Random: return render_instance(random_tournament(opt.n, opt.seed));
    case GenKind::NeighborAcyclic:
        return render_instance(gen_neighbor_acyclic(opt.n, opt.a_size.value_or(opt.n / 2), opt.seed, opt.enforce));
    case GenKind::Tight: return render_instance(tight_no_instance(opt.n));
    case GenKind::SpecialSfasV: return render_gadget(make_special_sfasv(random_tournament(opt.n, opt.seed), 0));
    case GenKind::SpecialSfasIn: return render_gadget(make_special_sfasin(random_tournament(opt.n, opt.seed), 0));
    }
    return {};
}

inline int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        write_file(opt.output, generate_text(opt));
        out << "wrote=" << opt.output.string() << '\n';
        return kExitYes;
    });
}

inline int cmd_check(const std::filesystem::path& instance, const std::filesystem::path& bracket_file,
                     std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Tournament d = load_instance(instance);
        const Bracket b = parse_bracket(read_file(bracket_file));
        if (auto issue = bracket_issue(b, d.size()); issue || b.size() != d.size()) {
            out << "valid=false reason=" << (issue ? *issue : std::string("bracket does not seat every player"))
                << '\n';
            return kExitNo;
        }
        const PlayResult played = play(d, b);
        const bool valid = validate_sequence(d, d.players(), played.sequence);
        out << "valid=" << (valid ? "true" : "false") << " winner=" << played.winner << '\n';
        return valid ? kExitYes : kExitNo;
    });
}

inline constexpr std::string_view kBenchHeader = "instance,n,method,result,millis,states";

struct BenchRow {
    std::string instance;
    int n = 0;
    std::string method;
    std::string result;
    double millis = 0;
    std::size_t states = 0;
};

inline std::vector<BenchRow> bench_instance(const std::filesystem::path& path) {
    const std::string name = path.filename().string();
    std::vector<BenchRow> rows;
    Tournament d;
    try {
        d = load_instance(path);
    } catch (const std::exception&) {
        rows.push_back({name, 0, "dp", "error", 0, 0});
        return rows;
    }
    using Clock = std::chrono::steady_clock;
    auto elapsed = [](Clock::time_point start) {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    };

    BenchRow dp{name, d.size(), "dp", "error", 0, 0};
    const auto t0 = Clock::now();
    try {
        ExactSolver solver(d);
        dp.result = solver.can_win(d.favorite(), d.players()) ? "yes" : "no";
        dp.states = solver.states_touched();
    } catch (const Error&) {
        dp.result = "error";
    }
    dp.millis = elapsed(t0);
    rows.push_back(dp);

    if (is_power_of_two(d.size()) && d.size() <= kMaxEnumerationPlayers) {
        BenchRow en{name, d.size(), "enum", "", 0, 0};
        const auto t1 = Clock::now();
        en.result = winning_bracket_by_enumeration(d, d.favorite(), d.players(), &en.states) ? "yes" : "no";
        en.millis = elapsed(t1);
        rows.push_back(en);
    }
    return rows;
}

/// One CSV row per (instance, method) over every *.tfp file in the corpus,
/// in file-name order. Enumeration only runs on instances of at most 8
/// players; instances the solver rejects report result=error.
inline int cmd_bench(const std::filesystem::path& corpus, int jobs, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(corpus))
            if (entry.is_regular_file() && entry.path().extension() == ".tfp") files.push_back(entry.path());
        std::sort(files.begin(), files.end());

        std::vector<std::vector<BenchRow>> results(files.size());
        const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
        for (std::size_t start = 0; start < files.size(); start += workers) {
            std::vector<std::future<std::vector<BenchRow>>> batch;
            for (std::size_t i = start; i < std::min(files.size(), start + workers); ++i)
                batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, bench_instance,
                                           files[i]));
            for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
        }

        out << kBenchHeader << '\n';
        for (const auto& rows : results) {
            for (const auto& r : rows) {
                std::ostringstream millis;
                millis.setf(std::ios::fixed);
                millis.precision(3);
                millis << r.millis;
                out << r.instance << ',' << r.n << ',' << r.method << ',' << r.result << ',' << millis.str() << ','
                    << r.states << '\n';
            }
        }
        return kExitYes;
    });
}

} // namespace tfp::cli
