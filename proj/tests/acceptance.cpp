// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "tfp/commands.hpp"

using namespace tfp;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs body(i) for i in [0, count) on all hardware threads.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& body) {
    const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o, double secs) {
    std::printf("AC%-2d %s  %s: %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

template <typename Fn>
void criterion(int id, const char* title, Fn&& fn) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    report(id, title, o, seconds_since(start));
}

std::string str(auto&&... parts) {
    std::ostringstream s;
    (s << ... << parts);
    return s.str();
}

Outcome within_budget(Outcome o, double secs, double budget) {
    if (secs > budget) {
        o.pass = false;
        o.detail += str("; over the ", budget, " s budget");
    }
    return o;
}

/// Every orientation of K_4 with every favorite.
std::vector<Tournament> four_player_cases() {
    std::vector<Tournament> cases;
    for (const auto& d : oracle::all_four_player_tournaments())
        for (Player v = 0; v < 4; ++v) cases.push_back(d.with_favorite(v));
    return cases;
}

Tournament shuffle_block(const Tournament& d, PlayerSet block, Xorshift64Star& rng) {
    ArcRelation arcs = d.arcs();
    for (Player x : block) {
        for (Player y : block) {
            if (y <= x) continue;
            arcs[static_cast<std::size_t>(x)].erase(y);
            arcs[static_cast<std::size_t>(y)].erase(x);
            if (rng.coin())
                arcs[static_cast<std::size_t>(x)].insert(y);
            else
                arcs[static_cast<std::size_t>(y)].insert(x);
        }
    }
    return Tournament(arcs, d.favorite());
}

Outcome ac1() {
    const auto start = Clock::now();
    int agree = 0;
    const auto cases = four_player_cases();
    for (const auto& d : cases) {
        std::size_t examined = 0;
        const bool by_enum = winning_bracket_by_enumeration(d, d.favorite(), d.players(), &examined).has_value();
        if (examined > 3) return {false, "more than 3 brackets examined"};
        if (can_win(d) == by_enum) ++agree;
    }
    const double secs = seconds_since(start);
    return within_budget({agree == static_cast<int>(cases.size()), str(agree, "/", cases.size(), " cases agree")}, secs,
                         1.0);
}

Outcome ac2() {
    const auto start = Clock::now();
    int agree = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto d = random_tournament(8, seed);
        std::size_t examined = 0;
        const bool by_enum = winning_bracket_by_enumeration(d, 0, d.players(), &examined).has_value();
        if (!by_enum && examined != 315) return {false, str("seed ", seed, ": only ", examined, " brackets examined")};
        if (can_win(d) == by_enum) ++agree;
    }
    return within_budget({agree == 200, str(agree, "/200 instances agree")}, seconds_since(start), 30.0);
}

Outcome ac3() {
    const auto start = Clock::now();
    const auto cases = four_player_cases();
    std::vector<int> bad(cases.size(), 0);
    std::vector<int> yes(cases.size(), 0);
    parallel_for(cases.size(), [&](std::size_t i) {
        const Tournament& d = cases[i];
        const bool expected = can_win(d);
        yes[i] = expected;
        const auto g3 = make_special_sfasv(d, d.favorite());
        const auto g5 = make_special_sfasin(d, d.favorite());
        if (can_win(g3.instance) != expected) bad[i] |= 1;
        if (can_win(g5.instance) != expected) bad[i] |= 2;
        if (sfas_number(g3.instance, PlayerSet{0}) != 1) bad[i] |= 4;
        if (sfvs_number(g3.instance, PlayerSet{0}) != 1) bad[i] |= 8;
        if (sfas_number(g5.instance, g5.instance.in_neighbors(0, g5.instance.players())) != 1) bad[i] |= 16;
    });
    int verdict = 0, params = 0, yes_count = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        verdict += (bad[i] & 3) != 0;
        params += (bad[i] & 28) != 0;
        yes_count += yes[i];
    }
    const double secs = seconds_since(start);
    return within_budget({verdict == 0 && params == 0,
                          str(cases.size() - static_cast<std::size_t>(verdict), "/", cases.size(),
                              " (D, v*) verdicts preserved by both gadgets (", yes_count, " yes); ", params,
                              " parameter certificate failures")},
                         secs, 1800.0);
}

Outcome ac4() {
    Xorshift64Star rng(2024);
    const auto core_yes = Tournament::from_matrix({{false, true}, {false, false}}, 0);
    const auto core_no = Tournament::from_matrix({{false, false}, {true, false}}, 0);
    int instances = 0, crowning = 0, violations = 0, attempts = 0;
    std::vector<std::string> seen;
    while (instances < 24 && attempts < 2000) {
        ++attempts;
        const auto g = make_special_sfasv(attempts % 2 ? core_yes : core_no, 0);
        const Tournament d = shuffle_block(shuffle_block(g.instance, PlayerSet{1, 2, 3, 4, 5}, rng), PlayerSet{6, 7}, rng);
        if (!is_special(d, 0, g.a_star, g.b_star) || !can_win(d)) continue;
        const std::string key = render_instance(d);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        ++instances;
        for (const Bracket& b : enumerate_brackets(d.players())) {
            const auto r = play(d, b);
            if (r.winner != 0) continue;
            ++crowning;
            if (!verify_lemma2_properties(d, 0, r.sequence).all()) ++violations;
        }
    }
    return {instances >= 20 && violations == 0 && crowning > 0,
            str(instances, " distinct special yes-instances, ", crowning, " crowning brackets, ", violations,
                " violations")};
}

Outcome ac5() {
    const auto start = Clock::now();
    int ok = 0, total = 0;
    std::string first_failure;
    for (int n : {4, 8, 16}) {
        const int lo = (n + 2) / 3;
        const int span = n - 2 - lo + 1;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            ++total;
            const int a_size = lo + static_cast<int>(seed % static_cast<std::uint64_t>(span));
            try {
                const auto d = gen_neighbor_acyclic(n, a_size, seed * 1000 + static_cast<std::uint64_t>(n), Enforce::Thm7);
                const auto r = seed_thm7_traced(d, 0);
                const bool levels_ok = std::all_of(r.levels.begin(), r.levels.end(), [](const Thm7Level& l) {
                    return l.invariant_holds && l.out_bound_holds;
                });
                if (play(d, r.bracket).winner == 0 && levels_ok &&
                    static_cast<int>(r.levels.size()) == log2_exact(n))
                    ++ok;
                else if (first_failure.empty())
                    first_failure = str("n=", n, " seed=", seed);
            } catch (const std::exception& e) {
                if (first_failure.empty()) first_failure = str("n=", n, " seed=", seed, ": ", e.what());
            }
        }
    }
    std::string detail = str(ok, "/", total, " instances crowned with invariant and bound at every round");
    if (!first_failure.empty()) detail += "; first failure " + first_failure;
    return within_budget({ok == total, detail}, seconds_since(start), 10.0);
}

Outcome ac6() {
    int ok = 0;
    std::string first_failure;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const int a_size = 3 + static_cast<int>(seed % 4);
        try {
            const auto d = gen_neighbor_acyclic(8, a_size, seed, Enforce::Thm9);
            const auto m = king_matching(d, 0);
            const bool matching_ok = is_arc_matching(d, m, d.out_neighbors(0, d.players()), d.in_neighbors(0, d.players()));
            if (check_thm9(d, 0) && matching_ok && 2 * (a_size + static_cast<int>(m.size())) > 8 && can_win(d))
                ++ok;
            else if (first_failure.empty())
                first_failure = str("seed ", seed);
        } catch (const std::exception& e) {
            if (first_failure.empty()) first_failure = str("seed ", seed, ": ", e.what());
        }
    }
    const bool tight_no = !can_win(tight_no_instance(8)) && !can_win(tight_no_instance(4));
    std::string detail = str(ok, "/100 instances DP-yes with |A|+k > n/2; tight n=4,8 ",
                             tight_no ? "DP-no" : "NOT DP-no");
    if (!first_failure.empty()) detail += "; first failure " + first_failure;
    return {ok == 100 && tight_no, detail};
}

Outcome ac7() {
    std::vector<Tournament> corpus = four_player_cases();
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
        corpus.push_back(random_tournament(6 + static_cast<int>(seed % 3), seed));
    std::vector<std::vector<std::string>> found(corpus.size());
    std::vector<int> neighbor_acyclic(corpus.size(), 0);
    parallel_for(corpus.size(), [&](std::size_t i) {
        const bool na = is_neighbor_acyclic(corpus[i]);
        neighbor_acyclic[i] = na;
        found[i] = inequality_violations(report(corpus[i]), na);
    });
    std::map<std::string, int> by_name;
    int total = 0, na_count = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        na_count += neighbor_acyclic[i];
        for (const auto& name : found[i]) {
            ++by_name[name];
            ++total;
        }
    }
    std::string detail = str(corpus.size(), " instances (", na_count, " neighbor-acyclic), ", total, " violations");
    for (const auto& [name, count] : by_name) detail += str("; ", name, " x", count);
    return {total == 0, detail};
}

Outcome ac8() {
    int checked = 0, kings = 0;
    for (std::uint64_t seed = 1; checked < 100 && seed < 10000; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        const int a_size = 1 + static_cast<int>((seed / 9) % static_cast<std::uint64_t>(n - 2));
        const auto d = gen_neighbor_acyclic(n, a_size, seed, Enforce::None);
        if (!sources(d).empty()) continue;
        ++checked;
        kings += is_3king(d, 0);
    }
    return {checked == 100 && kings == 100, str(kings, "/", checked, " favorites are 3-kings")};
}

Outcome ac9() {
    std::vector<Tournament> corpus = four_player_cases();
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto d = random_tournament(8, seed);
        for (Player v = 0; v < 8; ++v) corpus.push_back(d.with_favorite(v));
    }
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        corpus.push_back(gen_neighbor_acyclic(8, 1 + static_cast<int>(seed % 6), seed, Enforce::None));
        corpus.push_back(gen_neighbor_acyclic(8, 3 + static_cast<int>(seed % 4), seed, Enforce::Thm9));
    }
    std::vector<int> status(corpus.size(), 0); // bit 0: 3-king matching condition, bit 1: king matching-size condition, bit 2: counterexample
    parallel_for(corpus.size(), [&](std::size_t i) {
        const Tournament& d = corpus[i];
        const Player v = d.favorite();
        int s = 0;
        if (is_3king(d, v) && check_lemma6(d, v).holds) s |= 1;
        if (is_king(d, v) && check_lemma8(d, v).holds) s |= 2;
        if (s && !can_win(d)) s |= 4;
        status[i] = s;
    });
    int l6 = 0, l8 = 0, bad = 0;
    for (int s : status) {
        l6 += (s & 1) != 0;
        l8 += (s & 2) != 0;
        bad += (s & 4) != 0;
    }
    return {bad == 0 && l6 > 0 && l8 > 0,
            str(corpus.size(), " instances; check_lemma6 holds on ", l6, ", check_lemma8 on ", l8, "; ", bad,
                " counterexamples")};
}

Outcome ac10() {
    int files = 0, round_trips = 0, witnesses = 0, replayed = 0;
    const fs::path scratch = fs::temp_directory_path() / "tfp_acceptance";
    fs::create_directories(scratch);
    std::vector<fs::path> golden;
    for (const auto& entry : fs::directory_iterator(TFP_GOLDEN_DIR))
        if (entry.path().extension() == ".tfp") golden.push_back(entry.path());
    std::sort(golden.begin(), golden.end());
    for (const auto& path : golden) {
        ++files;
        const std::string text = cli::read_file(path);
        const Tournament d = parse_instance(text);
        std::string canonical;
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);)
            if (line.empty() || line.front() != '#') canonical += line + "\n";
        if (render_instance(d) == canonical && parse_instance(render_instance(d)) == d) ++round_trips;

        if (!is_power_of_two(d.size()) || !can_win(d)) continue;
        ++witnesses;
        const fs::path bracket = scratch / (path.stem().string() + ".bracket");
        std::ostringstream out, err;
        cli::SolveOptions opt{path, cli::Method::Dp, false, bracket};
        if (cli::cmd_solve(opt, out, err) != cli::kExitYes) continue;
        std::ostringstream check_out;
        const int code = cli::cmd_check(path, bracket, check_out, err);
        if (code == cli::kExitYes && check_out.str() == str("valid=true winner=", d.favorite(), "\n")) ++replayed;
    }
    return {files > 0 && round_trips == files && replayed == witnesses && witnesses > 0,
            str(round_trips, "/", files, " golden files round-trip; ", replayed, "/", witnesses,
                " witness brackets replay and crown the favorite")};
}

} // namespace

int main() {
    criterion(1, "DP vs enumeration, all 4-player instances", ac1);
    criterion(2, "DP vs enumeration, 200 random 8-player instances", ac2);
    criterion(3, "gadget verdict equivalence and parameter certificates", ac3);
    criterion(4, "structure of winning brackets on special instances", ac4);
    criterion(5, "constructive seeding on neighbor-acyclic instances", ac5);
    criterion(6, "king matching instances and tight no-instances", ac6);
    criterion(7, "parameter inequalities", ac7);
    criterion(8, "favorite is a 3-king without a source", ac8);
    criterion(9, "sufficient conditions imply DP-yes", ac9);
    criterion(10, "instance format and witness replay", ac10);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
