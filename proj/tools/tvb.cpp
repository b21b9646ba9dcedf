#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tvb/campaign.hpp"
#include "tvb/homology.hpp"
#include "tvb/instance_io.hpp"
#include "tvb/search.hpp"
#include "tvb/simplicial_complex.hpp"
#include "tvb/svg.hpp"

namespace {

using namespace tvb;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

std::vector<uint16_t> parse_primes(const std::string& csv) {
    std::vector<uint16_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = std::stoi(tok);
        ModP check(static_cast<uint16_t>(v));  // validates prime and range
        out.push_back(check.p);
    }
    if (out.empty()) throw std::invalid_argument("--primes needs at least one prime");
    return out;
}

std::string conn_str(const ConnectivityResult& c) {
    return c.all_vanishing ? "inf" : std::to_string(c.value);
}

int run_conn_check(int max_rows, int max_cols,
                   const std::vector<uint16_t>& primes,
                   const std::string& out_path) {
    std::ostringstream out;
    bool any_fail = false;
    for (int m = 1; m <= max_rows; ++m)
        for (int n = 1; n <= max_cols; ++n) {
            if (m == 1 && n == 1) {
                out << "m 1 n 1 formula -1 SKIP contractible\n";
                continue;
            }
            int formula = connectivity_formula(m, n);
            SimplicialComplex K = chessboard(m, n);
            out << "m " << m << " n " << n << " formula " << formula;
            bool vanishing_ok = true;
            bool witnessed = false;
            for (uint16_t p : primes) {
                ConnectivityResult c = homological_connectivity(K, p);
                out << " p" << p << " " << conn_str(c);
                if (!c.all_vanishing && c.value < formula) vanishing_ok = false;
                if (!c.all_vanishing && c.value == formula) witnessed = true;
            }
            if (!vanishing_ok) {
                out << " FAIL\n";
                any_fail = true;
            } else if (!witnessed) {
                out << " FINDING all-vanishing-above-formula\n";
            } else {
                out << " PASS\n";
            }
        }
    emit(out_path, out.str());
    return any_fail ? 2 : 0;
}

std::string report_verify(const VerificationReport& rep) {
    std::ostringstream out;
    out << "structure " << (rep.structure_ok ? "ok" : "violated") << "\n";
    out << "rainbow " << (rep.rainbow_ok ? "ok" : "violated") << "\n";
    if (rep.intersection_ok)
        out << "intersection " << (*rep.intersection_ok ? "ok" : "violated") << "\n";
    else
        out << "intersection unchecked\n";
    out << "caps " << (rep.caps_ok ? "ok" : "violated") << "\n";
    out << "usage";
    for (int u : rep.usage) out << " " << u;
    out << "\n";
    out << "first-violation "
        << (rep.first_violation.empty() ? "none" : rep.first_violation) << "\n";
    out << "verdict " << (rep.ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constrained colored Tverberg workbench"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    std::string primes_csv = "2,3,5";
    uint64_t enum_bound = 10000000;
    std::string out_path;
    app.add_option("--seed", seed, "random seed");
    app.add_option("--primes", primes_csv, "comma-separated primes, default 2,3,5");
    app.add_option("--enum-bound", enum_bound, "exhaustive enumeration guard");
    app.add_option("--out", out_path, "output file, default stdout");

    auto* cb = app.add_subcommand("chessboard", "write a chessboard complex as cx1");
    int cb_rows = 0, cb_cols = 0, cb_skel = -1;
    cb->add_option("--rows", cb_rows, "rows m")->required();
    cb->add_option("--cols", cb_cols, "columns n")->required();
    cb->add_option("--skeleton", cb_skel, "restrict to the k-skeleton");
    cb->fallthrough();

    auto* ho = app.add_subcommand("homology", "reduced Betti numbers of a cx1 complex");
    std::string ho_complex;
    int ho_prime = 0;
    ho->add_option("--complex", ho_complex, "cx1 file")->required();
    ho->add_option("--prime", ho_prime, "single prime, overrides --primes");
    ho->fallthrough();

    auto* cc = app.add_subcommand("conn-check",
                                  "compare chessboard connectivity formula with homology");
    int cc_rows = 5, cc_cols = 5;
    cc->add_option("--max-rows", cc_rows, "largest m");
    cc->add_option("--max-cols", cc_cols, "largest n");
    cc->fallthrough();

    auto* fd = app.add_subcommand("find", "search for a valid partition");
    std::string fd_instance, fd_strategy = "auto";
    int fd_restarts = 10000;
    fd->add_option("--instance", fd_instance, "tvb1 file")->required();
    fd->add_option("--strategy", fd_strategy, "auto|heuristic|exhaustive")
        ->check(CLI::IsMember({"auto", "heuristic", "exhaustive"}));
    fd->add_option("--restarts", fd_restarts, "heuristic restarts");
    fd->fallthrough();

    auto* vf = app.add_subcommand("verify", "check a partition against an instance");
    std::string vf_instance, vf_partition;
    bool vf_nogeom = false;
    vf->add_option("--instance", vf_instance, "tvb1 file")->required();
    vf->add_option("--partition", vf_partition, "part1 file")->required();
    vf->add_flag("--no-geometry", vf_nogeom, "skip the intersection check");
    vf->fallthrough();

    auto* ct = app.add_subcommand("count", "count all valid canonical partitions");
    std::string ct_instance;
    ct->add_option("--instance", ct_instance, "tvb1 file")->required();
    ct->fallthrough();

    auto* cp = app.add_subcommand("campaign", "randomized theorem validation");
    std::string cp_preset, cp_dist = "cube", cp_strategy = "auto";
    int cp_d = 1, cp_r = 2, cp_trials = 100, cp_restarts = 10000;
    std::vector<int> cp_sizes, cp_caps;
    bool cp_force = false;
    cp->add_option("--preset", cp_preset, "cor53|cor55|thm57|thm58|thm59")
        ->check(CLI::IsMember({"cor53", "cor55", "thm57", "thm58", "thm59"}));
    cp->add_option("--d", cp_d, "ambient dimension");
    cp->add_option("--r", cp_r, "number of faces");
    cp->add_option("--sizes", cp_sizes, "color sizes")->delimiter(',');
    cp->add_option("--caps", cp_caps, "cap vector")->delimiter(',');
    cp->add_option("--trials", cp_trials, "trial count");
    cp->add_option("--dist", cp_dist, "cube|moment")
        ->check(CLI::IsMember({"cube", "moment"}));
    cp->add_option("--strategy", cp_strategy, "auto|heuristic|exhaustive")
        ->check(CLI::IsMember({"auto", "heuristic", "exhaustive"}));
    cp->add_option("--restarts", cp_restarts, "heuristic restarts");
    cp->add_flag("--force", cp_force, "skip hypothesis validation");
    cp->fallthrough();

    auto* hu = app.add_subcommand("hunt", "exhaustive counterexample hunt");
    std::string hu_dist = "cube";
    int hu_d = 1, hu_r = 2, hu_trials = 50;
    std::vector<int> hu_sizes, hu_caps;
    bool hu_force = false;
    hu->add_option("--d", hu_d, "ambient dimension");
    hu->add_option("--r", hu_r, "number of faces");
    hu->add_option("--sizes", hu_sizes, "color sizes, default 2r-1 each")
        ->delimiter(',');
    hu->add_option("--caps", hu_caps, "cap vector, only with --force")->delimiter(',');
    hu->add_option("--trials", hu_trials, "trial count");
    hu->add_option("--dist", hu_dist, "cube|moment")
        ->check(CLI::IsMember({"cube", "moment"}));
    hu->add_flag("--force", hu_force, "skip hypothesis validation");
    hu->fallthrough();

    auto* pl = app.add_subcommand("plot", "emit an SVG figure for a d=2 instance");
    std::string pl_instance, pl_partition;
    pl->add_option("--instance", pl_instance, "tvb1 file")->required();
    pl->add_option("--partition", pl_partition, "part1 file");
    pl->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::vector<uint16_t> primes = parse_primes(primes_csv);

        if (app.got_subcommand(cb)) {
            SimplicialComplex K = chessboard(cb_rows, cb_cols);
            if (cb_skel >= 0) K = skeleton(K, cb_skel);
            emit(out_path, write_cx1(K));
            return 0;
        }

        if (app.got_subcommand(ho)) {
            SimplicialComplex K = read_cx1_file(ho_complex);
            std::vector<uint16_t> ps =
                ho_prime ? std::vector<uint16_t>{static_cast<uint16_t>(ho_prime)}
                         : primes;
            std::ostringstream out;
            for (uint16_t p : ps) {
                ModP check(p);
                BettiProfile b = betti_numbers(K, p);
                out << "betti " << p;
                for (long long x : b.reduced_betti) out << " " << x;
                out << "\n";
            }
            emit(out_path, out.str());
            return 0;
        }

        if (app.got_subcommand(cc))
            return run_conn_check(cc_rows, cc_cols, primes, out_path);

        if (app.got_subcommand(fd)) {
            Instance inst = read_instance_file(fd_instance);
            std::optional<RainbowPartition> part;
            if (fd_strategy == "heuristic") {
                part = find_partition(inst, Heuristic{fd_restarts, seed});
            } else if (fd_strategy == "exhaustive") {
                part = find_partition(inst, Exhaustive{enum_bound});
            } else {
                part = find_partition(inst, Heuristic{fd_restarts, seed});
                if (!part) part = find_partition(inst, Exhaustive{enum_bound});
            }
            emit(out_path, part ? render_partition(*part) : "none\n");
            return 0;
        }

        if (app.got_subcommand(vf)) {
            Instance inst = read_instance_file(vf_instance);
            RainbowPartition part = read_partition_file(vf_partition);
            if (part.witness && inst.config &&
                static_cast<int>(part.witness->size()) != inst.d)
                throw std::invalid_argument("witness dimension mismatch");
            bool geom = !vf_nogeom && inst.config.has_value();
            VerificationReport rep = verify_partition(inst, part, geom);
            emit(out_path, report_verify(rep));
            return rep.ok() ? 0 : 2;
        }

        if (app.got_subcommand(ct)) {
            Instance inst = read_instance_file(ct_instance);
            long long n = count_partitions(inst, enum_bound);
            emit(out_path, "count " + std::to_string(n) + "\n");
            return 0;
        }

        if (app.got_subcommand(cp)) {
            CampaignParams params;
            if (!cp_preset.empty())
                params = make_preset(target_from_name(cp_preset), cp_d, cp_r);
            params.d = cp_d;
            params.r = cp_r;
            if (!cp_sizes.empty()) params.color_sizes = cp_sizes;
            if (!cp_caps.empty()) params.caps = cp_caps;
            if (params.color_sizes.empty())
                throw std::invalid_argument("campaign needs --sizes or --preset");
            if (params.caps.empty())
                throw std::invalid_argument("campaign needs --caps or --preset");
            params.trials = cp_trials;
            params.seed = seed;
            params.dist = cp_dist == "cube" ? Distribution::Cube : Distribution::Moment;
            params.strategy = cp_strategy == "auto" ? CampaignStrategy::Auto
                              : cp_strategy == "heuristic"
                                  ? CampaignStrategy::HeuristicOnly
                                  : CampaignStrategy::ExhaustiveOnly;
            params.restarts = cp_restarts;
            params.enum_bound = enum_bound;
            auto t0 = std::chrono::steady_clock::now();
            CampaignReport rep = run_campaign(params, cp_force);
            auto t1 = std::chrono::steady_clock::now();
            std::cerr << "wall-time-ms "
                      << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                      << "\n";
            emit(out_path, rep.render());
            if (rep.contradiction) return 2;
            if (rep.bound_exceeded > 0) return 3;
            return 0;
        }

        if (app.got_subcommand(hu)) {
            CampaignParams params;
            params.d = hu_d;
            params.r = hu_r;
            params.color_sizes =
                hu_sizes.empty()
                    ? std::vector<int>(static_cast<std::size_t>(hu_d) + 1, 2 * hu_r - 1)
                    : hu_sizes;
            params.caps = hu_caps.empty()
                              ? std::vector<int>(params.color_sizes.size(), hu_r - 1)
                              : hu_caps;
            params.trials = hu_trials;
            params.seed = seed;
            params.dist = hu_dist == "cube" ? Distribution::Cube : Distribution::Moment;
            params.enum_bound = enum_bound;
            auto t0 = std::chrono::steady_clock::now();
            HuntReport rep = hunt_counterexample(params, hu_force);
            auto t1 = std::chrono::steady_clock::now();
            std::cerr << "wall-time-ms "
                      << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                      << "\n";
            emit(out_path, rep.render());
            return rep.inconclusive > 0 ? 3 : 0;
        }

        if (app.got_subcommand(pl)) {
            Instance inst = read_instance_file(pl_instance);
            std::optional<RainbowPartition> part;
            if (!pl_partition.empty()) part = read_partition_file(pl_partition);
            emit(out_path, emit_svg(inst, part));
            return 0;
        }
    } catch (const EnumerationBoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
