#include "tvb/campaign.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "tvb/instance_io.hpp"
#include "tvb/rng.hpp"

namespace tvb {

bool is_prime_power(int r) {
    if (r < 2) return false;
    int p = 0;
    for (int d = 2; d * d <= r; ++d)
        if (r % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return true;
    while (r % p == 0) r /= p;
    return r == 1;
}

Target target_from_name(const std::string& name) {
    if (name == "thm51") return Target::Thm51;
    if (name == "cor53") return Target::Cor53;
    if (name == "cor55") return Target::Cor55;
    if (name == "thm57") return Target::Thm57;
    if (name == "thm58") return Target::Thm58;
    if (name == "thm59") return Target::Thm59;
    throw std::invalid_argument("unknown target '" + name + "'");
}

std::string target_name(Target t) {
    switch (t) {
        case Target::Thm51: return "thm51";
        case Target::Cor53: return "cor53";
        case Target::Cor55: return "cor55";
        case Target::Thm57: return "thm57";
        case Target::Thm58: return "thm58";
        case Target::Thm59: return "thm59";
    }
    return "?";
}

CampaignParams make_preset(Target t, int d, int r) {
    CampaignParams p;
    p.d = d;
    p.r = r;
    p.target = t;
    auto fill = [&](int count, int size, int cap) {
        for (int i = 0; i < count; ++i) {
            p.color_sizes.push_back(size);
            p.caps.push_back(cap);
        }
    };
    switch (t) {
        case Target::Thm51:
        case Target::Cor53:
            fill(d + 1, 2 * r - 1, r);
            break;
        case Target::Cor55:
            fill(d, 2 * r - 1, r - 1);
            fill(1, 2 * r - 1, r);
            break;
        case Target::Thm57:
            fill(d + 1, 2 * r - 1, r - 1);
            fill(1, 1, r - 1);
            break;
        case Target::Thm58:
            fill(d, 2 * r - 4, r - 1);
            fill(1, 2 * r - 1, r);
            break;
        case Target::Thm59:
            fill(d + 1, 2 * r - 4, r - 1);
            fill(1, 1, r - 1);
            break;
    }
    return p;
}

namespace {

void fail(Target t, const std::string& msg) {
    throw std::invalid_argument("target " + target_name(t) + ": " + msg);
}

void need_prime_power(const CampaignParams& p, int least) {
    if (p.r < least)
        fail(p.target, "r must be at least " + std::to_string(least));
    if (!is_prime_power(p.r)) fail(p.target, "r must be a prime power");
}

void need_m(const CampaignParams& p, int want, const std::string& label) {
    if (p.m() != want)
        fail(p.target, "needs " + label + " = " + std::to_string(want) +
                           " colors, got " + std::to_string(p.m()));
}

void need_min_size(const CampaignParams& p, int i, int bound,
                   const std::string& boundname) {
    if (p.color_sizes[i] < bound)
        fail(p.target, "color " + std::to_string(i + 1) + " has size " +
                           std::to_string(p.color_sizes[i]) +
                           ", needs at least " + boundname + " = " +
                           std::to_string(bound));
}

void need_cap(const CampaignParams& p, int i, int want,
              const std::string& wantname) {
    if (p.caps[i] != want)
        fail(p.target, "cap " + std::to_string(i + 1) + " must be " +
                           wantname + " = " + std::to_string(want));
}

void need_basics(const CampaignParams& p) {
    if (p.d < 1) fail(p.target, "d must be at least 1");
    if (p.m() < 1) fail(p.target, "needs at least one color");
    if (p.caps.size() != p.color_sizes.size())
        fail(p.target, "caps and sizes must have equal length");
    for (std::size_t i = 0; i < p.color_sizes.size(); ++i)
        if (p.color_sizes[i] < 1)
            fail(p.target, "color sizes must be positive");
    for (std::size_t i = 0; i < p.caps.size(); ++i)
        if (p.caps[i] < 1 || p.caps[i] > p.r)
            fail(p.target, "cap " + std::to_string(i + 1) +
                               " violates 1 <= l_i <= r");
}

}  // namespace

void validate_hypotheses(const CampaignParams& p) {
    need_basics(p);
    int d = p.d, r = p.r, m = p.m();
    switch (p.target) {
        case Target::Thm51:
        case Target::Cor53: {
            need_prime_power(p, 2);
            if (p.target == Target::Cor53) need_m(p, d + 1, "d+1");
            for (int i = 0; i < m; ++i) need_min_size(p, i, 2 * r - 1, "2r-1");
            long long capsum = 0;
            for (int c : p.caps) capsum += c;
            if (capsum <= static_cast<long long>(d + 1) * (r - 1))
                fail(p.target,
                     "cap sum " + std::to_string(capsum) +
                         " must exceed (d+1)(r-1) = " +
                         std::to_string(static_cast<long long>(d + 1) * (r - 1)));
            break;
        }
        case Target::Cor55:
            need_prime_power(p, 2);
            need_m(p, d + 1, "d+1");
            for (int i = 0; i < m; ++i) need_min_size(p, i, 2 * r - 1, "2r-1");
            for (int i = 0; i < d; ++i) need_cap(p, i, r - 1, "r-1");
            need_cap(p, d, r, "r");
            break;
        case Target::Thm57:
            need_prime_power(p, 2);
            need_m(p, d + 2, "d+2");
            for (int i = 0; i <= d; ++i) need_min_size(p, i, 2 * r - 1, "2r-1");
            if (p.color_sizes[d + 1] != 1)
                fail(p.target, "last color must have a single vertex");
            for (int i = 0; i < m; ++i) need_cap(p, i, r - 1, "r-1");
            break;
        case Target::Thm58:
            need_prime_power(p, 3);
            need_m(p, d + 1, "d+1");
            for (int i = 0; i < d; ++i) need_min_size(p, i, 2 * r - 4, "2r-4");
            need_min_size(p, d, 2 * r - 1, "2r-1");
            for (int i = 0; i < d; ++i) need_cap(p, i, r - 1, "r-1");
            need_cap(p, d, r, "r");
            break;
        case Target::Thm59:
            need_prime_power(p, 3);
            need_m(p, d + 2, "d+2");
            for (int i = 0; i <= d; ++i) need_min_size(p, i, 2 * r - 4, "2r-4");
            if (p.color_sizes[d + 1] != 1)
                fail(p.target, "last color must have a single vertex");
            for (int i = 0; i < m; ++i) need_cap(p, i, r - 1, "r-1");
            break;
    }
}

Instance random_instance(const CampaignParams& p, int trial_index) {
    SplitMix64 rng(splitmix64_once(p.seed ^ static_cast<uint64_t>(trial_index)));
    Instance inst;
    inst.d = p.d;
    inst.r = p.r;
    inst.coloring.m = p.m();
    for (int c = 0; c < p.m(); ++c)
        for (int k = 0; k < p.color_sizes[c]; ++k)
            inst.coloring.color_of.push_back(c);
    inst.caps.caps = p.caps;

    PointConfiguration cfg;
    cfg.d = p.d;
    int n = inst.num_vertices();
    if (p.dist == Distribution::Cube) {
        for (int v = 0; v < n; ++v) {
            Point pt;
            for (int c = 0; c < p.d; ++c)
                pt.emplace_back(static_cast<long>(rng.uniform(-1000000, 1000000)));
            cfg.points.push_back(std::move(pt));
        }
    } else {
        std::set<int64_t> taken;
        for (int v = 0; v < n; ++v) {
            int64_t t;
            do {
                t = rng.uniform(-1000000, 1000000);
            } while (!taken.insert(t).second);
            mpz_class base(static_cast<long>(t));
            Point pt;
            for (int c = 1; c <= p.d; ++c) {
                mpz_class pw;
                mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(),
                           static_cast<unsigned long>(c));
                pt.emplace_back(pw);
            }
            cfg.points.push_back(std::move(pt));
        }
    }
    inst.config = std::move(cfg);
    return inst;
}

namespace {

std::string dist_name(Distribution d) {
    return d == Distribution::Cube ? "cube" : "moment";
}

std::string strategy_name(CampaignStrategy s) {
    switch (s) {
        case CampaignStrategy::Auto: return "auto";
        case CampaignStrategy::HeuristicOnly: return "heuristic";
        case CampaignStrategy::ExhaustiveOnly: return "exhaustive";
    }
    return "?";
}

void render_params(std::ostringstream& out, const CampaignParams& p) {
    out << "d " << p.d << "\n";
    out << "r " << p.r << "\n";
    out << "sizes";
    for (int s : p.color_sizes) out << " " << s;
    out << "\n";
    out << "caps";
    for (int c : p.caps) out << " " << c;
    out << "\n";
    out << "trials " << p.trials << "\n";
    out << "seed " << p.seed << "\n";
    out << "dist " << dist_name(p.dist) << "\n";
    out << "enum-bound " << p.enum_bound << "\n";
}

}  // namespace

std::string CampaignReport::render() const {
    std::ostringstream out;
    out << "campaign-report\n";
    out << "target " << target_name(params.target) << "\n";
    render_params(out, params);
    out << "strategy " << strategy_name(params.strategy) << "\n";
    out << "restarts " << params.restarts << "\n";
    out << "outcomes\n";
    for (const auto& t : trials) {
        out << "trial " << t.index << " ";
        switch (t.outcome) {
            case TrialOutcome::Found:
                out << "found " << (t.exhaustive ? "exhaustive" : "heuristic");
                break;
            case TrialOutcome::NotFound: out << "not-found heuristic"; break;
            case TrialOutcome::NotFoundExhaustive:
                out << "not-found exhaustive";
                break;
            case TrialOutcome::BoundExceeded: out << "bound-exceeded"; break;
        }
        out << "\n";
    }
    out << "summary found " << found << " not-found " << not_found
        << " bound-exceeded " << bound_exceeded << "\n";
    out << "contradiction " << (contradiction ? 1 : 0) << "\n";
    if (first_failing_trial) {
        out << "first-failing-trial " << *first_failing_trial << "\n";
        out << "begin-instance\n" << *first_failing_instance << "end-instance\n";
    }
    return out.str();
}

CampaignReport run_campaign(const CampaignParams& p, bool force) {
    if (!force) validate_hypotheses(p);
    CampaignReport rep;
    rep.params = p;
    for (int t = 0; t < p.trials; ++t) {
        Instance inst = random_instance(p, t);
        TrialRecord rec;
        rec.index = t;
        bool decided = false;
        bool found = false;
        if (p.strategy != CampaignStrategy::ExhaustiveOnly) {
            Heuristic h{p.restarts, splitmix64_once(p.seed ^ static_cast<uint64_t>(t))};
            if (find_partition(inst, h)) {
                decided = true;
                found = true;
            } else if (p.strategy == CampaignStrategy::HeuristicOnly) {
                decided = true;
            }
        }
        if (!decided) {
            rec.exhaustive = true;
            try {
                found = find_partition(inst, Exhaustive{p.enum_bound}).has_value();
                decided = true;
            } catch (const EnumerationBoundExceeded&) {
                rec.outcome = TrialOutcome::BoundExceeded;
                ++rep.bound_exceeded;
            }
        }
        if (decided) {
            if (found) {
                rec.outcome = TrialOutcome::Found;
                ++rep.found;
            } else {
                rec.outcome = rec.exhaustive ? TrialOutcome::NotFoundExhaustive
                                             : TrialOutcome::NotFound;
                ++rep.not_found;
                if (rec.exhaustive && !force) rep.contradiction = true;
            }
        }
        if (rec.outcome != TrialOutcome::Found && !rep.first_failing_trial) {
            rep.first_failing_trial = t;
            rep.first_failing_instance = render_instance(inst);
        }
        rep.trials.push_back(rec);
    }
    return rep;
}

std::string HuntReport::render() const {
    std::ostringstream out;
    out << "hunt-report\n";
    render_params(out, params);
    out << "outcomes\n";
    for (const auto& t : trials) {
        out << "trial " << t.index;
        if (t.inconclusive)
            out << " inconclusive";
        else
            out << " count " << t.count << (t.count == 0 ? " candidate" : "");
        out << "\n";
    }
    out << "summary zero-count " << zero_count << " inconclusive "
        << inconclusive << "\n";
    for (const auto& [idx, text] : candidates)
        out << "begin-instance " << idx << "\n" << text << "end-instance\n";
    return out.str();
}

HuntReport hunt_counterexample(const CampaignParams& p, bool force) {
    if (!force) {
        CampaignParams q = p;
        q.target = Target::Thm51;
        need_basics(q);
        if (q.r < 2 || !is_prime_power(q.r))
            throw std::invalid_argument("hunt: r must be a prime power >= 2");
        if (q.m() != q.d + 1)
            throw std::invalid_argument("hunt: needs d+1 colors");
        for (int i = 0; i < q.m(); ++i) {
            if (q.color_sizes[i] < 2 * q.r - 1)
                throw std::invalid_argument(
                    "hunt: color " + std::to_string(i + 1) +
                    " needs size at least 2r-1");
            if (q.caps[i] != q.r - 1)
                throw std::invalid_argument("hunt: caps must all be r-1");
        }
    }
    HuntReport rep;
    rep.params = p;
    for (int t = 0; t < p.trials; ++t) {
        Instance inst = random_instance(p, t);
        HuntTrial rec;
        rec.index = t;
        try {
            rec.count = count_partitions(inst, p.enum_bound);
            if (rec.count == 0) {
                ++rep.zero_count;
                rep.candidates.emplace_back(t, render_instance(inst));
            }
        } catch (const EnumerationBoundExceeded&) {
            rec.inconclusive = true;
            ++rep.inconclusive;
        }
        rep.trials.push_back(rec);
    }
    return rep;
}

}  // namespace tvb
