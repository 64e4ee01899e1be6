#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "mary/congruence.hpp"
#include "mary/digits.hpp"
#include "mary/partitions.hpp"
#include "mary/report.hpp"
#include "mary/stratification.hpp"

namespace {

using mary::Nat;
using ordered_json = nlohmann::ordered_json;

struct Range {
    Nat lo = 0;
    Nat hi = 0;
};

/* "7" or "2..7", both bounds inclusive */
Range parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoull(text);
    } else {
        r.lo = std::stoull(text.substr(0, dots));
        r.hi = std::stoull(text.substr(dots + 2));
    }
    if (r.lo > r.hi)
        throw CLI::ValidationError("range lower bound exceeds upper bound: " + text);
    return r;
}

int run_count(Nat n, Nat base)
{
    std::cout << mary::count_line(n, base) << "\n";
    return 0;
}

int run_enumerate(Nat n, Nat base, const std::string& filter, bool with_nops, Nat cap)
{
    const mary::BaseMDigits nd = mary::to_base_m(n, base);
    const std::size_t width = nd.length();
    Nat scanned = 0;

    auto tick = [&] {
        if (++scanned > cap)
            throw mary::CapExceeded(cap);
    };
    auto emit = [&](const std::vector<Nat>& mults) {
        std::vector<Nat> padded(width, 0);
        for (std::size_t i = 0; i < mults.size() && i < width; ++i)
            padded[i] = mults[i];
        std::cout << mary::format_mults(width == 0 ? mults : padded);
        if (with_nops) {
            Nat parts = 0;
            for (Nat m : mults)
                parts += m;
            std::cout << " " << parts;
        }
        std::cout << "\n";
    };

    if (filter == "simple") {
        mary::SimplePartitionEnumerator e(n, base);
        while (e.next()) {
            tick();
            emit(e.mults());
        }
    } else {
        mary::PartitionEnumerator e(n, base);
        while (e.next()) {
            tick();
            if (filter == "nonsimple") {
                bool simple = true;
                for (std::size_t i = 1; i < e.mults().size() && simple; ++i)
                    simple = e.mults()[i] <= nd.digit(i);
                if (simple)
                    continue;
            }
            emit(e.mults());
        }
    }
    return 0;
}

int run_stratify(Nat n, Nat base, const std::string& format, Nat cap)
{
    const mary::Stratification s = mary::stratify(n, base, cap);
    if (format == "json")
        std::cout << mary::stratification_json(s);
    else
        std::cout << mary::stratification_text(s);
    return 0;
}

struct ClaimSummary {
    std::string claim;
    std::uint64_t checked = 0;
    std::uint64_t held = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
};

int run_verify(const std::vector<std::string>& claims, const Range& bases, const Range& ns,
               std::vector<Nat> cs, Nat cap, const std::string& format)
{
    static const std::vector<std::string> known = {"afs", "equidist_N", "digit_criterion",
                                                   "equidist_S", "nmc"};
    for (const std::string& c : claims)
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw CLI::ValidationError("unknown claim: " + c);
    if (cs.empty())
        cs = {0};

    std::vector<ClaimSummary> summaries;
    std::vector<std::string> witnesses;

    for (const std::string& claim : known) {
        if (std::find(claims.begin(), claims.end(), claim) == claims.end())
            continue;
        ClaimSummary sum;
        sum.claim = claim;
        for (Nat m = bases.lo; m <= bases.hi; ++m) {
            mary::PartitionCounter counter(m);
            const mary::Natural cap_count{cap};
            for (Nat n = ns.lo; n <= ns.hi; ++n) {
                /* claims that enumerate skip grid points past the cap */
                if (claim == "equidist_N" || claim == "digit_criterion" || claim == "nmc") {
                    if (counter.count(n) > cap_count) {
                        ++sum.skipped;
                        std::cerr << "skip claim=" << claim << " m=" << m << " n=" << n
                                  << " count=" << counter.count(n).str() << " cap=" << cap << "\n";
                        continue;
                    }
                }
                if (claim == "equidist_S" && mary::digit_product(n, m, 1) > cap) {
                    ++sum.skipped;
                    std::cerr << "skip claim=" << claim << " m=" << m << " n=" << n
                              << " simple count above cap=" << cap << "\n";
                    continue;
                }

                std::vector<mary::VerificationOutcome> outcomes;
                if (claim == "afs") {
                    outcomes.push_back(mary::verify_afs(n, m, counter));
                } else if (claim == "equidist_N") {
                    mary::VerificationOutcome o;
                    o.claim = "equidist_N";
                    o.n = n;
                    o.m = m;
                    o.holds = mary::verify_equidistribution_N(n, m, cap);
                    if (!o.holds) {
                        const auto all = mary::enumerate_all(n, m, cap);
                        std::vector<mary::MaryPartition> nonsimple;
                        for (const auto& p : all)
                            if (!mary::is_simple(p, n))
                                nonsimple.push_back(p);
                        o.histogram = mary::nops_histogram(nonsimple, m);
                        nonsimple.resize(std::min(nonsimple.size(), mary::kWitnessSampleLimit));
                        o.members_sample = std::move(nonsimple);
                    }
                    outcomes.push_back(std::move(o));
                } else if (claim == "digit_criterion") {
                    outcomes.push_back(mary::verify_digit_criterion(n, m, cap));
                } else if (claim == "equidist_S") {
                    outcomes.push_back(mary::verify_equidistribution_S(n, m, cap));
                } else {
                    for (Nat c : cs)
                        outcomes.push_back(mary::verify_nmc_congruence(n, m, c, cap));
                }

                for (mary::VerificationOutcome& o : outcomes) {
                    ++sum.checked;
                    if (o.holds) {
                        ++sum.held;
                    } else {
                        ++sum.failed;
                        witnesses.push_back(mary::witness_json(o));
                    }
                }
            }
        }
        summaries.push_back(sum);
    }

    bool any_failed = false;
    if (format == "json") {
        ordered_json doc;
        doc["claims"] = ordered_json::array();
        for (const ClaimSummary& s : summaries) {
            ordered_json j;
            j["claim"] = s.claim;
            j["checked"] = s.checked;
            j["held"] = s.held;
            j["failed"] = s.failed;
            j["skipped"] = s.skipped;
            doc["claims"].push_back(std::move(j));
            any_failed = any_failed || s.failed > 0;
        }
        doc["failures"] = ordered_json::array();
        for (const std::string& w : witnesses)
            doc["failures"].push_back(ordered_json::parse(w));
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const std::string& w : witnesses)
            std::cout << w << "\n";
        for (const ClaimSummary& s : summaries) {
            std::cout << "claim=" << s.claim << " checked=" << s.checked << " held=" << s.held
                      << " failed=" << s.failed << " skipped=" << s.skipped << "\n";
            any_failed = any_failed || s.failed > 0;
        }
    }
    return any_failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);

    CLI::App app{"m-ary partition counting, enumeration, stratification and claim verification"};
    app.require_subcommand(1);

    const auto base_check = CLI::Range(static_cast<Nat>(2), std::numeric_limits<Nat>::max());
    const auto cap_check = CLI::Range(static_cast<Nat>(1), std::numeric_limits<Nat>::max());

    Nat n = 0;
    Nat base = 2;
    Nat cap = mary::kDefaultCap;
    std::string format = "text";
    std::string filter = "all";
    bool with_nops = false;

    CLI::App* count = app.add_subcommand("count", "partition counts of n");
    count->add_option("n", n, "number to partition")->required();
    count->add_option("--base", base, "base m")->required()->check(base_check);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list partitions of n, one per line");
    enumerate->add_option("n", n, "number to partition")->required();
    enumerate->add_option("--base", base, "base m")->required()->check(base_check);
    enumerate->add_option("--filter", filter, "all, simple or nonsimple")
        ->check(CLI::IsMember({"all", "simple", "nonsimple"}));
    enumerate->add_flag("--with-nops", with_nops, "append the part count to each line");
    enumerate->add_option("--cap", cap, "max partitions to emit")
        ->envname("MARY_CAP")
        ->check(cap_check);

    CLI::App* stratify = app.add_subcommand("stratify", "fiber/stratum/class report of the non-simple set");
    stratify->add_option("n", n, "number to partition")->required();
    stratify->add_option("--base", base, "base m")->required()->check(base_check);
    stratify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    stratify->add_option("--cap", cap, "max partitions to materialize")
        ->envname("MARY_CAP")
        ->check(cap_check);

    std::vector<std::string> claims;
    std::string base_range_text;
    std::string n_range_text;
    std::vector<Nat> c_values;

    CLI::App* verify = app.add_subcommand("verify", "sweep claims over a grid of (n, m, c)");
    verify->add_option("--claims", claims, "afs, equidist_N, digit_criterion, equidist_S, nmc")
        ->required()
        ->delimiter(',');
    verify->add_option("--base", base_range_text, "base or inclusive range, e.g. 2..7")->required();
    verify->add_option("--n", n_range_text, "n or inclusive range, e.g. 0..5000")->required();
    verify->add_option("--c", c_values, "c values for the nmc claim")->delimiter(',');
    verify->add_option("--cap", cap, "skip grid points whose partition count exceeds this")
        ->envname("MARY_CAP")
        ->check(cap_check);
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed())
            return run_count(n, base);
        if (enumerate->parsed())
            return run_enumerate(n, base, filter, with_nops, cap);
        if (stratify->parsed())
            return run_stratify(n, base, format, cap);
        const Range bases = parse_range(base_range_text);
        if (bases.lo < 2)
            throw CLI::ValidationError("--base must be at least 2");
        return run_verify(claims, bases, parse_range(n_range_text), c_values, cap, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mary::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
