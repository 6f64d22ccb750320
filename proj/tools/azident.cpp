// azident — exact verifier for AZ-style identities over the subset lattice.
//
// Subcommands:
//   verify    check one identity on a JSON input document
//   fuzz      run a seeded campaign of random instances
//   bench     time the lattice-table builders, fast vs naive
//   selftest  exhaustive small-n suites plus the lemma property checks
//
// Exit codes: 0 all identities hold; 1 a verified-false instance (reported
// verbosely: that would be a discovery or a bug, not a usage error); 2
// malformed input, pole violations, or hypothesis violations.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "az/coeff.hpp"
#include "az/errors.hpp"
#include "az/gen.hpp"
#include "az/identity.hpp"
#include "az/io.hpp"
#include "az/lattice.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct VerifyArgs {
    std::string input_path;
    std::string identity;
    std::string a_text;
    std::string m_text;
    bool symbolic = false;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    const az::IdentityId id = az::parse_identity_id(args.identity);
    const az::VerifyMode mode = args.symbolic ? az::VerifyMode::symbolic : az::VerifyMode::numeric;
    std::optional<az::Rat> a, m;
    if (!args.a_text.empty()) a = az::Rat::parse(args.a_text);
    if (!args.m_text.empty()) m = az::Rat::parse(args.m_text);

    const az::InputDocument doc = az::load_input_file(args.input_path);
    const az::IdentityReport report = az::dispatch_verify(doc, id, mode, a, m);

    if (args.json) {
        std::cout << az::report_to_json(report, doc).dump(2) << "\n";
    } else {
        std::cout << "identity=" << az::to_string(report.id)
                  << " mode=" << az::to_string(report.mode) << " n=" << doc.n
                  << " terms=" << report.term_count << "\n";
        std::cout << az::result_line(report) << "\n";
        std::cout << (report.holds ? "holds" : "DOES NOT HOLD") << "\n";
    }
    return report.holds ? 0 : 1;
}

struct FuzzArgs {
    std::string identity;
    int n_min = 3;
    int n_max = 8;
    long trials = 100;
    std::uint64_t seed = 1;
    bool symbolic = false;
};

int run_fuzz(const FuzzArgs& args) {
    const az::IdentityId id = az::parse_identity_id(args.identity);
    if (args.symbolic && id != az::IdentityId::main1 && id != az::IdentityId::main2)
        throw az::ParseError("--symbolic applies to main1 and main2 only");
    if (args.n_min < 1 || args.n_max < args.n_min || args.n_max > az::kMaxGroundSet)
        throw az::ParseError("need 1 <= n-min <= n-max <= " +
                             std::to_string(az::kMaxGroundSet));
    const bool paired = id == az::IdentityId::ac || id == az::IdentityId::ac_m ||
                        id == az::IdentityId::main2;

    std::cout << "fuzz identity=" << az::to_string(id)
              << " mode=" << (args.symbolic ? "symbolic" : "numeric") << " n=[" << args.n_min
              << "," << args.n_max << "] trials=" << args.trials << " seed=" << args.seed
              << "\n";
    if (args.trials == 0)
        std::cout << "warning: 0 trials requested; vacuous pass\n";

    az::SplitMix64 master(args.seed);
    long failures = 0;
    for (long trial = 0; trial < args.trials; ++trial) {
        az::SplitMix64 rng(master.next());
        const int n = static_cast<int>(
            rng.range(args.n_min, args.n_max));
        const std::uint64_t universe = (std::uint64_t{1} << n) - 1;

        az::IdentityReport report;
        std::string instance_text;
        if (paired) {
            // q cannot exceed the widest antichain, C(n, floor(n/2)).
            const long widest = n == 1 ? 1 : n == 2 ? 2 : n == 3 ? 3 : 6;
            const int q = static_cast<int>(rng.range(1, widest));
            az::GenConfig cfg{rng.next(), n, q, false};
            const az::PairedSystem system = az::random_paired_system(cfg);
            instance_text = system.to_string();
            if (id == az::IdentityId::ac) {
                report = az::verify_ac(system);
            } else if (id == az::IdentityId::ac_m) {
                const long m = rng.range(1 - system.min_a_size(), 8);
                report = az::verify_ac_m(system, m);
            } else if (args.symbolic) {
                report = az::verify_main2_symbolic(system);
            } else {
                const auto [a, m] =
                    az::random_pole_free_params(rng, system.min_a_size(), n);
                report = az::verify_main2_numeric(system, a, m);
            }
        } else {
            const int size = static_cast<int>(
                rng.range(1, std::min<long>(static_cast<long>(universe), 3 * n)));
            az::GenConfig cfg{rng.next(), n, size, false};
            const az::SetFamily family = id == az::IdentityId::lym
                                             ? az::random_antichain(cfg)
                                             : az::random_family(cfg);
            instance_text = family.to_string();
            if (id == az::IdentityId::lym) {
                report = az::check_lym(family);
            } else if (id == az::IdentityId::az) {
                report = az::verify_az(family);
            } else if (id == az::IdentityId::az_m) {
                const long m = rng.range(1 - family.min_size(), 8);
                report = az::verify_az_m(family, m);
            } else if (args.symbolic) {
                report = az::verify_main1_symbolic(family);
            } else {
                const auto [a, m] = az::random_pole_free_params(rng, family.min_size(), n);
                report = az::verify_main1_numeric(family, a, m);
            }
        }

        if (!report.holds) {
            ++failures;
            std::cout << "trial " << trial << " FAIL n=" << n << " " << instance_text;
            if (report.a) std::cout << " a=" << report.a->to_string();
            if (report.m) std::cout << " m=" << report.m->to_string();
            std::cout << " " << az::result_line(report) << "\n";
        }
    }
    std::cout << (args.trials - failures) << "/" << args.trials << " trials hold\n";
    return failures == 0 ? 0 : 1;
}

struct BenchArgs {
    int n = 12;
    std::string algo = "dp";
    int reps = 5;
};

int run_bench(const BenchArgs& args) {
    if (args.algo != "dp" && args.algo != "naive")
        throw az::ParseError("--algo must be dp or naive");
    if (args.reps < 1) throw az::ParseError("--reps must be at least 1");
    const int cap = args.algo == "dp" ? az::kMaxGroundSet : az::kMaxNaiveGroundSet;
    if (args.n < 1 || args.n > cap)
        throw az::GroundSetTooLarge("bench --algo " + args.algo + " requires n <= " +
                                    std::to_string(cap) + ", got n = " +
                                    std::to_string(args.n));

    const az::SetFamily family = az::bench_family(args.n);
    std::vector<double> times;
    std::uint64_t checksum = 0;
    for (int rep = 0; rep < args.reps; ++rep) {
        const auto start = Clock::now();
        const az::LatticeTables tables =
            args.algo == "dp" ? az::dp_tables(family) : az::naive_tables(family);
        times.push_back(ms_since(start));
        checksum = az::tables_checksum(tables);
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    char checksum_hex[32];
    std::snprintf(checksum_hex, sizeof(checksum_hex), "%016llx",
                  static_cast<unsigned long long>(checksum));
    std::cout << "bench algo=" << args.algo << " n=" << args.n << " reps=" << args.reps
              << " family_size=" << family.size() << " median_ms=" << median
              << " checksum=" << checksum_hex << "\n";
    return 0;
}

bool selftest_check(const std::string& name, bool ok, long& failures) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
    return ok;
}

int run_selftest() {
    long failures = 0;
    const az::Rat one(1);

    // Exhaustive n <= 3: fast tables equal naive tables, Z presence matches
    // the upset, and the az / main1 identities hold for every family.
    {
        bool tables_ok = true, az_ok = true, main1_ok = true, symbolic_ok = true;
        const std::vector<std::pair<az::Rat, az::Rat>> params = {
            {az::Rat(1), az::Rat(0)}, {az::Rat(2), az::Rat(3)}, {az::Rat(-1, 2), az::Rat(9, 2)}};
        for (int n = 1; n <= 3; ++n) {
            az::FamilyEnumerator families(n, false);
            while (auto family = families.next()) {
                const az::LatticeTables fast = az::dp_tables(*family);
                const az::LatticeTables naive = az::naive_tables(*family);
                if (!(fast.upset == naive.upset) || !(fast.downset == naive.downset) ||
                    !(fast.z == naive.z))
                    tables_ok = false;
                if (!az::verify_az(*family).holds) az_ok = false;
                for (const auto& [a, m] : params) {
                    if (!az::scan_poles(a, m, family->min_size(), n).valid()) continue;
                    if (az::verify_main1_numeric(*family, a, m).lhs != one) main1_ok = false;
                }
                if (!az::verify_main1_symbolic(*family).holds) symbolic_ok = false;
            }
        }
        selftest_check("lattice-oracle-equivalence-n3", tables_ok, failures);
        selftest_check("az-identity-exhaustive-n3", az_ok, failures);
        selftest_check("main1-numeric-exhaustive-n3", main1_ok, failures);
        selftest_check("main1-symbolic-exhaustive-n3", symbolic_ok, failures);
    }

    // Coefficient recurrence c(n,l) + c(n,l+1) = c(n-1,l).
    {
        bool ok = true;
        az::SplitMix64 rng(11);
        for (int trial = 0; trial < 20 && ok; ++trial) {
            const auto [a, m] = az::random_pole_free_params(rng, 0, 12);
            for (int n = 1; n <= 12 && ok; ++n)
                for (int l = 0; l < n && ok; ++l)
                    ok = az::coeff_value(a, m, n, l) + az::coeff_value(a, m, n, l + 1) ==
                         az::coeff_value(a, m, n - 1, l);
        }
        selftest_check("coefficient-recurrence", ok, failures);
    }

    // Binomial closed form agrees with the product formula at a = 1.
    {
        bool ok = true;
        for (long m = -5; m <= 5 && ok; ++m)
            for (int n = 1; n <= 12 && ok; ++n)
                for (int l = 0; l <= n && ok; ++l) {
                    if (!az::scan_poles(az::Rat(1), az::Rat(m), l, n).valid()) continue;
                    ok = az::coeff_binomial(m, n, l) ==
                         az::coeff_value(az::Rat(1), az::Rat(m), n, l);
                }
        selftest_check("binomial-closed-form", ok, failures);
    }

    // Interval sums collapse to a single coefficient.
    {
        bool ok = true;
        az::SplitMix64 rng(17);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            const int n = static_cast<int>(rng.range(1, 10));
            const std::uint32_t full = (std::uint32_t{1} << n) - 1;
            std::uint32_t a_bits = 0;
            while (a_bits == 0) a_bits = static_cast<std::uint32_t>(rng.next()) & full;
            const std::uint32_t b_bits = a_bits | (static_cast<std::uint32_t>(rng.next()) & full);
            const az::SubsetMask A(a_bits, n), B(b_bits, n);
            const auto [a, m] = az::random_pole_free_params(rng, A.size(), n);
            ok = az::interval_sum(a, m, n, A, B) ==
                 az::coeff_value(a, m, n - B.size() + A.size(), A.size());
        }
        selftest_check("interval-sum", ok, failures);
    }

    // Z decomposition across family unions, exhaustive at n = 3.
    {
        bool ok = true;
        az::FamilyEnumerator outer(3, false);
        while (auto fam_a = outer.next()) {
            az::FamilyEnumerator inner(3, false);
            while (auto fam_b = inner.next()) {
                for (std::uint32_t x = 1; x < 8 && ok; ++x)
                    ok = az::check_z_decomposition(*fam_a, *fam_b, az::SubsetMask(x, 3));
                if (!ok) break;
            }
            if (!ok) break;
        }
        selftest_check("z-decomposition-exhaustive-n3", ok, failures);
    }

    // Three-term union split of the restricted sum, both weight choices.
    // A1 members all contain e1 while B2 members avoid it (and symmetrically
    // for A2/B1), which forces the disjointness hypotheses.
    {
        bool ok = true;
        az::SplitMix64 rng(19);
        for (int trial = 0; trial < 50 && ok; ++trial) {
            const int n = static_cast<int>(rng.range(2, 6));
            const std::uint32_t full = (std::uint32_t{1} << n) - 1;
            const int e1 = static_cast<int>(rng.range(1, n));
            int e2 = e1;
            while (e2 == e1) e2 = static_cast<int>(rng.range(1, n));
            const auto sample = [&](std::uint32_t must, std::uint32_t avoid) {
                std::vector<std::uint32_t> members;
                const int count = static_cast<int>(rng.range(1, 3));
                for (int i = 0; i < count; ++i) {
                    std::uint32_t x = 0;
                    while (x == 0)
                        x = (must | (static_cast<std::uint32_t>(rng.next()) & full)) & ~avoid;
                    members.push_back(x);
                }
                return az::SetFamily(n, std::move(members));
            };
            const std::uint32_t bit1 = std::uint32_t{1} << (e1 - 1);
            const std::uint32_t bit2 = std::uint32_t{1} << (e2 - 1);
            const az::SetFamily a1 = sample(bit1, 0), a2 = sample(bit2, 0);
            const az::SetFamily b1 = sample(0, bit2), b2 = sample(0, bit1);
            const auto [pa, pm] = az::random_pole_free_params(rng, 1, n);
            ok = az::check_union_split(a1, a2, b1, b2, pa, pm, az::UnionSplitWeight::ones);
            if (ok && !pa.is_zero())
                ok = az::check_union_split(a1, a2, b1, b2, pa, pm,
                                           az::UnionSplitWeight::inverse_coeff);
        }
        selftest_check("union-split-decomposition", ok, failures);
    }

    // Paired identity, numeric and symbolic, on generated systems.
    {
        bool ok = true;
        az::SplitMix64 rng(23);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            const int n = static_cast<int>(rng.range(2, 8));
            // q cannot exceed the widest antichain, C(n, floor(n/2)).
            const long widest = n == 2 ? 2 : n == 3 ? 3 : 4;
            const int q = static_cast<int>(rng.range(1, widest));
            const az::PairedSystem system = az::random_paired_system({rng.next(), n, q, false});
            const auto [a, m] = az::random_pole_free_params(rng, system.min_a_size(), n);
            ok = az::verify_main2_numeric(system, a, m).lhs == one &&
                 az::verify_main2_symbolic(system).holds;
        }
        selftest_check("main2-numeric-and-symbolic", ok, failures);
    }

    // LYM on random antichains.
    {
        bool ok = true;
        az::SplitMix64 rng(29);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            const int n = static_cast<int>(rng.range(1, 10));
            const std::uint64_t universe = (std::uint64_t{1} << n) - 1;
            const int size = static_cast<int>(
                rng.range(1, std::min<long>(static_cast<long>(universe), 3 * n)));
            const az::SetFamily antichain = az::random_antichain({rng.next(), n, size, false});
            ok = az::check_lym(antichain).holds;
        }
        selftest_check("lym-random-antichains", ok, failures);
    }

    if (failures == 0) {
        std::cout << "selftest passed\n";
        return 0;
    }
    std::cout << "selftest FAILED (" << failures << " checks)\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for AZ-style identities over the subset lattice"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check one identity on a JSON input");
    verify->add_option("--input", verify_args.input_path, "input JSON document")->required();
    verify->add_option("--identity", verify_args.identity,
                       "lym, az, az_m, ac, ac_m, main1 or main2")
        ->required();
    verify->add_option("--a", verify_args.a_text, "rational a (p/q or p)");
    verify->add_option("--m", verify_args.m_text, "rational or integer m");
    verify->add_flag("--symbolic", verify_args.symbolic, "polynomial-identity mode");
    verify->add_flag("--json", verify_args.json, "emit the full report as JSON");

    FuzzArgs fuzz_args;
    CLI::App* fuzz = app.add_subcommand("fuzz", "seeded campaign of random instances");
    fuzz->add_option("--identity", fuzz_args.identity, "identity to fuzz")->required();
    fuzz->add_option("--n-min", fuzz_args.n_min, "smallest ground set");
    fuzz->add_option("--n-max", fuzz_args.n_max, "largest ground set");
    fuzz->add_option("--trials", fuzz_args.trials, "number of instances");
    fuzz->add_option("--seed", fuzz_args.seed, "campaign seed");
    fuzz->add_flag("--symbolic", fuzz_args.symbolic, "polynomial-identity mode");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "time the lattice-table builders");
    bench->add_option("--n", bench_args.n, "ground-set size")->required();
    bench->add_option("--algo", bench_args.algo, "dp or naive");
    bench->add_option("--reps", bench_args.reps, "repetitions (median reported)");

    CLI::App* selftest = app.add_subcommand("selftest", "exhaustive small-n checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(verify_args);
        if (fuzz->parsed()) return run_fuzz(fuzz_args);
        if (bench->parsed()) return run_bench(bench_args);
        if (selftest->parsed()) return run_selftest();
    } catch (const az::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
