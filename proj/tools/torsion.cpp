// torsion: torsion subgroups and their growth in quadratic extensions, over Q(i) and Q(sqrt(-3)).

#include "bct/bct.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>

namespace {

constexpr int exit_mismatch = 1;
constexpr int exit_parse = 2;
constexpr int exit_singular = 3;
constexpr int exit_budget = 4;

bct::QuadField field_or_throw(const std::string& tag) {
    bct::QuadField K = bct::parse_field(tag);
    if (K.D() != -1 && K.D() != -3)
        throw bct::ParseError("only Qi and Qsqrt-3 are supported for torsion computations", 0);
    return K;
}

int run_compute(const std::string& field, const std::string& curve, const std::string& format) {
    const bct::QuadField K = field_or_throw(field);
    const auto C = bct::parse_curve(curve, K);
    const auto T = bct::torsion_over_quad(C);
    if (format == "json") std::cout << bct::torsion_report_json(C, T).dump(2) << "\n";
    else std::cout << bct::torsion_report_text(C, T);
    return 0;
}

int run_growth(const std::string& field, const std::string& curve, const std::string& format, bool prune) {
    const bct::QuadField K = field_or_throw(field);
    const auto C = bct::parse_curve(curve, K);
    bct::GrowthOptions opt;
    opt.prune = prune;
    const auto rep = bct::growth_extensions(C, opt);
    if (format == "json") std::cout << bct::growth_report_json(C, rep).dump(2) << "\n";
    else if (format == "csv") std::cout << bct::growth_report_csv(C, rep);
    else std::cout << bct::growth_report_text(C, rep);
    return 0;
}

int run_reproduce(const std::vector<std::string>& files, unsigned jobs, bool timing, bool prune) {
    bct::GrowthCache cache;
    bct::GrowthOptions opt;
    opt.prune = prune;
    std::size_t total = 0, passed = 0;
    for (const auto& file : files) {
        const auto rows = bct::load_table(file);
        const auto results = bct::check_rows(rows, jobs, cache, opt);
        for (const auto& r : results) {
            std::cout << bct::describe(r) << "\n";
            if (timing) std::cerr << "  " << r.seconds << " s\n";
            ++total;
            if (r.pass) ++passed;
        }
    }
    std::cout << passed << "/" << total << " rows passed\n";
    return passed == total ? 0 : exit_mismatch;
}

// Quick consistency checks on small random inputs.
int run_selftest(unsigned seed) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok    " : "FAIL  ") << name << "\n";
        if (!ok) ++failures;
    };
    auto small = [&](int r) { return std::uniform_int_distribution<int>(-r, r)(rng); };

    for (long D : {-1L, -3L}) {
        const bct::QuadField K(D);
        const std::string tag = bct::field_tag(K);
        bool ok = true;
        for (int t = 0; t < 200 && ok; ++t) {
            const bct::QuadElem x = K.element(bct::make_rational(small(50), 1 + std::abs(small(9))),
                                              bct::make_rational(small(50), 1 + std::abs(small(9))));
            ok = bct::parse_element(bct::render(x), K) == x;
        }
        report(tag + " render/parse round trip", ok);

        ok = true;
        for (int t = 0; t < 50 && ok; ++t) {
            bct::KPoly f(K, {K.from_int(small(5)), K.element(small(3), small(3)), K.one()});
            bct::KPoly g(K, {K.element(small(5), small(5)), K.from_int(small(3)), K.from_int(small(3)), K.one()});
            const bct::KPoly h = f * g;
            if (h.is_zero()) continue;
            const auto fac = bct::factor_over_quad(h);
            bct::KPoly back(K, {fac.unit});
            for (const auto& [p, e] : fac.factors)
                for (int k = 0; k < e; ++k) back = back * p;
            ok = back == h;
        }
        report(tag + " factorization round trip", ok);

        ok = true;
        for (int t = 0; t < 10 && ok; ++t) {
            const bct::QuadElem a = K.element(small(6), small(6)), b = K.element(small(6), small(6));
            const auto C = bct::WeierstrassCurve<bct::QuadElem>::short_model(K, a, b);
            if (C.discriminant().is_zero()) continue;
            const auto T = bct::torsion_over_quad(C);
            for (const auto& P : T.elements) ok = ok && C.mul(T.invariants.n, P).infinity;
            ok = ok && static_cast<long>(T.elements.size()) == T.order();
        }
        report(tag + " torsion elements are killed by the exponent", ok);
    }

    {
        bool ok = true;
        for (std::uint64_t p : {5ULL, 11ULL, 17ULL, 23ULL, 29ULL}) {
            const bct::FqField F(p, 1);
            for (int t = 0; t < 3; ++t) {
                const auto C = bct::WeierstrassCurve<bct::FqElem>(
                    F, {F.zero(), F.zero(), F.zero(), F.zero(), F.from_int(1 + std::abs(small(100)))});
                ok = ok && bct::count_points_fq(C) == p + 1;
            }
        }
        report("supersingular point counts over F_p, p = 2 mod 3", ok);
    }

    {
        const bct::QuadField K(-1);
        const auto C = bct::parse_curve("[1,1,1,-80,242]", K);
        const auto rep = bct::growth_extensions(C);
        bool ok = rep.base.invariants == bct::Group(1, 4);
        bool found = false;
        for (const auto& r : rep.records)
            if (bct::same_square_class(r.d, K.from_int(5)) && r.group.invariants == bct::Group(1, 8)) found = true;
        report("growth of [1,1,1,-80,242] over Qi at d = 5", ok && found);
        report("audit of [1,1,1,-80,242] over Qi", bct::growth_audit(rep, K.D()).empty());
    }

    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torsion of elliptic curves over Q(i) and Q(sqrt(-3)) and its growth in quadratic extensions"};
    app.require_subcommand(1);

    std::string field = "Qi", curve, format = "text";
    bool prune = false;

    auto* compute = app.add_subcommand("compute", "Compute E(K)_tor");
    compute->add_option("--field", field, "Qi or Qsqrt-3")->capture_default_str();
    compute->add_option("--curve", curve, "[a,b] or [a1,a2,a3,a4,a6]")->required();
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* growth = app.add_subcommand("growth", "List the quadratic extensions where E(K)_tor grows");
    growth->add_option("--field", field, "Qi or Qsqrt-3")->capture_default_str();
    growth->add_option("--curve", curve, "[a,b] or [a1,a2,a3,a4,a6]")->required();
    growth->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    growth->add_flag("--prune", prune, "Skip division polynomials that cannot detect a listed group");

    std::vector<std::string> files;
    unsigned jobs = 1;
    bool timing = false;
    auto* reproduce = app.add_subcommand("reproduce", "Check table rows against computed growth");
    reproduce->add_option("files", files, "JSON table files")->required()->check(CLI::ExistingFile);
    reproduce->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    reproduce->add_flag("--timing", timing, "Print per-row times on stderr");
    reproduce->add_flag("--prune", prune, "Skip division polynomials that cannot detect a listed group");

    unsigned seed = 1;
    auto* selftest = app.add_subcommand("selftest", "Run a quick property suite");
    selftest->add_option("--seed", seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_parse;
    }

    try {
        if (*compute) return run_compute(field, curve, format);
        if (*growth) return run_growth(field, curve, format, prune);
        if (*reproduce) return run_reproduce(files, jobs, timing, prune);
        if (*selftest) return run_selftest(seed);
    } catch (const bct::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const bct::SingularCurve& e) {
        std::cerr << "singular curve: " << e.what() << "\n";
        return exit_singular;
    } catch (const bct::FactorizationBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return exit_budget;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad table file: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_mismatch;
    }
    return 0;
}
