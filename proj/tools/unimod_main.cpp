#include "unimod/families.hpp"
#include "unimod/io.hpp"
#include "unimod/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitAxiomFailure = 3;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw unimod::ParseError("cannot write " + path);
    os << text;
}

int cmd_verify(const std::string& file) {
    unimod::InstanceFile f = unimod::load_instance(file);
    unimod::AxiomReport hopf_report = unimod::verify_hopf(f.hopf);
    std::cout << "hopf axioms: " << hopf_report.summary() << "\n";
    bool ok = hopf_report.ok();
    if (f.comodule && ok) {
        unimod::HopfData hopf(f.hopf);
        unimod::AxiomReport com_report = unimod::verify_comodule_algebra(hopf, *f.comodule);
        std::cout << "comodule algebra axioms: " << com_report.summary() << "\n";
        ok = ok && com_report.ok();
    } else if (f.comodule) {
        std::cout << "comodule algebra axioms: skipped (invalid Hopf data)\n";
    }
    return ok ? kExitOk : kExitAxiomFailure;
}

int cmd_invariants(const std::string& file, bool json) {
    unimod::InstanceFile f = unimod::load_instance(file);
    unimod::AxiomReport report = unimod::verify_hopf(f.hopf);
    if (!report.ok()) {
        std::cerr << "invalid Hopf data: " << report.summary() << "\n";
        return kExitAxiomFailure;
    }
    unimod::HopfData hopf(f.hopf);
    std::cout << (json ? unimod::invariants_json(hopf) : unimod::invariants_text(hopf));
    return kExitOk;
}

int cmd_decide(const std::string& file, bool json, const std::string& form,
               std::uint64_t seed) {
    unimod::InstanceFile f = unimod::load_instance(file);
    if (!f.comodule) {
        std::cerr << "instance has no comodule_algebra block\n";
        return kExitInputError;
    }
    unimod::AxiomReport report = unimod::verify_hopf(f.hopf);
    if (!report.ok()) {
        std::cerr << "invalid Hopf data: " << report.summary() << "\n";
        return kExitAxiomFailure;
    }
    unimod::ComoduleAlgebra c = unimod::comodule_from_instance(f, form, seed);
    unimod::PitOptions pit;
    pit.seed = seed;
    unimod::UnimodularReport r;
    const auto& gc = c.grouplike_cointegral();
    if (gc && gc->nondegenerate && gc->lambda == c.frobenius().lambda)
        r = unimod::decide_unimodular_grouplike(c, *gc, pit);
    else
        r = unimod::decide_unimodular(c, pit);
    std::cout << (json ? unimod::report_json(r)
                       : unimod::report_text(r, c.algebra().basis_names()));
    return kExitOk;
}

int cmd_survey_taft(unsigned n, const std::string& xi_list, bool json, std::uint64_t seed) {
    if (n < 2 || n > 6) {
        std::cerr << "survey-taft supports N in 2..6\n";
        return kExitInputError;
    }
    std::vector<unimod::Scalar> xis = unimod::parse_scalar_list(xi_list, n);
    auto hopf = unimod::taft(n);
    std::vector<unimod::SurveyEntry> entries;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        entries.push_back({"A0(" + std::to_string(d) + ")", unimod::a0(hopf, d)});
    }
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        for (const auto& xi : xis)
            entries.push_back({"A1(" + std::to_string(d) + "," + xi.str() + ")",
                               unimod::a1(hopf, d, xi)});
    }
    unimod::PitOptions pit;
    pit.seed = seed;
    auto reports = unimod::survey(entries, pit);
    bool all_negative = true;
    if (json) {
        std::string sep;
        std::cout << "[\n";
        for (const auto& r : reports) {
            std::cout << sep << unimod::report_json(r);
            sep = ",";
            all_negative = all_negative && r.negative();
        }
        std::cout << "]\n";
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::cout << reports[i].label << ": " << reports[i].verdict_str() << "\n";
            all_negative = all_negative && reports[i].negative();
        }
        std::cout << (all_negative ? "all negative" : "POSITIVE INSTANCE FOUND") << "\n";
    }
    return kExitOk;
}

int cmd_selftest(bool corrupt_im, std::uint64_t seed) {
    unimod::SelftestOptions opts;
    opts.corrupt_im = corrupt_im;
    opts.seed = seed;
    auto results = unimod::run_selftest(opts);
    std::size_t failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << " :: " << r.detail;
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << results.size() << " checks, " << failures << " failure(s)\n";
    return failures == 0 ? kExitOk : kExitSelftestFailure;
}

int cmd_emit(const std::string& family, unsigned n, unsigned d, const std::string& xi,
             const std::string& group, const std::string& out_path) {
    using namespace unimod;
    auto group_by_name = [](const std::string& name) {
        if (name == "z2") return group_algebra(cyclic_cayley(2));
        if (name == "z3") return group_algebra(cyclic_cayley(3));
        if (name == "z2z2") return group_algebra(product_cayley(cyclic_cayley(2), cyclic_cayley(2)));
        if (name == "s3") return group_algebra(s3_cayley());
        throw ParseError("unknown group '" + name + "' (use z2, z3, z2z2, s3)");
    };
    auto base = [&]() -> HopfPtr {
        if (!group.empty()) return group_by_name(group);
        return taft(n);
    };
    InstanceFile f;
    if (family == "taft") {
        f = instance_of(*taft(n));
    } else if (family == "group") {
        f = instance_of(*group_by_name(group.empty() ? "z2" : group));
    } else if (family == "a0") {
        f = instance_of(a0(n, d));
    } else if (family == "a1") {
        f = instance_of(a1(n, d, parse_scalar_list(xi, n).at(0)));
    } else if (family == "trivial") {
        f = instance_of(trivial_comodule(base()));
    } else if (family == "regular") {
        f = instance_of(regular_comodule(base()));
    } else {
        throw ParseError("unknown family '" + family + "'");
    }
    write_output(emit_instance(f), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact unimodularity decisions for comodule algebras over "
                 "finite-dimensional Hopf algebras"};
    app.require_subcommand(1);

    std::string file, form, xi_list = "0,1,z,2", group, out_path, family;
    bool json = false, corrupt_im = false;
    unsigned n = 2, d = 1;
    std::uint64_t seed = unimod::kDefaultPitSeed;

    auto* verify = app.add_subcommand("verify", "check the axioms of an instance file");
    verify->add_option("file", file)->required();

    auto* invariants =
        app.add_subcommand("invariants", "print integral, character, cointegral, grouplike");
    invariants->add_option("file", file)->required();
    invariants->add_flag("--json", json);

    auto* decide = app.add_subcommand("decide", "decide unimodularity of the comodule algebra");
    decide->add_option("file", file)->required();
    decide->add_flag("--json", json);
    decide->add_option("--form", form, "attached Frobenius form to use");
    decide->add_option("--seed", seed, "seed for randomized identity testing");

    auto* survey = app.add_subcommand("survey-taft",
                                      "decide every A0(d), A1(d,xi) over the Taft algebra");
    survey->add_option("--n", n, "Taft parameter N (2..6)")->required();
    survey->add_option("--xi", xi_list, "comma-separated xi values (rationals, z, z^k)");
    survey->add_flag("--json", json);
    survey->add_option("--seed", seed);

    auto* selftest = app.add_subcommand("selftest", "run the structure-map verification suite");
    selftest->add_flag("--corrupt-im", corrupt_im, "debug: corrupt Im and expect a failure");
    selftest->add_option("--seed", seed);

    auto* emit = app.add_subcommand("emit", "write a built-in family instance to a file");
    emit->add_option("family", family, "taft | group | a0 | a1 | trivial | regular")->required();
    emit->add_option("--n", n, "Taft parameter N");
    emit->add_option("--d", d, "divisor parameter");
    emit->add_option("--xi", xi_list, "xi value for a1");
    emit->add_option("--group", group, "group for group/trivial/regular: z2 z3 z2z2 s3");
    emit->add_option("--emit", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (verify->parsed()) return cmd_verify(file);
        if (invariants->parsed()) return cmd_invariants(file, json);
        if (decide->parsed()) return cmd_decide(file, json, form, seed);
        if (survey->parsed()) return cmd_survey_taft(n, xi_list, json, seed);
        if (selftest->parsed()) return cmd_selftest(corrupt_im, seed);
        if (emit->parsed()) return cmd_emit(family, n, d, xi_list, group, out_path);
    } catch (const unimod::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
