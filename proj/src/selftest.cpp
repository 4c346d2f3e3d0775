#include "unimod/selftest.hpp"

#include "unimod/families.hpp"
#include "unimod/module.hpp"

namespace unimod {

namespace {

struct Instance {
    std::string tag;
    ComoduleAlgebra comodule;
};

void add_check(std::vector<CheckResult>& out, const std::string& name, const AxiomReport& r) {
    out.push_back({name, r.ok(), r.ok() ? "" : r.summary()});
}

void add_check(std::vector<CheckResult>& out, const std::string& name, bool pass,
               const std::string& detail = "") {
    out.push_back({name, pass, pass ? "" : detail});
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opts) {
    std::vector<CheckResult> out;
    PitOptions pit;
    pit.seed = opts.seed;

    struct HopfEntry {
        std::string tag;
        HopfPtr h;
    };
    std::vector<HopfEntry> hopfs;
    hopfs.push_back({"kZ2", group_algebra(cyclic_cayley(2))});
    hopfs.push_back({"sweedler", taft(2)});
    hopfs.push_back({"taft3", taft(3)});

    for (const auto& [htag, h] : hopfs) {
        add_check(out, "S4 identity [" + htag + "]", h->radford_s4_holds(),
                  "S^4 != g_H (alpha . id . alpha S) g_H^-1");
        bool dist_ok = true;
        std::string dist_detail;
        try {
            distinguished_object(*h);
        } catch (const std::exception& e) {
            dist_ok = false;
            dist_detail = e.what();
        }
        add_check(out, "distinguished objects [" + htag + "]", dist_ok, dist_detail);

        std::vector<std::pair<std::string, FinModule>> xmods;
        xmods.emplace_back("X=trivial", trivial_module(*h));
        xmods.emplace_back("X=regular", regular_module(h->algebra()));
        for (const auto& [xtag, x] : xmods) {
            add_check(out, "radford iso [" + htag + "/" + xtag + "]", verify_radford_iso(*h, x));
            add_check(out, "fnr + g_X [" + htag + "/" + xtag + "]",
                      verify_fnr_and_radford(h, x));
        }

        std::vector<Instance> algebras;
        algebras.push_back({htag + "/A=trivial", trivial_comodule(h)});
        algebras.push_back({htag + "/A=regular", regular_comodule(h)});
        if (htag == "sweedler")
            algebras.push_back({htag + "/A=a1(2,1,0)", a1(h, 1, Scalar(0, 2))});

        for (const auto& [atag, c] : algebras) {
            add_check(out, "nu~ = nu o nu' [" + atag + "]",
                      c.nu_tilde() == c.frobenius().nakayama * c.serre_twist(),
                      "composite twist mismatch");
            add_check(out, "nu~ fixes the unit [" + atag + "]",
                      c.nu_tilde() * c.algebra().unit() == c.algebra().unit(),
                      "nu~(1) != 1");

            // Im under a second, genuinely mixing change of dual bases
            std::size_t m = c.dim();
            Matrix p = Matrix::identity(m, c.order());
            p.at(0, 0) = Scalar(2, c.order());
            if (m > 1) {
                p.at(0, m - 1) = Scalar(1, c.order());
                p.at(m - 1, m - 1) = Scalar(3, c.order());
            }
            FrobeniusSystem fs2 = make_frobenius_system(c.algebra(), c.frobenius().lambda, p);
            add_check(out, "Im dual-basis independence [" + atag + "]",
                      c.im_element_for(fs2) == c.im_element(), "Im changed with the dual bases");

            const auto& gc = c.grouplike_cointegral();
            if (gc && gc->nondegenerate && gc->lambda == c.frobenius().lambda) {
                Vector im = c.im_element();
                if (opts.corrupt_im) im[0] += Scalar::one(c.order());
                auto ginv = c.hopf().algebra().invert(gc->grouplike);
                Vector expected =
                    c.hopf()
                        .algebra()
                        .multiply(c.hopf().algebra().multiply(*ginv, *ginv), c.hopf().grouplike())
                        .tensor(c.algebra().unit());
                add_check(out, "Im simplification [" + atag + "]", im == expected,
                          "Im != g_A^-2 g_H (x) 1_A");
            }

            FinModule mreg = regular_module(c.algebra());
            add_check(out, "alpha/beta [" + atag + "]", verify_alpha_beta(c, mreg));
            add_check(out, "coend projection [" + atag + "]",
                      verify_coend_projection(c, mreg, mreg));

            for (const auto& [xtag, x] : xmods) {
                add_check(out, "fnl [" + atag + "/" + xtag + "]", verify_fnl(c, x, mreg));
                add_check(out, "fsl [" + atag + "/" + xtag + "]", verify_fsl(c, x, mreg));
            }
        }
    }

    // verdict independence of the Frobenius form on a1(2,2,1) and a0(2,2)
    {
        auto sweedler = taft(2);
        struct FormCase {
            std::string tag;
            ComoduleAlgebra c;
        };
        std::vector<FormCase> cases;
        cases.push_back({"a1(2,2,1)", a1(sweedler, 2, Scalar(1, 2))});
        cases.push_back({"a0(2,2)", a0(sweedler, 2)});
        for (auto& [tag, c] : cases) {
            // deterministic second form: first dual covector with invertible
            // Gram that differs from the attached one
            std::optional<Vector> alt;
            for (std::size_t i = 0; i < c.dim() && !alt; ++i) {
                Vector lam = Vector::unit(c.dim(), i, c.order());
                if (lam == c.frobenius().lambda) continue;
                if (inverse(gram_matrix(c.algebra(), lam))) alt = lam;
            }
            if (!alt) {
                add_check(out, "form independence [" + tag + "]", false,
                          "no second Frobenius form found");
                continue;
            }
            UnimodularReport r1 = decide_unimodular(c, pit);
            UnimodularReport r2 = decide_unimodular(c.with_form({"alt", *alt}), pit);
            add_check(out, "form independence [" + tag + "]", r1.negative() == r2.negative(),
                      "verdicts differ between Frobenius forms");
        }
    }
    return out;
}

}  // namespace unimod
