// Acceptance suite: runs each shipped-behavior criterion end to end and
// prints one PASS/FAIL line per criterion.  All comparisons are exact.

#include "unimod/decide.hpp"
#include "unimod/families.hpp"
#include "unimod/module.hpp"
#include "unimod/mpoly.hpp"
#include "unimod/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

using namespace unimod;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
    if (!pass && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::size_t taft_idx(unsigned n, unsigned r, unsigned s) {
    return static_cast<std::size_t>(r) * n + s;
}

bool proportional(const Vector& a, const Vector& b) {
    std::size_t p = 0;
    while (p < a.size() && a[p].is_zero()) ++p;
    if (p == a.size()) return b.is_zero();
    if (b[p].is_zero()) return false;
    Scalar r = b[p] / a[p];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != r * a[i]) return false;
    return true;
}

// criterion 1: Taft invariants for N in {2,3,4}, exact, < 1 s per N
void run_criterion_1() {
    bool pass = true;
    std::ostringstream why;
    for (unsigned n : {2u, 3u, 4u}) {
        auto start = std::chrono::steady_clock::now();
        auto h = taft(n);
        Vector lambda_expect(h->dim(), n);
        for (unsigned i = 0; i < n; ++i)
            lambda_expect[taft_idx(n, n - 1, i)] = Scalar::zeta(n).pow(-static_cast<long>(i));
        bool integral_ok = proportional(lambda_expect, h->integral());
        bool alpha_ok = h->alpha()[taft_idx(n, 0, 1)] == Scalar::zeta(n) &&
                        h->alpha()[taft_idx(n, 1, 0)].is_zero();
        Vector coint_expect(h->dim(), n);
        coint_expect[taft_idx(n, n - 1, 0)] = Scalar::one(n);
        bool coint_ok = proportional(coint_expect, h->cointegral()) &&
                        h->cointegral().dot(h->integral()).is_one();
        bool grouplike_ok = h->grouplike() == h->algebra().basis_vector(taft_idx(n, 0, n - 1));
        double secs = seconds_since(start);
        if (!(integral_ok && alpha_ok && coint_ok && grouplike_ok)) {
            pass = false;
            why << "N=" << n << " invariant mismatch; ";
        }
        if (secs >= 1.0) {
            pass = false;
            why << "N=" << n << " took " << secs << "s; ";
        }
    }
    criterion(1, "Taft invariants (N = 2, 3, 4)", pass, why.str());
}

// criterion 2: full Taft survey is negative, N in {2,3,4}, xi in {0,1,zeta,2}
void run_criterion_2() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream why;
    std::size_t rows = 0;
    for (unsigned n : {2u, 3u, 4u}) {
        auto h = taft(n);
        std::vector<SurveyEntry> entries;
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d) continue;
            entries.push_back({"A0(" + std::to_string(d) + ")", a0(h, d)});
            for (const Scalar& xi :
                 {Scalar(0, n), Scalar(1, n), Scalar::zeta(n), Scalar(2, n)})
                entries.push_back(
                    {"A1(" + std::to_string(d) + "," + xi.str() + ")", a1(h, d, xi)});
        }
        auto reports = survey(entries);
        rows += reports.size();
        for (const auto& r : reports) {
            if (r.label.find("error") != std::string::npos) {
                pass = false;
                why << "N=" << n << " " << r.label << "; ";
            } else if (!r.negative()) {
                pass = false;
                why << "N=" << n << " " << r.label << " decided yes; ";
            }
        }
    }
    double secs = seconds_since(start);
    if (secs >= 60.0) {
        pass = false;
        why << "took " << secs << "s";
    }
    criterion(2, "Taft survey uniformly negative (" + std::to_string(rows) + " instances)",
              pass, why.str());
}

// criterion 3: Vec over group algebras yes; over Taft no
void run_criterion_3() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream why;
    for (auto& [name, h] :
         std::vector<std::pair<std::string, HopfPtr>>{
             {"kZ2", group_algebra(cyclic_cayley(2))},
             {"kZ3", group_algebra(cyclic_cayley(3))},
             {"kZ2xZ2", group_algebra(product_cayley(cyclic_cayley(2), cyclic_cayley(2)))},
             {"kS3", group_algebra(s3_cayley())}}) {
        auto r = decide_unimodular(trivial_comodule(h));
        if (r.verdict != UnimodularReport::Verdict::yes) {
            pass = false;
            why << name << " trivial comodule not unimodular; ";
        }
    }
    for (unsigned n : {2u, 3u, 4u}) {
        auto r = decide_unimodular(trivial_comodule(taft(n)));
        if (r.verdict != UnimodularReport::Verdict::no) {
            pass = false;
            why << "taft(" << n << ") trivial comodule not negative; ";
        }
    }
    double secs = seconds_since(start);
    if (secs >= 5.0) {
        pass = false;
        why << "took " << secs << "s";
    }
    criterion(3, "Vec criterion over group and Taft algebras", pass, why.str());
}

// criterion 4: regular comodule decides yes exactly when H is unimodular
void run_criterion_4() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream why;
    for (auto& [name, h] :
         std::vector<std::pair<std::string, HopfPtr>>{
             {"kZ2", group_algebra(cyclic_cayley(2))},
             {"kZ3", group_algebra(cyclic_cayley(3))},
             {"kZ2xZ2", group_algebra(product_cayley(cyclic_cayley(2), cyclic_cayley(2)))},
             {"kS3", group_algebra(s3_cayley())}}) {
        bool expect_yes = h->unimodular();
        auto r = decide_unimodular(regular_comodule(h));
        if ((r.verdict == UnimodularReport::Verdict::yes) != expect_yes) {
            pass = false;
            why << name << " regular verdict mismatch; ";
        }
    }
    for (unsigned n : {2u, 3u, 4u}) {
        auto h = taft(n);
        auto r = decide_unimodular(regular_comodule(h));
        if (r.verdict != UnimodularReport::Verdict::no || h->unimodular()) {
            pass = false;
            why << "taft(" << n << ") regular verdict mismatch; ";
        }
    }
    double secs = seconds_since(start);
    if (secs >= 10.0) {
        pass = false;
        why << "took " << secs << "s";
    }
    criterion(4, "regular module category criterion", pass, why.str());
}

// criterion 5: the structure-map suite over the built-in instance matrix
void run_criterion_5() {
    auto start = std::chrono::steady_clock::now();
    auto results = run_selftest({});
    std::size_t failures = 0;
    std::ostringstream why;
    for (const auto& r : results)
        if (!r.pass) {
            ++failures;
            why << r.name << "; ";
        }
    double secs = seconds_since(start);
    bool pass = failures == 0 && results.size() >= 40;
    if (results.size() < 40) why << "only " << results.size() << " checks; ";
    if (secs >= 120.0) {
        pass = false;
        why << "took " << secs << "s";
    }
    criterion(5,
              "structure-map suite (" + std::to_string(results.size()) + " checks)",
              pass, why.str());
}

// criterion 6: verdicts agree across Frobenius forms and across paths
void run_criterion_6() {
    bool pass = true;
    std::ostringstream why;
    auto t2 = taft(2);
    for (auto& [name, c] : std::vector<std::pair<std::string, ComoduleAlgebra>>{
             {"a1(2,2,1)", a1(t2, 2, Scalar(1, 2))}, {"a0(2,2)", a0(t2, 2)}}) {
        std::optional<Vector> alt;
        for (std::size_t i = 0; i < c.dim() && !alt; ++i) {
            Vector lam = Vector::unit(c.dim(), i, c.order());
            if (lam == c.frobenius().lambda) continue;
            if (inverse(gram_matrix(c.algebra(), lam))) alt = lam;
        }
        if (!alt) {
            pass = false;
            why << name << ": no second form; ";
            continue;
        }
        auto r1 = decide_unimodular(c);
        auto r2 = decide_unimodular(c.with_form({"alt", *alt}));
        if (r1.negative() != r2.negative()) {
            pass = false;
            why << name << ": form-dependent verdict; ";
        }
    }
    // general path agrees with the grouplike path on every a0/a1 instance
    for (unsigned n : {2u, 3u, 4u}) {
        auto h = taft(n);
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d) continue;
            std::vector<ComoduleAlgebra> cs;
            cs.push_back(a0(h, d));
            for (const Scalar& xi : {Scalar(0, n), Scalar(1, n)}) cs.push_back(a1(h, d, xi));
            for (const auto& c : cs) {
                auto general = decide_unimodular(c);
                auto fast = decide_unimodular_grouplike(c, *c.grouplike_cointegral());
                if (general.negative() != fast.negative()) {
                    pass = false;
                    why << "path disagreement at N=" << n << " d=" << d << "; ";
                }
            }
        }
    }
    criterion(6, "Frobenius-form and path independence", pass, why.str());
}

// criterion 7: grid PIT agrees with full symbolic determinant expansion for
// every decision subspace with dim W <= 2 in a small algebra, including every
// W arising in criteria 2-4
void run_criterion_7() {
    bool pass = true;
    std::size_t compared = 0;
    std::ostringstream why;

    auto compare = [&](const ComoduleAlgebra& c) {
        Subspace w = unimodular_subspace(c);
        if (w.dim() > 2 || c.dim() > 6) return;
        std::vector<Matrix> gens;
        std::vector<std::vector<MPoly>> entries(
            c.dim(), std::vector<MPoly>(c.dim(), MPoly(w.dim())));
        for (std::size_t k = 0; k < w.dim(); ++k)
            gens.push_back(c.algebra().left_mult(w.basis_vector(k)));
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = 0; j < c.dim(); ++j) {
                MPoly e(w.dim());
                for (std::size_t k = 0; k < w.dim(); ++k)
                    if (!gens[k].at(i, j).is_zero())
                        e += gens[k].at(i, j) * MPoly::variable(w.dim(), k);
                entries[i][j] = e;
            }
        bool symbolic = w.dim() > 0 && !mpoly_determinant(entries).is_zero();
        auto cert = invertible_in_subspace(gens);
        bool grid = cert.kind == PitCertificate::Kind::witness;
        if (!cert.deterministic || grid != symbolic) {
            pass = false;
            why << "oracle disagreement (dim A = " << c.dim() << ", dim W = " << w.dim()
                << "); ";
        }
        ++compared;
    };

    for (unsigned n : {2u, 3u, 4u}) {
        auto h = taft(n);
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d) continue;
            compare(a0(h, d));
            for (const Scalar& xi : {Scalar(0, n), Scalar(1, n), Scalar::zeta(n), Scalar(2, n)})
                compare(a1(h, d, xi));
        }
        compare(trivial_comodule(h));
        compare(regular_comodule(h));
    }
    for (auto h : {group_algebra(cyclic_cayley(2)), group_algebra(cyclic_cayley(3)),
                   group_algebra(product_cayley(cyclic_cayley(2), cyclic_cayley(2))),
                   group_algebra(s3_cayley())}) {
        compare(trivial_comodule(h));
        compare(regular_comodule(h));
    }
    if (compared == 0) {
        pass = false;
        why << "no instances compared";
    }
    criterion(7,
              "PIT matches symbolic determinants (" + std::to_string(compared) + " subspaces)",
              pass, why.str());
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    run_criterion_1();
    run_criterion_2();
    run_criterion_3();
    run_criterion_4();
    run_criterion_5();
    run_criterion_6();
    run_criterion_7();
    std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << g_failures << " failing criteria, " << seconds_since(start) << "s)"
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
