#include "unimod/decide.hpp"
#include "unimod/families.hpp"

#include <doctest.h>

using namespace unimod;

TEST_CASE("unimodular subspace examples") {
    auto g2 = group_algebra(cyclic_cayley(2));
    Subspace w = unimodular_subspace(trivial_comodule(g2));
    REQUIRE(w.dim() == 1);
    CHECK(w.contains(Vector::unit(1, 0)));

    auto sweedler = taft(2);
    CHECK(unimodular_subspace(trivial_comodule(sweedler)).dim() == 0);
    CHECK(unimodular_subspace(a0(sweedler, 1)).dim() == 0);
}

TEST_CASE("decide: trivial comodule over kZ/2 is unimodular with witness 1") {
    auto c = trivial_comodule(group_algebra(cyclic_cayley(2)));
    auto r = decide_unimodular(c);
    CHECK(r.verdict == UnimodularReport::Verdict::yes);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == c.algebra().unit());
}

TEST_CASE("decide: regular comodule kZ/2 over itself is unimodular") {
    auto c = regular_comodule(group_algebra(cyclic_cayley(2)));
    auto r = decide_unimodular(c);
    CHECK(r.verdict == UnimodularReport::Verdict::yes);
    REQUIRE(r.witness.has_value());
    // W = span{e}
    CHECK(r.solution_space.dim() == 1);
}

TEST_CASE("decide: A1(2,1,0) over Sweedler is not unimodular") {
    auto r = decide_unimodular(a1(taft(2), 1, Scalar(0, 2)));
    CHECK(r.verdict == UnimodularReport::Verdict::no);
    CHECK(r.pit->deterministic);
}

TEST_CASE("decide: trivial comodule over taft(3) is not unimodular") {
    auto r = decide_unimodular(trivial_comodule(taft(3)));
    CHECK(r.verdict == UnimodularReport::Verdict::no);
}

TEST_CASE("grouplike path agrees with the general path on the families") {
    auto t2 = taft(2);
    for (const auto& c :
         {a0(t2, 1), a0(t2, 2), a1(t2, 1, Scalar(1, 2)), a1(t2, 2, Scalar(0, 2)),
          trivial_comodule(t2), regular_comodule(t2)}) {
        REQUIRE(c.grouplike_cointegral().has_value());
        auto r = decide_unimodular_grouplike(c, *c.grouplike_cointegral());
        CHECK(r.path == "grouplike");
        CHECK(r.negative());
    }
    auto g2 = group_algebra(cyclic_cayley(2));
    auto triv = trivial_comodule(g2);
    auto r = decide_unimodular_grouplike(triv, *triv.grouplike_cointegral());
    CHECK(r.verdict == UnimodularReport::Verdict::yes);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == triv.algebra().unit());
}

TEST_CASE("grouplike path needs the cointegral as the active form") {
    auto c = a0(taft(2), 2);
    Vector alt = Vector::unit(2, 1, 2);
    ComoduleAlgebra c2 = c.with_form({"alt", alt});
    CHECK_THROWS_AS(decide_unimodular_grouplike(c2, *c2.grouplike_cointegral()),
                    std::invalid_argument);
}

TEST_CASE("witness postconditions hold for every yes verdict") {
    for (auto h : {group_algebra(cyclic_cayley(2)), group_algebra(cyclic_cayley(3)),
                   group_algebra(s3_cayley())}) {
        for (const auto& c : {trivial_comodule(h), regular_comodule(h)}) {
            auto r = decide_unimodular(c);
            REQUIRE(r.verdict == UnimodularReport::Verdict::yes);
            const Vector& g = *r.witness;
            auto ginv = c.algebra().invert(g);
            REQUIRE(ginv.has_value());
            for (std::size_t i = 0; i < c.dim(); ++i) {
                Vector lhs = c.algebra().multiply(g, c.algebra().basis_vector(i));
                Vector rhs = c.algebra().multiply(c.nu_tilde() * c.algebra().basis_vector(i), g);
                CHECK(lhs == rhs);
            }
            Vector cond2 = tensor_multiply(c.hopf().algebra(), c.algebra(), c.im_element(),
                                           c.coaction_of(g));
            CHECK(cond2 == c.hopf().algebra().unit().tensor(g));
        }
    }
}

TEST_CASE("survey: Taft N=2 is uniformly negative, group algebras positive") {
    auto t2 = taft(2);
    std::vector<SurveyEntry> entries;
    entries.push_back({"A0(1)", a0(t2, 1)});
    entries.push_back({"A0(2)", a0(t2, 2)});
    for (unsigned d : {1u, 2u})
        for (long xi : {0L, 1L})
            entries.push_back({"A1", a1(t2, d, Scalar(xi, 2))});
    auto reports = survey(entries);
    REQUIRE(reports.size() == 6);
    for (const auto& r : reports) {
        CHECK(r.negative());
        CHECK(r.verdict == UnimodularReport::Verdict::no);  // deterministic at this size
    }

    auto g2 = group_algebra(cyclic_cayley(2));
    std::vector<SurveyEntry> pos;
    pos.push_back({"trivial", trivial_comodule(g2)});
    pos.push_back({"regular", regular_comodule(g2)});
    for (const auto& r : survey(pos)) CHECK(r.verdict == UnimodularReport::Verdict::yes);
}

TEST_CASE("xi-independence of the A1 verdicts") {
    auto t3 = taft(3);
    for (unsigned d : {1u, 3u}) {
        std::vector<UnimodularReport::Verdict> verdicts;
        for (const Scalar& xi :
             {Scalar(0, 3), Scalar(1, 3), Scalar::zeta(3), Scalar(2, 3)}) {
            verdicts.push_back(decide_unimodular(a1(t3, d, xi)).verdict);
        }
        for (const auto& v : verdicts) CHECK(v == verdicts.front());
    }
}

TEST_CASE("verdict independence from the Frobenius form (internal cross-check)") {
    // attaching a second form makes decide_unimodular re-run on it
    auto c = a0(taft(2), 2);
    Vector alt = Vector::unit(2, 1, 2);
    std::vector<NamedForm> forms = {{"grouplike", c.frobenius().lambda}, {"alt", alt}};
    ComoduleAlgebra c2(c.hopf_ptr(), c.presentation(), forms, c.grouplike_candidates());
    auto r = decide_unimodular(c2);  // throws on disagreement
    CHECK(r.negative());
}
