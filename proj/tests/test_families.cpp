#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "askey/banita.hpp"
#include "askey/families.hpp"
#include "askey/sampling.hpp"
#include "helpers.hpp"

using namespace askey;
using askey::testing::leading_coefficient;
using askey::testing::make_params;

namespace {

const FamilyId kRecurrenceFamilies[] = {FamilyId::qR, FamilyId::qH, FamilyId::dqH, FamilyId::qqK,
                                        FamilyId::qK, FamilyId::aqK, FamilyId::dqK, FamilyId::R,
                                        FamilyId::H,  FamilyId::dH,  FamilyId::K,   FamilyId::BI};

} // namespace

TEST_CASE("spectral variable worked values") {
    auto k = make_params(FamilyId::K, {{"alpha", "1/2"}}, 5);
    CHECK(lambda(k, 3) == Rational(-3));

    auto r = make_params(FamilyId::R, {{"alpha", "1/3"}, {"beta", "1/5"}, {"gamma", "1/2"}}, 3);
    CHECK(lambda(r, 1) == Rational(-3, 2)); // 1*(1 + 1/2 - 3)
}

TEST_CASE("lambda vanishes at x = 0 for every family") {
    Sampler s(11);
    for (FamilyId f : kRecurrenceFamilies) {
        ParameterSet p = s.sample(f, 4);
        CHECK(lambda(p, 0) == Rational(0));
    }
}

TEST_CASE("recurrence boundary conventions and worked values") {
    Sampler s(12);
    for (FamilyId f : kRecurrenceFamilies) {
        ParameterSet p = s.sample(f, 5);
        CHECK(recurrence_coeffs(p, 0).C == Rational(0));
        CHECK(recurrence_coeffs(p, p.N).A == Rational(0));
    }
    auto k = make_params(FamilyId::K, {{"alpha", "1/2"}}, 3);
    auto rc = recurrence_coeffs(k, 1);
    CHECK(rc.A == Rational(1));
    CHECK(rc.C == Rational(1, 2));
}

TEST_CASE("X and Y stay consistent with independently fetched A, C") {
    Sampler s(13);
    for (FamilyId f : kRecurrenceFamilies) {
        ParameterSet p = s.sample(f, 5);
        for (int i = 0; i <= p.N; ++i) {
            auto rc = recurrence_coeffs(p, i);
            CHECK(rc.Y == -(rc.A + rc.C));
            Rational expect_x =
                (i == 0) ? Rational(0) : recurrence_coeffs(p, i - 1).A * recurrence_coeffs(p, i).C;
            CHECK(rc.X == expect_x);
        }
    }
}

TEST_CASE("series route worked values") {
    auto k = make_params(FamilyId::K, {{"alpha", "1/2"}}, 2);
    CHECK(eval_poly_hypergeometric(k, 1, 1) == Rational(0)); // 1 - 1/(alpha N)
    CHECK(eval_poly_hypergeometric(k, 0, 2) == Rational(1));

    auto k3 = make_params(FamilyId::K, {{"alpha", "2/3"}}, 4);
    for (int x = 0; x <= 4; ++x) {
        Rational expect = Rational(1) - Rational(x) / (Rational(2, 3) * Rational(4));
        CHECK(eval_poly_recurrence(k3, 1, x) == expect);
        CHECK(eval_poly_hypergeometric(k3, 1, x) == expect);
    }
}

TEST_CASE("normalization R_i(0) = 1 and R_0(x) = 1") {
    Sampler s(14);
    for (FamilyId f : kRecurrenceFamilies) {
        if (f == FamilyId::BI) continue; // Bannai-Ito is monic, not unit-normalized
        ParameterSet p = s.sample(f, 4);
        for (int i = 0; i <= p.N; ++i) CHECK(eval_poly_hypergeometric(p, i, 0) == Rational(1));
        for (int x = 0; x <= p.N; ++x) CHECK(eval_poly_hypergeometric(p, 0, x) == Rational(1));
    }
}

TEST_CASE("q-Racah series agrees with the recurrence at a pinned sample") {
    auto p = make_params(
        FamilyId::qR, {{"alpha", "1/3"}, {"beta", "1/5"}, {"gamma", "1/7"}, {"q", "1/2"}}, 2);
    REQUIRE(admissible(p));
    CHECK(eval_poly_hypergeometric(p, 1, 1) == eval_poly_recurrence(p, 1, 1));
}

TEST_CASE("dual-path agreement on the full grid for every family") {
    Sampler s(42);
    for (FamilyId f : kRecurrenceFamilies) {
        for (int trial = 0; trial < 3; ++trial) {
            int N = 2 + (trial * 2 + 1) % 5;
            ParameterSet p = s.sample(f, N);
            for (int i = 0; i <= N; ++i)
                for (int x = 0; x <= N; ++x) {
                    CAPTURE(family_name(f));
                    CAPTURE(i);
                    CAPTURE(x);
                    CHECK(eval_poly_hypergeometric(p, i, x) == eval_poly_recurrence(p, i, x));
                }
        }
    }
    // complementary Bannai-Ito has its own twisted recurrence
    for (int trial = 0; trial < 4; ++trial) {
        ParameterSet p = s.sample(FamilyId::CBI, 3 + trial);
        for (int i = 0; i <= p.N; ++i)
            for (int x = 0; x <= p.N; ++x)
                CHECK(cbi::eval_def(p, i, x) == cbi::eval_recurrence(p, i, x));
    }
}

TEST_CASE("evaluation accumulated in reverse order gives the identical scalar") {
    auto p = make_params(
        FamilyId::qR, {{"alpha", "1/3"}, {"beta", "1/5"}, {"gamma", "1/7"}, {"q", "2/5"}}, 4);
    // series summed forward (library) vs terms collected then added backward
    const Rational q = p.q();
    int i = 4, x = 2;
    SeriesSpec s;
    s.top = {q.pow(-i), p.at("alpha") * p.at("beta") * q.pow(i + 1), q.pow(-x),
             p.at("gamma") * q.pow(x - p.N)};
    s.bottom = {p.at("alpha") * q, p.at("beta") * p.at("gamma") * q, q.pow(-p.N)};
    s.argument = q;
    std::vector<Rational> terms{Rational(1)};
    for (int k = 0; k < i; ++k) {
        Rational num = s.argument;
        for (const auto& a : s.top) num *= Rational(1) - a * q.pow(k);
        Rational den = Rational(1) - q.pow(k + 1);
        for (const auto& b : s.bottom) den *= Rational(1) - b * q.pow(k);
        terms.push_back(terms.back() * num / den);
    }
    Rational backward(0);
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) backward += *it;
    CHECK(backward == eval_poly_hypergeometric(p, i, x));
}

TEST_CASE("published weights: unit value at x = 0 and exact orthogonality") {
    Sampler s(7);
    for (FamilyId f : {FamilyId::qR, FamilyId::R}) {
        for (int trial = 0; trial < 3; ++trial) {
            ParameterSet p = s.sample(f, 2 + trial);
            CHECK(weight(p, 0) == Rational(1));
            auto table = grid_table(p);
            for (int i = 0; i <= p.N; ++i)
                for (int j = 0; j < i; ++j) {
                    Rational sum(0);
                    for (int x = 0; x <= p.N; ++x) sum += table[i][x] * table[j][x] * weight(p, x);
                    CAPTURE(family_name(f));
                    CHECK(sum == Rational(0));
                }
        }
    }
    auto h = make_params(FamilyId::H, {{"alpha", "1/2"}, {"beta", "1/3"}}, 3);
    CHECK_THROWS_AS(weight(h, 0), UnsupportedFamily);
}

TEST_CASE("Racah weight 3-point orthogonality, pinned") {
    auto p = make_params(FamilyId::R, {{"alpha", "1/3"}, {"beta", "1/5"}, {"gamma", "1/7"}}, 2);
    REQUIRE(admissible(p));
    Rational sum(0);
    for (int x = 0; x <= 2; ++x)
        sum += weight(p, x) * eval_poly_hypergeometric(p, 0, x) * eval_poly_hypergeometric(p, 1, x);
    CHECK(sum == Rational(0));
}

TEST_CASE("lambda is injective on the grid for admissible samples") {
    Sampler s(5);
    for (FamilyId f : kRecurrenceFamilies) {
        ParameterSet p = s.sample(f, 6);
        for (int x = 0; x < p.N; ++x)
            for (int y = x + 1; y <= p.N; ++y) CHECK(!(lambda(p, x) == lambda(p, y)));
    }
}

TEST_CASE("admissibility rejects broken parameter sets") {
    auto bad_q = make_params(FamilyId::qH, {{"alpha", "1/3"}, {"beta", "1/5"}, {"q", "1"}}, 3);
    CHECK(!admissible(bad_q));
    // alphabeta q^{2i+1} = 1 makes a qH recurrence denominator vanish
    auto bad = make_params(FamilyId::qH, {{"alpha", "5/2"}, {"beta", "5/2"}, {"q", "2/5"}}, 3);
    CHECK(!admissible(bad));
    auto zero_alpha = make_params(FamilyId::K, {{"alpha", "0"}}, 3);
    CHECK(!admissible(zero_alpha));
}

TEST_CASE("parameter sets round-trip through JSON") {
    auto p = make_params(
        FamilyId::qR, {{"alpha", "1/3"}, {"beta", "1/5"}, {"gamma", "-2/7"}, {"q", "2/5"}}, 4);
    auto j = p.to_json();
    CHECK(j["family"] == "qR");
    CHECK(j["params"]["gamma"] == "-2/7");
    CHECK(ParameterSet::from_json(j) == p);
}

TEST_CASE("parity decomposition") {
    CHECK(parity_decompose(0).n_e == 0);
    CHECK(parity_decompose(0).n_p == 0);
    CHECK(parity_decompose(5).n_e == 2);
    CHECK(parity_decompose(5).n_p == 1);
    CHECK(parity_decompose(4).n_e == 2);
    CHECK(parity_decompose(4).n_p == 0);
    for (int n = 0; n <= 12; ++n) {
        auto d = parity_decompose(n);
        CHECK(2 * d.n_e + d.n_p == n);
    }
}

TEST_CASE("Bannai-Ito seed value and monic leading coefficient") {
    Sampler s(21);
    for (int N : {4, 5}) {
        ParameterSet p = s.sample(FamilyId::BI, N);
        // lambda_0 = 0, C_0 = 0, so B_1(0) = A_0 + C_0
        auto rc0 = bi::recurrence_coeffs(p, 0);
        CHECK(rc0.C == Rational(0));
        CHECK(bi::eval_def(p, 1, 0) == rc0.A);
        // monic in the spectral variable: top divided difference is 1
        for (int i = 1; i <= N; ++i) {
            std::vector<std::pair<Rational, Rational>> pts;
            for (int x = 0; x <= i; ++x) pts.emplace_back(bi::lambda(p, x), bi::eval_def(p, i, x));
            CHECK(leading_coefficient(pts) == Rational(1));
        }
    }
}

TEST_CASE("Bannai-Ito symmetry for odd N") {
    Sampler s(22);
    ParameterSet p = s.sample(FamilyId::BI, 5);
    ParameterSet swapped = p;
    swapped.named.at("alpha") = p.at("beta") + p.at("gamma") - Rational(1);
    swapped.named.at("beta") = p.at("alpha") - p.at("gamma") + Rational(1);
    if (admissible(swapped)) {
        for (int i = 0; i <= p.N; ++i)
            for (int x = 0; x <= p.N; ++x)
                CHECK(bi::eval_def(p, i, x) == bi::eval_def(swapped, i, x));
    }
}

TEST_CASE("complementary Bannai-Ito symmetry for even N") {
    Sampler s(23);
    ParameterSet p = s.sample(FamilyId::CBI, 4);
    ParameterSet swapped = p;
    swapped.named.at("alpha") = p.at("beta") + p.at("gamma") - Rational(1);
    swapped.named.at("beta") = p.at("alpha") - p.at("gamma") + Rational(1);
    if (admissible(swapped)) {
        for (int i = 0; i <= p.N; ++i)
            for (int x = 0; x <= p.N; ++x)
                CHECK(cbi::eval_def(p, i, x) == cbi::eval_def(swapped, i, x));
    }
}
