#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "askey/banita_relations.hpp"
#include "askey/sampling.hpp"
#include "helpers.hpp"

using namespace askey;

namespace {

const Catalog& cat() { return Catalog::instance(); }

ParameterSet sample_for_entry(Sampler& s, const BIEntry& e, int N) {
    REQUIRE(N % 2 == e.n_parity);
    FamilyId base = (e.side == 'B') ? FamilyId::BI : FamilyId::CBI;
    return s.sample_where(base, N, [&](const ParameterSet& c) {
        try {
            return admissible(cat().bi_barred(e, c));
        } catch (const Error&) {
            return false;
        }
    });
}

} // namespace

TEST_CASE("every published pair verifies exactly for its parity, three samples") {
    Sampler s(91);
    for (const auto& e : cat().bi_entries()) {
        std::vector<int> ns = (e.n_parity == 0) ? std::vector<int>{4, 6, 4}
                                                : std::vector<int>{3, 5, 5};
        for (int N : ns) {
            ParameterSet p = sample_for_entry(s, e, N);
            CAPTURE(e.id);
            CAPTURE(N);
            auto expansion = verify_bi_relation(e, Direction::Plus, p);
            CHECK(expansion.passed());
            CHECK(expansion.points_checked > 0);
            auto weighted = verify_bi_relation(e, Direction::Minus, p);
            CHECK(weighted.passed());
            CHECK(weighted.points_checked > 0);
        }
    }
}

TEST_CASE("entries reject the wrong parity of N") {
    Sampler s(92);
    ParameterSet p = s.sample(FamilyId::BI, 5);
    CHECK_THROWS_AS(cat().instantiate(cat().bi_by_id("B1"), Direction::Plus, p), InvalidShift);
}

TEST_CASE("perturbed coefficients fail with a residual locus") {
    Sampler s(93);
    const auto& e = cat().bi_by_id("B1");
    ParameterSet p = sample_for_entry(s, e, 4);
    auto broken = cat().instantiate(e, Direction::Plus, p).with_coeff_scaled(-1, Rational(2));
    auto rep = verify_relation(broken);
    CHECK(rep.verdict == Verdict::Fail);
    CHECK(!rep.residual_locus.empty());
    auto broken_b = cat().instantiate(e, Direction::Minus, p).with_coeff_scaled(0, Rational(2));
    CHECK(verify_relation(broken_b).verdict == Verdict::Fail);

    const auto& i5 = cat().bi_by_id("I5");
    ParameterSet p5 = sample_for_entry(s, i5, 5);
    CHECK(verify_bi_relation(i5, Direction::Plus, p5).passed());
    auto broken_i = cat().instantiate(i5, Direction::Plus, p5).with_coeff_scaled(-1, Rational(2));
    CHECK(verify_relation(broken_i).verdict == Verdict::Fail);
}

TEST_CASE("a B entry chained with an I entry gives a three-step relation on Bannai-Ito") {
    Sampler s(94);
    const auto& b1 = cat().bi_by_id("B1");
    const auto& i1 = cat().bi_by_id("I1");
    for (int N : {4, 6}) {
        ParameterSet p = s.sample_where(FamilyId::BI, N, [&](const ParameterSet& c) {
            try {
                ParameterSet mid = cat().bi_barred(b1, c);
                return admissible(mid) && admissible(cat().bi_barred(i1, mid));
            } catch (const Error&) {
                return false;
            }
        });
        RelationInstance rel = compose_bi_pair(b1, i1, Direction::Plus, p);
        CHECK(rel.support == std::vector<int>{0, -1, -2});
        CHECK(rel.target.family == FamilyId::BI);
        // the chain lands on (alpha+1, beta, gamma, N)
        CHECK(rel.target.at("alpha") == p.at("alpha") + Rational(1));
        CHECK(rel.target.at("beta") == p.at("beta"));
        CHECK(rel.target.at("gamma") == p.at("gamma"));
        auto rep = verify_relation(rel);
        CHECK(rep.passed());
        CHECK(rep.points_checked > 0);
    }
}

TEST_CASE("a B entry chained with its own weighted form gives a three-term relation") {
    Sampler s(95);
    const auto& b2 = cat().bi_by_id("B2");
    ParameterSet p = s.sample_where(FamilyId::BI, 4, [&](const ParameterSet& c) {
        try {
            return admissible(cat().bi_barred(b2, c));
        } catch (const Error&) {
            return false;
        }
    });
    RelationInstance rel = compose_bi_pair(b2, b2, Direction::Minus, p);
    CHECK(rel.support == std::vector<int>{1, 0, -1});
    CHECK(rel.target == p);
    CHECK(verify_relation(rel).passed());
}

TEST_CASE("the chained one-step moves satisfy the three-step existence conditions") {
    // B1 o I1 shifts alpha by 1 at fixed N; that move must pass the
    // B2'-type conditions on the Bannai-Ito recurrence data.
    Sampler s(96);
    ParameterSet p = s.sample(FamilyId::BI, 6);
    ShiftMap shift;
    shift.family = FamilyId::BI;
    shift.moves["alpha"] = ParamMove{0, Rational(1)};
    auto rep = check_constraints(ConstraintKind::B2p, p, shift);
    CHECK(rep.passed());
    // but it is not a one-step move
    CHECK(!check_constraints(ConstraintKind::A2, p, shift).passed());
}

TEST_CASE("bounded search: no one-step relation exists besides the identity") {
    for (int parity : {0, 1}) {
        auto rep = bi_a2_nonexistence(parity, {4 + parity, 6 + parity}, 3, 17);
        CAPTURE(parity);
        CHECK(rep.candidates > 1000); // eta x N-offset x two half-integer move sets
        CHECK(rep.identity_passed);
        CHECK(rep.survivors.empty());
        CHECK(rep.only_identity());
    }
}
