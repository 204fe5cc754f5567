#include <catch2/catch_amalgamated.hpp>

#include "polymat/cm_classify.hpp"
#include "polymat/parse.hpp"

using namespace polymat;

namespace {

MonomialIdeal fourPrimeMatroidal() {
    return parse_ideal("vars u,x,y,z,w (u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
}

MonomialIdeal nestedPrimePowers() {
    return parse_ideal("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
}

MonomialIdeal threeBlockMatroidal() {
    VariableSet six = VariableSet::numbered(6);
    MonomialPrime p1(six, {0, 1, 2, 3});
    MonomialPrime p2(six, {2, 3, 4, 5});
    MonomialPrime p3(six, {0, 1, 4, 5});
    return intersection(intersection(p1.to_ideal(), p2.to_ideal()), p3.to_ideal());
}

MonomialIdeal pairwiseMaximalGcm() {
    VariableSet three = VariableSet::numbered(3);
    MonomialPrime p12(three, {0, 1});
    MonomialPrime p23(three, {1, 2});
    return intersection(intersection(p12.to_ideal(), p23.power_ideal(2)),
                        MonomialPrime::maximal(three).power_ideal(3));
}

}  // namespace

TEST_CASE("cm classification of polymatroidal ideals") {
    MonomialIdeal m3 = power(MonomialIdeal::maximal(VariableSet::numbered(4)), 3);
    CHECK(is_cm_polymatroidal(m3));
    CHECK_FALSE(is_cm_polymatroidal(fourPrimeMatroidal()));
    CHECK_FALSE(is_cm_polymatroidal(threeBlockMatroidal()));
    CHECK_THROWS_AS(is_cm_polymatroidal(parse_ideal("(x1*x2, x3*x4)")), std::invalid_argument);
}

TEST_CASE("generalized CM fixtures") {
    // The four-prime matroidal fixture is unmixed yet not gCM; the
    // localization killing x is a known failing one.
    MonomialIdeal i14 = fourPrimeMatroidal();
    GcmVerdict v14 = is_generalized_cm(i14);
    CHECK_FALSE(v14.value);
    CHECK(v14.equidimensional);
    REQUIRE(v14.witness.has_value());
    CHECK_FALSE(localization_is_cm(monomial_localization(i14, *v14.witness)));
    MonomialIdeal knownWitness = localization_killing(i14, {*i14.vars().index("x")});
    CHECK(knownWitness == parse_ideal("vars u,x,y,z,w (u*y, u*w, y*z, w*z)"));
    CHECK_FALSE(localization_is_cm(knownWitness));

    // pairwiseMaximalGcm is gCM.
    CHECK(is_generalized_cm(pairwiseMaximalGcm()).value);

    // The nested fixture fails at the prime keeping {x1, x2}; the
    // localization is (x1) cap (x1,x2)^2.
    GcmVerdict vc2 = is_generalized_cm(nestedPrimePowers());
    CHECK_FALSE(vc2.value);
    REQUIRE(vc2.witness.has_value());
    CHECK(vc2.witness->members() == std::vector<int>{0, 1});
    MonomialIdeal loc(nestedPrimePowers().vars(), {Monomial({2, 0, 0}), Monomial({1, 1, 0})});
    CHECK(monomial_localization(nestedPrimePowers(), *vc2.witness) == loc);

    CHECK_THROWS_AS(is_generalized_cm(parse_ideal("(x1*x2, x3*x4)")), std::invalid_argument);
}

TEST_CASE("CM implies gCM on the fixtures") {
    for (const char* text : {"(x1*x2*x3)", "(x1^2, x1*x2, x2^2)", "(x1*x2, x1*x3, x2*x3)"}) {
        MonomialIdeal ideal = parse_ideal(text);
        if (is_cm_polymatroidal(ideal)) CHECK(is_generalized_cm(ideal).value);
    }
}

TEST_CASE("cap-prod identity") {
    VariableSet two = VariableSet::numbered(2);
    MonomialIdeal j1 = MonomialIdeal::maximal(two);
    CHECK(cap_prod(j1, 3) == power(MonomialIdeal::maximal(two), 3));

    MonomialIdeal j2 = parse_ideal("(x1*x2, x1*x3, x2*x3)");  // placeholder ring pin
    MonomialIdeal x1x2(VariableSet::numbered(3), {Monomial({1, 1, 0})});
    CHECK(cap_prod(x1x2, 3) == parse_ideal("(x1^2*x2, x1*x2^2, x1*x2*x3)"));

    MonomialIdeal i14 = fourPrimeMatroidal();
    CHECK(cap_prod(i14, 3) == i14);

    CHECK_THROWS_AS(cap_prod(parse_ideal("(x1, x2^2)"), 3), std::invalid_argument);
    CHECK_THROWS_AS(cap_prod(x1x2, 1), std::invalid_argument);
}

TEST_CASE("saturation strips the m-primary part") {
    CHECK(saturate(nestedPrimePowers()) ==
          intersection(MonomialIdeal(nestedPrimePowers().vars(), {Monomial::variable(3, 0)}),
                       MonomialPrime(nestedPrimePowers().vars(), {0, 1}).power_ideal(2)));
    CHECK(saturate(fourPrimeMatroidal()) == fourPrimeMatroidal());
    MonomialIdeal m2 = power(MonomialIdeal::maximal(VariableSet::numbered(2)), 2);
    CHECK(saturate(m2).is_unit());
}

TEST_CASE("theorem th fixtures") {
    // J = (x1) cap (x2^2), s = 4 -> {a, b}.
    VariableSet two = VariableSet::numbered(2);
    MonomialIdeal j1 = intersection(MonomialIdeal(two, {Monomial::variable(2, 0)}),
                                    MonomialIdeal(two, {Monomial::variable(2, 1, 2)}));
    TheoremThReport r1 = theorem_th_classify(j1, 4);
    CHECK(r1.ideal == parse_ideal("(x1*x2^3, x1^2*x2^2)"));
    CHECK(r1.clause_a);
    CHECK(r1.clause_b);
    CHECK_FALSE(r1.clause_c);
    CHECK(r1.polymatroidal);
    CHECK(r1.gcm);
    CHECK(r1.consistent());

    // J = (x1) cap (x2) over three variables, s = 3 -> {a, c}.
    VariableSet three = VariableSet::numbered(3);
    MonomialIdeal j2 = intersection(MonomialIdeal(three, {Monomial::variable(3, 0)}),
                                    MonomialIdeal(three, {Monomial::variable(3, 1)}));
    TheoremThReport r2 = theorem_th_classify(j2, 3);
    CHECK(r2.ideal == parse_ideal("(x1^2*x2, x1*x2^2, x1*x2*x3)"));
    CHECK(r2.clause_a);
    CHECK_FALSE(r2.clause_b);
    CHECK(r2.clause_c);
    CHECK(r2.consistent());

    // J is the three-block intersection itself, s = 0 -> {b, c}.
    TheoremThReport r3 = theorem_th_classify(threeBlockMatroidal(), 0);
    CHECK_FALSE(r3.clause_a);
    CHECK(r3.clause_b);
    CHECK(r3.clause_c);
    CHECK(r3.polymatroidal);
    CHECK(r3.gcm);
    CHECK(r3.consistent());

    // J = (x1,x2) cap (x2,x3)^2, s = 3 -> {b}.
    MonomialPrime p12(three, {0, 1});
    MonomialPrime p23(three, {1, 2});
    MonomialIdeal j4 = intersection(p12.to_ideal(), p23.power_ideal(2));
    TheoremThReport r4 = theorem_th_classify(j4, 3);
    CHECK_FALSE(r4.clause_a);
    CHECK(r4.clause_b);
    CHECK_FALSE(r4.clause_c);
    CHECK(r4.polymatroidal);
    CHECK(r4.gcm);
    CHECK(r4.consistent());

    // The nested-prime-power fixture through its canonical (J, s):
    // polymatroidal but not gCM, and no clause holds.
    auto canonical = canonical_theorem_th_input(nestedPrimePowers());
    REQUIRE(canonical.has_value());
    CHECK(canonical->second == 3);
    TheoremThReport r5 = theorem_th_classify(canonical->first, canonical->second);
    CHECK_FALSE(r5.any_clause());
    CHECK(r5.polymatroidal);
    CHECK_FALSE(r5.gcm);
    CHECK(r5.consistent());
}

TEST_CASE("theorem th canonical input") {
    VariableSet two = VariableSet::numbered(2);
    MonomialIdeal m3 = power(MonomialIdeal::maximal(two), 3);
    auto c1 = canonical_theorem_th_input(m3);
    REQUIRE(c1.has_value());
    CHECK(c1->first.is_unit());
    CHECK(c1->second == 3);
    TheoremThReport r = theorem_th_classify(c1->first, c1->second);
    CHECK(r.clause_b);  // vacuous presentation
    CHECK(r.consistent());

    // (x1^3, x2^3) admits no J cap m^s shape with the canonical saturation;
    // consistently, it is not polymatroidal.
    MonomialIdeal powers = parse_ideal("(x1^3, x2^3)");
    CHECK_FALSE(canonical_theorem_th_input(powers).has_value());
    CHECK_FALSE(is_polymatroidal(powers).value);
}

TEST_CASE("theorem th input validation") {
    VariableSet two = VariableSet::numbered(2);
    // Not fully supported: J = (x1) with s = 0.
    CHECK_THROWS_AS(theorem_th_classify(MonomialIdeal(two, {Monomial::variable(2, 0)}), 0),
                    std::invalid_argument);
    // s neither 0 nor the degree of I.
    CHECK_THROWS_AS(theorem_th_classify(parse_ideal("(x1^5, x2^5)"), 2),
                    std::invalid_argument);
    // Not single-degree.
    CHECK_THROWS_AS(theorem_th_classify(parse_ideal("(x1, x2^2)"), 0), std::invalid_argument);
}

TEST_CASE("lemma akhar pairwise-sum criterion") {
    MonomialIdeal m2 = power(MonomialIdeal::maximal(VariableSet::numbered(2)), 2);
    AkharReport r1 = lemma_akhar_check(m2);
    CHECK(r1.pairwise_sums_maximal);
    CHECK(r1.polymatroidal);
    CHECK(r1.intersection_type);

    VariableSet three = VariableSet::numbered(3);
    AkharReport r2 = lemma_akhar_check(squarefree_veronese_ideal(three, {0, 1, 2}, 2));
    CHECK(r2.pairwise_sums_maximal);
    CHECK(r2.polymatroidal);

    // (x1x2, x3x4): associated primes include (x1,x3) and (x1,x4) whose sum
    // misses x2, so the criterion and polymatroidality both fail.
    AkharReport r3 = lemma_akhar_check(parse_ideal("(x1*x2, x3*x4)"));
    CHECK_FALSE(r3.pairwise_sums_maximal);
    CHECK_FALSE(r3.polymatroidal);
    CHECK(r3.intersection_type);

    // (x1^2, x2^2): m-primary but not a power of m. The pairwise condition
    // is vacuous while the ideal is not polymatroidal; the biconditional
    // only applies to intersection-type ideals and this is not one.
    AkharReport r4 = lemma_akhar_check(parse_ideal("(x1^2, x2^2)"));
    CHECK(r4.pairwise_sums_maximal);
    CHECK_FALSE(r4.polymatroidal);
    CHECK_FALSE(r4.intersection_type);

    // Wrong degree and missing support are rejected.
    CHECK_THROWS_AS(lemma_akhar_check(parse_ideal("(x1*x2*x3)")), std::invalid_argument);
    MonomialIdeal partialSupport(VariableSet::numbered(3), {Monomial({1, 1, 0})});
    CHECK_THROWS_AS(lemma_akhar_check(partialSupport), std::invalid_argument);

    // A fully supported degree-2 principal ideal is fine.
    AkharReport r5 = lemma_akhar_check(parse_ideal("(x1*x2)"));
    CHECK(r5.pairwise_sums_maximal);
    CHECK(r5.polymatroidal);
}
