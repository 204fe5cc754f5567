#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "polymat/ideal.hpp"
#include "polymat/parse.hpp"

using namespace polymat;

namespace {

std::vector<Monomial> monomials_up_to_degree(int n, int maxDegree) {
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == n) {
            out.emplace_back(exps);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(idx)] = e;
            self(self, idx + 1, remaining - e);
        }
        exps[static_cast<std::size_t>(idx)] = 0;
    };
    rec(rec, 0, maxDegree);
    return out;
}

// Membership oracle for products: w is in I*J iff w = a*b with a in I, b in J.
bool product_member_brute(const MonomialIdeal& a, const MonomialIdeal& b, const Monomial& w) {
    int n = w.size();
    std::vector<int> div(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) {
            Monomial lo{std::vector<int>(div)};
            return a.contains(lo) && b.contains(w.divided_by(lo));
        }
        for (int e = 0; e <= w.degree_in(idx); ++e) {
            div[static_cast<std::size_t>(idx)] = e;
            if (self(self, idx + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

MonomialIdeal random_small_ideal(std::mt19937_64& rng, int n, int maxDeg, int maxGens) {
    std::uniform_int_distribution<int> pickCount(1, maxGens);
    std::uniform_int_distribution<int> pickDeg(0, maxDeg);
    std::uniform_int_distribution<int> pickVar(0, n - 1);
    std::vector<Monomial> gens;
    int count = pickCount(rng);
    for (int i = 0; i < count; ++i) {
        int d = pickDeg(rng);
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < d; ++k) ++exps[static_cast<std::size_t>(pickVar(rng))];
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(VariableSet::numbered(n), std::move(gens));
}

}  // namespace

TEST_CASE("variable set validation") {
    CHECK_THROWS_AS(VariableSet({}), std::invalid_argument);
    CHECK_THROWS_AS(VariableSet({"x", "x"}), std::invalid_argument);
    CHECK_THROWS_AS(VariableSet({"x", ""}), std::invalid_argument);
    VariableSet v = VariableSet::numbered(3);
    CHECK(v.name(0) == "x1");
    CHECK(v.index("x3") == 2);
    CHECK_FALSE(v.index("y").has_value());
}

TEST_CASE("minimalize keeps the divisibility antichain") {
    CHECK(parse_ideal("(x1^2, x1^2*x2, x2*x3)") == parse_ideal("(x1^2, x2*x3)"));

    // The unit ideal absorbs everything.
    MonomialIdeal unit(VariableSet::numbered(1), {Monomial::unit(1), Monomial::variable(1, 0)});
    CHECK(unit.is_unit());

    // Incomparable generators are both kept.
    CHECK(parse_ideal("(x1*x2^3, x1^2*x2^2)").num_gens() == 2);
}

TEST_CASE("minimalize is idempotent and order-independent") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        MonomialIdeal ideal = random_small_ideal(rng, 3, 4, 6);
        std::vector<Monomial> shuffled(ideal.gens().begin(), ideal.gens().end());
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(MonomialIdeal(ideal.vars(), shuffled) == ideal);
    }
}

TEST_CASE("support") {
    MonomialIdeal overFour(VariableSet::numbered(4),
                           {Monomial({1, 1, 0, 0}), Monomial({0, 1, 1, 0})});
    CHECK(overFour.support() == std::vector<int>{0, 1, 2});
    CHECK_FALSE(overFour.is_fully_supported());

    CHECK(MonomialIdeal::zero(VariableSet::numbered(2)).support().empty());

    MonomialIdeal fourPrimeMatroidal = parse_ideal("vars u,x,y,z,w (u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
    CHECK(fourPrimeMatroidal.support() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(fourPrimeMatroidal.is_fully_supported());
}

TEST_CASE("membership") {
    MonomialIdeal withX3(VariableSet::numbered(3),
                         {Monomial::variable(3, 0), Monomial::variable(3, 1)});
    CHECK(withX3.contains(Monomial({1, 0, 1})));  // x1*x3 in (x1, x2)

    CHECK_FALSE(parse_ideal("(x1^2)").contains(Monomial({1})));

    MonomialIdeal nestedPrimePowers = parse_ideal("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
    CHECK(nestedPrimePowers.contains(Monomial({1, 1, 1})));

    CHECK_THROWS_AS(parse_ideal("(x1, x2)").contains(Monomial({1, 0, 1})),
                    std::invalid_argument);
}

TEST_CASE("membership matches the union of divisibility cones") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        MonomialIdeal ideal = random_small_ideal(rng, 3, 3, 4);
        int maxDeg = ideal.max_generator_degree() + 2;
        for (const Monomial& m : monomials_up_to_degree(3, maxDeg)) {
            bool cone = false;
            for (const Monomial& g : ideal.gens())
                if (g.divides(m)) cone = true;
            CHECK(ideal.contains(m) == cone);
        }
    }
}

TEST_CASE("sum, product, power") {
    VariableSet two = VariableSet::numbered(2);
    MonomialIdeal x1(two, {Monomial::variable(2, 0)});
    MonomialIdeal x2(two, {Monomial::variable(2, 1)});
    CHECK(sum(x1, x2) == parse_ideal("(x1, x2)"));

    MonomialIdeal a(VariableSet::numbered(3), {Monomial::variable(3, 0), Monomial::variable(3, 1)});
    MonomialIdeal b(VariableSet::numbered(3), {Monomial::variable(3, 0), Monomial::variable(3, 2)});
    CHECK(product(a, b) == parse_ideal("(x1^2, x1*x3, x1*x2, x2*x3)"));

    MonomialIdeal m = MonomialIdeal::maximal(VariableSet::numbered(3));
    CHECK(power(m, 2).num_gens() == 6);
    CHECK(power(m, 0).is_unit());
    CHECK(power(m, 1) == m);
}

TEST_CASE("arithmetic agrees with brute-force membership") {
    std::mt19937_64 rng(123456);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal a = random_small_ideal(rng, 3, 3, 3);
        MonomialIdeal b = random_small_ideal(rng, 3, 3, 3);
        int maxDeg = std::max(a.max_generator_degree(), b.max_generator_degree()) + 2;
        MonomialIdeal s = sum(a, b);
        MonomialIdeal p = product(a, b);
        MonomialIdeal x = intersection(a, b);
        for (const Monomial& m : monomials_up_to_degree(3, maxDeg)) {
            CHECK(s.contains(m) == (a.contains(m) || b.contains(m)));
            CHECK(x.contains(m) == (a.contains(m) && b.contains(m)));
            CHECK(p.contains(m) == product_member_brute(a, b, m));
        }
    }
}

TEST_CASE("intersection fixtures") {
    MonomialIdeal x1(VariableSet::numbered(2), {Monomial::variable(2, 0)});
    MonomialIdeal x2sq(VariableSet::numbered(2), {Monomial::variable(2, 1, 2)});
    MonomialIdeal m4 = power(MonomialIdeal::maximal(VariableSet::numbered(2)), 4);
    CHECK(intersection(intersection(x1, x2sq), m4) == parse_ideal("(x1*x2^3, x1^2*x2^2)"));

    MonomialIdeal p12(VariableSet::numbered(3), {Monomial::variable(3, 0), Monomial::variable(3, 1)});
    MonomialIdeal p13(VariableSet::numbered(3), {Monomial::variable(3, 0), Monomial::variable(3, 2)});
    MonomialIdeal m2 = power(MonomialIdeal::maximal(VariableSet::numbered(3)), 2);
    CHECK(intersection(intersection(p12, p13), m2) ==
          parse_ideal("(x1^2, x1*x2, x1*x3, x2*x3)"));

    MonomialIdeal any = parse_ideal("(x1^2, x2*x3)");
    CHECK(intersection(any, MonomialIdeal::unit(any.vars())) == any);

    std::vector<MonomialIdeal> nary{p12, p13, m2};
    CHECK(intersection(std::span<const MonomialIdeal>(nary)) ==
          parse_ideal("(x1^2, x1*x2, x1*x3, x2*x3)"));
}

TEST_CASE("radical") {
    CHECK(parse_ideal("(x1^3, x2^2*x3)").radical() == parse_ideal("(x1, x2*x3)"));

    // x1 divides every generator here, so the squarefree parts collapse to
    // the principal ideal (x1).
    MonomialIdeal nestedPrimePowers = parse_ideal("(x1^3, x1^2*x2, x1^2*x3, x1*x2*x3, x1*x2^2)");
    CHECK(nestedPrimePowers.radical() ==
          MonomialIdeal(VariableSet::numbered(3), {Monomial::variable(3, 0)}));

    // The support of the radical can shrink: for (x1^2, x1*x2) the radical
    // is (x1), so only containment holds in general, with equality in the
    // squarefree case.
    CHECK(parse_ideal("(x1^2, x1*x2)").radical() ==
          MonomialIdeal(VariableSet::numbered(2), {Monomial::variable(2, 0)}));

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        MonomialIdeal ideal = random_small_ideal(rng, 4, 4, 5);
        CHECK(ideal.radical().radical() == ideal.radical());
        auto radSupp = ideal.radical().support();
        auto supp = ideal.support();
        CHECK(std::includes(supp.begin(), supp.end(), radSupp.begin(), radSupp.end()));
        if (ideal.is_squarefree()) CHECK(ideal.radical() == ideal);
    }
}

TEST_CASE("generated in a single degree") {
    MonomialIdeal fourPrimeMatroidal = parse_ideal("vars u,x,y,z,w (u*x*y, u*y*z, u*z*w, u*x*w, x*y*z, w*x*z)");
    CHECK(fourPrimeMatroidal.single_degree() == 3);
    CHECK_FALSE(parse_ideal("(x1, x2^2)").single_degree().has_value());
    MonomialIdeal m3 = power(MonomialIdeal::maximal(VariableSet::numbered(3)), 3);
    CHECK(m3.single_degree() == 3);
    CHECK_THROWS_AS(MonomialIdeal::zero(VariableSet::numbered(2)).single_degree(),
                    std::invalid_argument);
    CHECK_THROWS_AS(MonomialIdeal::unit(VariableSet::numbered(2)).single_degree(),
                    std::invalid_argument);
}

TEST_CASE("mismatched variable sets are rejected") {
    CHECK_THROWS_AS(sum(parse_ideal("(x1)"), parse_ideal("(x2)")), std::invalid_argument);
    CHECK_THROWS_AS(MonomialIdeal(VariableSet::numbered(2), {Monomial::unit(3)}),
                    std::invalid_argument);
}
