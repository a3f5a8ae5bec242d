#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "wps/field.hpp"
#include "wps/ideal.hpp"
#include "wps/zeta.hpp"

using namespace wps;

namespace {

FieldElement elem(Int a, Int b)
{
    return {Rat(a), Rat(b)};
}

/* independent reduced-form enumeration: all (A,B,C), B^2-4AC = -Dabs,
 * |B| <= A <= C, primitive, B >= 0 when |B| = A or A = C */
std::set<std::array<Int, 3>> reduced_forms_oracle(Int Dabs)
{
    std::set<std::array<Int, 3>> forms;
    for (Int A = 1; A * A * 3 <= Dabs; ++A)
        for (Int B = -A; B <= A; ++B)
            for (Int C = A; 4 * A * C <= B * B + Dabs + 4 * A * A; ++C) {
                if (B * B - 4 * A * C != -Dabs)
                    continue;
                if (C < A)
                    continue;
                if (B < 0 && (iabs(B) == A || A == C))
                    continue;
                if (std::gcd(std::gcd(A, iabs(B)), C) != 1)
                    continue;
                forms.insert({A, B, C});
            }
    return forms;
}

/* two-generator ideal (x, y) as a module sum */
IdealRep two_gen(FieldData const & F, FieldElement const & x,
                 FieldElement const & y)
{
    return ideal_add(F, principal_ideal(F, x), principal_ideal(F, y));
}

} // namespace

TEST_CASE("field invariants over Q")
{
    FieldData F = make_rational_field();
    CHECK(F.disc_abs == 1);
    CHECK(F.r1 == 1);
    CHECK(F.r2 == 0);
    CHECK(F.h == 1);
    CHECK(F.w == 2);
    CHECK(F.regulator == 1.0);
    CHECK(F.class_reps.size() == 1);
    CHECK(F.class_reps[0] == unit_ideal());
    CHECK(F.roots_of_unity.size() == 2);
}

TEST_CASE("field invariants over Q(i) against the form oracle")
{
    FieldData F = make_imaginary_quadratic_field(1);
    CHECK(F.disc_abs == 4);
    CHECK(F.r1 == 0);
    CHECK(F.r2 == 1);
    CHECK(F.w == 4);
    CHECK(F.regulator == 1.0);
    auto oracle = reduced_forms_oracle(4);
    CHECK(F.h == static_cast<Int>(oracle.size()));
    CHECK(F.h == 1);
}

TEST_CASE("class group of Q(sqrt(-5)) from reduced forms")
{
    FieldData F = make_imaginary_quadratic_field(5);
    CHECK(F.disc_abs == 20);
    auto oracle = reduced_forms_oracle(20);
    CHECK(oracle.size() == 2);
    CHECK(oracle.count({1, 0, 5}) == 1);
    CHECK(oracle.count({2, 2, 3}) == 1);
    CHECK(F.h == 2);
    REQUIRE(F.class_reps.size() == 2);
    CHECK(F.class_reps[0] == unit_ideal());
    // the nonprincipal representative is (2, 1 + omega), of minimal norm 2
    CHECK(F.class_reps[1].a == 2);
    CHECK(ideal_norm(F, F.class_reps[1]) == Rat(2));
    // labels of the representatives are exactly the reduced forms
    std::set<std::array<Int, 3>> labels;
    for (auto const & A : F.class_reps) {
        QuadForm f = class_label(F, A);
        labels.insert({f.a, f.b, f.c});
    }
    CHECK(labels == oracle);
}

TEST_CASE("class numbers for a few fields match the form oracle")
{
    for (Int d : {2, 3, 6, 7, 10, 11, 13, 15, 19, 23, 163}) {
        FieldData F = make_imaginary_quadratic_field(d);
        auto oracle = reduced_forms_oracle(F.disc_abs);
        CHECK(F.h == static_cast<Int>(oracle.size()));
        // representatives are pairwise non-equivalent
        std::set<std::array<Int, 3>> labels;
        for (auto const & A : F.class_reps) {
            QuadForm f = class_label(F, A);
            labels.insert({f.a, f.b, f.c});
        }
        CHECK(labels.size() == static_cast<size_t>(F.h));
    }
    CHECK(make_imaginary_quadratic_field(23).h == 3);
    CHECK(make_imaginary_quadratic_field(163).h == 1);
}

TEST_CASE("non-squarefree and nonpositive d are rejected")
{
    CHECK_THROWS_AS(make_imaginary_quadratic_field(4), input_error);
    CHECK_THROWS_AS(make_imaginary_quadratic_field(12), input_error);
    CHECK_THROWS_AS(make_imaginary_quadratic_field(0), input_error);
    CHECK_THROWS_AS(make_imaginary_quadratic_field(-5), input_error);
}

TEST_CASE("roots of unity form the torsion group")
{
    for (Int d : {1, 2, 3, 5}) {
        FieldData F = make_imaginary_quadratic_field(d);
        CHECK(static_cast<int>(F.roots_of_unity.size()) == F.w);
        for (auto const & u : F.roots_of_unity) {
            CHECK(elem_norm(F, u) == Rat(1));
            CHECK(elem_pow(F, u, F.w) == elem(1, 0));
        }
    }
    CHECK(make_imaginary_quadratic_field(1).w == 4);
    CHECK(make_imaginary_quadratic_field(3).w == 6);
    CHECK(make_imaginary_quadratic_field(2).w == 2);
}

TEST_CASE("element arithmetic is exact")
{
    FieldData F = make_imaginary_quadratic_field(5);
    CHECK(elem_norm(F, elem(1, 1)) == Rat(6)); // N(1 + sqrt(-5))
    CHECK(elem_mul(F, elem(0, 1), elem(0, 1)) == elem(-5, 0));
    FieldData F3 = make_imaginary_quadratic_field(3);
    CHECK(elem_norm(F3, elem(0, 1)) == Rat(1)); // omega = (1+sqrt(-3))/2
    CHECK(elem_trace(F3, elem(0, 1)) == Rat(1));
    FieldElement x{Rat(3, 2), Rat(-1)};
    FieldElement inv = elem_inv(F, x);
    CHECK(elem_mul(F, x, inv) == elem(1, 0));
    CHECK(parse_element("3/2-w") == x);
    CHECK(parse_element(format_element(x)) == x);
    CHECK(parse_element("1+2w") == elem(1, 2));
    CHECK(parse_element("-w") == elem(0, -1));
}

TEST_CASE("ideal norms")
{
    FieldData Fq = make_rational_field();
    CHECK(ideal_norm(Fq, unit_ideal()) == Rat(1));

    FieldData F5 = make_imaginary_quadratic_field(5);
    IdealRep p2 = two_gen(F5, elem(2, 0), elem(1, 1)); // (2, 1+sqrt(-5))
    CHECK(ideal_norm(F5, p2) == Rat(2));

    FieldData Fi = make_imaginary_quadratic_field(1);
    CHECK(ideal_norm(Fi, principal_ideal(Fi, elem(3, 0))) == Rat(9));
}

TEST_CASE("norm multiplicativity on random ideal pairs")
{
    std::mt19937_64 rng(20240811);
    for (Int d : {1, 5, 6}) {
        FieldData F = make_imaginary_quadratic_field(d);
        auto ideals = integral_ideals_up_to(F, 60);
        std::uniform_int_distribution<size_t> pick(0, ideals.size() - 1);
        for (int trial = 0; trial < 300; ++trial) {
            IdealRep const & I = ideals[pick(rng)];
            IdealRep const & J = ideals[pick(rng)];
            CHECK(ideal_norm(F, ideal_mul(F, I, J)) ==
                  ideal_norm(F, I) * ideal_norm(F, J));
        }
    }
}

TEST_CASE("factorization examples")
{
    FieldData Fq = make_rational_field();
    CHECK(factor_ideal(Fq, unit_ideal()).empty());

    // (6) = (1+i)^2 (3) over Q(i): 2 ramifies, 3 is inert
    FieldData Fi = make_imaginary_quadratic_field(1);
    CHECK(kronecker(-4, 2) == 0);
    CHECK(kronecker(-4, 3) == -1);
    auto f6 = factor_ideal(Fi, principal_ideal(Fi, elem(6, 0)));
    REQUIRE(f6.size() == 2);
    CHECK(ideal_norm(Fi, f6[0].first) == Rat(2));
    CHECK(f6[0].second == 2);
    CHECK(ideal_norm(Fi, f6[1].first) == Rat(9));
    CHECK(f6[1].second == 1);

    // (2) ramifies in Q(sqrt(-5)): (2) = p2^2 with p2 = (2, 1+sqrt(-5))
    FieldData F5 = make_imaginary_quadratic_field(5);
    auto f2 = factor_ideal(F5, principal_ideal(F5, elem(2, 0)));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].second == 2);
    CHECK(f2[0].first == two_gen(F5, elem(2, 0), elem(1, 1)));
}

TEST_CASE("factor round-trip for all ideals of small norm")
{
    for (Int d : {1, 5}) {
        FieldData F = make_imaginary_quadratic_field(d);
        for (auto const & I : integral_ideals_up_to(F, 500)) {
            auto factors = factor_ideal(F, I); // verifies the round-trip
            IdealRep prod = unit_ideal();
            for (auto const & [P, e] : factors) {
                CHECK(moebius_ideal(F, P) == -1); // factors are prime
                prod = ideal_mul(F, prod, ideal_pow(F, P, e));
            }
            CHECK(prod == I);
        }
    }
}

TEST_CASE("element valuations")
{
    FieldData Fi = make_imaginary_quadratic_field(1);
    IdealRep p2 = principal_ideal(Fi, elem(1, 1)); // (1+i)
    CHECK(element_valuation(Fi, elem(2, 0), p2) == 2);
    CHECK(element_valuation(Fi, elem(3, 0), p2) == 0);
    CHECK(element_valuation(Fi, elem(6, 0), p2) == 2);
    CHECK(!element_valuation(Fi, elem(0, 0), p2).has_value()); // infinite
    // fractional elements get negative valuations
    CHECK(element_valuation(Fi, {Rat(1, 2), Rat(0)}, p2) == -2);
}

TEST_CASE("moebius function on ideals")
{
    FieldData Fq = make_rational_field();
    CHECK(moebius_ideal(Fq, unit_ideal()) == 1);
    CHECK(moebius_ideal(Fq, {Rat(6), 1, 0}) == 1);  // mu(6) = +1
    CHECK(moebius_ideal(Fq, {Rat(30), 1, 0}) == -1);
    CHECK(moebius_ideal(Fq, {Rat(4), 1, 0}) == 0);

    FieldData Fi = make_imaginary_quadratic_field(1);
    IdealRep p2sq = principal_ideal(Fi, elem(0, 2)); // (1+i)^2 = (2i)
    CHECK(moebius_ideal(Fi, p2sq) == 0);
    CHECK(moebius_ideal(Fi, principal_ideal(Fi, elem(1, 1))) == -1);
}

TEST_CASE("moebius Dirichlet identity: sum over divisors")
{
    for (Int d : {1, 5}) {
        FieldData F = make_imaginary_quadratic_field(d);
        for (auto const & J : integral_ideals_up_to(F, 300)) {
            auto factors = factor_ideal(F, J);
            // enumerate divisors from the exponent vectors
            std::vector<IdealRep> divisors = {unit_ideal()};
            for (auto const & [P, e] : factors) {
                std::vector<IdealRep> next;
                for (auto const & Dv : divisors) {
                    IdealRep cur = Dv;
                    for (int k = 0; k <= e; ++k) {
                        next.push_back(cur);
                        if (k < e)
                            cur = ideal_mul(F, cur, P);
                    }
                }
                divisors = std::move(next);
            }
            int total = 0;
            for (auto const & Dv : divisors)
                total += moebius_ideal(F, Dv);
            CHECK(total == (J == unit_ideal() ? 1 : 0));
        }
    }
}

TEST_CASE("class labels and principal generators")
{
    FieldData F5 = make_imaginary_quadratic_field(5);
    IdealRep p2 = two_gen(F5, elem(2, 0), elem(1, 1));
    CHECK(!ideal_is_principal(F5, p2));
    CHECK(ideal_is_principal(F5, ideal_mul(F5, p2, p2))); // p2^2 = (2)
    CHECK(ideal_is_principal(F5, principal_ideal(F5, elem(1, 1))));

    FieldData Fi = make_imaginary_quadratic_field(1);
    IdealRep p = two_gen(Fi, elem(2, 0), elem(1, 1));
    REQUIRE(ideal_is_principal(Fi, p)); // Q(i) is a PID
    FieldElement g = principal_generator(Fi, p);
    CHECK(principal_ideal(Fi, g) == p);

    // fractional principal ideals round-trip through their generator
    IdealRep J = ideal_mul_rat(principal_ideal(Fi, elem(1, 2)), Rat(3, 7));
    FieldElement gj = principal_generator(Fi, J);
    CHECK(principal_ideal(Fi, gj) == J);
}

TEST_CASE("ideal inverse and containment")
{
    FieldData F5 = make_imaginary_quadratic_field(5);
    IdealRep p2 = two_gen(F5, elem(2, 0), elem(1, 1));
    IdealRep inv = ideal_inv(F5, p2);
    CHECK(ideal_mul(F5, p2, inv) == unit_ideal());
    CHECK(ideal_contains(F5, p2, principal_ideal(F5, elem(2, 0))));
    CHECK(!ideal_contains(F5, principal_ideal(F5, elem(2, 0)), p2));
    CHECK(ideal_contains_element(F5, p2, elem(1, 1)));
    CHECK(!ideal_contains_element(F5, p2, elem(1, 0)));
}

TEST_CASE("dedekind zeta known values")
{
    FieldData Fq = make_rational_field();
    double pi = 3.14159265358979323846;
    CHECK(dedekind_zeta(Fq, 2, 1e-10).value ==
          doctest::Approx(pi * pi / 6).epsilon(1e-12));
    CHECK(dedekind_zeta(Fq, 4, 1e-10).value ==
          doctest::Approx(pi * pi * pi * pi / 90).epsilon(1e-12));

    FieldData Fi = make_imaginary_quadratic_field(1);
    ZetaValue z = dedekind_zeta(Fi, 2, 1e-8);
    CHECK(z.error_bound <= 1e-8);
    CHECK(z.value == doctest::Approx(1.5067030099229850).epsilon(1e-8));
}

TEST_CASE("dedekind zeta against the Gaussian lattice oracle")
{
    // direct double sum over nonzero Gaussian integers modulo 4 units
    FieldData Fi = make_imaginary_quadratic_field(1);
    for (int s : {2, 4}) {
        Int R = 1000; // norms up to 10^6
        double sum = 0;
        for (Int a = -R; a <= R; ++a)
            for (Int b = -R; b <= R; ++b) {
                if (a == 0 && b == 0)
                    continue;
                Int n = a * a + b * b;
                if (n <= R * R)
                    sum += std::pow(static_cast<double>(n), -s);
            }
        sum /= 4;
        double tail = 4.0 / std::sqrt(static_cast<double>(R) * R);
        ZetaValue z = dedekind_zeta(Fi, s, 1e-8);
        CHECK(std::fabs(z.value - sum) <= z.error_bound + tail);
        if (s == 2) // the lattice sum converges like 1/R^2 here
            CHECK(std::fabs(z.value - sum) <= 2e-5);
    }
}

TEST_CASE("dedekind zeta against the ideal enumeration oracle")
{
    FieldData F5 = make_imaginary_quadratic_field(5);
    ZetaValue z = dedekind_zeta(F5, 4, 1e-10);
    double sum = 0;
    Int N = 3000;
    for (auto const & I : integral_ideals_up_to(F5, N))
        sum += std::pow(rat_to_double(ideal_norm(F5, I)), -4);
    // #ideals of norm n is at most d(n) <= 2 sqrt(n)
    double tail = 4.0 / 5 * std::pow(static_cast<double>(N), -2.5) * 2 +
                  2 * std::pow(static_cast<double>(N), -2.5);
    CHECK(std::fabs(z.value - sum) <= z.error_bound + tail + 1e-9);
    CHECK(z.value == doctest::Approx(1.0961785598619992).epsilon(1e-6));
}

TEST_CASE("zeta input validation")
{
    FieldData Fq = make_rational_field();
    CHECK_THROWS_AS(dedekind_zeta(Fq, 1, 1e-6), input_error);
    CHECK_THROWS_AS(dedekind_zeta(Fq, 2, 0.0), input_error);
    CHECK_THROWS_AS(dedekind_zeta(Fq, 2, -1e-6), input_error);
}

TEST_CASE("kronecker symbol spot checks")
{
    // chi_{-4}: 1, 0, -1, 0 pattern
    CHECK(kronecker(-4, 1) == 1);
    CHECK(kronecker(-4, 3) == -1);
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-4, 2) == 0);
    // chi_{-20}
    CHECK(kronecker(-20, 3) == 1);
    CHECK(kronecker(-20, 7) == 1);
    CHECK(kronecker(-20, 11) == -1);
    CHECK(kronecker(-20, 13) == -1);
    // multiplicativity
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Int a = static_cast<Int>(rng() % 400) - 200;
        Int m = static_cast<Int>(rng() % 100) + 1;
        Int n = static_cast<Int>(rng() % 100) + 1;
        CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
}

TEST_CASE("field spec parsing")
{
    CHECK(parse_field_spec("Q").kind == FieldKind::rational);
    CHECK(parse_field_spec("Q(i)").d == 1);
    CHECK(parse_field_spec("d=5").d == 5);
    CHECK_THROWS_AS(parse_field_spec("R"), input_error);
    CHECK_THROWS_AS(parse_field_spec("d=x"), input_error);
}
