#include "doctest.h"

#include <random>

#include "lassos/error.hpp"
#include "lassos/jsonio.hpp"
#include "lassos/skein.hpp"

using namespace lassos;

namespace {

SkeinElement random_element(std::mt19937& rng, int max_k = 4) {
    std::uniform_int_distribution<int> nterms(0, 3), kdist(0, max_k);
    std::uniform_int_distribution<int> exp(-4, 4), coeff(-5, 5);
    SkeinElement x;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Laurent c = Laurent::zero(Var::A);
        for (int j = 0; j < 3; ++j) c += Laurent::term(coeff(rng), exp(rng), Var::A);
        if (c.is_zero()) continue;
        const int k = kdist(rng);
        x.set(k, x.coeff(k) + c);
    }
    return x;
}

SkeinElement shifted(const SkeinElement& x) { // support moved to k >= 1
    SkeinElement out;
    for (const auto& [k, c] : x.terms()) out.set(k + 1, c);
    return out;
}

} // namespace

TEST_CASE("basis product rules") {
    const Laurent d = delta(Var::A);
    CHECK(SkeinElement::basis(0) * SkeinElement::basis(2) == d * SkeinElement::basis(2));
    CHECK(SkeinElement::basis(1) * SkeinElement::basis(2) == SkeinElement::basis(3));
    CHECK(SkeinElement::basis(0) * SkeinElement::basis(0) == d * SkeinElement::basis(0));

    const Laurent a = Laurent::term(1, 1, Var::A);
    const SkeinElement az0 = a * SkeinElement::basis(0);
    CHECK(az0 * az0 == (a * a * d) * SkeinElement::basis(0));
}

TEST_CASE("delta by variable") {
    CHECK(delta(Var::A) == parse_laurent("-A^2 - A^-2", Var::A));
    CHECK(delta(Var::U) == parse_laurent("-t^-1/2 - t^1/2", Var::U));
    CHECK_THROWS_AS(delta(Var::T), DomainError);
}

TEST_CASE("product is commutative and associative; z0 acts as delta") {
    std::mt19937 rng(2025);
    const Laurent d = delta(Var::A);
    for (int i = 0; i < 150; ++i) {
        const SkeinElement x = random_element(rng), y = random_element(rng),
                           z = random_element(rng);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(SkeinElement::basis(0) * shifted(x) == d * shifted(x));
    }
}

TEST_CASE("geometric degree") {
    CHECK(geometric_degree(SkeinElement::basis(1)) == 1);
    CHECK_THROWS_AS(geometric_degree(SkeinElement::zero()), ZeroArgument);

    std::mt19937 rng(31337);
    for (int i = 0; i < 100; ++i) {
        SkeinElement x = shifted(random_element(rng)), y = shifted(random_element(rng));
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(geometric_degree(x * y) == geometric_degree(x) + geometric_degree(y));
    }
}

TEST_CASE("substitute_basis") {
    const Laurent a = Laurent::term(1, 1, Var::A);
    const Laurent ainv = Laurent::term(1, -1, Var::A);
    SkeinElement x;
    x.set(0, a);
    x.set(2, ainv);
    const Laurent got = substitute_basis(x, [](int k) {
        return k == 0 ? Laurent::one(Var::A) : delta(Var::A);
    });
    CHECK(got == parse_laurent("-A^-3", Var::A)); // A + A^-1 * delta

    CHECK(substitute_basis(SkeinElement::basis(0),
                           [](int) { return Laurent::one(Var::A); }) ==
          Laurent::one(Var::A));

    // A-tagged coefficients convert when images are u-tagged: A^-2 -> u
    SkeinElement y;
    y.set(1, Laurent::term(1, -2, Var::A));
    CHECK(substitute_basis(y, [](int) { return Laurent::term(1, 1, Var::U); }) ==
          Laurent::term(1, 2, Var::U));

    // missing index surfaces as a typed failure
    CHECK_THROWS_AS(substitute_basis(x,
                                     [](int k) -> Laurent {
                                         if (k == 0) return Laurent::one(Var::A);
                                         throw DomainError("no image for this index");
                                     }),
                    DomainError);
}

TEST_CASE("embedding into the plain bracket") {
    SkeinElement trefoil;
    trefoil.set(0, parse_laurent("A^7 - A^3 + A^-1", Var::A));
    trefoil.set(2, parse_laurent("A^-3", Var::A));
    CHECK(embed_to_s3(trefoil) == parse_laurent("A^7 - A^3 - A^-5", Var::A));

    CHECK(embed_to_s3(SkeinElement::basis(0)) == Laurent::one(Var::A));
    CHECK(embed_to_s3(SkeinElement::basis(3)) == delta(Var::A) * delta(Var::A));
    CHECK_THROWS_AS(embed_to_s3(SkeinElement::zero()), ZeroArgument);
}

TEST_CASE("embedding obeys the split-union rule") {
    // Stacked annular diagrams embed as a split union, whose bracket is the
    // product of brackets times one extra delta.
    std::mt19937 rng(404);
    const Laurent d = delta(Var::A);
    for (int i = 0; i < 150; ++i) {
        const SkeinElement x = random_element(rng), y = random_element(rng);
        if (x.is_zero() || y.is_zero() || (x * y).is_zero()) continue;
        CHECK(embed_to_s3(x * y) == d * embed_to_s3(x) * embed_to_s3(y));
    }
}

TEST_CASE("to_string examples") {
    SkeinElement trefoil;
    trefoil.set(0, parse_laurent("A^7 - A^3 + A^-1", Var::A));
    trefoil.set(2, parse_laurent("A^-3", Var::A));
    CHECK(to_string(trefoil) == "(A^7 - A^3 + A^-1)·z^0 + A^-3·z^2");
    CHECK(to_string(SkeinElement::basis(0)) == "z^0");
    CHECK(to_string(SkeinElement::zero()) == "0");
}

TEST_CASE("JSON round-trip") {
    std::mt19937 rng(555);
    for (int i = 0; i < 80; ++i) {
        const SkeinElement x = random_element(rng);
        CHECK(skein_from_json(skein_to_json(x)) == x);
    }
}
