#include "doctest.h"

#include <random>
#include <vector>

#include "lassos/alexander.hpp"
#include "lassos/catalog.hpp"
#include "lassos/error.hpp"

using namespace lassos;

namespace {

std::mt19937 rng(771240u);

const BraidWord left_trefoil{2, {-1, -1, -1}};
const BraidWord figure_eight{3, {1, -2, 1, -2}};
const BraidWord unknot1{1, {}};

BraidWord random_knot_word(int max_letters, int max_strands) {
    for (;;) {
        std::uniform_int_distribution<int> sdist(2, max_strands);
        const int strands = sdist(rng);
        std::uniform_int_distribution<int> ldist(1, max_letters);
        std::uniform_int_distribution<int> gdist(1, strands - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        BraidWord w{strands, {}};
        const int n = ldist(rng);
        for (int i = 0; i < n; ++i) {
            const int g = gdist(rng);
            w.letters.push_back(coin(rng) ? g : -g);
        }
        if (is_knot(w)) return w;
    }
}

Laurent random_entry() {
    std::uniform_int_distribution<int> ndist(0, 2);
    std::uniform_int_distribution<int> edist(-2, 2);
    std::uniform_int_distribution<int> cdist(-3, 3);
    Laurent p = Laurent::zero(Var::T);
    const int n = ndist(rng);
    for (int i = 0; i < n; ++i) p += Laurent::term(cdist(rng), edist(rng), Var::T);
    return p;
}

// Cofactor expansion along the first row: independent of the elimination
// used by determinant().
Laurent cofactor_det(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Laurent::one(Var::T);
    if (n == 1) return m[0][0];
    Laurent acc = Laurent::zero(Var::T);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Laurent> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const Laurent piece = m[0][j] * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + piece : acc - piece;
    }
    return acc;
}

// Value of a t-tagged polynomial at t = -1 (integer).
Int value_at_minus_one(const Laurent& p) {
    Int v = 0;
    for (const auto& [e, c] : p.terms()) v += (e % 2 == 0) ? c : -c;
    return v;
}

Int value_at_one(const Laurent& p) {
    Int v = 0;
    for (const auto& [e, c] : p.terms()) v += c;
    return v;
}

BraidWord rotate_left(const BraidWord& w, std::size_t k) {
    BraidWord out{w.strands, {}};
    const std::size_t n = w.letters.size();
    for (std::size_t i = 0; i < n; ++i) out.letters.push_back(w.letters[(i + k) % n]);
    return out;
}

} // namespace

TEST_CASE("reduced Burau basics") {
    const Matrix id = reduced_burau(BraidWord{2, {}});
    REQUIRE(id.size() == 1);
    CHECK(id[0][0] == Laurent::one(Var::T));

    const Matrix pos = reduced_burau(BraidWord{2, {1}});
    CHECK(pos[0][0] == Laurent::term(-1, 1, Var::T));

    const Matrix tre = reduced_burau(left_trefoil);
    CHECK(tre[0][0] == Laurent::term(-1, -3, Var::T));

    CHECK_THROWS_AS(reduced_burau(unknot1), DomainError);
}

TEST_CASE("reduced Burau is a homomorphism satisfying the braid relations") {
    const auto burau_eq = [](const BraidWord& a, const BraidWord& b) {
        return reduced_burau(a) == reduced_burau(b);
    };
    // inverses cancel
    CHECK(burau_eq(BraidWord{3, {1, -1}}, BraidWord{3, {}}));
    CHECK(burau_eq(BraidWord{4, {-3, 3}}, BraidWord{4, {}}));
    // adjacent relation
    CHECK(burau_eq(BraidWord{3, {1, 2, 1}}, BraidWord{3, {2, 1, 2}}));
    CHECK(burau_eq(BraidWord{4, {2, 3, 2}}, BraidWord{4, {3, 2, 3}}));
    // distant generators commute
    CHECK(burau_eq(BraidWord{4, {1, 3}}, BraidWord{4, {3, 1}}));
    CHECK(burau_eq(BraidWord{5, {4, 1}}, BraidWord{5, {1, 4}}));
    // multiplicativity on random pairs
    for (int i = 0; i < 25; ++i) {
        const BraidWord a = random_knot_word(6, 4);
        BraidWord b = random_knot_word(6, 4);
        b.strands = a.strands;
        for (int& l : b.letters)
            if (std::abs(l) >= a.strands) l = (l > 0 ? 1 : -1);
        const Matrix ma = reduced_burau(a);
        const Matrix mb = reduced_burau(b);
        Matrix prod(ma.size(), std::vector<Laurent>(ma.size(), Laurent::zero(Var::T)));
        for (std::size_t r = 0; r < ma.size(); ++r)
            for (std::size_t c = 0; c < ma.size(); ++c)
                for (std::size_t k = 0; k < ma.size(); ++k)
                    prod[r][c] += ma[r][k] * mb[k][c];
        CHECK(reduced_burau(concat(a, b)) == prod);
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    Matrix swap2 = {{Laurent::zero(Var::T), Laurent::one(Var::T)},
                    {Laurent::one(Var::T), Laurent::zero(Var::T)}};
    CHECK(determinant(swap2) == Laurent::constant(-1, Var::T));

    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            Matrix m(n, std::vector<Laurent>(n, Laurent::zero(Var::T)));
            for (auto& row : m)
                for (auto& e : row) e = random_entry();
            CHECK(determinant(m) == cofactor_det(m));
        }
    }
}

TEST_CASE("Alexander polynomials of small knots") {
    CHECK(alexander_closure(unknot1) == Laurent::one(Var::T));
    CHECK(alexander_closure(BraidWord{2, {1}}) == Laurent::one(Var::T));
    CHECK(alexander_closure(left_trefoil) == parse_laurent("t - 1 + t^-1", Var::T));
    CHECK(alexander_closure(figure_eight) == parse_laurent("-t + 3 - t^-1", Var::T));
    CHECK_THROWS_AS(alexander_closure(BraidWord{2, {}}), DomainError);  // 2-component unlink
    CHECK_THROWS_AS(alexander_closure(BraidWord{2, {1, 1}}), DomainError); // Hopf link
}

TEST_CASE("Alexander matches the catalog") {
    const Catalog cat = Catalog::builtin();
    for (const auto& e : cat.entries())
        CHECK_MESSAGE(alexander_closure(e.braid) == e.alexander, e.name);
}

TEST_CASE("symmetry and value at 1 on random knot closures") {
    for (int i = 0; i < 200; ++i) {
        const BraidWord w = random_knot_word(8, 4);
        const Laurent a = alexander_closure(w);
        CHECK_MESSAGE(mirror(a) == a, to_string(w));
        CHECK_MESSAGE(value_at_one(a) == 1, to_string(w));
    }
}

TEST_CASE("Alexander is a Markov invariant") {
    for (int i = 0; i < 30; ++i) {
        const BraidWord w = random_knot_word(7, 4);
        const Laurent a = alexander_closure(w);
        std::uniform_int_distribution<std::size_t> rdist(1, w.letters.size());
        CHECK(alexander_closure(rotate_left(w, rdist(rng))) == a);
        BraidWord up{w.strands + 1, w.letters};
        up.letters.push_back(w.strands);
        CHECK(alexander_closure(up) == a);
        up.letters.back() = -w.strands;
        CHECK(alexander_closure(up) == a);
    }
}

TEST_CASE("knot determinants") {
    const Catalog cat = Catalog::builtin();
    const auto det_of = [&](const std::string& name) {
        Int v = value_at_minus_one(alexander_closure(cat.at(name).braid));
        return v < 0 ? -v : v;
    };
    CHECK(det_of("3_1") == 3);
    CHECK(det_of("4_1") == 5);
    CHECK(det_of("5_1") == 5);
    CHECK(det_of("8_19") == 3);
    CHECK(det_of("10_161") == 5);
}

TEST_CASE("satellite Alexander polynomials") {
    const Laurent one = Laurent::one(Var::T);
    // winding-zero lasso patterns erase the companion
    CHECK(satellite_alexander({Lasso{{2}}, left_trefoil}) == one);
    CHECK(satellite_alexander({Lasso{{4}}, left_trefoil}) == one);
    // winding-one patterns reproduce it
    const Catalog cat = Catalog::builtin();
    for (const auto& e : cat.entries())
        CHECK(satellite_alexander({Lasso{{1, 2}}, e.braid}) == e.alexander);
    // higher winding substitutes powers
    const Laurent d819 = alexander_closure(parse_braid("B3: 1 2 1 2 1 2 1 2"));
    CHECK(satellite_alexander({Lasso{{1, 1}}, parse_braid("B3: 1 2 1 2 1 2 1 2")}) ==
          substitute_power(d819, 3));
    CHECK(satellite_alexander({Lasso{{1, 2}}, left_trefoil}) ==
          parse_laurent("t - 1 + t^-1", Var::T));
    // raw vectors are normalized first
    CHECK(satellite_alexander({Lasso{{1, 0, 2}}, figure_eight}) ==
          satellite_alexander({Lasso{{3}}, figure_eight}));
    CHECK(satellite_alexander({Lasso{{0}}, figure_eight}) == one);
    // same degree, same result
    CHECK(satellite_alexander({Lasso{{-3, 7}}, figure_eight}) ==
          satellite_alexander({Lasso{{1, 1}}, figure_eight}));
    // annular braid patterns multiply in their own closure
    const Laurent d31 = parse_laurent("t - 1 + t^-1", Var::T);
    const Laurent d41 = parse_laurent("-t + 3 - t^-1", Var::T);
    CHECK(satellite_alexander({left_trefoil, figure_eight}) ==
          d31 * substitute_power(d41, 2));
    CHECK(satellite_alexander({unknot1, figure_eight}) == d41);
}

TEST_CASE("connected-sum rule") {
    const Laurent d31 = alexander_closure(left_trefoil);
    const Laurent d41 = alexander_closure(figure_eight);
    CHECK(connected_sum_alexander({}) == Laurent::one(Var::T));
    CHECK(connected_sum_alexander({d31}) == d31);
    CHECK(connected_sum_alexander({d31, d41}) ==
          alexander_closure(connected_sum(left_trefoil, figure_eight)));
    const Laurent d51 = alexander_closure(parse_braid("B2: -1 -1 -1 -1 -1"));
    const Laurent d819c = substitute_power(
        alexander_closure(parse_braid("B3: 1 2 1 2 1 2 1 2")), 3);
    CHECK(connected_sum_alexander({d51, d51, d819c}) == d51 * d51 * d819c);
}

TEST_CASE("canonical lassos hit every winding degree") {
    CHECK(canonical_lasso(0) == Lasso{{2}});
    CHECK(canonical_lasso(1) == Lasso{{1, 2}});
    CHECK(canonical_lasso(2) == Lasso{{1}});
    CHECK(canonical_lasso(3) == Lasso{{1, 1}});
    for (int d = 0; d <= 8; ++d) CHECK(winding(canonical_lasso(d)) == d);
    CHECK_THROWS_AS(canonical_lasso(-1), DomainError);
}

TEST_CASE("spec realization") {
    const auto resolve = Catalog::builtin().resolver();

    SUBCASE("worked example") {
        const auto spec = parse_alexander_spec("5_1^2 * 8_19@3", resolve);
        const Recipe r = realize_spec(spec);
        CHECK(r.text == "5_1 # 5_1 # Sat(L(1,1),8_19)");
        CHECK(r.certified);
        CHECK(r.realized == r.target);
        REQUIRE(r.items.size() == 3);
        CHECK_FALSE(r.items[0].is_satellite);
        CHECK(r.items[2].is_satellite);
        CHECK(r.items[2].lasso == Lasso{{1, 1}});
    }

    SUBCASE("empty spec is the unknot") {
        const Recipe r = realize_spec({});
        CHECK(r.text == "unknot");
        CHECK(r.target == Laurent::one(Var::T));
        CHECK(r.realized == Laurent::one(Var::T));
        CHECK(r.certified);
    }

    SUBCASE("power zero uses the degree-zero lasso") {
        const Recipe r = realize_spec(parse_alexander_spec("3_1@0", resolve));
        REQUIRE(r.items.size() == 1);
        CHECK(r.items[0].is_satellite);
        CHECK(r.items[0].lasso == Lasso{{2}});
        CHECK(r.realized == Laurent::one(Var::T));
        CHECK(r.certified);
    }

    SUBCASE("proper satellites wrap power-1 factors") {
        const Recipe r =
            realize_spec(parse_alexander_spec("3_1", resolve), /*proper=*/true);
        REQUIRE(r.items.size() == 1);
        CHECK(r.items[0].is_satellite);
        CHECK(r.items[0].lasso == Lasso{{1, 2}});
        CHECK(r.text == "Sat(L(1,2),3_1)");
        CHECK(r.certified);
    }

    SUBCASE("lasso override replaces matching factors") {
        const Recipe r = realize_spec(parse_alexander_spec("8_19@3 * 4_1", resolve),
                                      false, Lasso{{-3, 7}});
        REQUIRE(r.items.size() == 2);
        CHECK(r.items[0].lasso == Lasso{{-3, 7}});
        CHECK_FALSE(r.items[1].is_satellite);
        CHECK(r.certified);
    }

    SUBCASE("override matching nothing is an error") {
        CHECK_THROWS_AS(realize_spec(parse_alexander_spec("4_1", resolve), false,
                                     Lasso{{2}}),
                        DomainError);
    }

    SUBCASE("negative powers are rejected") {
        CHECK_THROWS_AS(realize_spec({{"3_1", left_trefoil, -2}}), DomainError);
    }

    SUBCASE("certification holds across a factor mix") {
        const Recipe r = realize_spec(
            parse_alexander_spec("5_1^2 * 8_19@3 * 10_161@0 * 4_1@2", resolve));
        CHECK(r.certified);
        const Laurent d51 = alexander_closure(resolve("5_1"));
        const Laurent d819 = alexander_closure(resolve("8_19"));
        const Laurent d41 = alexander_closure(resolve("4_1"));
        CHECK(r.target == d51 * d51 * substitute_power(d819, 3) *
                              substitute_power(d41, 2));
    }
}

TEST_CASE("spec parsing") {
    const auto resolve = Catalog::builtin().resolver();

    const auto spec = parse_alexander_spec("5_1^2 * 8_19@3 * 10_161@0", resolve);
    REQUIRE(spec.size() == 4);
    CHECK(spec[0].name == "5_1");
    CHECK(spec[0].power == 1);
    CHECK(spec[1].name == "5_1");
    CHECK(spec[2].name == "8_19");
    CHECK(spec[2].power == 3);
    CHECK(spec[3].name == "10_161");
    CHECK(spec[3].power == 0);

    CHECK(parse_alexander_spec("", resolve).empty());
    CHECK(parse_alexander_spec("   ", resolve).empty());
    CHECK(parse_alexander_spec("3_1^0", resolve).empty());

    const auto both = parse_alexander_spec("4_1^2@3", resolve);
    REQUIRE(both.size() == 2);
    CHECK(both[0].power == 3);

    CHECK_THROWS_AS(parse_alexander_spec("5_1^2^3", resolve), ParseError);
    CHECK_THROWS_AS(parse_alexander_spec("5_1@1@2", resolve), ParseError);
    CHECK_THROWS_AS(parse_alexander_spec("5_1 *", resolve), ParseError);
    CHECK_THROWS_AS(parse_alexander_spec("* 5_1", resolve), ParseError);
    CHECK_THROWS_AS(parse_alexander_spec("5_1@-1", resolve), ParseError);
    CHECK_THROWS_AS(parse_alexander_spec("5_1 4_1", resolve), ParseError);
    CHECK_THROWS_AS(parse_alexander_spec("no_such_knot", resolve), DomainError);
}
