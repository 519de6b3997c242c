#include <doctest.h>

#include "blch/augment.hpp"
#include "blch/chain_complex.hpp"
#include "blch/errors.hpp"
#include "blch/families.hpp"

using namespace blch;

TEST_CASE("betti of an acyclic pair is zero") {
    const ChainComplex cx(1, {{"a", 1}, {"b", 0}}, {{1}, {}});
    CHECK(betti(cx).empty());
    CHECK(poincare(cx).is_zero());
}

TEST_CASE("betti of a zero differential counts generators per degree") {
    const ChainComplex cx(1, {{"x", 0}, {"y", 0}, {"z", 2}}, {{}, {}, {}});
    const auto b = betti(cx);
    CHECK(b == std::map<int, int>{{0, 2}, {2, 1}});
    CHECK(poincare(cx) == LaurentPolynomial::parse("2 + t^2"));
}

TEST_CASE("multicopy(1,2) has betti {0:1, 2:1}") {
    const auto b = betti(families::multicopy_complex(1, 2));
    CHECK(b == std::map<int, int>{{0, 1}, {2, 1}});
}

TEST_CASE("repeated boundary hits cancel modulo 2") {
    const ChainComplex cx(1, {{"a", 1}, {"b", 0}}, {{1, 1}, {}});
    CHECK(cx.boundary_of(0).empty());
    CHECK(betti(cx) == std::map<int, int>{{0, 1}, {1, 1}});
}

TEST_CASE("boundary must lower degree by one") {
    CHECK_THROWS_AS(ChainComplex(1, {{"a", 2}, {"b", 0}}, {{1}, {}}), DomainError);
}

TEST_CASE("betti rejects complexes with d^2 != 0") {
    // a -> b -> c with a single arrow each does not square to zero.
    const ChainComplex cx(1, {{"a", 2}, {"b", 1}, {"c", 0}}, {{1}, {2}, {}});
    CHECK_FALSE(cx.dd_is_zero());
    CHECK_THROWS_AS(betti(cx), DomainError);
}

TEST_CASE("trefoil bilinearized polynomials") {
    const DGA dga = families::trefoil_dga();
    const auto augs = families::trefoil_augmentations(dga);
    REQUIRE(augs.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            const LaurentPolynomial p = poincare(bilinearize(dga, augs[i], augs[j]));
            if (i == j)
                CHECK(p == LaurentPolynomial::parse("2 + t"));
            else
                CHECK(p == LaurentPolynomial::parse("1"));
        }
    }
}

TEST_CASE("trefoil-link polynomial t^k + t^{k-1} + t + 1") {
    for (int k = -2; k <= 3; ++k) {
        const DGA dga = families::trefoil_link_dga(k);
        const auto augs = families::trefoil_augmentations(dga);
        LaurentPolynomial expect;
        expect.add_term(k, 1);
        expect.add_term(k - 1, 1);
        expect.add_term(1, 1);
        expect.add_term(0, 1);
        for (std::size_t left : {0, 2}) {
            for (std::size_t right : {1, 3, 4}) {
                CHECK(poincare(bilinearize(dga, augs[left], augs[right])) == expect);
            }
        }
    }
}

TEST_CASE("euler characteristic is augmentation independent") {
    for (const DGA& dga : {families::trefoil_dga(), families::hopf_dga(2, 1),
                           families::trefoil_link_dga(1)}) {
        const auto augs = enumerate_augmentations(dga);
        REQUIRE(!augs.empty());
        long long alternating = 0;
        for (const Generator& g : dga.generators)
            alternating += (g.degree % 2 == 0) ? 1 : -1;
        for (const Augmentation& e1 : augs)
            for (const Augmentation& e2 : augs)
                CHECK(poincare(bilinearize(dga, e1, e2)).eval_minus_one() == alternating);
    }
}

TEST_CASE("betti is additive under direct sum") {
    const ChainComplex a = families::multicopy_complex(1, 2);
    const ChainComplex b = families::note_subcomplex(2, 0, 2);

    std::vector<BasisElement> basis = a.basis();
    std::vector<std::vector<std::uint32_t>> boundary;
    for (std::uint32_t i = 0; i < a.basis().size(); ++i) boundary.push_back(a.boundary_of(i));
    const auto offset = static_cast<std::uint32_t>(basis.size());
    for (std::uint32_t i = 0; i < b.basis().size(); ++i) {
        basis.push_back({"q_" + b.basis()[i].name, b.basis()[i].degree});
        std::vector<std::uint32_t> targets;
        for (std::uint32_t t : b.boundary_of(i)) targets.push_back(t + offset);
        boundary.push_back(targets);
    }
    const ChainComplex sum(2, std::move(basis), std::move(boundary));
    CHECK(poincare(sum) == poincare(a) + poincare(b));
}

TEST_CASE("betti stays within 0..dim") {
    for (int k = 1; k <= 4; ++k) {
        const ChainComplex cx = families::note_subcomplex(k, 1, 2);
        for (const auto& [deg, b] : betti(cx)) {
            CHECK(b >= 0);
            CHECK(static_cast<std::size_t>(b) <= cx.dim_in_degree(deg));
        }
    }
}
