/**
 * Unit tests for simplicial complexes: faces, links, restrictions, skeletons,
 * Stanley-Reisner duality, cones and the sphere-restriction search.
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "aiinv/simplicial_complex.hpp"

using namespace aiinv;

namespace {

SimplicialComplex triangleBoundary()
{
    return SimplicialComplex::fromFacets(3, {0b011, 0b101, 0b110});
}

/** Deterministic random complex (non-void) on s vertices for property tests. */
SimplicialComplex randomComplex(int s, std::mt19937_64& rng)
{
    std::vector<VertexSet> facets;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i)
        facets.push_back(static_cast<VertexSet>(rng()) & fullVertexSet(s));
    return SimplicialComplex::fromFacets(s, std::move(facets));
}

}  // namespace

TEST_CASE("face membership")
{
    const SimplicialComplex edge = SimplicialComplex::fromFacets(3, {0b011});
    CHECK(isFace(edge, 0b010));
    CHECK_FALSE(isFace(edge, 0b101));
    CHECK(isFace(edge, 0));
    CHECK_FALSE(isFace(SimplicialComplex::voidComplex(3), 0));
}

TEST_CASE("void and irrelevant complexes are distinct")
{
    const SimplicialComplex v = SimplicialComplex::voidComplex(3);
    const SimplicialComplex irr = SimplicialComplex::irrelevant(3);
    CHECK(v.isVoid());
    CHECK_FALSE(v.isIrrelevant());
    CHECK(irr.isIrrelevant());
    CHECK_FALSE(irr.isVoid());
    CHECK(irr.dimension() == -1);
    CHECK_THROWS_AS(v.dimension(), std::logic_error);
}

TEST_CASE("links")
{
    const SimplicialComplex tri = triangleBoundary();
    CHECK(link(tri, 0) == tri);
    CHECK(link(tri, 0b001) == SimplicialComplex::fromFacets(3, {0b010, 0b100}));
    CHECK(link(tri, 0b011) == SimplicialComplex::irrelevant(3));
    CHECK(link(tri, 0b111).isVoid());
}

TEST_CASE("restrictions")
{
    const SimplicialComplex path = SimplicialComplex::fromFacets(3, {0b011, 0b110});
    CHECK(restriction(path, 0b111) == path);
    CHECK(restriction(path, 0b101) == SimplicialComplex::fromFacets(3, {0b001, 0b100}));
    CHECK(restriction(path, 0) == SimplicialComplex::irrelevant(3));
    CHECK(restriction(SimplicialComplex::voidComplex(3), 0b011).isVoid());
}

TEST_CASE("pure skeletons")
{
    const SimplicialComplex tri = triangleBoundary();
    CHECK(pureSkeleton(tri, 1) == tri);
    const SimplicialComplex mixed = SimplicialComplex::fromFacets(3, {0b011, 0b100});
    CHECK(pureSkeleton(mixed, 0)
          == SimplicialComplex::fromFacets(3, {0b001, 0b010, 0b100}));
    CHECK(pureSkeleton(mixed, 2).isVoid());
    CHECK(pureSkeleton(mixed, -1) == SimplicialComplex::irrelevant(3));
    CHECK(pureSkeleton(SimplicialComplex::voidComplex(3), -1).isVoid());
}

TEST_CASE("minimal non-faces")
{
    CHECK(minimalNonfaces(triangleBoundary()) == std::vector<VertexSet>{0b111});
    CHECK(minimalNonfaces(SimplicialComplex::fromFacets(3, {0b011, 0b110}))
          == std::vector<VertexSet>{0b101});
    CHECK(minimalNonfaces(SimplicialComplex::fullSimplex(3)).empty());
    CHECK_THROWS_AS(minimalNonfaces(SimplicialComplex::voidComplex(2)),
                    std::invalid_argument);
}

TEST_CASE("Stanley-Reisner ideals and complexes of ideals")
{
    const SimplicialComplex path = SimplicialComplex::fromFacets(3, {0b011, 0b110});
    const MonomialIdeal sr = stanleyReisner(path);
    CHECK(sr == MonomialIdeal(3, {makeExponents({1, 0, 1})}));
    CHECK(complexOfIdeal(sr) == path);

    CHECK(complexOfIdeal(MonomialIdeal::unit(3)).isVoid());
    CHECK(complexOfIdeal(MonomialIdeal::zero(3)) == SimplicialComplex::fullSimplex(3));
    CHECK(complexOfIdeal(MonomialIdeal::maximal(3)) == SimplicialComplex::irrelevant(3));
    CHECK(stanleyReisner(SimplicialComplex::irrelevant(3)) == MonomialIdeal::maximal(3));

    // powers and symbolic powers do not change the complex of the ideal
    const MonomialIdeal tri = stanleyReisner(triangleBoundary());
    for (int n = 1; n <= 3; ++n)
        CHECK(complexOfIdeal(power(tri, n)) == triangleBoundary());
}

TEST_CASE("Stanley-Reisner duality on random complexes")
{
    std::mt19937_64 rng(20240817ull);
    for (int trial = 0; trial < 40; ++trial) {
        const int s = 3 + static_cast<int>(rng() % 5);  // up to 7 vertices
        const SimplicialComplex cplx = randomComplex(s, rng);
        CHECK(complexOfIdeal(stanleyReisner(cplx)) == cplx);

        const MonomialIdeal sr = stanleyReisner(cplx);
        CHECK(stanleyReisner(complexOfIdeal(sr)) == sr);
        CHECK(complexOfIdeal(sr) == complexOfIdeal(radical(power(sr, 2))));
    }
}

TEST_CASE("Stanley-Reisner ideal equals the intersection of facet primes")
{
    std::mt19937_64 rng(7121ull);
    for (int trial = 0; trial < 25; ++trial) {
        const int s = 3 + static_cast<int>(rng() % 5);
        const SimplicialComplex cplx = randomComplex(s, rng);
        MonomialIdeal meet = MonomialIdeal::unit(s);
        for (VertexSet f : cplx.facets()) {
            std::vector<Exponents> primeGens;
            for (int v = 0; v < s; ++v)
                if (!(f & (VertexSet(1) << v))) {
                    Exponents e = Exponents::Zero(s);
                    e[v] = 1;
                    primeGens.push_back(std::move(e));
                }
            meet = intersect(meet, MonomialIdeal(s, primeGens));
        }
        CHECK(meet == stanleyReisner(cplx));
    }
}

TEST_CASE("cone detection")
{
    CHECK(isCone(SimplicialComplex::fromFacets(3, {0b011, 0b101})) == 0);
    CHECK_FALSE(isCone(triangleBoundary()).has_value());
    CHECK(isCone(SimplicialComplex::fromFacets(2, {0b01})) == 0);
    CHECK_FALSE(isCone(SimplicialComplex::irrelevant(3)).has_value());
}

TEST_CASE("sphere restriction search")
{
    CHECK(findSphereRestriction(triangleBoundary()) == VertexSet(0b111));
    CHECK_FALSE(findSphereRestriction(SimplicialComplex::fullSimplex(3)).has_value());
    CHECK_FALSE(
        findSphereRestriction(SimplicialComplex::fromFacets(3, {0b011, 0b110})).has_value());

    // boundary of the tetrahedron embedded among extra vertices
    const SimplicialComplex tetra = SimplicialComplex::fromFacets(
        5, {0b00111, 0b01011, 0b01101, 0b01110, 0b10001});
    CHECK(findSphereRestriction(tetra) == VertexSet(0b01111));
}
