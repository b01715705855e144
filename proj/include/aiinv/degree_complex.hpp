/**
 * Degree complexes: for a monomial ideal I and a multidegree alpha in Z^s,
 * the complex of subsets F of [s] minus G_alpha (the negative support) for
 * which x^{alpha_+} stays outside the monomial localization I[F u G_alpha].
 * Its reduced homology computes the alpha-graded pieces of local cohomology.
 *
 * Membership is decided against localized minimal generators only; no ring
 * objects exist at runtime.  For each generator g the set of coordinates
 * where g exceeds alpha_+ must be inverted for x^{alpha_+} to become
 * divisible, so the degree complex is precisely the complex whose forbidden
 * sets are those excess supports.  That observation drives both the general
 * construction and the fast paths.
 */

#ifndef AIINV_DEGREE_COMPLEX_HPP
#define AIINV_DEGREE_COMPLEX_HPP

#include <algorithm>
#include <vector>

#include "aiinv/monomial_ideal.hpp"
#include "aiinv/simplicial_complex.hpp"

namespace aiinv {

/**
 * For each generator, the vertices where it exceeds alpha_+, minus G_alpha.
 * F u G_alpha absorbs a generator iff it contains the corresponding set, so
 * these are the forbidden sets of the degree complex.  An empty set here
 * means x^{alpha_+} already lies in I[G_alpha].
 */
inline std::vector<VertexSet> excessSupports(const MonomialIdeal& ideal,
                                             const Exponents& alpha)
{
    const VertexSet negative = negativeSupport(alpha);
    std::vector<VertexSet> sets;
    sets.reserve(ideal.generators().size());
    for (const Exponents& g : ideal.generators()) {
        VertexSet w = 0;
        const int* gp = g.data();
        const int* ap = alpha.data();
        for (Eigen::Index i = 0; i < g.size(); ++i)
            if (gp[i] > std::max(ap[i], 0))
                w |= VertexSet(1) << i;
        sets.push_back(w & ~negative);
    }
    return sets;
}

/**
 * The degree complex of I at alpha, on the ground set [s] minus G_alpha.
 * The unit ideal yields the void complex; the zero ideal the full simplex
 * on the ground set.
 */
inline SimplicialComplex degreeComplex(const MonomialIdeal& ideal, const Exponents& alpha)
{
    if (alpha.size() != ideal.vars())
        throw std::invalid_argument("multidegree length does not match the ambient");
    if (ideal.isUnit())
        return SimplicialComplex::voidComplex(ideal.vars());
    const VertexSet ground = fullVertexSet(ideal.vars()) & ~negativeSupport(alpha);
    if (ideal.isZero())
        return SimplicialComplex::fromFacets(ideal.vars(), {ground});
    std::vector<VertexSet> forbidden = excessSupports(ideal, alpha);
    std::vector<VertexSet> facets = facetsAvoiding(ideal.vars(), ground, forbidden);
    if (facets.empty())
        return SimplicialComplex::voidComplex(ideal.vars());
    return SimplicialComplex::fromFacets(ideal.vars(), std::move(facets));
}

/** Fast membership form: is F a face of the degree complex of I at alpha? */
inline bool isDegreeComplexFace(const std::vector<VertexSet>& forbidden, VertexSet face)
{
    for (VertexSet w : forbidden)
        if ((w & face) == w)
            return false;
    return true;
}

/**
 * Facet-shortcut construction: when I has no embedded associated primes and
 * alpha is nonnegative, the facets of the degree complex sit among the facets
 * of the complex of I, so a downward search from those facets suffices.
 * Squarefreeness is the (sufficient) no-embedded-primes certificate accepted
 * here; anything else is rejected.  Verified optimization, not the default.
 */
inline SimplicialComplex degreeComplexViaFacetShortcut(const MonomialIdeal& ideal,
                                                       const Exponents& alpha)
{
    if (!isSquarefree(ideal))
        throw std::invalid_argument("facet shortcut requires a squarefree ideal "
                                    "(no-embedded-primes certificate)");
    if ((alpha < 0).any())
        throw std::invalid_argument("facet shortcut requires a nonnegative multidegree");
    if (ideal.isUnit())
        return SimplicialComplex::voidComplex(ideal.vars());
    if (ideal.isZero())
        return SimplicialComplex::fullSimplex(ideal.vars());
    const std::vector<VertexSet> forbidden = excessSupports(ideal, alpha);
    const SimplicialComplex gate = complexOfIdeal(ideal);
    std::vector<VertexSet> facets;
    for (VertexSet candidate : gate.facets()) {
        // greedy downward search: remove vertices until the face condition holds
        std::vector<VertexSet> stack{candidate};
        std::vector<VertexSet> seen;
        while (!stack.empty()) {
            const VertexSet f = stack.back();
            stack.pop_back();
            if (std::find(seen.begin(), seen.end(), f) != seen.end())
                continue;
            seen.push_back(f);
            if (isDegreeComplexFace(forbidden, f)) {
                facets.push_back(f);
                continue;
            }
            VertexSet rest = f;
            while (rest) {
                const VertexSet v = rest & -rest;
                rest &= ~v;
                stack.push_back(f & ~v);
            }
        }
    }
    if (facets.empty())
        return SimplicialComplex::voidComplex(ideal.vars());
    return SimplicialComplex::fromFacets(ideal.vars(), std::move(facets));
}

/**
 * Facet-level degree complex of the n-th symbolic power of the
 * Stanley-Reisner ideal of cplx, without constructing the ideal: the facets
 * are the link facets of G_alpha whose off-face degree sum stays below n.
 * The void complex is returned when G_alpha is not a face.
 */
inline SimplicialComplex symbolicDegreeComplexFacets(const SimplicialComplex& cplx, int n,
                                                     const Exponents& alpha)
{
    if (alpha.size() != cplx.vertices())
        throw std::invalid_argument("multidegree length does not match the vertex count");
    if (n < 1)
        throw std::invalid_argument("symbolic power exponent must be >= 1");
    const VertexSet negative = negativeSupport(alpha);
    if (cplx.isVoid() || !isFace(cplx, negative))
        return SimplicialComplex::voidComplex(cplx.vertices());
    std::vector<VertexSet> facets;
    for (VertexSet facet : cplx.facets()) {
        if ((facet & negative) != negative)
            continue;
        int off = 0;
        for (int v = 0; v < cplx.vertices(); ++v)
            if (!(facet & (VertexSet(1) << v)))
                off += std::max(alpha[v], 0);
        if (off <= n - 1)
            facets.push_back(facet & ~negative);
    }
    if (facets.empty())
        return SimplicialComplex::voidComplex(cplx.vertices());
    return SimplicialComplex::fromFacets(cplx.vertices(), std::move(facets));
}

/**
 * Top-dimensional faces of the degree complex of the n-th ordinary power of
 * the Stanley-Reisner ideal at a nonnegative alpha: the k-faces of cplx whose
 * off-face degree sum stays below n (k the dimension of cplx).
 */
inline std::vector<VertexSet> powerTopFaces(const SimplicialComplex& cplx, int n,
                                            const Exponents& alpha)
{
    if (alpha.size() != cplx.vertices())
        throw std::invalid_argument("multidegree length does not match the vertex count");
    if ((alpha < 0).any())
        throw std::invalid_argument("powerTopFaces expects a nonnegative multidegree");
    std::vector<VertexSet> out;
    if (cplx.isVoid())
        return out;
    const int k = cplx.dimension();
    for (VertexSet face : facesOfDimension(cplx, k)) {
        int off = 0;
        for (int v = 0; v < cplx.vertices(); ++v)
            if (!(face & (VertexSet(1) << v)))
                off += alpha[v];
        if (off <= n - 1)
            out.push_back(face);
    }
    return out;
}

}  // namespace aiinv

#endif  // AIINV_DEGREE_COMPLEX_HPP
