/**
 * Simplicial complexes on a fixed vertex set [s], stored as facet antichains
 * with bitmask faces.  Two degenerate complexes are kept distinct: the void
 * complex (no faces at all) and the irrelevant complex (only the empty face).
 * The distinction carries real homological content: the irrelevant complex
 * has one-dimensional reduced homology in degree -1, the void complex none.
 */

#ifndef AIINV_SIMPLICIAL_COMPLEX_HPP
#define AIINV_SIMPLICIAL_COMPLEX_HPP

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aiinv/monomial_ideal.hpp"

namespace aiinv {

/** Largest vertex count for which full subset enumeration is allowed. */
inline constexpr int kMaxEnumerationVars = 20;

inline int popcount(VertexSet v) { return std::popcount(v); }

inline VertexSet fullVertexSet(int s) { return (s == 0) ? 0 : ((VertexSet(1) << s) - 1); }

/** Lexicographic order on faces viewed as sorted vertex lists. */
inline bool faceLexLess(VertexSet a, VertexSet b)
{
    const VertexSet diff = a ^ b;
    if (diff == 0)
        return false;
    return (a & (diff & -diff)) != 0;  // the smallest differing vertex lies in a
}

/** Keep only the maximal sets, sorted canonically. */
inline std::vector<VertexSet> antichainize(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet a : sets) {
        bool dominated = false;
        for (VertexSet b : sets)
            if (a != b && (a & b) == a) {
                dominated = true;
                break;
            }
        if (!dominated)
            kept.push_back(a);
    }
    std::sort(kept.begin(), kept.end(), faceLexLess);
    return kept;
}

class SimplicialComplex {
public:
    SimplicialComplex() : vertices_(0) {}

    /** Build the complex generated by the given faces (maximalized). */
    static SimplicialComplex fromFacets(int vertices, std::vector<VertexSet> facets)
    {
        checkVertexCount(vertices);
        for (VertexSet f : facets)
            if (f & ~fullVertexSet(vertices))
                throw std::invalid_argument("facet uses a vertex outside [s]");
        SimplicialComplex c;
        c.vertices_ = vertices;
        c.facets_ = antichainize(std::move(facets));
        return c;
    }

    /** The complex with no faces at all. */
    static SimplicialComplex voidComplex(int vertices)
    {
        checkVertexCount(vertices);
        SimplicialComplex c;
        c.vertices_ = vertices;
        return c;
    }

    /** The complex whose only face is the empty set. */
    static SimplicialComplex irrelevant(int vertices)
    {
        return fromFacets(vertices, {VertexSet(0)});
    }

    static SimplicialComplex fullSimplex(int vertices)
    {
        return fromFacets(vertices, {fullVertexSet(vertices)});
    }

    int vertices() const { return vertices_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool isVoid() const { return facets_.empty(); }
    bool isIrrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }

    /** dim of the complex; undefined (throws) on the void complex. */
    int dimension() const
    {
        if (isVoid())
            throw std::logic_error("dimension of the void complex is undefined");
        int d = -1;
        for (VertexSet f : facets_)
            d = std::max(d, popcount(f) - 1);
        return d;
    }

    bool operator==(const SimplicialComplex& other) const
    {
        return vertices_ == other.vertices_ && facets_ == other.facets_;
    }
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

private:
    static void checkVertexCount(int vertices)
    {
        if (vertices < 0 || vertices > 31)
            throw std::invalid_argument("vertex count out of range [0, 31]");
    }

    int vertices_ = 0;
    std::vector<VertexSet> facets_;  // antichain in faceLexLess order; empty = void
};

inline bool isFace(const SimplicialComplex& cplx, VertexSet f)
{
    for (VertexSet facet : cplx.facets())
        if ((f & facet) == f)
            return true;
    return false;
}

/**
 * Link of G: faces disjoint from G whose union with G is a face.
 * The void complex is returned when G is not a face.
 */
inline SimplicialComplex link(const SimplicialComplex& cplx, VertexSet g)
{
    if (!isFace(cplx, g))
        return SimplicialComplex::voidComplex(cplx.vertices());
    std::vector<VertexSet> facets;
    for (VertexSet facet : cplx.facets())
        if ((g & facet) == g)
            facets.push_back(facet & ~g);
    return SimplicialComplex::fromFacets(cplx.vertices(), std::move(facets));
}

/** Restriction to B: the faces contained in B, still on the full vertex set. */
inline SimplicialComplex restriction(const SimplicialComplex& cplx, VertexSet b)
{
    if (cplx.isVoid())
        return cplx;
    std::vector<VertexSet> facets;
    for (VertexSet facet : cplx.facets())
        facets.push_back(facet & b);
    return SimplicialComplex::fromFacets(cplx.vertices(), std::move(facets));
}

/** Enumerate the faces of the given dimension (subsets of facets of size i+1). */
inline std::vector<VertexSet> facesOfDimension(const SimplicialComplex& cplx, int dim)
{
    std::vector<VertexSet> out;
    if (cplx.isVoid() || dim < -1)
        return out;
    if (dim == -1) {
        out.push_back(0);
        return out;
    }
    const int size = dim + 1;
    for (VertexSet facet : cplx.facets()) {
        const int fsize = popcount(facet);
        if (fsize < size)
            continue;
        // vertices of the facet, then all size-subsets
        int verts[32];
        int n = 0;
        for (int v = 0; v < cplx.vertices(); ++v)
            if (facet & (VertexSet(1) << v))
                verts[n++] = v;
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            VertexSet f = 0;
            for (int i : idx)
                f |= VertexSet(1) << verts[i];
            out.push_back(f);
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == n - size + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::sort(out.begin(), out.end(), faceLexLess);
    return out;
}

/**
 * Pure i-th skeleton: the complex generated by exactly the i-dimensional
 * faces.  i = -1 gives the irrelevant complex (when any face exists at all);
 * i above the dimension gives the void complex.
 */
inline SimplicialComplex pureSkeleton(const SimplicialComplex& cplx, int dim)
{
    if (dim < -1)
        throw std::invalid_argument("skeleton dimension must be >= -1");
    std::vector<VertexSet> faces = facesOfDimension(cplx, dim);
    if (faces.empty())
        return SimplicialComplex::voidComplex(cplx.vertices());
    return SimplicialComplex::fromFacets(cplx.vertices(), std::move(faces));
}

/** Inclusion-minimal subsets of [s] that are not faces. */
inline std::vector<VertexSet> minimalNonfaces(const SimplicialComplex& cplx)
{
    if (cplx.isVoid())
        throw std::invalid_argument("minimal non-faces undefined for the void complex");
    if (cplx.vertices() > kMaxEnumerationVars)
        throw std::invalid_argument("vertex count exceeds the subset-enumeration cap");
    std::vector<VertexSet> out;
    const VertexSet all = fullVertexSet(cplx.vertices());
    for (VertexSet n = 1; n <= all; ++n) {
        if (isFace(cplx, n))
            continue;
        bool minimal = true;
        for (int v = 0; v < cplx.vertices() && minimal; ++v)
            if (n & (VertexSet(1) << v))
                minimal = isFace(cplx, n & ~(VertexSet(1) << v));
        if (minimal)
            out.push_back(n);
    }
    std::sort(out.begin(), out.end(), faceLexLess);
    return out;
}

/** Stanley-Reisner ideal: squarefree generators x_N over minimal non-faces N. */
inline MonomialIdeal stanleyReisner(const SimplicialComplex& cplx)
{
    std::vector<Exponents> gens;
    for (VertexSet n : minimalNonfaces(cplx)) {
        Exponents e = Exponents::Zero(cplx.vertices());
        for (int v = 0; v < cplx.vertices(); ++v)
            if (n & (VertexSet(1) << v))
                e[v] = 1;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(cplx.vertices(), std::move(gens));
}

/**
 * Facets of the complex { F in ground : no forbidden set is contained in F },
 * by full enumeration of the subsets of the ground set.
 */
inline std::vector<VertexSet> facetsAvoiding(int vertices, VertexSet ground,
                                             const std::vector<VertexSet>& forbidden)
{
    if (vertices > kMaxEnumerationVars)
        throw std::invalid_argument("vertex count exceeds the subset-enumeration cap");
    for (VertexSet w : forbidden)
        if (w == 0)
            return {};  // even the empty set is forbidden
    // enumerate subsets of ground only
    std::vector<VertexSet> subsets;
    VertexSet sub = ground;
    while (true) {
        subsets.push_back(sub);
        if (sub == 0)
            break;
        sub = (sub - 1) & ground;
    }
    std::vector<VertexSet> facets;
    for (VertexSet f : subsets) {
        bool face = true;
        for (VertexSet w : forbidden)
            if ((w & f) == w) {
                face = false;
                break;
            }
        if (!face)
            continue;
        // maximal iff adding any remaining ground vertex breaks it
        bool maximal = true;
        VertexSet candidates = ground & ~f;
        while (candidates && maximal) {
            const VertexSet v = candidates & -candidates;
            candidates &= ~v;
            bool stillFace = true;
            for (VertexSet w : forbidden)
                if ((w & (f | v)) == w) {
                    stillFace = false;
                    break;
                }
            if (stillFace)
                maximal = false;
        }
        if (maximal)
            facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end(), faceLexLess);
    return facets;
}

/**
 * The complex of an ideal: faces F with x_F outside the radical.  The unit
 * ideal gives the void complex, the zero ideal the full simplex.
 */
inline SimplicialComplex complexOfIdeal(const MonomialIdeal& ideal)
{
    if (ideal.isUnit())
        return SimplicialComplex::voidComplex(ideal.vars());
    if (ideal.isZero())
        return SimplicialComplex::fullSimplex(ideal.vars());
    const MonomialIdeal rad = radical(ideal);
    std::vector<VertexSet> forbidden;
    for (const Exponents& g : rad.generators())
        forbidden.push_back(support(g));
    std::vector<VertexSet> facets =
        facetsAvoiding(ideal.vars(), fullVertexSet(ideal.vars()), forbidden);
    if (facets.empty())
        return SimplicialComplex::voidComplex(ideal.vars());
    return SimplicialComplex::fromFacets(ideal.vars(), std::move(facets));
}

/** A vertex contained in every facet, if one exists. */
inline std::optional<int> isCone(const SimplicialComplex& cplx)
{
    if (cplx.isVoid())
        throw std::invalid_argument("cone test undefined for the void complex");
    VertexSet common = fullVertexSet(cplx.vertices());
    for (VertexSet facet : cplx.facets())
        common &= facet;
    if (common == 0)
        return std::nullopt;
    return std::countr_zero(common);
}

/**
 * Search for B of size dim(cplx)+2 whose restriction has as facets exactly
 * all the (dim+1)-subsets of B, i.e. the boundary sphere of a simplex.
 * The search is exhaustive over subsets of that size.
 */
inline std::optional<VertexSet> findSphereRestriction(const SimplicialComplex& cplx)
{
    if (cplx.isVoid() || cplx.isIrrelevant())
        return std::nullopt;
    const int k = cplx.dimension();
    const int size = k + 2;
    const int s = cplx.vertices();
    if (size > s)
        return std::nullopt;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i)
        idx[i] = i;
    while (true) {
        VertexSet b = 0;
        for (int i : idx)
            b |= VertexSet(1) << i;
        std::vector<VertexSet> expected;
        for (int i : idx)
            expected.push_back(b & ~(VertexSet(1) << i));
        std::sort(expected.begin(), expected.end(), faceLexLess);
        if (restriction(cplx, b).facets() == expected)
            return b;
        int pos = size - 1;
        while (pos >= 0 && idx[pos] == s - size + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[pos];
        for (int i = pos + 1; i < size; ++i)
            idx[i] = idx[i - 1] + 1;
    }
    return std::nullopt;
}

}  // namespace aiinv

#endif  // AIINV_SIMPLICIAL_COMPLEX_HPP
