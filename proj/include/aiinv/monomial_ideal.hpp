/**
 * Monomial ideals held by their minimal generating sets, with the exact
 * arithmetic used throughout: membership, powers, products, intersections,
 * radicals, monomial localization and fiber products.
 *
 * Conventions: the zero ideal is the empty generator set; the unit ideal is
 * generated by the single zero vector (the monomial 1).  Every constructor
 * re-minimalizes, so no generator ever divides another.
 */

#ifndef AIINV_MONOMIAL_IDEAL_HPP
#define AIINV_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aiinv/exponents.hpp"

namespace aiinv {

/** Drop duplicates and every vector divisible by another; result in graded-lex order. */
inline std::vector<Exponents> minimalizeGenerators(std::vector<Exponents> gens)
{
    std::sort(gens.begin(), gens.end(), gradedLexLess);
    gens.erase(std::unique(gens.begin(), gens.end(), sameExponents), gens.end());
    std::vector<Exponents> kept;
    kept.reserve(gens.size());
    for (const Exponents& g : gens) {
        bool divisible = false;
        for (const Exponents& h : kept) {
            // kept entries have smaller or equal degree, so h | g is the only direction
            if (divides(h, g)) {
                divisible = true;
                break;
            }
        }
        if (!divisible)
            kept.push_back(g);
    }
    return kept;
}

class MonomialIdeal {
public:
    MonomialIdeal() : vars_(0) {}

    /** Build from an arbitrary generating set; minimalizes on construction. */
    MonomialIdeal(int vars, std::vector<Exponents> generators) : vars_(vars)
    {
        if (vars < 0)
            throw std::invalid_argument("negative ambient variable count");
        for (const Exponents& g : generators) {
            if (g.size() != vars)
                throw std::invalid_argument("generator length does not match ambient "
                                            + std::to_string(vars));
            if ((g < 0).any())
                throw std::invalid_argument("monomial generator with negative exponent");
        }
        gens_ = minimalizeGenerators(std::move(generators));
    }

    static MonomialIdeal zero(int vars) { return MonomialIdeal(vars, {}); }

    static MonomialIdeal unit(int vars)
    {
        return MonomialIdeal(vars, {Exponents::Zero(vars)});
    }

    /** The graded maximal ideal (x_1, ..., x_s). */
    static MonomialIdeal maximal(int vars)
    {
        std::vector<Exponents> gens;
        for (int i = 0; i < vars; ++i) {
            Exponents e = Exponents::Zero(vars);
            e[i] = 1;
            gens.push_back(e);
        }
        return MonomialIdeal(vars, std::move(gens));
    }

    int vars() const { return vars_; }
    const std::vector<Exponents>& generators() const { return gens_; }

    bool isZero() const { return gens_.empty(); }
    bool isUnit() const { return gens_.size() == 1 && (gens_[0] == 0).all(); }

    bool operator==(const MonomialIdeal& other) const
    {
        if (vars_ != other.vars_ || gens_.size() != other.gens_.size())
            return false;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (!sameExponents(gens_[i], other.gens_[i]))
                return false;
        return true;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
    int vars_;
    std::vector<Exponents> gens_;  // minimal, graded-lex sorted
};

inline void requireSameAmbient(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.vars() != b.vars())
        throw std::invalid_argument("ambient mismatch: ideals over "
                                    + std::to_string(a.vars()) + " and "
                                    + std::to_string(b.vars()) + " variables");
}

/** Membership x^m in I: some minimal generator divides m. */
inline bool contains(const MonomialIdeal& ideal, const Exponents& m)
{
    if (m.size() != ideal.vars())
        throw std::invalid_argument("ambient mismatch between ideal and monomial");
    for (const Exponents& g : ideal.generators())
        if (divides(g, m))
            return true;
    return false;
}

/** Ideal sum: union of generating sets. */
inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b)
{
    requireSameAmbient(a, b);
    std::vector<Exponents> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.vars(), std::move(gens));
}

/** Ideal product: pairwise generator products. */
inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b)
{
    requireSameAmbient(a, b);
    std::vector<Exponents> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Exponents& g : a.generators())
        for (const Exponents& h : b.generators())
            gens.push_back(g + h);
    return MonomialIdeal(a.vars(), std::move(gens));
}

/**
 * k-th power, computed by repeated generator products with incremental
 * minimalization.  Power of the zero ideal is zero; of the unit, unit.
 */
inline MonomialIdeal power(const MonomialIdeal& ideal, int k)
{
    if (k < 1)
        throw std::invalid_argument("power exponent must be >= 1");
    MonomialIdeal result = ideal;
    for (int step = 1; step < k; ++step)
        result = multiply(result, ideal);
    return result;
}

/** Intersection via pairwise lcm of generators. */
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b)
{
    requireSameAmbient(a, b);
    std::vector<Exponents> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Exponents& g : a.generators())
        for (const Exponents& h : b.generators())
            gens.push_back(g.max(h));
    return MonomialIdeal(a.vars(), std::move(gens));
}

/** Squarefree ideal with the same zero set: supports of the generators. */
inline MonomialIdeal radical(const MonomialIdeal& ideal)
{
    std::vector<Exponents> gens;
    gens.reserve(ideal.generators().size());
    for (const Exponents& g : ideal.generators())
        gens.push_back((g > 0).cast<int>());
    return MonomialIdeal(ideal.vars(), std::move(gens));
}

inline bool isSquarefree(const MonomialIdeal& ideal)
{
    for (const Exponents& g : ideal.generators())
        if ((g > 1).any())
            return false;
    return true;
}

/**
 * Monomial localization I[F]: set x_i = 1 for i in F.  The ambient variable
 * count is kept; exponents on F are zeroed and the set re-minimalized, so a
 * generator supported inside F turns the result into the unit ideal.
 */
inline MonomialIdeal localize(const MonomialIdeal& ideal, VertexSet f)
{
    std::vector<Exponents> gens;
    gens.reserve(ideal.generators().size());
    for (const Exponents& g : ideal.generators()) {
        Exponents h = g;
        for (Eigen::Index i = 0; i < h.size(); ++i)
            if (f & (VertexSet(1) << i))
                h[i] = 0;
        gens.push_back(std::move(h));
    }
    return MonomialIdeal(ideal.vars(), std::move(gens));
}

/** Extend an ideal over s variables to s + extra variables (zeros appended). */
inline MonomialIdeal embedFirstBlock(const MonomialIdeal& ideal, int extra)
{
    std::vector<Exponents> gens;
    for (const Exponents& g : ideal.generators()) {
        Exponents h = Exponents::Zero(ideal.vars() + extra);
        h.head(ideal.vars()) = g;
        gens.push_back(std::move(h));
    }
    return MonomialIdeal(ideal.vars() + extra, std::move(gens));
}

/** Extend an ideal over r variables to extra + r variables (zeros prepended). */
inline MonomialIdeal embedSecondBlock(const MonomialIdeal& ideal, int extra)
{
    std::vector<Exponents> gens;
    for (const Exponents& g : ideal.generators()) {
        Exponents h = Exponents::Zero(extra + ideal.vars());
        h.tail(ideal.vars()) = g;
        gens.push_back(std::move(h));
    }
    return MonomialIdeal(extra + ideal.vars(), std::move(gens));
}

/**
 * Fiber product of I over s variables and J over r variables: the ideal of
 * K[x_1..x_s, y_1..y_r] generated by I, J and all products x_i y_j.
 */
inline MonomialIdeal fiberProduct(const MonomialIdeal& first, const MonomialIdeal& second)
{
    if (first.isUnit() || second.isUnit())
        throw std::invalid_argument("fiber product requires ideals without unit generators");
    const int s = first.vars();
    const int r = second.vars();
    const MonomialIdeal left = embedFirstBlock(first, r);
    const MonomialIdeal right = embedSecondBlock(second, s);
    std::vector<Exponents> gens;
    for (const Exponents& g : left.generators())
        gens.push_back(g);
    for (const Exponents& g : right.generators())
        gens.push_back(g);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) {
            Exponents e = Exponents::Zero(s + r);
            e[i] = 1;
            e[s + j] = 1;
            gens.push_back(std::move(e));
        }
    return MonomialIdeal(s + r, std::move(gens));
}

/** Componentwise maximum of the generator exponents; the search-box profile. */
inline Exponents maxExponentProfile(const MonomialIdeal& ideal)
{
    if (ideal.isZero() || ideal.isUnit())
        throw std::invalid_argument("exponent profile undefined for the zero and unit ideals");
    Exponents profile = Exponents::Zero(ideal.vars());
    for (const Exponents& g : ideal.generators())
        profile = profile.max(g);
    return profile;
}

/** true iff every generator has total degree >= d (I contained in m^d). */
inline bool containedInMaximalPower(const MonomialIdeal& ideal, int d)
{
    for (const Exponents& g : ideal.generators())
        if (totalDegree(g) < d)
            return false;
    return true;
}

/**
 * Membership oracle for symbolic powers of a Stanley-Reisner ideal:
 * x^a lies in I^(n) iff for every facet F the total degree of a off F is
 * at least n.  The facet list is taken as given; no generators are expanded.
 */
class SymbolicPowerOracle {
public:
    SymbolicPowerOracle(int vars, std::vector<VertexSet> facets, int exponent)
        : vars_(vars), facets_(std::move(facets)), exponent_(exponent)
    {
        if (exponent < 1)
            throw std::invalid_argument("symbolic power exponent must be >= 1");
        if (facets_.empty())
            throw std::invalid_argument("symbolic power oracle needs at least one facet");
    }

    int vars() const { return vars_; }
    int exponent() const { return exponent_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool contains(const Exponents& a) const
    {
        if (a.size() != vars_)
            throw std::invalid_argument("ambient mismatch in symbolic membership");
        for (VertexSet f : facets_) {
            int off = 0;
            for (Eigen::Index i = 0; i < a.size(); ++i)
                if (!(f & (VertexSet(1) << i)))
                    off += a[i];
            if (off < exponent_)
                return false;
        }
        return true;
    }

private:
    int vars_;
    std::vector<VertexSet> facets_;
    int exponent_;
};

/**
 * Power-decomposition identity checker for a fiber product F = I + J + mn
 * with H = I + mn:
 *   (a) F^k = H^k + sum over i in [1,k] of (mn)^(k-i) J^i, and
 *   (b) G_{t-1} meet (mn)^(k-t) J^t = m^(k-t+1) n^(k-t) J^t for t in [1,k],
 * where G_t accumulates the first t summands onto H^k.
 * Both sides are compared as minimal generating sets.
 */
struct PowerDecompositionReport {
    bool hypothesisSquares = false;  // I in m^2 and J in n^2
    bool sumIdentity = false;
    bool intersectionIdentity = false;
    bool holds() const { return sumIdentity && intersectionIdentity; }
};

inline PowerDecompositionReport verifyPowerDecomposition(const MonomialIdeal& first,
                                                         const MonomialIdeal& second,
                                                         int k)
{
    if (k < 1)
        throw std::invalid_argument("power must be >= 1");
    const int s = first.vars();
    const int r = second.vars();

    PowerDecompositionReport report;
    report.hypothesisSquares =
        containedInMaximalPower(first, 2) && containedInMaximalPower(second, 2);

    const MonomialIdeal iBig = embedFirstBlock(first, r);
    const MonomialIdeal jBig = embedSecondBlock(second, s);
    const MonomialIdeal mBig = embedFirstBlock(MonomialIdeal::maximal(s), r);
    const MonomialIdeal nBig = embedSecondBlock(MonomialIdeal::maximal(r), s);
    const MonomialIdeal mn = multiply(mBig, nBig);

    const MonomialIdeal fiber = sum(sum(iBig, jBig), mn);
    const MonomialIdeal fiberK = power(fiber, k);
    const MonomialIdeal hK = power(sum(iBig, mn), k);

    // mixed term (mn)^(k-i) J^i for i = 1..k
    auto mixedTerm = [&](int i) {
        MonomialIdeal term = power(jBig, i);
        if (k - i >= 1)
            term = multiply(term, power(mn, k - i));
        return term;
    };

    MonomialIdeal accumulated = hK;  // G_0
    report.intersectionIdentity = true;
    for (int t = 1; t <= k; ++t) {
        const MonomialIdeal mixed = mixedTerm(t);
        MonomialIdeal rhs = power(jBig, t);
        rhs = multiply(rhs, power(mBig, k - t + 1));
        if (k - t >= 1)
            rhs = multiply(rhs, power(nBig, k - t));
        if (intersect(accumulated, mixed) != rhs)
            report.intersectionIdentity = false;
        accumulated = sum(accumulated, mixed);  // G_t
    }
    report.sumIdentity = (fiberK == accumulated);
    return report;
}

}  // namespace aiinv

#endif  // AIINV_MONOMIAL_IDEAL_HPP
