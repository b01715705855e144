/**
 * Exponent vectors: integer points of N^s (monomials) or Z^s (multidegrees),
 * together with the componentwise arithmetic everything else is built from.
 */

#ifndef AIINV_EXPONENTS_HPP
#define AIINV_EXPONENTS_HPP

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace aiinv {

/** A point of N^s or Z^s; one entry per ambient variable. */
using Exponents = Eigen::ArrayXi;

/** Subset of the vertex/variable set [s], s <= 31, as a bitmask (bit i = element i+1). */
using VertexSet = std::uint32_t;

inline Exponents makeExponents(std::initializer_list<int> entries)
{
    Exponents e(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (int v : entries)
        e[i++] = v;
    return e;
}

inline void requireSameAmbient(const Exponents& a, const Exponents& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument(
            "ambient mismatch: exponent vectors of lengths "
            + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

/** true iff x^g divides x^m, i.e. g <= m componentwise. Both must be monomials. */
inline bool divides(const Exponents& g, const Exponents& m)
{
    requireSameAmbient(g, m);
    const int* gp = g.data();
    const int* mp = m.data();
    for (Eigen::Index i = 0; i < g.size(); ++i)
        if (gp[i] > mp[i])
            return false;
    return true;
}

/** Exponent vector of lcm(x^a, x^b): the componentwise maximum. */
inline Exponents lcmExponents(const Exponents& a, const Exponents& b)
{
    requireSameAmbient(a, b);
    return a.max(b);
}

/** Total degree |a| = sum of entries (entries may be negative). */
inline int totalDegree(const Exponents& a)
{
    return a.sum();
}

/** Componentwise max(a, 0); the monomial part of a multidegree. */
inline Exponents positivePart(const Exponents& a)
{
    return a.max(0);
}

/** Indices with a_i < 0, as a vertex set (0-based bits). */
inline VertexSet negativeSupport(const Exponents& a)
{
    VertexSet g = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a[i] < 0)
            g |= VertexSet(1) << i;
    return g;
}

/** Indices with a_i > 0, as a vertex set. */
inline VertexSet support(const Exponents& a)
{
    VertexSet g = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a[i] > 0)
            g |= VertexSet(1) << i;
    return g;
}

inline bool sameExponents(const Exponents& a, const Exponents& b)
{
    return a.size() == b.size() && (a == b).all();
}

/** Lexicographic order on entries; ties broken nowhere (total on fixed length). */
inline bool lexLess(const Exponents& a, const Exponents& b)
{
    return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                        b.data(), b.data() + b.size());
}

/** Graded-lex order used as the canonical generator order. */
inline bool gradedLexLess(const Exponents& a, const Exponents& b)
{
    const int da = totalDegree(a);
    const int db = totalDegree(b);
    if (da != db)
        return da < db;
    return lexLess(a, b);
}

inline std::string toString(const Exponents& a)
{
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (i > 0)
            os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

}  // namespace aiinv

#endif  // AIINV_EXPONENTS_HPP
