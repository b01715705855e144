/**
 * Exact reduced simplicial homology via boundary-matrix ranks.
 *
 * The augmented chain complex is used throughout, so the empty face is a
 * genuine basis element in degree -1.  That makes reduced homology of the
 * irrelevant complex one-dimensional in degree -1, and of the void complex
 * zero everywhere, which is exactly what the local-cohomology translation
 * requires.
 *
 * Boundary matrices carry integer entries (signs of the alternating face
 * map); the chosen coefficient field enters only through the rank routine.
 * Ranks over the rationals are computed by fraction-free (Bareiss)
 * elimination, in 64-bit arithmetic with an exact big-integer fallback when
 * the minors grow past a safe magnitude.
 */

#ifndef AIINV_HOMOLOGY_HPP
#define AIINV_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "aiinv/fields.hpp"
#include "aiinv/simplicial_complex.hpp"

namespace aiinv {

using IntMatrix = Eigen::MatrixXi;

/** All faces, bucketed by dimension: index d holds the (d-1)-dimensional faces. */
inline std::vector<std::vector<VertexSet>> facesByDimension(const SimplicialComplex& cplx)
{
    std::vector<std::vector<VertexSet>> buckets;
    if (cplx.isVoid())
        return buckets;
    const int d = cplx.dimension();
    buckets.reserve(d + 2);
    for (int i = -1; i <= d; ++i)
        buckets.push_back(facesOfDimension(cplx, i));
    return buckets;
}

/**
 * Boundary map from the span of `upper` ((i)-faces) to the span of `lower`
 * ((i-1)-faces).  Row/column order follows the given face lists; signs follow
 * the alternating face map on vertex lists sorted ascending.
 */
inline IntMatrix boundaryMatrix(const std::vector<VertexSet>& lower,
                                const std::vector<VertexSet>& upper)
{
    IntMatrix mat = IntMatrix::Zero(static_cast<Eigen::Index>(lower.size()),
                                    static_cast<Eigen::Index>(upper.size()));
    auto rowOf = [&lower](VertexSet f) {
        auto it = std::lower_bound(lower.begin(), lower.end(), f, faceLexLess);
        return static_cast<Eigen::Index>(it - lower.begin());
    };
    for (std::size_t c = 0; c < upper.size(); ++c) {
        VertexSet face = upper[c];
        int position = 0;
        VertexSet rest = face;
        while (rest) {
            const VertexSet v = rest & -rest;
            rest &= ~v;
            mat(rowOf(face & ~v), static_cast<Eigen::Index>(c)) =
                (position % 2 == 0) ? 1 : -1;
            ++position;
        }
    }
    return mat;
}

namespace detail {

// Values stay exact minors of the input; past this bound we switch to cpp_int.
inline constexpr std::int64_t kBareissGuard = std::int64_t(1) << 53;

struct BareissOverflow {};

template <typename Int>
inline Eigen::Index bareissRank(std::vector<std::vector<Int>>& a, bool guarded)
{
    const Eigen::Index rows = static_cast<Eigen::Index>(a.size());
    const Eigen::Index cols = rows ? static_cast<Eigen::Index>(a[0].size()) : 0;
    Eigen::Index pivotRow = 0;
    Int previous = 1;
    for (Eigen::Index col = 0; col < cols && pivotRow < rows; ++col) {
        Eigen::Index r = pivotRow;
        while (r < rows && a[r][col] == 0)
            ++r;
        if (r == rows)
            continue;
        std::swap(a[pivotRow], a[r]);
        const Int pivot = a[pivotRow][col];
        for (Eigen::Index i = pivotRow + 1; i < rows; ++i) {
            const Int factor = a[i][col];
            for (Eigen::Index j = col + 1; j < cols; ++j) {
                a[i][j] = (pivot * a[i][j] - factor * a[pivotRow][j]) / previous;
                if (guarded) {
                    if (a[i][j] > Int(kBareissGuard) || a[i][j] < Int(-kBareissGuard))
                        throw BareissOverflow{};
                }
            }
            a[i][col] = 0;
        }
        previous = pivot;
        ++pivotRow;
    }
    return pivotRow;
}

inline std::int64_t invModP(std::int64_t a, std::int64_t p)
{
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, newT = 1, r = p, newR = a % p;
    if (newR < 0)
        newR += p;
    while (newR != 0) {
        const std::int64_t q = r / newR;
        t -= q * newT;
        std::swap(t, newT);
        r -= q * newR;
        std::swap(r, newR);
    }
    return t < 0 ? t + p : t;
}

}  // namespace detail

/** Exact rank of an integer matrix over the rationals. */
inline Eigen::Index rankOverRationals(const IntMatrix& m)
{
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            a[i][j] = m(i, j);
    try {
        return detail::bareissRank(a, true);
    } catch (const detail::BareissOverflow&) {
        using boost::multiprecision::cpp_int;
        std::vector<std::vector<cpp_int>> b(m.rows(), std::vector<cpp_int>(m.cols()));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                b[i][j] = m(i, j);
        return detail::bareissRank(b, false);
    }
}

/** Rank of an integer matrix over F_p by modular Gaussian elimination. */
inline Eigen::Index rankModP(const IntMatrix& m, std::int64_t p)
{
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::int64_t v = m(i, j) % p;
            a[i][j] = v < 0 ? v + p : v;
        }
    Eigen::Index pivotRow = 0;
    for (Eigen::Index col = 0; col < m.cols() && pivotRow < m.rows(); ++col) {
        Eigen::Index r = pivotRow;
        while (r < m.rows() && a[r][col] == 0)
            ++r;
        if (r == m.rows())
            continue;
        std::swap(a[pivotRow], a[r]);
        const std::int64_t inv = detail::invModP(a[pivotRow][col], p);
        for (Eigen::Index i = pivotRow + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0)
                continue;
            const std::int64_t factor = (a[i][col] * inv) % p;
            for (Eigen::Index j = col; j < m.cols(); ++j)
                a[i][j] = ((a[i][j] - factor * a[pivotRow][j]) % p + p) % p;
        }
        ++pivotRow;
    }
    return pivotRow;
}

/** Rank over the chosen coefficient field. */
inline Eigen::Index matrixRank(const IntMatrix& m, const FieldChoice& field)
{
    return field.isRationals() ? rankOverRationals(m) : rankModP(m, field.p);
}

/**
 * Reduced Betti numbers, indexed from -1 up to the complex dimension.
 * at(i) returns 0 outside that range.
 */
struct BettiVector {
    std::vector<int> dims;  // dims[0] is homological degree -1

    int at(int i) const
    {
        const int k = i + 1;
        if (k < 0 || k >= static_cast<int>(dims.size()))
            return 0;
        return dims[static_cast<std::size_t>(k)];
    }

    bool allZero() const
    {
        for (int v : dims)
            if (v != 0)
                return false;
        return true;
    }
};

inline BettiVector reducedBetti(const SimplicialComplex& cplx, const FieldChoice& field)
{
    BettiVector betti;
    if (cplx.isVoid())
        return betti;
    const auto buckets = facesByDimension(cplx);
    const int top = static_cast<int>(buckets.size()) - 1;  // buckets[k] holds (k-1)-faces
    std::vector<Eigen::Index> ranks(buckets.size() + 1, 0);  // ranks[k] = rank of boundary from (k-1)-faces
    for (int k = 1; k <= top; ++k)
        ranks[static_cast<std::size_t>(k)] =
            matrixRank(boundaryMatrix(buckets[k - 1], buckets[k]), field);
    betti.dims.resize(buckets.size());
    for (int k = 0; k <= top; ++k) {
        const auto count = static_cast<Eigen::Index>(buckets[k].size());
        betti.dims[static_cast<std::size_t>(k)] = static_cast<int>(
            count - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1]);
    }
    return betti;
}

/**
 * dim of the single reduced homology group in degree `index`, computed from
 * just the three relevant face layers.
 */
inline int reducedBettiAt(const SimplicialComplex& cplx, int index, const FieldChoice& field)
{
    if (cplx.isVoid())
        return 0;
    const int d = cplx.dimension();
    if (index < -1 || index > d)
        return 0;
    const std::vector<VertexSet> here = facesOfDimension(cplx, index);
    Eigen::Index lowerRank = 0;
    if (index >= 0) {
        const std::vector<VertexSet> below = facesOfDimension(cplx, index - 1);
        lowerRank = matrixRank(boundaryMatrix(below, here), field);
    }
    Eigen::Index upperRank = 0;
    if (index + 1 <= d) {
        const std::vector<VertexSet> above = facesOfDimension(cplx, index + 1);
        upperRank = matrixRank(boundaryMatrix(here, above), field);
    }
    return static_cast<int>(static_cast<Eigen::Index>(here.size()) - lowerRank - upperRank);
}

}  // namespace aiinv

#endif  // AIINV_HOMOLOGY_HPP
