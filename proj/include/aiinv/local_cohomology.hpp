/**
 * Graded local cohomology of S/I for a monomial ideal I, assembled one
 * multidegree at a time from the reduced homology of degree complexes:
 *
 *   dim_K H^i_m(S/I)_alpha  =  dim_K H~_{i - |G_alpha| - 1}(degree complex)
 *
 * whenever the negative support G_alpha is a face of the complex of I, and 0
 * otherwise.  The full table is finite because of two reductions:
 *
 *   - coordinates below -1 only matter through G_alpha, so -1 represents all
 *     of them and carries the largest total degree;
 *   - once alpha_j reaches the maximal generator exponent of x_j, vertex j
 *     lies in no forbidden set, the degree complex becomes a cone with apex
 *     j, and all its reduced homology vanishes.
 *
 * Hence the box with alpha_j in [-1, rho_j - 1] (rho the exponent profile)
 * supports every nonzero graded piece that can contribute to an a-invariant.
 *
 * Vanishing cohomology rows are encoded as an explicit minus-infinity value
 * (std::nullopt), never a sentinel integer, so maxima over possibly-empty
 * sets stay lawful.
 */

#ifndef AIINV_LOCAL_COHOMOLOGY_HPP
#define AIINV_LOCAL_COHOMOLOGY_HPP

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aiinv/degree_complex.hpp"
#include "aiinv/homology.hpp"
#include "aiinv/parallel.hpp"

namespace aiinv {

/** An a-invariant value: an integer, or minus infinity (nullopt). */
using AValue = std::optional<int>;

inline AValue maxA(AValue a, AValue b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    return std::max(*a, *b);
}

inline AValue addA(AValue a, int shift)
{
    if (!a)
        return a;
    return *a + shift;
}

/** Cooperative wall-clock budget; expiry raises BudgetExceeded. */
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("per-instance time budget exceeded") {}
};

class Budget {
public:
    explicit Budget(std::int64_t ms)
        : deadline_(std::chrono::steady_clock::now() + std::chrono::milliseconds(ms))
    {
    }

    void check() const
    {
        if (std::chrono::steady_clock::now() > deadline_)
            throw BudgetExceeded{};
    }

private:
    std::chrono::steady_clock::time_point deadline_;
};

/** Krull dimension of S/I: one more than the dimension of the complex of I. */
inline int krullDim(const MonomialIdeal& ideal)
{
    if (ideal.isUnit())
        throw std::invalid_argument("Krull dimension of the zero ring is undefined here");
    if (ideal.isZero())
        return ideal.vars();
    return complexOfIdeal(ideal).dimension() + 1;
}

/** dim_K H^index_m(S/I)_alpha for an arbitrary multidegree alpha in Z^s. */
inline int gradedPieceDim(const MonomialIdeal& ideal, int index, const Exponents& alpha,
                          const FieldChoice& field)
{
    if (ideal.isUnit())
        return 0;  // quotient is the zero module
    if (ideal.isZero())
        return (index == ideal.vars() && (alpha < 0).all()) ? 1 : 0;
    const VertexSet negative = negativeSupport(alpha);
    if (!isFace(complexOfIdeal(ideal), negative))
        return 0;
    const int homologyIndex = index - popcount(negative) - 1;
    if (homologyIndex < -1)
        return 0;
    return reducedBettiAt(degreeComplex(ideal, alpha), homologyIndex, field);
}

struct TableEntry {
    int index;        // cohomological index i
    Exponents alpha;  // multidegree
    int value;        // dim_K of the graded piece (nonzero entries only)
};

struct CohomologyTable {
    MonomialIdeal ideal;
    FieldChoice field;
    int dim = 0;                     // Krull dimension of S/I
    Exponents profile;               // rho; the box is [-1, rho_j - 1] per variable
    std::vector<TableEntry> entries; // sorted by (index, alpha lex)
    std::vector<AValue> a;           // a[0..dim]
    int reg = 0;
};

/** Number of multidegrees in the support box of the ideal's table. */
inline std::int64_t tableBoxSize(const MonomialIdeal& ideal)
{
    if (ideal.isZero() || ideal.isUnit())
        return 1;
    const Exponents profile = maxExponentProfile(ideal);
    std::int64_t size = 1;
    for (Eigen::Index j = 0; j < profile.size(); ++j)
        size *= profile[j] + 1;
    return size;
}

namespace detail {

inline Exponents decodeBoxPoint(std::int64_t linear, const Exponents& profile)
{
    Exponents alpha(profile.size());
    for (Eigen::Index j = profile.size() - 1; j >= 0; --j) {
        const std::int64_t radix = profile[j] + 1;  // values -1 .. profile[j]-1
        alpha[j] = static_cast<int>(linear % radix) - 1;
        linear /= radix;
    }
    return alpha;
}

}  // namespace detail

/**
 * The complete finite-support table of H^i_m(S/I) together with the derived
 * a-invariants and regularity.  Assembly parallelizes over multidegrees with
 * a deterministic merge; the result is identical for every thread count.
 */
inline CohomologyTable cohomologyTable(const MonomialIdeal& ideal, const FieldChoice& field,
                                       int threads = 1, const Budget* budget = nullptr)
{
    if (ideal.isUnit())
        throw std::invalid_argument("cohomology table of the zero ring is undefined");

    CohomologyTable table;
    table.ideal = ideal;
    table.field = field;
    table.dim = krullDim(ideal);

    if (ideal.isZero()) {
        // only the top module survives, in the all-negative orthant
        table.profile = Exponents::Zero(ideal.vars());
        Exponents corner = Exponents::Constant(ideal.vars(), -1);
        table.entries.push_back(TableEntry{ideal.vars(), corner, 1});
        table.a.assign(static_cast<std::size_t>(table.dim) + 1, std::nullopt);
        table.a[static_cast<std::size_t>(table.dim)] = -ideal.vars();
        table.reg = 0;
        return table;
    }

    table.profile = maxExponentProfile(ideal);
    const SimplicialComplex gate = complexOfIdeal(ideal);
    const std::int64_t boxSize = tableBoxSize(ideal);
    const int chunkCount = std::max(1, std::min<int>(threads * 8, 256));
    const std::int64_t chunkSize = (boxSize + chunkCount - 1) / chunkCount;
    std::vector<std::vector<TableEntry>> found(static_cast<std::size_t>(chunkCount));

    parallelChunks(chunkCount, threads, [&](std::int64_t chunkBegin, std::int64_t chunkEnd) {
        for (std::int64_t c = chunkBegin; c < chunkEnd; ++c) {
            std::vector<TableEntry>& local = found[static_cast<std::size_t>(c)];
            const std::int64_t begin = c * chunkSize;
            const std::int64_t end = std::min(boxSize, begin + chunkSize);
            for (std::int64_t linear = begin; linear < end; ++linear) {
                if (budget && (linear & 0xff) == 0)
                    budget->check();
                const Exponents alpha = detail::decodeBoxPoint(linear, table.profile);
                const VertexSet negative = negativeSupport(alpha);
                if (!isFace(gate, negative))
                    continue;
                const SimplicialComplex dc = degreeComplex(ideal, alpha);
                const BettiVector betti = reducedBetti(dc, field);
                const int shift = popcount(negative) + 1;
                for (int j = -1; j < static_cast<int>(betti.dims.size()) - 1; ++j) {
                    const int value = betti.at(j);
                    if (value == 0)
                        continue;
                    const int index = j + shift;
                    if (index > table.dim)
                        throw std::logic_error(
                            "graded piece above the Krull dimension; table invariant broken");
                    local.push_back(TableEntry{index, alpha, value});
                }
            }
        }
    });

    for (auto& local : found)
        table.entries.insert(table.entries.end(), local.begin(), local.end());
    std::sort(table.entries.begin(), table.entries.end(),
              [](const TableEntry& x, const TableEntry& y) {
                  if (x.index != y.index)
                      return x.index < y.index;
                  return lexLess(x.alpha, y.alpha);
              });

    table.a.assign(static_cast<std::size_t>(table.dim) + 1, std::nullopt);
    for (const TableEntry& entry : table.entries)
        table.a[static_cast<std::size_t>(entry.index)] =
            maxA(table.a[static_cast<std::size_t>(entry.index)], totalDegree(entry.alpha));

    AValue reg;
    for (int i = 0; i <= table.dim; ++i)
        reg = maxA(reg, addA(table.a[static_cast<std::size_t>(i)], i));
    if (!reg)
        throw std::logic_error("no finite a-invariant; nonzero S/I must have one");
    table.reg = *reg;
    return table;
}

/** a_i from a computed table; indices above the dimension vanish. */
inline AValue aInvariant(const CohomologyTable& table, int i)
{
    if (i < 0 || i > table.ideal.vars())
        throw std::out_of_range("a-invariant index outside [0, vars]");
    if (i > table.dim)
        return std::nullopt;
    return table.a[static_cast<std::size_t>(i)];
}

inline int regularity(const CohomologyTable& table)
{
    return table.reg;
}

/**
 * Top a-invariant a_{k+1}(S/I^(n)) for the Stanley-Reisner ideal of a
 * k-dimensional complex, through the facet-level symbolic degree complexes.
 * Witness multidegrees have entries at most n-1, so the scan box is
 * [-1, n-1] per coordinate.
 */
inline AValue symbolicTopAInvariant(const SimplicialComplex& cplx, int n,
                                    const FieldChoice& field, int threads = 1)
{
    if (cplx.isVoid())
        throw std::invalid_argument("symbolic a-invariants need a nonvoid complex");
    const int k = cplx.dimension();
    const int s = cplx.vertices();
    Exponents profile = Exponents::Constant(s, n);  // box values -1 .. n-1
    std::int64_t boxSize = 1;
    for (int j = 0; j < s; ++j)
        boxSize *= n + 1;

    const int chunkCount = std::max(1, std::min<int>(threads * 8, 256));
    const std::int64_t chunkSize = (boxSize + chunkCount - 1) / chunkCount;
    std::vector<AValue> best(static_cast<std::size_t>(chunkCount));

    parallelChunks(chunkCount, threads, [&](std::int64_t chunkBegin, std::int64_t chunkEnd) {
        for (std::int64_t c = chunkBegin; c < chunkEnd; ++c) {
            const std::int64_t begin = c * chunkSize;
            const std::int64_t end = std::min(boxSize, begin + chunkSize);
            AValue localBest;
            for (std::int64_t linear = begin; linear < end; ++linear) {
                const Exponents alpha = detail::decodeBoxPoint(linear, profile);
                const VertexSet negative = negativeSupport(alpha);
                if (!isFace(cplx, negative))
                    continue;
                const SimplicialComplex dc = symbolicDegreeComplexFacets(cplx, n, alpha);
                if (reducedBettiAt(dc, k - popcount(negative), field) != 0)
                    localBest = maxA(localBest, totalDegree(alpha));
            }
            best[static_cast<std::size_t>(c)] = localBest;
        }
    });

    AValue result;
    for (const AValue& b : best)
        result = maxA(result, b);
    return result;
}

}  // namespace aiinv

#endif  // AIINV_LOCAL_COHOMOLOGY_HPP
