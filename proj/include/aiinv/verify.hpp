/**
 * Machine verification of the a-invariant identities: every check computes
 * the left side directly from graded local cohomology on the big ring and
 * the right side from the corresponding closed formula, with hypothesis
 * flags evaluated and reported.  Checks are pure given their instance, so
 * suites can run them in any order or in parallel without changing output.
 */

#ifndef AIINV_VERIFY_HPP
#define AIINV_VERIFY_HPP

#include <random>

#include "aiinv/io.hpp"

namespace aiinv {

// ---------------------------------------------------------------------------
// instances and reports

struct FiberInstance {
    MonomialIdeal first;   // I in K[x_1..x_s]
    MonomialIdeal second;  // J in K[y_1..y_r]
    int k = 1;

    Json toJson() const
    {
        return Json{{"I", idealToJson(first)}, {"J", idealToJson(second)}, {"k", k}};
    }
};

struct VerificationReport {
    std::string check;
    Json instance;
    Json hypotheses = Json::object();
    Json lhs;
    Json rhs;
    std::string verdict;  // pass | fail | hypothesis-not-met | resource-limit
    double timingMs = 0.0;

    bool passed() const { return verdict == "pass"; }
    bool failed() const { return verdict == "fail"; }

    /** Timing is volatile and excluded unless explicitly requested. */
    Json toJson(bool withTimings = false) const
    {
        Json j{{"check", check},     {"instance", instance}, {"hypotheses", hypotheses},
               {"lhs", lhs},         {"rhs", rhs},           {"verdict", verdict}};
        if (withTimings)
            j["timing_ms"] = timingMs;
        return j;
    }
};

namespace detail {

class Stopwatch {
public:
    double elapsedMs() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now()
                                                         - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/** a_j of a table, minus infinity above the ring dimension or index range. */
inline AValue aAt(const CohomologyTable& table, int j)
{
    if (j < 0 || j > table.ideal.vars() || j > table.dim)
        return std::nullopt;
    return table.a[static_cast<std::size_t>(j)];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// fiber products: a_j for j >= 2 and a_1 under the stronger hypotheses

/** Tables for T/F^k and the two families S/I^{k-t}, R/J^{k-t}. */
struct FiberTables {
    CohomologyTable big;
    std::vector<CohomologyTable> firstPowers;   // index t
    std::vector<CohomologyTable> secondPowers;  // index t
};

inline FiberTables buildFiberTables(const FiberInstance& inst, const FieldChoice& field,
                                    int threads = 1, const Budget* budget = nullptr)
{
    FiberTables tables;
    const MonomialIdeal fiber = fiberProduct(inst.first, inst.second);
    tables.big = cohomologyTable(power(fiber, inst.k), field, threads, budget);
    for (int t = 0; t < inst.k; ++t) {
        const int e = inst.k - t;
        tables.firstPowers.push_back(
            cohomologyTable(power(inst.first, e), field, threads, budget));
        tables.secondPowers.push_back(
            cohomologyTable(power(inst.second, e), field, threads, budget));
    }
    return tables;
}

/** max over t of a_j(S/I^{k-t}) + t and a_j(R/J^{k-t}) + t. */
inline AValue fiberFormulaRhs(const FiberTables& tables, int j)
{
    AValue rhs;
    for (std::size_t t = 0; t < tables.firstPowers.size(); ++t) {
        rhs = maxA(rhs, addA(detail::aAt(tables.firstPowers[t], j), static_cast<int>(t)));
        rhs = maxA(rhs, addA(detail::aAt(tables.secondPowers[t], j), static_cast<int>(t)));
    }
    return rhs;
}

inline VerificationReport verifyFiberAjFromTables(const FiberInstance& inst,
                                                  const FiberTables& tables, int j)
{
    if (j < 2)
        throw std::invalid_argument("the a_j fiber identity needs j >= 2");
    VerificationReport report;
    report.check = "fiber-aj";
    report.instance = inst.toJson();
    report.instance["j"] = j;
    const AValue lhs = detail::aAt(tables.big, j);
    const AValue rhs = fiberFormulaRhs(tables, j);
    report.lhs = aValueToJson(lhs);
    report.rhs = aValueToJson(rhs);
    report.verdict = (lhs == rhs) ? "pass" : "fail";
    return report;
}

inline VerificationReport verifyFiberAj(const FiberInstance& inst, int j,
                                        const FieldChoice& field, int threads = 1,
                                        const Budget* budget = nullptr)
{
    const detail::Stopwatch watch;
    try {
        const FiberTables tables = buildFiberTables(inst, field, threads, budget);
        VerificationReport report = verifyFiberAjFromTables(inst, tables, j);
        report.timingMs = watch.elapsedMs();
        return report;
    } catch (const BudgetExceeded&) {
        VerificationReport report;
        report.check = "fiber-aj";
        report.instance = inst.toJson();
        report.instance["j"] = j;
        report.verdict = "resource-limit";
        report.timingMs = watch.elapsedMs();
        return report;
    }
}

/** All j in [2, s+r] off one set of tables. */
inline std::vector<VerificationReport> verifyFiberAjRange(const FiberInstance& inst,
                                                          const FieldChoice& field,
                                                          int threads = 1,
                                                          const Budget* budget = nullptr,
                                                          int jmin = 2, int jmax = -1)
{
    if (jmax < 0)
        jmax = inst.first.vars() + inst.second.vars();
    std::vector<VerificationReport> reports;
    const detail::Stopwatch watch;
    try {
        const FiberTables tables = buildFiberTables(inst, field, threads, budget);
        for (int j = jmin; j <= jmax; ++j) {
            reports.push_back(verifyFiberAjFromTables(inst, tables, j));
            reports.back().timingMs = watch.elapsedMs();
        }
    } catch (const BudgetExceeded&) {
        VerificationReport report;
        report.check = "fiber-aj";
        report.instance = inst.toJson();
        report.verdict = "resource-limit";
        report.timingMs = watch.elapsedMs();
        reports.push_back(std::move(report));
    }
    return reports;
}

inline VerificationReport verifyFiberA1(const FiberInstance& inst, const FieldChoice& field,
                                        int threads = 1, const Budget* budget = nullptr)
{
    const detail::Stopwatch watch;
    VerificationReport report;
    report.check = "fiber-a1";
    report.instance = inst.toJson();

    const bool dimFirst = inst.first.vars() > 2;
    const bool dimSecond = inst.second.vars() > 2;
    const bool squareFirst = containedInMaximalPower(inst.first, 2);
    const bool squareSecond = containedInMaximalPower(inst.second, 2);
    const bool radicalFirst =
        radical(inst.first) != MonomialIdeal::maximal(inst.first.vars());
    const bool radicalSecond =
        radical(inst.second) != MonomialIdeal::maximal(inst.second.vars());
    report.hypotheses = Json{{"dimS>2", dimFirst},       {"dimR>2", dimSecond},
                             {"I_in_m2", squareFirst},   {"J_in_n2", squareSecond},
                             {"radI_ne_m", radicalFirst}, {"radJ_ne_n", radicalSecond}};
    const bool hypotheses = dimFirst && dimSecond && squareFirst && squareSecond
                            && radicalFirst && radicalSecond;

    try {
        const FiberTables tables = buildFiberTables(inst, field, threads, budget);
        const AValue lhs = detail::aAt(tables.big, 1);
        const AValue rhs = maxA(AValue(2 * inst.k - 2), fiberFormulaRhs(tables, 1));
        report.lhs = aValueToJson(lhs);
        report.rhs = aValueToJson(rhs);
        if (hypotheses) {
            report.verdict = (lhs == rhs) ? "pass" : "fail";
        } else {
            report.verdict = "hypothesis-not-met";
            report.hypotheses["observed_equal"] = (lhs == rhs);
        }
    } catch (const BudgetExceeded&) {
        report.verdict = "resource-limit";
    }
    report.timingMs = watch.elapsedMs();
    return report;
}

// ---------------------------------------------------------------------------
// bigraded decomposition of H^p(T/F^k) per degree

/**
 * Per-degree dimensions of H^p_m(S/I^e), with the two finite-box reductions
 * applied on lookup, plus face-level probes of the degree complex at alpha
 * (is the empty set a face?  is some vertex a face?).  Nonpositive powers
 * mean the unit ideal: a zero quotient and a void degree complex.
 */
class GradedDimOracle {
public:
    GradedDimOracle(const MonomialIdeal& ideal, const FieldChoice& field, int threads = 1,
                    const Budget* budget = nullptr)
        : ideal_(ideal)
    {
        if (ideal.isUnit() || ideal.isZero())
            return;
        table_ = cohomologyTable(ideal, field, threads, budget);
        lookup_.assign(static_cast<std::size_t>(table_->dim + 1)
                           * static_cast<std::size_t>(tableBoxSize(ideal)),
                       0);
        for (const TableEntry& entry : table_->entries)
            lookup_[slot(entry.index, entry.alpha)] = entry.value;
    }

    const MonomialIdeal& ideal() const { return ideal_; }

    /** Present unless the ideal is zero or unit (those need no table). */
    const std::optional<CohomologyTable>& table() const { return table_; }

    int dimAt(int p, const Exponents& alpha) const
    {
        if (ideal_.isUnit())
            return 0;
        if (ideal_.isZero())
            return (p == ideal_.vars() && (alpha < 0).all()) ? 1 : 0;
        if (p < 0 || p > table_->dim)
            return 0;
        Exponents reduced = alpha;
        for (Eigen::Index j = 0; j < reduced.size(); ++j) {
            if (reduced[j] < -1)
                reduced[j] = -1;
            else if (reduced[j] >= table_->profile[j])
                return 0;  // saturated coordinate: the degree complex is a cone
        }
        return lookup_[slot(p, reduced)];
    }

    /** The empty set is a face: x^{alpha_+} stays outside I[G_alpha]. */
    bool degreeComplexNonempty(const Exponents& alpha) const
    {
        if (ideal_.isUnit())
            return false;
        if (ideal_.isZero())
            return true;
        for (const Exponents& g : ideal_.generators())
            if (!hasExcessOutside(g, alpha, ~VertexSet(0)))
                return false;
        return true;
    }

    /** Some single vertex is a face of the degree complex at alpha. */
    bool degreeComplexHasVertex(const Exponents& alpha) const
    {
        if (ideal_.isUnit())
            return false;
        const VertexSet ground = fullVertexSet(ideal_.vars()) & ~negativeSupport(alpha);
        if (ideal_.isZero())
            return ground != 0;
        VertexSet rest = ground;
        while (rest) {
            const VertexSet v = rest & -rest;
            rest &= ~v;
            bool vertexIsFace = true;
            for (const Exponents& g : ideal_.generators())
                if (!hasExcessOutside(g, alpha, ~v)) {
                    vertexIsFace = false;
                    break;
                }
            if (vertexIsFace)
                return true;
        }
        return false;
    }

private:
    /** Some coordinate inside `allowed`, off G_alpha, where g exceeds alpha_+. */
    static bool hasExcessOutside(const Exponents& g, const Exponents& alpha,
                                 VertexSet allowed)
    {
        for (Eigen::Index i = 0; i < g.size(); ++i)
            if (alpha[i] >= 0 && g[i] > alpha[i] && (allowed & (VertexSet(1) << i)))
                return true;
        return false;
    }

    std::size_t slot(int p, const Exponents& alpha) const
    {
        std::size_t linear = 0;
        for (Eigen::Index j = 0; j < alpha.size(); ++j)
            linear = linear * static_cast<std::size_t>(table_->profile[j] + 1)
                     + static_cast<std::size_t>(alpha[j] + 1);
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(tableBoxSize(ideal_))
               + linear;
    }

    MonomialIdeal ideal_;
    std::optional<CohomologyTable> table_;
    std::vector<int> lookup_;
};

/** I^e for e >= 1, the unit ideal otherwise (zero quotient convention). */
inline MonomialIdeal powerOrUnit(const MonomialIdeal& ideal, int e)
{
    if (e <= 0)
        return MonomialIdeal::unit(ideal.vars());
    return power(ideal, e);
}

/**
 * Right side of the per-degree decomposition of H^p(T/F^k) at
 * gamma = (alpha, beta), from small-ring data only.
 *
 * The nonempty faces of the big degree complex split into x-block faces of
 * Delta_alpha(I^{k-|beta|}) and y-block faces of Delta_beta(J^{k-|alpha|}),
 * each alive only when the opposite block degree is componentwise
 * nonnegative (the slices carry no negative opposite-block degrees).  In
 * homological degrees p >= 1 this gives the gated sum, plus one at p = 1
 * exactly when both gated complexes contain a vertex (the two vertex-bearing
 * pieces meet only along the empty face, contributing one extra connected
 * component).  The p = 0 row with both negative supports empty is the socle
 * test: one exactly when neither side has a vertex and x^gamma survives in
 * T/F^k, decided from the two blocks through the split
 * x^gamma in F^k  iff  exists a+b+c = k with x^alpha in I^a m^c and
 * y^beta in J^b n^c.
 */
class BigradedChecker {
public:
    BigradedChecker(const FiberInstance& inst, const FieldChoice& field, int threads = 1,
                    const Budget* budget = nullptr)
        : k_(inst.k), s_(inst.first.vars()), r_(inst.second.vars())
    {
        for (int e = 0; e <= k_ + r_; ++e)
            firstOracles_.emplace_back(powerOrUnit(inst.first, e), field, threads, budget);
        for (int e = 0; e <= k_ + s_; ++e)
            secondOracles_.emplace_back(powerOrUnit(inst.second, e), field, threads, budget);
        // membership grids I^a m^c and J^b n^c for the socle split
        const MonomialIdeal mFirst = MonomialIdeal::maximal(s_);
        const MonomialIdeal mSecond = MonomialIdeal::maximal(r_);
        firstProducts_.resize(static_cast<std::size_t>(k_) + 1);
        secondProducts_.resize(static_cast<std::size_t>(k_) + 1);
        for (int a = 0; a <= k_; ++a)
            for (int c = 0; a + c <= k_; ++c) {
                MonomialIdeal fi = powerOrUnit(inst.first, a);
                MonomialIdeal se = powerOrUnit(inst.second, a);
                if (c >= 1) {
                    fi = multiply(fi, power(mFirst, c));
                    se = multiply(se, power(mSecond, c));
                }
                firstProducts_[static_cast<std::size_t>(a)].push_back(std::move(fi));
                secondProducts_[static_cast<std::size_t>(a)].push_back(std::move(se));
            }
    }

    int rhsAt(int p, const Exponents& alpha, const Exponents& beta) const
    {
        const GradedDimOracle& first =
            firstOracles_[static_cast<std::size_t>(std::clamp(k_ - totalDegree(beta), 0, k_ + r_))];
        const GradedDimOracle& second =
            secondOracles_[static_cast<std::size_t>(std::clamp(k_ - totalDegree(alpha), 0, k_ + s_))];
        const bool firstGate = negativeSupport(beta) == 0;    // slices live in beta >= 0
        const bool secondGate = negativeSupport(alpha) == 0;  // and alpha >= 0
        const bool xVertex = firstGate && first.degreeComplexHasVertex(alpha);
        const bool yVertex = secondGate && second.degreeComplexHasVertex(beta);
        if (p == 0 && firstGate && secondGate)
            return (!xVertex && !yVertex && !bigMembership(alpha, beta)) ? 1 : 0;
        const int sum = (firstGate ? first.dimAt(p, alpha) : 0)
                        + (secondGate ? second.dimAt(p, beta) : 0);
        return sum + ((p == 1 && xVertex && yVertex) ? 1 : 0);
    }

private:
    /** x^alpha y^beta lies in F^k; both exponents componentwise nonnegative. */
    bool bigMembership(const Exponents& alpha, const Exponents& beta) const
    {
        for (int c = 0; c <= k_; ++c)
            for (int a = 0; a + c <= k_; ++a) {
                const int b = k_ - c - a;
                if (contains(firstProducts_[static_cast<std::size_t>(a)]
                                           [static_cast<std::size_t>(c)],
                             alpha)
                    && contains(secondProducts_[static_cast<std::size_t>(b)]
                                               [static_cast<std::size_t>(c)],
                                beta))
                    return true;
            }
        return false;
    }

    int k_, s_, r_;
    std::vector<GradedDimOracle> firstOracles_;   // index = exponent e
    std::vector<GradedDimOracle> secondOracles_;
    std::vector<std::vector<MonomialIdeal>> firstProducts_;   // [a][c] = I^a m^c
    std::vector<std::vector<MonomialIdeal>> secondProducts_;  // [b][c] = J^b n^c
};

/** Single-degree decomposition check at (p, gamma). */
inline VerificationReport verifyBigradedDecomposition(const FiberInstance& inst, int p,
                                                      const Exponents& alpha,
                                                      const Exponents& beta,
                                                      const FieldChoice& field)
{
    const detail::Stopwatch watch;
    VerificationReport report;
    report.check = "bigraded";
    report.instance = inst.toJson();
    report.instance["p"] = p;
    Json g = Json::array();
    for (Eigen::Index i = 0; i < alpha.size(); ++i)
        g.push_back(alpha[i]);
    for (Eigen::Index i = 0; i < beta.size(); ++i)
        g.push_back(beta[i]);
    report.instance["gamma"] = std::move(g);

    Exponents gamma(alpha.size() + beta.size());
    gamma.head(alpha.size()) = alpha;
    gamma.tail(beta.size()) = beta;
    const MonomialIdeal fiberPower = power(fiberProduct(inst.first, inst.second), inst.k);
    const int lhs = gradedPieceDim(fiberPower, p, gamma, field);
    const BigradedChecker checker(inst, field);
    const int rhs = checker.rhsAt(p, alpha, beta);
    report.lhs = lhs;
    report.rhs = rhs;
    report.verdict = (lhs == rhs) ? "pass" : "fail";
    report.timingMs = watch.elapsedMs();
    return report;
}

/**
 * Full-box decomposition check: every (p, gamma) over the support box of
 * T/F^k, aggregated into one report.
 */
inline VerificationReport verifyBigradedAll(const FiberInstance& inst,
                                            const FieldChoice& field, int threads = 1,
                                            const Budget* budget = nullptr)
{
    const detail::Stopwatch watch;
    VerificationReport report;
    report.check = "bigraded";
    report.instance = inst.toJson();
    try {
        const int s = inst.first.vars();
        const int r = inst.second.vars();
        const MonomialIdeal fiberPower = power(fiberProduct(inst.first, inst.second), inst.k);
        const GradedDimOracle bigOracle(fiberPower, field, threads, budget);
        const CohomologyTable& big = *bigOracle.table();
        const BigradedChecker checker(inst, field, threads, budget);

        const Exponents profile = big.profile;
        std::int64_t boxSize = 1;
        for (Eigen::Index j = 0; j < profile.size(); ++j)
            boxSize *= profile[j] + 1;

        std::int64_t checked = 0;
        std::int64_t mismatches = 0;
        Json firstMismatch;
        for (std::int64_t linear = 0; linear < boxSize; ++linear) {
            if (budget && (linear & 0x3f) == 0)
                budget->check();
            const Exponents gamma = detail::decodeBoxPoint(linear, profile);
            const Exponents alpha = gamma.head(s);
            const Exponents beta = gamma.tail(r);
            for (int p = 0; p <= big.dim; ++p) {
                const int lhs = bigOracle.dimAt(p, gamma);
                const int rhs = checker.rhsAt(p, alpha, beta);
                ++checked;
                if (lhs != rhs) {
                    ++mismatches;
                    if (firstMismatch.is_null()) {
                        Json g = Json::array();
                        for (Eigen::Index i = 0; i < gamma.size(); ++i)
                            g.push_back(gamma[i]);
                        firstMismatch = Json{{"p", p}, {"gamma", std::move(g)},
                                             {"lhs", lhs}, {"rhs", rhs}};
                    }
                }
            }
        }
        report.lhs = Json{{"checked", checked}};
        report.rhs = Json{{"mismatches", mismatches}};
        if (!firstMismatch.is_null())
            report.rhs["first_mismatch"] = firstMismatch;
        report.verdict = (mismatches == 0) ? "pass" : "fail";
    } catch (const BudgetExceeded&) {
        report.verdict = "resource-limit";
    }
    report.timingMs = watch.elapsedMs();
    return report;
}

// ---------------------------------------------------------------------------
// symbolic vs ordinary powers of Stanley-Reisner ideals

inline VerificationReport verifySymbolicEqualsOrdinary(const SimplicialComplex& cplx, int n,
                                                       const FieldChoice& field,
                                                       int threads = 1,
                                                       const Budget* budget = nullptr)
{
    const detail::Stopwatch watch;
    VerificationReport report;
    report.check = "symbolic";
    report.instance = Json{{"complex", complexToJson(cplx)}, {"n", n}};
    try {
        const int k = cplx.dimension();
        const AValue symbolic = symbolicTopAInvariant(cplx, n, field, threads);
        const CohomologyTable ordinary =
            cohomologyTable(power(stanleyReisner(cplx), n), field, threads, budget);
        const AValue direct = detail::aAt(ordinary, k + 1);
        report.lhs = aValueToJson(symbolic);
        report.rhs = aValueToJson(direct);
        report.verdict = (symbolic == direct) ? "pass" : "fail";
    } catch (const BudgetExceeded&) {
        report.verdict = "resource-limit";
    }
    report.timingMs = watch.elapsedMs();
    return report;
}

inline VerificationReport verifyBoundAndSphere(const SimplicialComplex& cplx, int n,
                                               const FieldChoice& field, int threads = 1)
{
    if (n < 2)
        throw std::invalid_argument("the sphere criterion needs n >= 2");
    const detail::Stopwatch watch;
    VerificationReport report;
    report.check = "bound";
    report.instance = Json{{"complex", complexToJson(cplx)}, {"n", n}};
    const int k = cplx.dimension();
    const int bound = (k + 2) * (n - 1);
    const AValue top = symbolicTopAInvariant(cplx, n, field, threads);
    const std::optional<VertexSet> sphere = findSphereRestriction(cplx);
    const bool boundHolds = !top || *top <= bound;
    const bool equality = top && *top == bound;
    report.lhs = aValueToJson(top);
    report.rhs = Json{{"bound", bound},
                      {"sphere", sphere ? vertexSetToJson(*sphere, cplx.vertices())
                                        : Json(nullptr)}};
    report.hypotheses = Json{{"dim>=1", k >= 1}};
    report.verdict = (boundHolds && equality == sphere.has_value()) ? "pass" : "fail";
    report.timingMs = watch.elapsedMs();
    return report;
}

/**
 * Exponent bound on cohomology witnesses: scanning one step beyond the
 * expected box, every multidegree with surviving top homology must have all
 * coordinates at most n-1.
 */
inline VerificationReport verifyWitnessExponentBound(const SimplicialComplex& cplx, int n,
                                                     const FieldChoice& field)
{
    const detail::Stopwatch watch;
    VerificationReport report;
    report.check = "lemma29";
    report.instance = Json{{"complex", complexToJson(cplx)}, {"n", n}};
    const int k = cplx.dimension();
    const int s = cplx.vertices();
    const Exponents profile = Exponents::Constant(s, n + 1);  // values -1 .. n
    std::int64_t boxSize = 1;
    for (int j = 0; j < s; ++j)
        boxSize *= n + 2;
    std::int64_t witnesses = 0;
    std::int64_t violations = 0;
    for (std::int64_t linear = 0; linear < boxSize; ++linear) {
        const Exponents alpha = detail::decodeBoxPoint(linear, profile);
        const VertexSet negative = negativeSupport(alpha);
        if (!isFace(cplx, negative))
            continue;
        const SimplicialComplex dc = symbolicDegreeComplexFacets(cplx, n, alpha);
        if (reducedBettiAt(dc, k - popcount(negative), field) == 0)
            continue;
        ++witnesses;
        if (alpha.maxCoeff() > n - 1)
            ++violations;
    }
    report.lhs = Json{{"witnesses", witnesses}};
    report.rhs = Json{{"violations", violations}};
    report.verdict = (violations == 0) ? "pass" : "fail";
    report.timingMs = watch.elapsedMs();
    return report;
}

// ---------------------------------------------------------------------------
// deterministic instance generation

/** Seeded generator with self-contained integer draws (stable across builds). */
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    int uniformInt(int lo, int hi)  // inclusive bounds
    {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(double p)
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::mt19937_64 engine_;
};

/**
 * Random complex of dimension exactly k on [s]: each candidate k-face is kept
 * with the given density (at least one is forced), and lower-dimensional
 * stray facets are sprinkled in unless `pure` is set.
 */
inline SimplicialComplex generateRandomComplex(int s, int k, double density,
                                               std::uint64_t seed, bool pure = true)
{
    if (k < 0 || k + 1 > s)
        throw std::invalid_argument("need 0 <= k and k+1 <= s for a k-dimensional complex");
    SeededRng rng(seed);
    SimplicialComplex skeleton = pureSkeleton(SimplicialComplex::fullSimplex(s), k);
    const std::vector<VertexSet> candidates = skeleton.facets();
    std::vector<VertexSet> facets;
    for (VertexSet f : candidates)
        if (rng.chance(density))
            facets.push_back(f);
    if (facets.empty())
        facets.push_back(candidates[static_cast<std::size_t>(rng.next() % candidates.size())]);
    if (!pure) {
        for (int extra = 0; extra < s; ++extra)
            if (rng.chance(density / 2)) {
                VertexSet f = 0;
                const int size = rng.uniformInt(1, std::max(1, k));
                for (int i = 0; i < size; ++i)
                    f |= VertexSet(1) << rng.uniformInt(0, s - 1);
                facets.push_back(f);
            }
    }
    return SimplicialComplex::fromFacets(s, std::move(facets));
}

/** Random non-unit monomial ideal with `count` draws of degree in [minDeg, maxDeg]. */
inline MonomialIdeal generateRandomIdeal(int s, int minDeg, int maxDeg, int count,
                                         std::uint64_t seed)
{
    if (s < 1 || minDeg < 1 || maxDeg < minDeg || count < 0)
        throw std::invalid_argument("invalid random-ideal parameters");
    SeededRng rng(seed);
    std::vector<Exponents> gens;
    for (int i = 0; i < count; ++i) {
        const int degree = rng.uniformInt(minDeg, maxDeg);
        Exponents g = Exponents::Zero(s);
        for (int d = 0; d < degree; ++d)
            ++g[rng.uniformInt(0, s - 1)];
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(s, std::move(gens));
}

inline MonomialIdeal generateRandomIdeal(int s, int maxDeg, int count, std::uint64_t seed)
{
    return generateRandomIdeal(s, 1, maxDeg, count, seed);
}

}  // namespace aiinv

#endif  // AIINV_VERIFY_HPP
