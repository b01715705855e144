/**
 * Verification suites: JSONL instance records, a dispatcher from records to
 * checks, and seeded random suite generation.  A record carries its check
 * kind, so one file can mix kinds; optional expect_lhs fields pin known
 * values and fail the run when a computed value drifts.
 *
 * Record shapes:
 *   {"check":"fiber",    "I":{...}, "J":{...}, "k":1, "jmin":2, "jmax":6}
 *   {"check":"fiber-a1", "I":{...}, "J":{...}, "k":2}
 *   {"check":"bigraded", "I":{...}, "J":{...}, "k":2}
 *   {"check":"symbolic", "complex":{...}, "n":2}
 *   {"check":"bound",    "complex":{...}, "n":2}
 *   {"check":"lemma29",  "complex":{...}, "n":2}
 */

#ifndef AIINV_SUITE_HPP
#define AIINV_SUITE_HPP

#include "aiinv/verify.hpp"

namespace aiinv {

inline const std::vector<std::string>& suiteKinds()
{
    static const std::vector<std::string> kinds = {"fiber",    "fiber-a1", "bigraded",
                                                   "symbolic", "bound",    "lemma29"};
    return kinds;
}

inline std::vector<Json> parseSuiteLines(const std::string& text)
{
    std::vector<Json> lines;
    std::istringstream stream(text);
    std::string line;
    int number = 0;
    while (std::getline(stream, line)) {
        ++number;
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        if (blank || line[0] == '#')
            continue;
        try {
            lines.push_back(Json::parse(line));
        } catch (const nlohmann::json::parse_error& err) {
            throw ParseError(err.what(), number, 0);
        }
    }
    return lines;
}

namespace detail {

inline int intField(const Json& line, const std::string& key, int fallback)
{
    if (!line.contains(key))
        return fallback;
    if (!line[key].is_number_integer())
        throw ParseError("suite field '" + key + "' must be an integer", 0, 0);
    return line[key].get<int>();
}

inline FiberInstance fiberInstanceFromJson(const Json& line)
{
    if (!line.contains("I") || !line.contains("J"))
        throw ParseError("fiber record needs ideals I and J", 0, 0);
    FiberInstance inst;
    inst.first = idealFromJson(line["I"]);
    inst.second = idealFromJson(line["J"]);
    inst.k = intField(line, "k", 1);
    if (inst.k < 1)
        throw ParseError("fiber record needs k >= 1", 0, 0);
    return inst;
}

/** Apply an expect_lhs pin: a passing report with the wrong value fails. */
inline void applyExpectation(const Json& line, VerificationReport& report)
{
    if (!line.contains("expect_lhs"))
        return;
    report.instance["expect_lhs"] = line["expect_lhs"];
    if (report.verdict == "pass" && report.lhs != line["expect_lhs"])
        report.verdict = "fail";
}

}  // namespace detail

/** Run one suite record; a record may expand to several reports (fiber j-range). */
inline std::vector<VerificationReport> runSuiteLine(const Json& line, const FieldChoice& field,
                                                    int threads = 1,
                                                    const Budget* budget = nullptr)
{
    if (!line.is_object() || !line.contains("check") || !line["check"].is_string())
        throw ParseError("suite record needs a string 'check' field", 0, 0);
    const std::string check = line["check"].get<std::string>();
    std::vector<VerificationReport> reports;
    if (check == "fiber") {
        const FiberInstance inst = detail::fiberInstanceFromJson(line);
        const int jmin = detail::intField(line, "jmin", 2);
        const int jmax = detail::intField(
            line, "jmax", inst.first.vars() + inst.second.vars());
        reports = verifyFiberAjRange(inst, field, threads, budget, jmin, jmax);
    } else if (check == "fiber-a1") {
        reports.push_back(
            verifyFiberA1(detail::fiberInstanceFromJson(line), field, threads, budget));
    } else if (check == "bigraded") {
        reports.push_back(
            verifyBigradedAll(detail::fiberInstanceFromJson(line), field, threads, budget));
    } else if (check == "symbolic" || check == "bound" || check == "lemma29") {
        if (!line.contains("complex"))
            throw ParseError(check + " record needs a complex", 0, 0);
        const SimplicialComplex cplx = complexFromJson(line["complex"]);
        const int n = detail::intField(line, "n", 1);
        if (check == "symbolic")
            reports.push_back(verifySymbolicEqualsOrdinary(cplx, n, field, threads, budget));
        else if (check == "bound")
            reports.push_back(verifyBoundAndSphere(cplx, n, field, threads));
        else
            reports.push_back(verifyWitnessExponentBound(cplx, n, field));
    } else {
        throw ParseError("unknown check kind: " + check, 0, 0);
    }
    for (VerificationReport& report : reports)
        detail::applyExpectation(line, report);
    return reports;
}

struct SuiteOutcome {
    std::vector<VerificationReport> reports;
    int passed = 0;
    int failed = 0;
    int hypothesisSkipped = 0;
    int resourceLimited = 0;
    std::vector<Json> failedLines;  // instances to replay

    void absorb(const Json& line, std::vector<VerificationReport> lineReports)
    {
        bool lineFailed = false;
        for (VerificationReport& report : lineReports) {
            if (report.passed())
                ++passed;
            else if (report.verdict == "hypothesis-not-met")
                ++hypothesisSkipped;
            else if (report.verdict == "resource-limit")
                ++resourceLimited;
            else {
                ++failed;
                lineFailed = true;
            }
            reports.push_back(std::move(report));
        }
        if (lineFailed)
            failedLines.push_back(line);
    }

    std::string summary() const
    {
        std::string text = "passed " + std::to_string(passed) + " failed "
                           + std::to_string(failed) + " hypothesis-skipped "
                           + std::to_string(hypothesisSkipped);
        if (resourceLimited > 0)
            text += " resource-limited " + std::to_string(resourceLimited);
        return text;
    }
};

/** Run records matching `kind` ("all" runs everything). */
inline SuiteOutcome runSuite(const std::vector<Json>& lines, const std::string& kind,
                             const FieldChoice& field, int threads = 1,
                             const Budget* budget = nullptr)
{
    SuiteOutcome outcome;
    for (const Json& line : lines) {
        if (kind != "all") {
            if (!line.is_object() || !line.contains("check"))
                throw ParseError("suite record needs a 'check' field", 0, 0);
            if (line["check"] != kind)
                continue;
        }
        outcome.absorb(line, runSuiteLine(line, field, threads, budget));
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// seeded random suites

struct RandomSuiteOptions {
    int maxVars = 6;             // ambient bound (per block for fiber kinds)
    int maxPower = 3;            // bound on k or n
    std::int64_t maxBoxSize = 1 << 19;  // reject instances with larger support boxes
};

namespace detail {

inline Json complexRecord(const std::string& kind, const SimplicialComplex& cplx, int n)
{
    return Json{{"check", kind}, {"complex", complexToJson(cplx)}, {"n", n}};
}

/** Random complex suite instance: s <= maxVars, dim <= 3, seed-split draws. */
inline Json randomComplexRecord(const std::string& kind, std::uint64_t seed,
                                const RandomSuiteOptions& options)
{
    SeededRng rng(seed);
    const int s = rng.uniformInt(3, std::max(3, std::min(6, options.maxVars)));
    const int minDim = (kind == "bound") ? 1 : 0;
    const int k = rng.uniformInt(minDim, std::min(3, s - 1));
    const double density = 0.25 + 0.65 * (static_cast<double>(rng.next() % 1000) / 1000.0);
    const bool pure = rng.chance(0.5);
    const SimplicialComplex cplx =
        generateRandomComplex(s, k, density, rng.next(), pure);
    const int minN = (kind == "bound") ? 2 : 1;
    const int n = rng.uniformInt(minN, std::max(minN, std::min(3, options.maxPower)));
    return complexRecord(kind, cplx, n);
}

inline Json fiberRecord(const std::string& kind, const FiberInstance& inst)
{
    Json line = inst.toJson();
    line["check"] = kind;
    return line;
}

/** Estimated support-box size of the table driving a fiber check. */
inline std::int64_t fiberBoxSize(const FiberInstance& inst)
{
    return tableBoxSize(power(fiberProduct(inst.first, inst.second), inst.k));
}

inline Json randomFiberRecord(const std::string& kind, std::uint64_t seed,
                              const RandomSuiteOptions& options)
{
    SeededRng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        const int s = 3;
        const int r = 3;
        FiberInstance inst;
        if (kind == "fiber-a1") {
            // hypotheses: blocks inside the squared maximal ideals, radical proper
            inst.first = generateRandomIdeal(s, 2, 3, rng.uniformInt(0, 2), rng.next());
            inst.second = generateRandomIdeal(r, 2, 3, rng.uniformInt(0, 2), rng.next());
            inst.k = rng.uniformInt(1, std::min(3, options.maxPower));
            if (radical(inst.first) == MonomialIdeal::maximal(s)
                || radical(inst.second) == MonomialIdeal::maximal(r))
                continue;
        } else {
            inst.first = generateRandomIdeal(s, 1, 3, rng.uniformInt(0, 3), rng.next());
            inst.second = generateRandomIdeal(r, 1, 3, rng.uniformInt(0, 3), rng.next());
            inst.k = rng.uniformInt(1, std::min(2, options.maxPower));
        }
        if (inst.first.isUnit() || inst.second.isUnit())
            continue;
        if (fiberBoxSize(inst) > options.maxBoxSize)
            continue;
        return fiberRecord(kind, inst);
    }
    throw std::runtime_error("could not draw a suite instance within the caps");
}

}  // namespace detail

/**
 * Deterministic random suite of `count` records of the given kind.  Records
 * are data; running them through runSuite reproduces the same reports for
 * any thread count.
 */
inline std::vector<Json> generateRandomSuite(const std::string& kind, int count,
                                             std::uint64_t seed,
                                             const RandomSuiteOptions& options = {})
{
    std::vector<Json> lines;
    SeededRng splitter(seed);
    for (int i = 0; i < count; ++i) {
        const std::uint64_t sub = splitter.next();
        if (kind == "fiber" || kind == "fiber-a1" || kind == "bigraded")
            lines.push_back(detail::randomFiberRecord(kind, sub, options));
        else if (kind == "symbolic" || kind == "bound" || kind == "lemma29")
            lines.push_back(detail::randomComplexRecord(kind, sub, options));
        else
            throw std::invalid_argument("unknown suite kind: " + kind);
    }
    return lines;
}

}  // namespace aiinv

#endif  // AIINV_SUITE_HPP
