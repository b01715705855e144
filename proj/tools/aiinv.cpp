/**
 * aiinv: a-invariants, regularity and theorem verification for quotients by
 * monomial ideals.
 *
 * Commands:
 *   ai              a-invariants, regularity and dimension of S/I
 *   verify          run verification suites (bundled, file or random)
 *   degree-complex  facets of the degree complex of I at a multidegree
 *   sr              complex <-> ideal conversion (Stanley-Reisner duality)
 *   homology        reduced Betti numbers of a complex
 *
 * Exit codes: 0 success, 1 verification failure, 2 input/usage error,
 * 3 resource cap or time budget exceeded.
 */

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "aiinv/suite.hpp"

namespace {

using namespace aiinv;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct GlobalOptions {
    std::string field = "q";
    int threads = 1;
    std::uint64_t seed = 1;
    bool json = false;
    std::string out;

    FieldChoice fieldChoice() const { return parseFieldChoice(field); }
};

/** Per-instance wall-clock budget from AIINV_MAX_MS, when set. */
std::optional<std::int64_t> budgetFromEnvironment()
{
    const char* raw = std::getenv("AIINV_MAX_MS");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    try {
        return std::stoll(raw);
    } catch (const std::exception&) {
        throw std::invalid_argument("AIINV_MAX_MS must be an integer, got: "
                                    + std::string(raw));
    }
}

void writeOutput(const GlobalOptions& global, const std::string& text)
{
    if (global.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(global.out, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write to " + global.out);
    file << text;
}

std::string formatAValue(const AValue& value)
{
    return value ? std::to_string(*value) : std::string("-inf");
}

int runAi(const GlobalOptions& global, const std::string& idealPath, int maxVars,
          std::int64_t maxSubsets)
{
    const MonomialIdeal ideal = parseIdeal(readFile(idealPath));
    if (ideal.isUnit()) {
        std::cerr << "error: the unit ideal has a zero quotient; no table exists\n";
        return kExitInput;
    }
    if (ideal.vars() > maxVars) {
        std::cerr << "error: " << ideal.vars() << " variables exceed the cap of "
                  << maxVars << " (raise --max-vars)\n";
        return kExitCap;
    }
    if (tableBoxSize(ideal) > maxSubsets) {
        std::cerr << "error: support box of " << tableBoxSize(ideal)
                  << " multidegrees exceeds the cap of " << maxSubsets
                  << " (raise --max-subsets)\n";
        return kExitCap;
    }
    std::optional<Budget> budget;
    if (const auto ms = budgetFromEnvironment())
        budget.emplace(*ms);
    const CohomologyTable table = cohomologyTable(ideal, global.fieldChoice(),
                                                  global.threads,
                                                  budget ? &*budget : nullptr);
    if (global.json) {
        writeOutput(global, tableToJson(table).dump() + "\n");
        return kExitOk;
    }
    std::ostringstream text;
    text << "dim:  " << table.dim << '\n';
    text << "a:    [";
    for (std::size_t i = 0; i < table.a.size(); ++i)
        text << (i ? ", " : "") << formatAValue(table.a[i]);
    text << "]\n";
    text << "reg:  " << table.reg << '\n';
    text << "field: " << table.field.name() << '\n';
    writeOutput(global, text.str());
    return kExitOk;
}

int runVerify(const GlobalOptions& global, const std::string& kind,
              const std::string& suitePath, int randomCount,
              const RandomSuiteOptions& options, bool timings)
{
    std::vector<Json> lines;
    if (!suitePath.empty()) {
        lines = parseSuiteLines(readFile(suitePath));
    } else {
        if (kind == "all")
            throw std::invalid_argument("--random needs a concrete check kind");
        lines = generateRandomSuite(kind, randomCount, global.seed, options);
    }

    std::optional<Budget> budget;
    if (const auto ms = budgetFromEnvironment())
        budget.emplace(*ms);
    const SuiteOutcome outcome = runSuite(lines, kind, global.fieldChoice(),
                                          global.threads, budget ? &*budget : nullptr);

    std::ostringstream report;
    for (const VerificationReport& r : outcome.reports)
        report << r.toJson(timings).dump() << '\n';
    writeOutput(global, report.str());
    std::cout << outcome.summary() << '\n';

    if (outcome.failed > 0) {
        const std::string replayPath =
            global.out.empty() ? "aiinv-replay.jsonl" : global.out + ".replay.jsonl";
        std::ofstream replay(replayPath, std::ios::binary);
        for (const Json& line : outcome.failedLines)
            replay << line.dump() << '\n';
        std::cout << "replay file: " << replayPath << '\n';
        return kExitVerifyFailed;
    }
    if (outcome.resourceLimited > 0)
        return kExitCap;
    return kExitOk;
}

int runDegreeComplex(const GlobalOptions& global, const std::string& idealPath,
                     const std::string& alphaText)
{
    const MonomialIdeal ideal = parseIdeal(readFile(idealPath));
    std::istringstream stream(alphaText);
    std::vector<int> entries;
    std::string token;
    while (stream >> token) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != token.size())
            throw ParseError("invalid multidegree entry '" + token + "'", 0, 0);
        entries.push_back(value);
    }
    if (static_cast<int>(entries.size()) != ideal.vars())
        throw ParseError("multidegree has " + std::to_string(entries.size())
                             + " entries but the ideal has "
                             + std::to_string(ideal.vars()) + " variables",
                         0, 0);
    Exponents alpha(ideal.vars());
    for (int i = 0; i < ideal.vars(); ++i)
        alpha[i] = entries[static_cast<std::size_t>(i)];
    writeOutput(global, complexToJson(degreeComplex(ideal, alpha)).dump() + "\n");
    return kExitOk;
}

int runSr(const GlobalOptions& global, const std::string& complexPath,
          const std::string& idealPath)
{
    if (complexPath.empty() == idealPath.empty())
        throw std::invalid_argument("sr needs exactly one of --complex or --ideal");
    if (!complexPath.empty()) {
        const SimplicialComplex cplx = parseComplex(readFile(complexPath));
        const MonomialIdeal ideal = stanleyReisner(cplx);
        writeOutput(global, global.json ? idealToJson(ideal).dump() + "\n"
                                        : idealToText(ideal));
    } else {
        const MonomialIdeal ideal = parseIdeal(readFile(idealPath));
        const SimplicialComplex cplx = complexOfIdeal(ideal);
        writeOutput(global, global.json ? complexToJson(cplx).dump() + "\n"
                                        : complexToText(cplx));
    }
    return kExitOk;
}

int runHomology(const GlobalOptions& global, const std::string& complexPath)
{
    const SimplicialComplex cplx = parseComplex(readFile(complexPath));
    const BettiVector betti = reducedBetti(cplx, global.fieldChoice());
    if (global.json) {
        Json dims = Json::array();
        for (std::size_t i = 0; i < betti.dims.size(); ++i)
            dims.push_back(Json{{"i", static_cast<int>(i) - 1}, {"dim", betti.dims[i]}});
        writeOutput(global, Json{{"betti", std::move(dims)}}.dump() + "\n");
        return kExitOk;
    }
    std::ostringstream text;
    if (betti.dims.empty())
        text << "void complex: no reduced homology\n";
    for (std::size_t i = 0; i < betti.dims.size(); ++i)
        text << "H~(" << (static_cast<int>(i) - 1) << "): " << betti.dims[i] << '\n';
    writeOutput(global, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"a-invariants and regularity of quotients by monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--field", global.field, "coefficient field: q or fp:<p>");
    app.add_option("--threads", global.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", global.seed, "seed for random instance generation");
    app.add_flag("--json", global.json, "machine-readable JSON output");
    app.add_option("--out", global.out, "write primary output to this file");

    // ai
    auto* ai = app.add_subcommand("ai", "a-invariants, regularity and dimension of S/I");
    std::string aiIdealPath;
    int aiMaxVars = 16;
    std::int64_t aiMaxSubsets = std::int64_t(1) << 22;
    ai->add_option("--ideal", aiIdealPath, "ideal file (text or JSON)")->required();
    ai->add_option("--max-vars", aiMaxVars, "variable-count cap");
    ai->add_option("--max-subsets", aiMaxSubsets, "support-box size cap");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verifyKind;
    std::string verifySuite;
    int verifyRandom = 0;
    bool verifyTimings = false;
    RandomSuiteOptions randomOptions;
    std::vector<std::string> kindChoices = suiteKinds();
    kindChoices.push_back("all");
    verify->add_option("kind", verifyKind, "check kind")
        ->required()
        ->check(CLI::IsMember(kindChoices));
    verify->add_option("--suite", verifySuite, "suite file (JSON lines)");
    verify->add_option("--random", verifyRandom, "generate this many random instances")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-vars", randomOptions.maxVars, "ambient cap for random suites");
    verify->add_option("--max-power", randomOptions.maxPower, "power cap for random suites");
    verify->add_option("--max-subsets", randomOptions.maxBoxSize,
                       "support-box cap for random suites");
    verify->add_flag("--timings", verifyTimings, "include timings in reports");

    // degree-complex
    auto* dc = app.add_subcommand("degree-complex",
                                  "facets of the degree complex of I at a multidegree");
    std::string dcIdealPath;
    std::string dcAlpha;
    dc->add_option("--ideal", dcIdealPath, "ideal file")->required();
    dc->add_option("--alpha", dcAlpha, "multidegree, space-separated integers")->required();

    // sr
    auto* sr = app.add_subcommand("sr", "complex <-> ideal conversion");
    std::string srComplexPath;
    std::string srIdealPath;
    sr->add_option("--complex", srComplexPath, "complex file -> Stanley-Reisner ideal");
    sr->add_option("--ideal", srIdealPath, "ideal file -> complex of the ideal");

    // homology
    auto* hom = app.add_subcommand("homology", "reduced Betti numbers of a complex");
    std::string homComplexPath;
    hom->add_option("--complex", homComplexPath, "complex file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (ai->parsed())
            return runAi(global, aiIdealPath, aiMaxVars, aiMaxSubsets);
        if (verify->parsed()) {
            if (verifySuite.empty() && verifyRandom == 0)
                throw std::invalid_argument("verify needs --suite or --random");
            return runVerify(global, verifyKind, verifySuite, verifyRandom, randomOptions,
                             verifyTimings);
        }
        if (dc->parsed())
            return runDegreeComplex(global, dcIdealPath, dcAlpha);
        if (sr->parsed())
            return runSr(global, srComplexPath, srIdealPath);
        if (hom->parsed())
            return runHomology(global, homComplexPath);
    } catch (const ParseError& err) {
        std::cerr << "parse error";
        if (err.line > 0) {
            std::cerr << " at line " << err.line;
            if (err.column > 0)
                std::cerr << ", column " << err.column;
        }
        std::cerr << ": " << err.what() << '\n';
        return kExitInput;
    } catch (const BudgetExceeded& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitCap;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
