/**
 * File formats.
 *
 * Ideal text:            Complex text:
 *   vars: 3                vertices: 3
 *   1 1 1                  1 2
 *   0 2 0                  2 3
 *
 * Ideal JSON:   {"vars": 3, "gens": [[1,1,1],[0,2,0]]}
 * Complex JSON: {"vertices": 3, "facets": [[1,2],[2,3]]}
 *               the void complex serializes facets as null, the irrelevant
 *               complex as []; a facet [] is the empty face.
 *
 * Vertices are 1-based on the wire, 0-based in memory.  JSON input is
 * detected by a leading '{'.  Text files with no facet lines parse as the
 * void complex; use JSON to spell the irrelevant complex.
 */

#ifndef AIINV_IO_HPP
#define AIINV_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "aiinv/local_cohomology.hpp"

namespace aiinv {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    ParseError(std::string message, int line, int column)
        : std::runtime_error(std::move(message)), line(line), column(column)
    {
    }

    int line = 0;    // 1-based; 0 when not applicable
    int column = 0;  // 1-based; 0 when not applicable
};

namespace detail {

struct Tokenized {
    std::vector<std::vector<std::string>> tokens;  // per line
    std::vector<std::vector<int>> columns;         // 1-based start column per token
};

inline Tokenized tokenize(const std::string& text)
{
    Tokenized out;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::vector<std::string> tokens;
        std::vector<int> columns;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i >= line.size())
                break;
            if (line[i] == '#')
                break;  // comment to end of line
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            tokens.push_back(line.substr(start, i - start));
            columns.push_back(static_cast<int>(start) + 1);
        }
        out.tokens.push_back(std::move(tokens));
        out.columns.push_back(std::move(columns));
    }
    return out;
}

inline int parseInt(const std::string& token, int line, int column)
{
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + token + "'", line, column);
    }
    if (pos != token.size())
        throw ParseError("trailing characters in integer '" + token + "'", line, column);
    return value;
}

/** Find the `<keyword>: <count>` header; returns (count, header line index). */
inline std::pair<int, std::size_t> parseHeader(const Tokenized& tok, const std::string& keyword)
{
    for (std::size_t l = 0; l < tok.tokens.size(); ++l) {
        if (tok.tokens[l].empty())
            continue;
        const auto& first = tok.tokens[l][0];
        int countIndex = -1;
        if (first == keyword + ":" && tok.tokens[l].size() == 2)
            countIndex = 1;
        else if (first == keyword && tok.tokens[l].size() == 3 && tok.tokens[l][1] == ":")
            countIndex = 2;
        if (countIndex < 0)
            throw ParseError("expected header '" + keyword + ": <count>'",
                             static_cast<int>(l) + 1, tok.columns[l][0]);
        const int count = parseInt(tok.tokens[l][static_cast<std::size_t>(countIndex)],
                                   static_cast<int>(l) + 1,
                                   tok.columns[l][static_cast<std::size_t>(countIndex)]);
        if (count < 0)
            throw ParseError("count must be nonnegative", static_cast<int>(l) + 1,
                             tok.columns[l][static_cast<std::size_t>(countIndex)]);
        return {count, l};
    }
    throw ParseError("missing header '" + keyword + ": <count>'", 1, 1);
}

inline int lineOfByte(const std::string& text, std::size_t byte)
{
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

inline Json parseJsonOrThrow(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(err.what(), lineOfByte(text, err.byte), 0);
    }
}

}  // namespace detail

inline MonomialIdeal idealFromJson(const Json& j)
{
    if (!j.is_object() || !j.contains("vars") || !j.contains("gens")
        || !j["vars"].is_number_integer() || !j["gens"].is_array())
        throw ParseError("ideal JSON must be {\"vars\": s, \"gens\": [[...], ...]}", 0, 0);
    const int vars = j["vars"].get<int>();
    std::vector<Exponents> gens;
    for (const Json& row : j["gens"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != vars)
            throw ParseError("generator row length must equal vars", 0, 0);
        Exponents e(vars);
        for (int i = 0; i < vars; ++i) {
            if (!row[static_cast<std::size_t>(i)].is_number_integer())
                throw ParseError("generator entries must be integers", 0, 0);
            e[i] = row[static_cast<std::size_t>(i)].get<int>();
        }
        gens.push_back(std::move(e));
    }
    try {
        return MonomialIdeal(vars, std::move(gens));
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), 0, 0);
    }
}

inline MonomialIdeal idealFromText(const std::string& text)
{
    const detail::Tokenized tok = detail::tokenize(text);
    const auto [vars, headerLine] = detail::parseHeader(tok, "vars");
    std::vector<Exponents> gens;
    for (std::size_t l = headerLine + 1; l < tok.tokens.size(); ++l) {
        if (tok.tokens[l].empty())
            continue;
        if (static_cast<int>(tok.tokens[l].size()) != vars)
            throw ParseError("expected " + std::to_string(vars) + " exponents, got "
                                 + std::to_string(tok.tokens[l].size()),
                             static_cast<int>(l) + 1, tok.columns[l][0]);
        Exponents e(vars);
        for (int i = 0; i < vars; ++i) {
            const int value = detail::parseInt(tok.tokens[l][static_cast<std::size_t>(i)],
                                               static_cast<int>(l) + 1,
                                               tok.columns[l][static_cast<std::size_t>(i)]);
            if (value < 0)
                throw ParseError("generator exponents must be nonnegative",
                                 static_cast<int>(l) + 1,
                                 tok.columns[l][static_cast<std::size_t>(i)]);
            e[i] = value;
        }
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(vars, std::move(gens));
}

inline MonomialIdeal parseIdeal(const std::string& content)
{
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '{')
            return idealFromJson(detail::parseJsonOrThrow(content));
        break;
    }
    return idealFromText(content);
}

inline SimplicialComplex complexFromJson(const Json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets")
        || !j["vertices"].is_number_integer())
        throw ParseError("complex JSON must be {\"vertices\": s, \"facets\": ...}", 0, 0);
    const int vertices = j["vertices"].get<int>();
    if (j["facets"].is_null())
        return SimplicialComplex::voidComplex(vertices);
    if (!j["facets"].is_array())
        throw ParseError("facets must be an array or null", 0, 0);
    if (j["facets"].empty())
        return SimplicialComplex::irrelevant(vertices);
    std::vector<VertexSet> facets;
    for (const Json& row : j["facets"]) {
        if (!row.is_array())
            throw ParseError("each facet must be an array of vertex indices", 0, 0);
        VertexSet f = 0;
        for (const Json& entry : row) {
            if (!entry.is_number_integer())
                throw ParseError("vertex indices must be integers", 0, 0);
            const int v = entry.get<int>();
            if (v < 1 || v > vertices)
                throw ParseError("vertex index " + std::to_string(v) + " outside [1, "
                                     + std::to_string(vertices) + "]",
                                 0, 0);
            f |= VertexSet(1) << (v - 1);
        }
        facets.push_back(f);
    }
    return SimplicialComplex::fromFacets(vertices, std::move(facets));
}

inline SimplicialComplex complexFromText(const std::string& text)
{
    const detail::Tokenized tok = detail::tokenize(text);
    const auto [vertices, headerLine] = detail::parseHeader(tok, "vertices");
    std::vector<VertexSet> facets;
    for (std::size_t l = headerLine + 1; l < tok.tokens.size(); ++l) {
        if (tok.tokens[l].empty())
            continue;
        VertexSet f = 0;
        for (std::size_t i = 0; i < tok.tokens[l].size(); ++i) {
            const int v = detail::parseInt(tok.tokens[l][i], static_cast<int>(l) + 1,
                                           tok.columns[l][i]);
            if (v < 1 || v > vertices)
                throw ParseError("vertex index " + std::to_string(v) + " outside [1, "
                                     + std::to_string(vertices) + "]",
                                 static_cast<int>(l) + 1, tok.columns[l][i]);
            f |= VertexSet(1) << (v - 1);
        }
        facets.push_back(f);
    }
    if (facets.empty())
        return SimplicialComplex::voidComplex(vertices);
    return SimplicialComplex::fromFacets(vertices, std::move(facets));
}

inline SimplicialComplex parseComplex(const std::string& content)
{
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '{')
            return complexFromJson(detail::parseJsonOrThrow(content));
        break;
    }
    return complexFromText(content);
}

inline std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline Json idealToJson(const MonomialIdeal& ideal)
{
    Json gens = Json::array();
    for (const Exponents& g : ideal.generators()) {
        Json row = Json::array();
        for (Eigen::Index i = 0; i < g.size(); ++i)
            row.push_back(g[i]);
        gens.push_back(std::move(row));
    }
    return Json{{"vars", ideal.vars()}, {"gens", std::move(gens)}};
}

inline std::string idealToText(const MonomialIdeal& ideal)
{
    std::ostringstream out;
    out << "vars: " << ideal.vars() << '\n';
    for (const Exponents& g : ideal.generators()) {
        for (Eigen::Index i = 0; i < g.size(); ++i)
            out << (i ? " " : "") << g[i];
        out << '\n';
    }
    return out.str();
}

inline Json vertexSetToJson(VertexSet f, int vertices)
{
    Json row = Json::array();
    for (int v = 0; v < vertices; ++v)
        if (f & (VertexSet(1) << v))
            row.push_back(v + 1);
    return row;
}

inline Json complexToJson(const SimplicialComplex& cplx)
{
    if (cplx.isVoid())
        return Json{{"vertices", cplx.vertices()}, {"facets", nullptr}};
    if (cplx.isIrrelevant())
        return Json{{"vertices", cplx.vertices()}, {"facets", Json::array()}};
    Json facets = Json::array();
    for (VertexSet f : cplx.facets())
        facets.push_back(vertexSetToJson(f, cplx.vertices()));
    return Json{{"vertices", cplx.vertices()}, {"facets", std::move(facets)}};
}

inline std::string complexToText(const SimplicialComplex& cplx)
{
    std::ostringstream out;
    out << "vertices: " << cplx.vertices() << '\n';
    for (VertexSet f : cplx.facets()) {
        bool first = true;
        for (int v = 0; v < cplx.vertices(); ++v)
            if (f & (VertexSet(1) << v)) {
                out << (first ? "" : " ") << (v + 1);
                first = false;
            }
        out << '\n';
    }
    return out.str();
}

inline Json aValueToJson(const AValue& value)
{
    if (!value)
        return nullptr;
    return *value;
}

inline Json tableToJson(const CohomologyTable& table)
{
    Json a = Json::array();
    for (const AValue& value : table.a)
        a.push_back(aValueToJson(value));
    Json support = Json::array();
    for (const TableEntry& entry : table.entries) {
        Json alpha = Json::array();
        for (Eigen::Index i = 0; i < entry.alpha.size(); ++i)
            alpha.push_back(entry.alpha[i]);
        support.push_back(Json{{"i", entry.index}, {"alpha", std::move(alpha)},
                               {"dim", entry.value}});
    }
    return Json{{"dim", table.dim}, {"a", std::move(a)}, {"reg", table.reg},
                {"support", std::move(support)}};
}

}  // namespace aiinv

#endif  // AIINV_IO_HPP
