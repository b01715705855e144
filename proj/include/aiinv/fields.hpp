/**
 * Coefficient field selection for homology: exact rationals (default) or a
 * prime field F_p.  The field is a surfaced parameter everywhere because
 * Takayama-type dimensions may depend on the characteristic.
 */

#ifndef AIINV_FIELDS_HPP
#define AIINV_FIELDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aiinv {

inline bool isPrime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

struct FieldChoice {
    enum class Kind { rationals, primeField };

    Kind kind = Kind::rationals;
    std::int64_t p = 0;

    static FieldChoice rationals() { return FieldChoice{}; }

    static FieldChoice primeField(std::int64_t p)
    {
        if (p < 2 || p >= (std::int64_t(1) << 31) || !isPrime(p))
            throw std::invalid_argument("field order must be a prime below 2^31, got "
                                        + std::to_string(p));
        return FieldChoice{Kind::primeField, p};
    }

    bool isRationals() const { return kind == Kind::rationals; }

    std::string name() const
    {
        return isRationals() ? "q" : ("fp:" + std::to_string(p));
    }

    bool operator==(const FieldChoice& other) const
    {
        return kind == other.kind && p == other.p;
    }
};

/** Parse "q" or "fp:<p>"; throws std::invalid_argument on anything else. */
inline FieldChoice parseFieldChoice(const std::string& text)
{
    if (text == "q" || text == "Q")
        return FieldChoice::rationals();
    if (text.rfind("fp:", 0) == 0) {
        std::size_t pos = 0;
        std::int64_t p = 0;
        try {
            p = std::stoll(text.substr(3), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid field spec: " + text);
        }
        if (pos != text.size() - 3)
            throw std::invalid_argument("invalid field spec: " + text);
        return FieldChoice::primeField(p);
    }
    throw std::invalid_argument("invalid field spec (expected q or fp:<p>): " + text);
}

}  // namespace aiinv

#endif  // AIINV_FIELDS_HPP
