#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace braidvar {

// Exact rational scalar. mpq_class keeps the canonical form we rely on
// everywhere: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p", "-p", "p/q" with optional whitespace. Decimals are rejected:
// the exactness contract would silently break on "1.5".
inline Rational parse_rational(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t");
    if (begin == std::string::npos) throw parse_error("empty rational", 0);
    std::size_t end = text.find_last_not_of(" \t") + 1;
    std::string body = text.substr(begin, end - begin);
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '.') throw parse_error("decimal literal rejected, use p/q", begin + i);
        bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && i == 0);
        if (!ok) throw parse_error(std::string("unexpected character '") + c + "' in rational", begin + i);
    }
    std::size_t slash = body.find('/');
    if (slash != std::string::npos && body.find('/', slash + 1) != std::string::npos)
        throw parse_error("more than one '/' in rational", begin);
    if (slash == body.size() - 1 || slash == 0)
        throw parse_error("malformed fraction", begin + (slash == 0 ? 0 : slash));
    Rational r;
    if (r.set_str(body, 10) != 0) throw parse_error("malformed rational '" + body + "'", begin);
    if (is_zero(Rational(r.get_den()))) throw error("zero denominator in rational literal");
    r.canonicalize();
    return r;
}

}  // namespace braidvar
