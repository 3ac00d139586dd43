#include "qh/rational.hpp"

#include "qh/errors.hpp"

#include <cctype>

namespace qh {

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");
    auto check = [&](const std::string& part) {
        if (part.empty()) throw ParseError("malformed rational '" + text + "'");
        std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (start == part.size()) throw ParseError("malformed rational '" + text + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("malformed rational '" + text + "'");
    };
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        check(s);
        return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check(num);
    check(den);
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow(const Rational& r, long k) {
    if (k == 0) return Rational(1);
    if (r == 0 && k < 0) throw ZeroElement("0 has no negative powers");
    Rational base = k > 0 ? r : Rational(1) / r;
    unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    Rational acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace qh
