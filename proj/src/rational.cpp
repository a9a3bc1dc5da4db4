#include "chowcfg/rational.hpp"

#include <cctype>

namespace chowcfg {

Rational parse_rational(const std::string& s) {
    auto digits = [](const std::string& t, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    size_t slash = s.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(s, start, s.size());
    } else {
        ok = digits(s, start, slash) && digits(s, slash + 1, s.size());
    }
    if (!ok) throw std::invalid_argument("malformed rational literal: \"" + s + "\"");

    Rational r(s);
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("rational with zero denominator: \"" + s + "\"");
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace chowcfg
