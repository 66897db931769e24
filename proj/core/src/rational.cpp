#include "hyperarr/rational.hpp"

#include <cctype>

#include "hyperarr/errors.hpp"

namespace hyperarr {

Rational rational_from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("invalid character in rational literal '" + s + "'");
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("unparsable rational literal '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

}  // namespace hyperarr
