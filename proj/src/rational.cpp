#include "prodembed/rational.hpp"

#include "prodembed/errors.hpp"

namespace prodembed {

std::string rational_to_text(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_text(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    // mpq_class accepts "p/q" and "p" but also tolerates whitespace and other
    // bases; validate the character set ourselves so errors are crisp.
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '/') {
            ++slashes;
            continue;
        }
        if (c == '-' || c == '+') {
            // sign allowed at the start of numerator or denominator
            bool at_num_start = (i == 0);
            bool at_den_start = (i > 0 && text[i - 1] == '/');
            if (!at_num_start && !at_den_start)
                throw ParseError("malformed rational '" + text + "'");
            continue;
        }
        if (c < '0' || c > '9')
            throw ParseError("malformed rational '" + text + "'");
    }
    if (slashes > 1 || text.front() == '/' || text.back() == '/')
        throw ParseError("malformed rational '" + text + "'");

    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("malformed rational '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string point_to_text(const RationalPoint& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += rational_to_text(p[i]);
    }
    return out;
}

} // namespace prodembed
