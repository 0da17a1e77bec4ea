#include "seqmat/rational.hpp"

namespace seqmat {

std::string rat_to_string(const Rat& v) {
    return v.get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error(Errc::ParseError, "empty rational literal");
    Rat v;
    if (v.set_str(s, 10) != 0)
        throw Error(Errc::ParseError, "bad rational literal: '" + s + "'");
    if (v.get_den() == 0)
        throw Error(Errc::ParseError, "zero denominator in rational literal: '" + s + "'");
    v.canonicalize();
    return v;
}

double to_double(const Rat& v) {
    return v.get_d();
}

bool is_integer(const Rat& v) {
    return v.get_den() == 1;
}

}  // namespace seqmat
