#include "superweight/weights.hpp"

#include "superweight/errors.hpp"

#include <sstream>

namespace sw {

Weight Weight::shifted(const RootVector& alpha, long k) const {
    if (alpha.size() != coords.size())
        raise("DimensionMismatch", "weight shift dimension mismatch");
    Weight w = *this;
    for (size_t i = 0; i < coords.size(); ++i)
        if (alpha[i] != 0) w.coords[i] += Cyclotomic(Rational(alpha[i] * k));
    return w;
}

bool Weight::operator<(const Weight& o) const {
    if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != o.coords[i]) return coords[i] < o.coords[i];
    }
    long d = degree.value_or(0), od = o.degree.value_or(0);
    if (d != od) return d < od;
    Cyclotomic l = level.value_or(Cyclotomic()), ol = o.level.value_or(Cyclotomic());
    if (l != ol) return l < ol;
    return false;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i].str();
    }
    os << ")";
    if (degree.has_value()) os << "+" << *degree << "d";
    return os.str();
}

} // namespace sw
