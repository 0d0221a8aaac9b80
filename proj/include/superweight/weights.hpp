#pragma once

#include "superweight/exact.hpp"
#include "superweight/root_data.hpp"

#include <map>
#include <optional>
#include <vector>

namespace sw {

// Weight = functional on the Cartan, coordinates in the eps/delta-dual basis.
// Loop-module weights additionally carry a level (value on c) and a degree
// (value on d); both stay absent for non-affine modules.
struct Weight {
    std::vector<Cyclotomic> coords;
    std::optional<Cyclotomic> level;
    std::optional<long> degree;

    Weight() = default;
    explicit Weight(std::vector<Cyclotomic> c) : coords(std::move(c)) {}

    static Weight from_rationals(const std::vector<Rational>& rs) {
        std::vector<Cyclotomic> c;
        for (const auto& r : rs) c.emplace_back(r);
        return Weight(std::move(c));
    }

    Weight shifted(const RootVector& alpha, long k = 1) const;

    Cyclotomic eval(const std::vector<Cyclotomic>& h_coords) const {
        return weight_eval(coords, h_coords);
    }

    bool operator==(const Weight& o) const {
        return coords == o.coords && level == o.level && degree == o.degree;
    }
    bool operator<(const Weight& o) const;

    std::string str() const;
};

// Symbolic support: a finite base Theta plus monoid directions.  kind=finite
// means no directions; kind=coset means base + Z_+ span of the directions
// (a lattice whenever the directions include their negatives).
struct SupportSet {
    enum class Kind { finite, coset };
    Kind kind = Kind::finite;
    std::vector<Weight> base;          // Theta
    std::vector<RootVector> directions; // monoid generators

    bool empty() const { return base.empty(); }
};

// Weight-indexed multiplicities (a truncated formal character).
struct CharacterWindow {
    std::map<Weight, long> mult;

    long at(const Weight& w) const {
        auto it = mult.find(w);
        return it == mult.end() ? 0 : it->second;
    }
    long total_mass() const {
        long s = 0;
        for (const auto& [w, m] : mult) s += m;
        return s;
    }
    bool operator==(const CharacterWindow& o) const { return mult == o.mult; }
};

} // namespace sw
