// Torsion structures (a, b) with a | b, standing for Z/aZ + Z/abZ-shaped
// groups in normal form Z/aZ + Z/bZ.  (1, 1) is trivial.  The partial
// order is subgroup containment, which for these normal forms is
// componentwise divisibility.

#ifndef GTYPE_TORSION_HPP
#define GTYPE_TORSION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace gtype {

struct TorsionStructure {
    uint64_t a = 1;
    uint64_t b = 1;

    TorsionStructure() = default;
    TorsionStructure(uint64_t a_, uint64_t b_) : a(a_), b(b_) {
        if (a == 0 || b == 0 || b % a != 0)
            throw std::invalid_argument("TorsionStructure: need a | b, both positive");
    }

    bool trivial() const { return a == 1 && b == 1; }
    uint64_t size() const { return a * b; }

    friend bool operator==(const TorsionStructure& x, const TorsionStructure& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const TorsionStructure& x, const TorsionStructure& y) { return !(x == y); }
    friend bool operator<(const TorsionStructure& x, const TorsionStructure& y) {
        return x.size() != y.size() ? x.size() < y.size() : x.a < y.a;
    }

    std::string str() const {
        if (trivial()) return "trivial";
        if (a == 1) return "Z/" + std::to_string(b);
        return "Z/" + std::to_string(a) + "+Z/" + std::to_string(b);
    }

    nlohmann::ordered_json to_json() const { return nlohmann::ordered_json::array({a, b}); }
};

// T1 <= T2 iff Z/a2 + Z/b2 contains a subgroup isomorphic to Z/a1 + Z/b1
inline bool poset_leq(const TorsionStructure& t1, const TorsionStructure& t2) {
    return t2.a % t1.a == 0 && t2.b % t1.b == 0;
}

} // namespace gtype

#endif
