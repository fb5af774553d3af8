#include "gtype/smallgroups.hpp"

#include <functional>

#include <numeric>
#include <stdexcept>

namespace gtype {

namespace {

FiniteGroup perm_group(size_t degree, std::vector<Elem> gens) {
    return closure(std::make_shared<PermCarrier>(degree), std::move(gens));
}

// build a TableCarrier group from a normal-form multiplication rule on
// indices 0..n-1
FiniteGroup table_group(size_t n, const std::function<size_t(size_t, size_t)>& mul,
                        std::vector<size_t> gens) {
    std::vector<int32_t> table(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            table[i * n + j] = static_cast<int32_t>(mul(i, j));
    auto carrier = std::make_shared<TableCarrier>(n, std::move(table));
    std::vector<Elem> gen_elems;
    for (size_t g : gens) gen_elems.push_back(Elem{static_cast<int32_t>(g)});
    return closure(carrier, std::move(gen_elems));
}

} // namespace

FiniteGroup trivial_group() {
    return perm_group(1, {});
}

FiniteGroup cyclic_group(size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic_group: n = 0");
    if (n == 1) return trivial_group();
    Elem cycle(n);
    for (size_t i = 0; i < n; ++i) cycle[i] = static_cast<int32_t>((i + 1) % n);
    return perm_group(n, {cycle});
}

FiniteGroup dihedral_group(size_t n) {
    if (n < 3) throw std::invalid_argument("dihedral_group: n < 3");
    Elem rot(n), flip(n);
    for (size_t i = 0; i < n; ++i) {
        rot[i] = static_cast<int32_t>((i + 1) % n);
        flip[i] = static_cast<int32_t>((n - i) % n);
    }
    return perm_group(n, {rot, flip});
}

FiniteGroup symmetric_group(size_t n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric_group: supported for n <= 5");
    if (n == 1) return trivial_group();
    Elem cycle(n), swap(n);
    for (size_t i = 0; i < n; ++i) cycle[i] = static_cast<int32_t>((i + 1) % n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    return perm_group(n, {cycle, swap});
}

FiniteGroup alternating_group(size_t n) {
    if (n < 3 || n > 5) throw std::invalid_argument("alternating_group: supported for 3 <= n <= 5");
    Elem three(n);
    std::iota(three.begin(), three.end(), 0);
    three[0] = 1; three[1] = 2; three[2] = 0;
    if (n == 3) return perm_group(3, {three});
    if (n == 4) {
        Elem vv(4);
        vv[0] = 1; vv[1] = 0; vv[2] = 3; vv[3] = 2; // (01)(23)
        return perm_group(4, {three, vv});
    }
    Elem five(5);
    for (size_t i = 0; i < 5; ++i) five[i] = static_cast<int32_t>((i + 1) % 5);
    return perm_group(5, {three, five});
}

FiniteGroup quaternion_group() {
    auto carrier = std::make_shared<MatCarrier>(3);
    Elem i{0, 2, 1, 0};  // [[0,-1],[1,0]] mod 3
    Elem j{1, 1, 1, 2};  // [[1,1],[1,-1]] mod 3
    return closure(carrier, {i, j});
}

FiniteGroup dicyclic_group(size_t n) {
    if (n < 2) throw std::invalid_argument("dicyclic_group: n < 2");
    size_t N = 4 * n;
    // index = i + 2n*j for a^i b^j, 0 <= i < 2n, j in {0,1}
    auto mul = [n](size_t x, size_t y) {
        size_t i = x % (2 * n), j = x / (2 * n);
        size_t k = y % (2 * n), l = y / (2 * n);
        size_t ii, jj;
        if (j == 0) {
            ii = (i + k) % (2 * n);
            jj = l;
        } else {
            // b a^k = a^{-k} b
            ii = (i + 2 * n - k) % (2 * n);
            jj = 1 + l;
        }
        if (jj == 2) { ii = (ii + n) % (2 * n); jj = 0; } // b^2 = a^n
        return ii + 2 * n * jj;
    };
    return table_group(N, mul, {1, 2 * n});
}

FiniteGroup affine_group(int64_t m, int64_t u) {
    if (m < 2) throw std::invalid_argument("affine_group: m < 2");
    Elem shift(m), mult(m);
    for (int64_t x = 0; x < m; ++x) {
        shift[x] = static_cast<int32_t>((x + 1) % m);
        mult[x] = static_cast<int32_t>((u * x) % m);
    }
    return perm_group(m, {shift, mult});
}

FiniteGroup sl2_f3() {
    auto carrier = std::make_shared<MatCarrier>(3);
    return closure(carrier, {Elem{1, 1, 0, 1}, Elem{1, 0, 1, 1}});
}

namespace {

FiniteGroup c4_semidirect_c4() {
    // a^4 = b^4 = 1, b a b^-1 = a^-1; index = i + 4j
    auto mul = [](size_t x, size_t y) {
        size_t i = x % 4, j = x / 4, k = y % 4, l = y / 4;
        size_t ii = (j % 2 == 0) ? (i + k) % 4 : (i + 4 - k) % 4;
        return ii + 4 * ((j + l) % 4);
    };
    return table_group(16, mul, {1, 4});
}

FiniteGroup v4_semidirect_c4() {
    // (C2 x C2) x| C4 with the order-4 generator swapping coordinates;
    // index = v + 2w + 4j
    auto mul = [](size_t x, size_t y) {
        size_t v = x & 1, w = (x >> 1) & 1, j = x >> 2;
        size_t v2 = y & 1, w2 = (y >> 1) & 1, l = y >> 2;
        if (j % 2 == 1) std::swap(v2, w2);
        return ((v ^ v2) + 2 * (w ^ w2)) + 4 * ((j + l) % 4);
    };
    return table_group(16, mul, {1, 4});
}

FiniteGroup pauli_group_16() {
    // central product D4 . C4 as 2x2 matrices over F5 (i = 2)
    auto carrier = std::make_shared<MatCarrier>(5);
    Elem X{0, 1, 1, 0};
    Elem Z{1, 0, 0, 4};
    Elem iI{2, 0, 0, 2};
    return closure(carrier, {X, Z, iI});
}

} // namespace

std::vector<NamedGroup> groups_up_to_16() {
    std::vector<NamedGroup> out;
    auto add = [&](const std::string& name, FiniteGroup g) {
        out.push_back({name, std::move(g)});
    };
    auto C = [](size_t n) { return cyclic_group(n); };

    add("C1", trivial_group());
    add("C2", C(2));
    add("C3", C(3));
    add("C4", C(4));
    add("C2xC2", direct_product(C(2), C(2)));
    add("C5", C(5));
    add("C6", C(6));
    add("S3", symmetric_group(3));
    add("C7", C(7));
    add("C8", C(8));
    add("C4xC2", direct_product(C(4), C(2)));
    add("C2xC2xC2", direct_product(direct_product(C(2), C(2)), C(2)));
    add("D4", dihedral_group(4));
    add("Q8", quaternion_group());
    add("C9", C(9));
    add("C3xC3", direct_product(C(3), C(3)));
    add("C10", C(10));
    add("D5", dihedral_group(5));
    add("C11", C(11));
    add("C12", C(12));
    add("C6xC2", direct_product(C(6), C(2)));
    add("D6", dihedral_group(6));
    add("A4", alternating_group(4));
    add("Dic3", dicyclic_group(3));
    add("C13", C(13));
    add("C14", C(14));
    add("D7", dihedral_group(7));
    add("C15", C(15));
    // the fourteen groups of order 16
    add("C16", C(16));
    add("C4xC4", direct_product(C(4), C(4)));
    add("C8xC2", direct_product(C(8), C(2)));
    add("C4xC2xC2", direct_product(direct_product(C(4), C(2)), C(2)));
    add("C2^4", direct_product(direct_product(C(2), C(2)), direct_product(C(2), C(2))));
    add("D8", dihedral_group(8));
    add("SD16", affine_group(8, 3));
    add("M16", affine_group(8, 5));
    add("Q16", dicyclic_group(4));
    add("C4:C4", c4_semidirect_c4());
    add("V4:C4", v4_semidirect_c4());
    add("D4xC2", direct_product(dihedral_group(4), C(2)));
    add("Q8xC2", direct_product(quaternion_group(), C(2)));
    add("D4.C4", pauli_group_16());
    return out;
}

std::vector<NamedGroup> small_group_corpus() {
    std::vector<NamedGroup> out = groups_up_to_16();
    out.push_back({"S4", symmetric_group(4)});
    out.push_back({"SL2(F3)", sl2_f3()});
    // direct products up to order 24 built from a few seeds
    std::vector<NamedGroup> seeds;
    for (const auto& ng : out) {
        if (ng.group.order() >= 2 && ng.group.order() <= 12) seeds.push_back(ng);
    }
    std::vector<NamedGroup> products;
    for (size_t i = 0; i < seeds.size(); ++i) {
        for (size_t j = i; j < seeds.size(); ++j) {
            size_t n = seeds[i].group.order() * seeds[j].group.order();
            if (n > 24 || n <= 16) continue;
            products.push_back({seeds[i].name + "x" + seeds[j].name,
                                direct_product(seeds[i].group, seeds[j].group)});
        }
    }
    // keep one representative per isomorphism class among the products
    for (auto& p : products) {
        bool dup = false;
        for (const auto& existing : out) {
            if (existing.group.order() != p.group.order()) continue;
            if (isomorphic(existing.group, p.group)) { dup = true; break; }
        }
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

} // namespace gtype
