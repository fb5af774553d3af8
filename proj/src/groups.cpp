#include "gtype/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gtype {

namespace {

int64_t norm_mod(int64_t v, int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

int64_t inv_mod(int64_t a, int64_t m) {
    int64_t t = 0, newt = 1, r = m, newr = norm_mod(a, m);
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    return norm_mod(t, m);
}

} // namespace

nlohmann::ordered_json Carrier::describe() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    return j;
}

// ---- permutation carrier ----

Elem PermCarrier::compose(const Elem& a, const Elem& b) const {
    Elem r(degree_);
    for (size_t i = 0; i < degree_; ++i) r[i] = a[b[i]];
    return r;
}

Elem PermCarrier::inverse(const Elem& a) const {
    Elem r(degree_);
    for (size_t i = 0; i < degree_; ++i) r[a[i]] = static_cast<int32_t>(i);
    return r;
}

Elem PermCarrier::identity() const {
    Elem r(degree_);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

nlohmann::ordered_json PermCarrier::describe() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    j["degree"] = degree_;
    return j;
}

// ---- matrix carrier ----

Elem MatCarrier::compose(const Elem& a, const Elem& b) const {
    int64_t n = modulus_;
    Elem r(4);
    r[0] = static_cast<int32_t>(norm_mod(static_cast<int64_t>(a[0]) * b[0] + static_cast<int64_t>(a[1]) * b[2], n));
    r[1] = static_cast<int32_t>(norm_mod(static_cast<int64_t>(a[0]) * b[1] + static_cast<int64_t>(a[1]) * b[3], n));
    r[2] = static_cast<int32_t>(norm_mod(static_cast<int64_t>(a[2]) * b[0] + static_cast<int64_t>(a[3]) * b[2], n));
    r[3] = static_cast<int32_t>(norm_mod(static_cast<int64_t>(a[2]) * b[1] + static_cast<int64_t>(a[3]) * b[3], n));
    return r;
}

Elem MatCarrier::inverse(const Elem& a) const {
    int64_t n = modulus_;
    int64_t det = norm_mod(static_cast<int64_t>(a[0]) * a[3] - static_cast<int64_t>(a[1]) * a[2], n);
    int64_t di = inv_mod(det, n);
    Elem r(4);
    r[0] = static_cast<int32_t>(norm_mod(a[3] * di, n));
    r[1] = static_cast<int32_t>(norm_mod(-a[1] * di, n));
    r[2] = static_cast<int32_t>(norm_mod(-a[2] * di, n));
    r[3] = static_cast<int32_t>(norm_mod(a[0] * di, n));
    return r;
}

Elem MatCarrier::identity() const { return Elem{1, 0, 0, 1}; }

nlohmann::ordered_json MatCarrier::describe() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    j["modulus"] = modulus_;
    return j;
}

// ---- units carrier ----

Elem UnitsCarrier::compose(const Elem& a, const Elem& b) const {
    return Elem{static_cast<int32_t>(norm_mod(static_cast<int64_t>(a[0]) * b[0], modulus_))};
}

Elem UnitsCarrier::inverse(const Elem& a) const {
    return Elem{static_cast<int32_t>(inv_mod(a[0], modulus_))};
}

Elem UnitsCarrier::identity() const { return Elem{1}; }

nlohmann::ordered_json UnitsCarrier::describe() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    j["modulus"] = modulus_;
    return j;
}

// ---- affine carrier ----

Elem AffineCarrier::compose(const Elem& a, const Elem& b) const {
    size_t w = dim_ + 1;
    Elem r(w * w, 0);
    for (size_t i = 0; i < w; ++i)
        for (size_t k = 0; k < w; ++k) {
            int64_t aik = a[i * w + k];
            if (!aik) continue;
            for (size_t j = 0; j < w; ++j)
                r[i * w + j] = static_cast<int32_t>(norm_mod(r[i * w + j] + aik * b[k * w + j], modulus_));
        }
    return r;
}

Elem AffineCarrier::inverse(const Elem& a) const {
    // gaussian elimination over Z/qZ, q prime
    size_t w = dim_ + 1;
    std::vector<int64_t> m(w * 2 * w, 0);
    for (size_t i = 0; i < w; ++i) {
        for (size_t j = 0; j < w; ++j) m[i * 2 * w + j] = a[i * w + j];
        m[i * 2 * w + w + i] = 1;
    }
    for (size_t col = 0; col < w; ++col) {
        size_t piv = col;
        while (piv < w && m[piv * 2 * w + col] == 0) ++piv;
        if (piv == w) throw std::domain_error("AffineCarrier: singular element");
        if (piv != col)
            for (size_t j = 0; j < 2 * w; ++j) std::swap(m[piv * 2 * w + j], m[col * 2 * w + j]);
        int64_t pi = inv_mod(m[col * 2 * w + col], modulus_);
        for (size_t j = 0; j < 2 * w; ++j) m[col * 2 * w + j] = norm_mod(m[col * 2 * w + j] * pi, modulus_);
        for (size_t i = 0; i < w; ++i) {
            if (i == col) continue;
            int64_t f = m[i * 2 * w + col];
            if (!f) continue;
            for (size_t j = 0; j < 2 * w; ++j)
                m[i * 2 * w + j] = norm_mod(m[i * 2 * w + j] - f * m[col * 2 * w + j], modulus_);
        }
    }
    Elem r(w * w);
    for (size_t i = 0; i < w; ++i)
        for (size_t j = 0; j < w; ++j) r[i * w + j] = static_cast<int32_t>(m[i * 2 * w + w + j]);
    return r;
}

Elem AffineCarrier::identity() const {
    size_t w = dim_ + 1;
    Elem r(w * w, 0);
    for (size_t i = 0; i < w; ++i) r[i * w + i] = 1;
    return r;
}

nlohmann::ordered_json AffineCarrier::describe() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    j["modulus"] = modulus_;
    j["dim"] = dim_;
    return j;
}

// ---- table carrier ----

TableCarrier::TableCarrier(size_t n, std::vector<int32_t> table) : n_(n), table_(std::move(table)) {
    if (table_.size() != n * n) throw std::invalid_argument("TableCarrier: bad table size");
    // locate the identity
    id_ = -1;
    for (size_t e = 0; e < n_; ++e) {
        bool ok = true;
        for (size_t i = 0; i < n_ && ok; ++i)
            ok = table_[e * n_ + i] == static_cast<int32_t>(i) && table_[i * n_ + e] == static_cast<int32_t>(i);
        if (ok) { id_ = static_cast<int32_t>(e); break; }
    }
    if (id_ < 0) throw std::invalid_argument("TableCarrier: no identity");
    inv_.assign(n_, -1);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            if (table_[i * n_ + j] == id_) inv_[i] = static_cast<int32_t>(j);
    for (int32_t v : inv_)
        if (v < 0) throw std::invalid_argument("TableCarrier: missing inverse");
}

Elem TableCarrier::compose(const Elem& a, const Elem& b) const {
    return Elem{table_[static_cast<size_t>(a[0]) * n_ + static_cast<size_t>(b[0])]};
}

Elem TableCarrier::inverse(const Elem& a) const { return Elem{inv_[a[0]]}; }

Elem TableCarrier::identity() const { return Elem{id_}; }

nlohmann::ordered_json TableCarrier::describe() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    j["size"] = n_;
    return j;
}

// ---- product carrier ----

ProductCarrier::ProductCarrier(std::vector<CarrierPtr> parts) : parts_(std::move(parts)) {
    size_t off = 0;
    for (const auto& p : parts_) {
        offsets_.push_back(off);
        off += p->width();
    }
    total_width_ = off;
}

Elem ProductCarrier::compose(const Elem& a, const Elem& b) const {
    Elem r(total_width_);
    for (size_t i = 0; i < parts_.size(); ++i) {
        size_t w = parts_[i]->width(), off = offsets_[i];
        Elem pa(a.begin() + off, a.begin() + off + w);
        Elem pb(b.begin() + off, b.begin() + off + w);
        Elem pc = parts_[i]->compose(pa, pb);
        std::copy(pc.begin(), pc.end(), r.begin() + off);
    }
    return r;
}

Elem ProductCarrier::inverse(const Elem& a) const {
    Elem r(total_width_);
    for (size_t i = 0; i < parts_.size(); ++i) {
        size_t w = parts_[i]->width(), off = offsets_[i];
        Elem pa(a.begin() + off, a.begin() + off + w);
        Elem pi = parts_[i]->inverse(pa);
        std::copy(pi.begin(), pi.end(), r.begin() + off);
    }
    return r;
}

Elem ProductCarrier::identity() const {
    Elem r;
    for (const auto& p : parts_) {
        Elem pi = p->identity();
        r.insert(r.end(), pi.begin(), pi.end());
    }
    return r;
}

Elem ProductCarrier::project(const Elem& a, size_t i) const {
    size_t w = parts_[i]->width(), off = offsets_[i];
    return Elem(a.begin() + off, a.begin() + off + w);
}

Elem ProductCarrier::embed(const std::vector<Elem>& components) const {
    Elem r;
    for (const Elem& c : components) r.insert(r.end(), c.begin(), c.end());
    return r;
}

nlohmann::ordered_json ProductCarrier::describe() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : parts_) arr.push_back(p->describe());
    j["parts"] = arr;
    return j;
}

// ---- group construction ----

bool FiniteGroup::contains(const Elem& g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

nlohmann::ordered_json FiniteGroup::to_json() const {
    nlohmann::ordered_json j;
    j["carrier"] = carrier->describe();
    j["order"] = elements.size();
    auto gens = nlohmann::ordered_json::array();
    for (const Elem& g : generators) gens.push_back(g);
    j["generators"] = gens;
    return j;
}

FiniteGroup closure(const CarrierPtr& carrier, std::vector<Elem> generators, size_t cap) {
    std::set<Elem> seen;
    std::vector<Elem> frontier;
    Elem id = carrier->identity();
    seen.insert(id);
    frontier.push_back(id);

    std::vector<Elem> gens = generators;
    // include inverses so the BFS closes under the full group operation
    for (const Elem& g : generators) gens.push_back(carrier->inverse(g));

    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const Elem& e : frontier) {
            for (const Elem& g : gens) {
                Elem c = carrier->compose(e, g);
                if (seen.insert(c).second) {
                    if (seen.size() > cap) throw GroupSizeError("closure: size cap exceeded");
                    next.push_back(std::move(c));
                }
            }
        }
        frontier = std::move(next);
    }

    FiniteGroup g;
    g.carrier = carrier;
    g.elements.assign(seen.begin(), seen.end());
    g.generators = std::move(generators);
    return g;
}

FiniteGroup subgroup_from_elements(const FiniteGroup& g, std::vector<Elem> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    FiniteGroup s;
    s.carrier = g.carrier;
    s.generators = elems;
    s.elements = std::move(elems);
    return s;
}

size_t element_order(const Carrier& c, const Elem& g) {
    Elem id = c.identity();
    Elem acc = g;
    size_t n = 1;
    while (acc != id) {
        acc = c.compose(acc, g);
        ++n;
    }
    return n;
}

size_t exponent(const FiniteGroup& g) {
    size_t l = 1;
    for (const Elem& e : g.elements)
        l = std::lcm(l, element_order(*g.carrier, e));
    return l;
}

bool is_abelian(const FiniteGroup& g) {
    for (const Elem& a : g.generators)
        for (const Elem& b : g.generators)
            if (g.carrier->compose(a, b) != g.carrier->compose(b, a)) return false;
    return true;
}

std::vector<size_t> order_profile(const FiniteGroup& g) {
    std::vector<size_t> out;
    out.reserve(g.order());
    for (const Elem& e : g.elements) out.push_back(element_order(*g.carrier, e));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<size_t> conjugacy_class_sizes(const FiniteGroup& g) {
    std::set<Elem> remaining(g.elements.begin(), g.elements.end());
    std::vector<size_t> sizes;
    // conjugating generators suffice to sweep each class
    std::vector<Elem> gens = g.generators;
    for (const Elem& e : g.generators) gens.push_back(g.carrier->inverse(e));
    while (!remaining.empty()) {
        Elem seed = *remaining.begin();
        std::set<Elem> orbit{seed};
        std::vector<Elem> frontier{seed};
        while (!frontier.empty()) {
            std::vector<Elem> next;
            for (const Elem& x : frontier)
                for (const Elem& h : gens) {
                    Elem c = g.carrier->compose(g.carrier->compose(h, x), g.carrier->inverse(h));
                    if (orbit.insert(c).second) next.push_back(std::move(c));
                }
            frontier = std::move(next);
        }
        sizes.push_back(orbit.size());
        for (const Elem& x : orbit) remaining.erase(x);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool is_subgroup(const FiniteGroup& g, const FiniteGroup& h) {
    for (const Elem& e : h.elements)
        if (!g.contains(e)) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, const FiniteGroup& n) {
    for (const Elem& t : g.generators)
        for (const Elem& x : n.elements) {
            Elem c = g.carrier->compose(g.carrier->compose(t, x), g.carrier->inverse(t));
            if (!n.contains(c)) return false;
        }
    return true;
}

FiniteGroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& seed) {
    std::vector<Elem> gens = seed;
    FiniteGroup n = closure(g.carrier, gens);
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t gi = 0; gi < gens.size() && !grew; ++gi) {
            for (const Elem& t : g.generators) {
                Elem c = g.carrier->compose(g.carrier->compose(t, gens[gi]), g.carrier->inverse(t));
                if (!n.contains(c)) {
                    gens.push_back(std::move(c));
                    n = closure(g.carrier, gens);
                    grew = true;
                    break;
                }
            }
        }
    }
    // large accumulated generator lists make downstream lambda computations
    // quadratically expensive; hand back a short equivalent set
    if (n.generators.size() > 12)
        n.generators = greedy_generators(n.carrier, n.elements);
    return n;
}

FiniteGroup commutator_subgroup(const FiniteGroup& g) {
    std::vector<Elem> seed;
    for (const Elem& a : g.generators)
        for (const Elem& b : g.generators) {
            Elem c = g.carrier->compose(
                g.carrier->compose(g.carrier->inverse(a), g.carrier->inverse(b)),
                g.carrier->compose(a, b));
            seed.push_back(std::move(c));
        }
    return normal_closure(g, seed);
}

FiniteGroup lambda_subgroup(const FiniteGroup& g, uint64_t p) {
    std::vector<Elem> seed;
    for (const Elem& a : g.generators)
        for (const Elem& b : g.generators)
            seed.push_back(g.carrier->compose(
                g.carrier->compose(g.carrier->inverse(a), g.carrier->inverse(b)),
                g.carrier->compose(a, b)));
    for (const Elem& a : g.generators) {
        Elem acc = g.carrier->identity();
        for (uint64_t i = 0; i < p; ++i) acc = g.carrier->compose(acc, a);
        seed.push_back(std::move(acc));
    }
    return normal_closure(g, seed);
}

FiniteGroup quotient(const FiniteGroup& g, const FiniteGroup& n) {
    if (!is_subgroup(g, n)) throw std::invalid_argument("quotient: N not inside G");
    if (!is_normal(g, n)) throw std::invalid_argument("quotient: N not normal in G");
    size_t q = g.order() / n.order();

    // coset index per element; first-seen (minimal) element is the representative
    std::map<Elem, int32_t> coset_of;
    std::vector<Elem> reps;
    for (const Elem& e : g.elements) {
        if (coset_of.count(e)) continue;
        int32_t idx = static_cast<int32_t>(reps.size());
        reps.push_back(e);
        for (const Elem& x : n.elements) coset_of[g.carrier->compose(e, x)] = idx;
    }
    if (reps.size() != q) throw std::logic_error("quotient: coset count mismatch");

    std::vector<int32_t> table(q * q);
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j)
            table[i * q + j] = coset_of.at(g.carrier->compose(reps[i], reps[j]));

    auto carrier = std::make_shared<TableCarrier>(q, std::move(table));
    std::vector<Elem> elems;
    for (size_t i = 0; i < q; ++i) elems.push_back(Elem{static_cast<int32_t>(i)});
    FiniteGroup out;
    out.carrier = carrier;
    out.elements = std::move(elems);
    for (const Elem& t : g.generators) {
        // generator images: coset of each generator
        out.generators.push_back(Elem{coset_of.at(t)});
    }
    if (out.generators.empty()) out.generators.push_back(carrier->identity());
    return out;
}

std::vector<uint64_t> abelian_invariants(const FiniteGroup& g) {
    FiniteGroup ab = quotient(g, commutator_subgroup(g));
    std::vector<uint64_t> factors;
    FiniteGroup cur = ab;
    while (cur.order() > 1) {
        // split off an element of maximal order
        size_t best = 0;
        Elem best_e = cur.carrier->identity();
        for (const Elem& e : cur.elements) {
            size_t o = element_order(*cur.carrier, e);
            if (o > best) { best = o; best_e = e; }
        }
        factors.push_back(best);
        FiniteGroup cyc = closure(cur.carrier, {best_e});
        cur = quotient(cur, cyc);
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
    if (g.order() == 1) return 0;
    FiniteGroup k = g;
    int cls = 0;
    while (true) {
        // next term [G, K] of the lower central series
        std::vector<Elem> seed;
        for (const Elem& a : g.generators)
            for (const Elem& b : k.generators)
                seed.push_back(g.carrier->compose(
                    g.carrier->compose(g.carrier->inverse(a), g.carrier->inverse(b)),
                    g.carrier->compose(a, b)));
        FiniteGroup next = normal_closure(g, seed);
        ++cls;
        if (next.order() == 1) return cls;
        if (next.order() == k.order()) return std::nullopt; // stabilized above trivial
        k = next;
    }
}

bool is_subdirect_product(const FiniteGroup& h, const std::vector<FiniteGroup>& factors) {
    auto prod = std::dynamic_pointer_cast<const ProductCarrier>(h.carrier);
    if (!prod || prod->parts().size() != factors.size())
        throw std::invalid_argument("is_subdirect_product: carrier is not a matching product");
    for (size_t i = 0; i < factors.size(); ++i) {
        if (prod->parts()[i]->width() != factors[i].carrier->width())
            throw std::invalid_argument("is_subdirect_product: component width mismatch");
        std::set<Elem> proj;
        for (const Elem& e : h.elements) proj.insert(prod->project(e, i));
        if (proj.size() != factors[i].order()) return false;
        for (const Elem& e : factors[i].elements)
            if (!proj.count(e)) return false;
    }
    return true;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    auto carrier = std::make_shared<ProductCarrier>(std::vector<CarrierPtr>{g.carrier, h.carrier});
    FiniteGroup out;
    out.carrier = carrier;
    out.elements.reserve(g.order() * h.order());
    for (const Elem& a : g.elements)
        for (const Elem& b : h.elements)
            out.elements.push_back(carrier->embed({a, b}));
    std::sort(out.elements.begin(), out.elements.end());
    Elem idg = g.carrier->identity(), idh = h.carrier->identity();
    for (const Elem& a : g.generators) out.generators.push_back(carrier->embed({a, idh}));
    for (const Elem& b : h.generators) out.generators.push_back(carrier->embed({idg, b}));
    return out;
}

std::vector<Elem> minimal_generators(const FiniteGroup& g) {
    if (g.order() == 1) return {g.carrier->identity()};
    std::vector<Elem> gens;
    FiniteGroup cur = closure(g.carrier, {});
    while (cur.order() < g.order()) {
        // take the element generating the largest extension
        size_t best_sz = cur.order();
        Elem best;
        for (const Elem& e : g.elements) {
            if (cur.contains(e)) continue;
            std::vector<Elem> trial = gens;
            trial.push_back(e);
            FiniteGroup ext = closure(g.carrier, trial);
            if (ext.order() > best_sz) { best_sz = ext.order(); best = e; }
            if (best_sz == g.order()) break;
        }
        gens.push_back(best);
        cur = closure(g.carrier, gens);
    }
    return gens;
}

std::vector<Elem> greedy_generators(const CarrierPtr& carrier, const std::vector<Elem>& elems) {
    std::vector<Elem> gens;
    FiniteGroup cur = closure(carrier, {});
    for (const Elem& e : elems) {
        if (cur.contains(e)) continue;
        gens.push_back(e);
        cur = closure(carrier, gens);
        if (cur.order() == elems.size()) break;
    }
    return gens;
}

std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& g, size_t max_count) {
    std::set<std::vector<Elem>> found;
    // queue entries carry the generator chain that produced the subgroup,
    // which keeps the extension closures cheap
    std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> queue; // (elements, gens)
    FiniteGroup triv = closure(g.carrier, {});
    found.insert(triv.elements);
    queue.push_back({triv.elements, {}});
    while (!queue.empty()) {
        auto [s, base] = std::move(queue.back());
        queue.pop_back();
        for (const Elem& e : g.elements) {
            if (std::binary_search(s.begin(), s.end(), e)) continue;
            std::vector<Elem> gens = base;
            gens.push_back(e);
            FiniteGroup ext = closure(g.carrier, gens, g.order());
            if (found.insert(ext.elements).second) {
                if (found.size() > max_count) throw GroupSizeError("all_subgroups: cap exceeded");
                queue.push_back({ext.elements, std::move(gens)});
            }
        }
    }
    return std::vector<std::vector<Elem>>(found.begin(), found.end());
}

namespace {

// backtracking isomorphism search on generator images
struct IsoSearch {
    const FiniteGroup& g;
    const FiniteGroup& h;
    std::vector<Elem> gens;
    std::vector<size_t> gen_orders;
    std::vector<size_t> chain_sizes; // |<g1..gi>|
    std::shared_ptr<ProductCarrier> pc;
    std::map<Elem, size_t> h_class_size;
    std::map<Elem, size_t> g_class_size;

    bool extends(std::vector<Elem>& images, size_t depth) {
        if (depth == gens.size()) return true;
        const Elem& gi = gens[depth];
        size_t want = gen_orders[depth];
        for (const Elem& cand : h.elements) {
            if (element_order(*h.carrier, cand) != want) continue;
            if (g_class_size.at(gi) != h_class_size.at(cand)) continue;
            images.push_back(cand);
            // partial graph must not collapse: closure of pairs has the
            // same size as the subgroup generated on the G side
            std::vector<Elem> pairs;
            for (size_t i = 0; i <= depth; ++i) pairs.push_back(pc->embed({gens[i], images[i]}));
            bool ok = false;
            try {
                FiniteGroup graph = closure(pc, pairs, g.order() * 2);
                ok = graph.order() == chain_sizes[depth];
            } catch (const GroupSizeError&) {
                ok = false;
            }
            if (ok && depth + 1 == gens.size()) {
                // surjectivity onto H
                FiniteGroup img = closure(h.carrier, images, h.order());
                ok = img.order() == h.order();
            }
            if (ok && extends(images, depth + 1)) return true;
            images.pop_back();
        }
        return false;
    }
};

} // namespace

bool isomorphic(const FiniteGroup& g, const FiniteGroup& h, size_t cap) {
    if (g.order() != h.order()) return false;
    if (g.order() > cap || h.order() > cap)
        throw GroupSizeError("isomorphic: size cap exceeded");
    if (g.order() == 1) return true;
    if (order_profile(g) != order_profile(h)) return false;
    bool g_ab = is_abelian(g), h_ab = is_abelian(h);
    if (g_ab != h_ab) return false;
    if (g_ab) return true; // same order profile fixes an abelian group
    if (conjugacy_class_sizes(g) != conjugacy_class_sizes(h)) return false;

    IsoSearch search{g, h, minimal_generators(g), {}, {}, nullptr, {}, {}};
    for (const Elem& e : search.gens) search.gen_orders.push_back(element_order(*g.carrier, e));
    for (size_t i = 0; i < search.gens.size(); ++i) {
        std::vector<Elem> pre(search.gens.begin(), search.gens.begin() + i + 1);
        search.chain_sizes.push_back(closure(g.carrier, pre).order());
    }
    search.pc = std::make_shared<ProductCarrier>(std::vector<CarrierPtr>{g.carrier, h.carrier});

    // class sizes, element-wise
    auto class_map = [](const FiniteGroup& grp) {
        std::map<Elem, size_t> m;
        std::set<Elem> remaining(grp.elements.begin(), grp.elements.end());
        std::vector<Elem> gens = grp.generators;
        for (const Elem& e : grp.generators) gens.push_back(grp.carrier->inverse(e));
        while (!remaining.empty()) {
            Elem seed = *remaining.begin();
            std::set<Elem> orbit{seed};
            std::vector<Elem> frontier{seed};
            while (!frontier.empty()) {
                std::vector<Elem> next;
                for (const Elem& x : frontier)
                    for (const Elem& t : gens) {
                        Elem c = grp.carrier->compose(grp.carrier->compose(t, x), grp.carrier->inverse(t));
                        if (orbit.insert(c).second) next.push_back(std::move(c));
                    }
                frontier = std::move(next);
            }
            for (const Elem& x : orbit) {
                m[x] = orbit.size();
                remaining.erase(x);
            }
        }
        return m;
    };
    search.g_class_size = class_map(g);
    search.h_class_size = class_map(h);

    std::vector<Elem> images;
    return search.extends(images, 0);
}

} // namespace gtype
