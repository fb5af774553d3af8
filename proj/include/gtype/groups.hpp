// Finite group engine.
//
// Elements are flat int32 encodings interpreted by a carrier: permutation
// images, 2x2 matrix entries mod n, units mod n, an index into an abstract
// multiplication table, or a concatenation of component encodings for
// direct products.  Lexicographic order on encodings is the canonical
// element order, so every set-valued result is deterministic.
//
// Groups are closure-computed element sets and immutable once built.

#ifndef GTYPE_GROUPS_HPP
#define GTYPE_GROUPS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gtype {

using Elem = std::vector<int32_t>;

class Carrier {
  public:
    virtual ~Carrier() = default;
    virtual Elem compose(const Elem& a, const Elem& b) const = 0;
    virtual Elem inverse(const Elem& a) const = 0;
    virtual Elem identity() const = 0;
    virtual size_t width() const = 0;
    virtual std::string kind() const = 0;
    virtual nlohmann::ordered_json describe() const;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

// permutations on 0..degree-1, encoded by their image vectors
class PermCarrier : public Carrier {
  public:
    explicit PermCarrier(size_t degree) : degree_(degree) {}
    Elem compose(const Elem& a, const Elem& b) const override; // (a*b)(x) = a(b(x))
    Elem inverse(const Elem& a) const override;
    Elem identity() const override;
    size_t width() const override { return degree_; }
    std::string kind() const override { return "permutation"; }
    nlohmann::ordered_json describe() const override;
    size_t degree() const { return degree_; }

  private:
    size_t degree_;
};

// 2x2 matrices [a, b, c, d] over Z/nZ with unit determinant
class MatCarrier : public Carrier {
  public:
    explicit MatCarrier(int64_t modulus) : modulus_(modulus) {}
    Elem compose(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    Elem identity() const override;
    size_t width() const override { return 4; }
    std::string kind() const override { return "matrix"; }
    nlohmann::ordered_json describe() const override;
    int64_t modulus() const { return modulus_; }

  private:
    int64_t modulus_;
};

// multiplicative group (Z/nZ)^x, elements encoded as their residue
class UnitsCarrier : public Carrier {
  public:
    explicit UnitsCarrier(int64_t modulus) : modulus_(modulus) {}
    Elem compose(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    Elem identity() const override;
    size_t width() const override { return 1; }
    std::string kind() const override { return "units"; }
    nlohmann::ordered_json describe() const override;
    int64_t modulus() const { return modulus_; }

  private:
    int64_t modulus_;
};

// square (n+1) x (n+1) affine matrices over Z/qZ, row-major; used for
// semidirect-product realizations whose permutation form would be too wide
class AffineCarrier : public Carrier {
  public:
    AffineCarrier(int64_t modulus, size_t dim) : modulus_(modulus), dim_(dim) {}
    Elem compose(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    Elem identity() const override;
    size_t width() const override { return (dim_ + 1) * (dim_ + 1); }
    std::string kind() const override { return "affine"; }
    nlohmann::ordered_json describe() const override;
    int64_t modulus() const { return modulus_; }
    size_t dim() const { return dim_; }

  private:
    int64_t modulus_;
    size_t dim_;
};

// abstract group given by its multiplication table
class TableCarrier : public Carrier {
  public:
    TableCarrier(size_t n, std::vector<int32_t> table);
    Elem compose(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    Elem identity() const override;
    size_t width() const override { return 1; }
    std::string kind() const override { return "table"; }
    nlohmann::ordered_json describe() const override;
    size_t size() const { return n_; }

  private:
    size_t n_;
    std::vector<int32_t> table_; // table_[i*n+j] = i*j
    std::vector<int32_t> inv_;
    int32_t id_;
};

// componentwise products of other carriers
class ProductCarrier : public Carrier {
  public:
    explicit ProductCarrier(std::vector<CarrierPtr> parts);
    Elem compose(const Elem& a, const Elem& b) const override;
    Elem inverse(const Elem& a) const override;
    Elem identity() const override;
    size_t width() const override { return total_width_; }
    std::string kind() const override { return "product"; }
    nlohmann::ordered_json describe() const override;
    const std::vector<CarrierPtr>& parts() const { return parts_; }
    Elem project(const Elem& a, size_t i) const;
    Elem embed(const std::vector<Elem>& components) const;

  private:
    std::vector<CarrierPtr> parts_;
    std::vector<size_t> offsets_;
    size_t total_width_;
};

struct FiniteGroup {
    CarrierPtr carrier;
    std::vector<Elem> elements;   // sorted lexicographically
    std::vector<Elem> generators;

    size_t order() const { return elements.size(); }
    bool contains(const Elem& g) const;
    bool is_trivial() const { return elements.size() == 1; }

    nlohmann::ordered_json to_json() const;
};

inline constexpr size_t kDefaultClosureCap = 1000000;

// breadth-first closure of the generated subgroup; throws GroupSizeError
// past the cap
FiniteGroup closure(const CarrierPtr& carrier, std::vector<Elem> generators,
                    size_t cap = kDefaultClosureCap);

struct GroupSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

size_t element_order(const Carrier& c, const Elem& g);
size_t exponent(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

// sorted list of element orders, and conjugacy class sizes (iso invariants)
std::vector<size_t> order_profile(const FiniteGroup& g);
std::vector<size_t> conjugacy_class_sizes(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, const FiniteGroup& h); // h <= g, same carrier
bool is_normal(const FiniteGroup& g, const FiniteGroup& n);

FiniteGroup commutator_subgroup(const FiniteGroup& g);
// [G,G]·G^p for prime p
FiniteGroup lambda_subgroup(const FiniteGroup& g, uint64_t p);

// smallest subgroup containing `seed` and normal in g
FiniteGroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& seed);

// coset group on canonical representatives (abstract table carrier);
// verifies normality
FiniteGroup quotient(const FiniteGroup& g, const FiniteGroup& n);

// invariant factors d1 | d2 | ... of G/[G,G]; empty for perfect or trivial
std::vector<uint64_t> abelian_invariants(const FiniteGroup& g);

// lower central series length, or nullopt when not nilpotent
std::optional<int> nilpotency_class(const FiniteGroup& g);

bool is_subdirect_product(const FiniteGroup& h, const std::vector<FiniteGroup>& factors);

// generator-image backtracking with order/class-size pruning; both orders
// must be <= cap
bool isomorphic(const FiniteGroup& g, const FiniteGroup& h, size_t cap = 10000);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// greedy small generating set
std::vector<Elem> minimal_generators(const FiniteGroup& g);

// fast greedy generators for a subgroup given as a sorted element list
std::vector<Elem> greedy_generators(const CarrierPtr& carrier, const std::vector<Elem>& elems);

// every subgroup, as sorted element sets, by single-generator extensions
std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& g, size_t max_count = 100000);

FiniteGroup subgroup_from_elements(const FiniteGroup& g, std::vector<Elem> elems);

} // namespace gtype

#endif
