// Arbitrary-precision signed integers.
//
// Sign-magnitude representation, base 2^32 limbs, little-endian.  Division
// is Knuth algorithm D.  Everything the rest of the toolkit needs lives
// here: divmod, gcd, integer k-th roots, modular exponentiation, decimal
// string I/O.

#ifndef GTYPE_BIGINT_HPP
#define GTYPE_BIGINT_HPP

#include <cstdint>
#include <type_traits>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gtype {

class BigInt {
  public:
    BigInt() : sign_(0) {}
    BigInt(long long v);
    template <class T, class = std::enable_if_t<std::is_integral_v<T>>>
    BigInt(T v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s);
    std::string str() const;

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_neg_one() const { return sign_ == -1 && mag_.size() == 1 && mag_[0] == 1; }

    bool odd() const { return sign_ != 0 && (mag_[0] & 1u); }
    bool even() const { return !odd(); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // truncated toward zero; remainder has the dividend's sign
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }
    BigInt& operator/=(const BigInt& b) { *this = *this / b; return *this; }
    BigInt& operator%=(const BigInt& b) { *this = *this % b; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b);   // nonnegative
    static BigInt lcm(const BigInt& a, const BigInt& b);

    BigInt pow(uint64_t e) const;
    // base^exp mod m, m > 0, exp >= 0
    static BigInt powmod(BigInt base, BigInt exp, const BigInt& m);

    // floor of the nonnegative k-th root; requires *this >= 0
    BigInt iroot(unsigned k) const;
    BigInt isqrt() const { return iroot(2); }
    bool is_perfect_square() const;
    // cube roots work for negative values too
    bool is_perfect_cube(BigInt* root = nullptr) const;
    bool is_perfect_power(unsigned k, BigInt* root = nullptr) const;

    // value mod small m, result in [0, m)
    uint64_t mod_u64(uint64_t m) const;

    bool fits_ll() const;
    long long to_ll() const;   // throws std::overflow_error when out of range

    size_t bit_length() const;
    size_t hash() const;

  private:
    int sign_;                  // -1, 0, 1
    std::vector<uint32_t> mag_; // little-endian limbs; empty iff zero

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

inline BigInt operator+(const BigInt& a, long long b) { return a + BigInt(b); }
inline BigInt operator*(const BigInt& a, long long b) { return a * BigInt(b); }

} // namespace gtype

template <> struct std::hash<gtype::BigInt> {
    size_t operator()(const gtype::BigInt& v) const { return v.hash(); }
};

#endif
