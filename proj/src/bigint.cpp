#include "gtype/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gtype {

BigInt::BigInt(long long v) {
    if (v == 0) { sign_ = 0; return; }
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                                 : ~static_cast<unsigned long long>(v) + 1ULL;
    while (u) { mag_.push_back(static_cast<uint32_t>(u)); u >>= 32; }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& x = a.size() >= b.size() ? a : b;
    const auto& y = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[x.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) { s += (1LL << 32); borrow = 1; } else borrow = 0;
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t s = static_cast<uint64_t>(r[i + j]) + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t s = static_cast<uint64_t>(r[k]) + carry;
            r[k] = static_cast<uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on normalized limbs
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) { q.clear(); r = a; return; }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    int shift = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;

    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= (shift ? v[i] << shift : v[i]);
            if (shift) out[i + 1] = v[i] >> (32 - shift);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };

    std::vector<uint32_t> u = shl(a), v = shl(b);
    size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    q.assign(m + 1, 0);

    const uint64_t base = 1ULL << 32;
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t top2 = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = top2 / v[n - 1];
        uint64_t rhat = top2 % v[n - 1];
        while (qhat >= base ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - borrow - static_cast<int64_t>(p & 0xffffffffULL);
            if (t < 0) { t += base; borrow = 1; } else borrow = 0;
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - borrow - static_cast<int64_t>(carry);
        if (t < 0) {
            // qhat was one too large; add back
            t += base;
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    if (shift) {
        for (size_t i = 0; i < u.size(); ++i) {
            u[i] >>= shift;
            if (i + 1 < u.size()) u[i] |= u[i + 1] << (32 - shift);
        }
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    r = u;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) { r.sign_ = a.sign_; r.mag_ = BigInt::sub_mag(a.mag_, b.mag_); }
        else       { r.sign_ = b.sign_; r.mag_ = BigInt::sub_mag(b.mag_, a.mag_); }
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a.abs() / gcd(a, b)) * b.abs();
}

BigInt BigInt::pow(uint64_t e) const {
    BigInt result(1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

BigInt BigInt::powmod(BigInt base, BigInt exp, const BigInt& m) {
    if (m.sign_ <= 0) throw std::domain_error("powmod: modulus must be positive");
    BigInt result(1);
    base = base % m;
    if (base.sign_ < 0) base = base + m;
    while (!exp.is_zero()) {
        if (exp.odd()) result = (result * base) % m;
        base = (base * base) % m;
        // exp >>= 1
        std::vector<uint32_t> q, r;
        divmod_mag(exp.mag_, {2}, q, r);
        exp.mag_ = std::move(q);
        exp.trim();
    }
    return result;
}

size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    size_t bits = (mag_.size() - 1) * 32;
    uint32_t top = mag_.back();
    while (top) { ++bits; top >>= 1; }
    return bits;
}

BigInt BigInt::iroot(unsigned k) const {
    if (sign_ < 0) throw std::domain_error("iroot: negative argument");
    if (k == 0) throw std::domain_error("iroot: k = 0");
    if (sign_ == 0) return BigInt();
    // initial guess from bit length, then Newton descent
    size_t bits = bit_length();
    BigInt x = BigInt(1).pow(1);
    x = BigInt(2).pow(bits / k + 1);
    BigInt km1(static_cast<long long>(k - 1)), kk(static_cast<long long>(k));
    while (true) {
        // y = ((k-1)*x + n / x^(k-1)) / k
        BigInt y = (km1 * x + *this / x.pow(k - 1)) / kk;
        if (!(y < x)) break;
        x = y;
    }
    while (x.pow(k) > *this) x = x - BigInt(1);
    return x;
}

bool BigInt::is_perfect_square() const {
    if (sign_ < 0) return false;
    if (sign_ == 0) return true;
    // quick residue filter mod 64
    static const bool sq64[64] = {
        1,1,0,0,1,0,0,0,0,1,0,0,0,0,0,0,1,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,
        0,1,0,0,1,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0,0,1,0,0,0,0,0,0};
    if (!sq64[mag_[0] & 63]) return false;
    BigInt r = iroot(2);
    return r * r == *this;
}

bool BigInt::is_perfect_cube(BigInt* root) const {
    BigInt a = abs();
    BigInt r = a.iroot(3);
    if (r * r * r == a) {
        if (root) *root = sign_ < 0 ? -r : r;
        return true;
    }
    return false;
}

bool BigInt::is_perfect_power(unsigned k, BigInt* root) const {
    if (sign_ < 0 && k % 2 == 0) return false;
    BigInt a = abs();
    BigInt r = a.iroot(k);
    if (r.pow(k) == a) {
        if (root) *root = sign_ < 0 ? -r : r;
        return true;
    }
    return false;
}

uint64_t BigInt::mod_u64(uint64_t m) const {
    if (m == 0) throw std::domain_error("mod_u64: zero modulus");
    unsigned __int128 acc = 0;
    for (size_t i = mag_.size(); i-- > 0;)
        acc = ((acc << 32) | mag_[i]) % m;
    uint64_t r = static_cast<uint64_t>(acc);
    if (sign_ < 0 && r) r = m - r;
    return r;
}

bool BigInt::fits_ll() const {
    if (mag_.size() > 2) return false;
    unsigned long long v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    if (sign_ >= 0) return v <= 0x7fffffffffffffffULL;
    return v <= 0x8000000000000000ULL;
}

long long BigInt::to_ll() const {
    if (!fits_ll()) throw std::overflow_error("BigInt::to_ll: out of range");
    unsigned long long v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return sign_ >= 0 ? static_cast<long long>(v) : -static_cast<long long>(v - 1) - 1;
}

BigInt BigInt::from_string(std::string_view s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    // consume 9 digits at a time
    while (i < s.size()) {
        uint32_t chunk = 0, len = 0;
        while (i < s.size() && len < 9) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
            ++i; ++len;
        }
        uint64_t scale = 1;
        for (uint32_t j = 0; j < len; ++j) scale *= 10;
        r = r * BigInt(static_cast<long long>(scale)) + BigInt(static_cast<long long>(chunk));
    }
    if (neg) r = -r;
    return r;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string out;
    while (!m.empty()) {
        // divide magnitude by 1e9
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        char buf[16];
        if (m.empty()) std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(rem));
        else std::snprintf(buf, sizeof buf, "%09llu", static_cast<unsigned long long>(rem));
        out.insert(0, buf);
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
}

size_t BigInt::hash() const {
    size_t h = static_cast<size_t>(sign_) + 0x9e3779b97f4a7c15ULL;
    for (uint32_t limb : mag_)
        h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace gtype
