#include "gtype/freeword.hpp"

#include <cctype>
#include <stdexcept>

namespace gtype {

FreeWord::FreeWord(std::vector<std::pair<int, long long>> letters) : letters_(std::move(letters)) {
    for (const auto& [i, e] : letters_) {
        if (i < 1) throw std::invalid_argument("FreeWord: generator index must be >= 1");
        (void)e;
    }
    reduce();
}

void FreeWord::reduce() {
    std::vector<std::pair<int, long long>> out;
    for (const auto& [i, e] : letters_) {
        if (e == 0) continue;
        if (!out.empty() && out.back().first == i) {
            out.back().second += e;
            if (out.back().second == 0) out.pop_back();
        } else {
            out.push_back({i, e});
        }
    }
    letters_ = std::move(out);
}

int FreeWord::arity() const {
    int k = 0;
    for (const auto& [i, e] : letters_) { k = std::max(k, i); (void)e; }
    return k;
}

FreeWord FreeWord::inverse() const {
    std::vector<std::pair<int, long long>> out;
    for (size_t i = letters_.size(); i-- > 0;) out.push_back({letters_[i].first, -letters_[i].second});
    return FreeWord(std::move(out));
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    std::vector<std::pair<int, long long>> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return FreeWord(std::move(out));
}

FreeWord FreeWord::commutator(const FreeWord& a, const FreeWord& b) {
    return a.inverse() * b.inverse() * a * b;
}

FreeWord FreeWord::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FreeWord r;
    for (long long i = 0; i < e; ++i) r = r * *this;
    return r;
}

Elem FreeWord::eval(const Carrier& carrier, const std::vector<Elem>& assignment) const {
    Elem acc = carrier.identity();
    for (const auto& [i, e] : letters_) {
        if (static_cast<size_t>(i) > assignment.size())
            throw std::invalid_argument("FreeWord::eval: assignment too short");
        Elem base = e > 0 ? assignment[i - 1] : carrier.inverse(assignment[i - 1]);
        long long k = e > 0 ? e : -e;
        // square-and-multiply in the carrier
        Elem pw = carrier.identity();
        Elem sq = base;
        while (k) {
            if (k & 1) pw = carrier.compose(pw, sq);
            sq = carrier.compose(sq, sq);
            k >>= 1;
        }
        acc = carrier.compose(acc, pw);
    }
    return acc;
}

namespace {

struct WordParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("word parse error at position " + std::to_string(pos) + ": " + what);
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    long long parse_int() {
        skip_ws();
        bool neg = eat('-');
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    // word := atom+ ; atom := (generator | commutator) ('^' int)?
    FreeWord parse_word() {
        FreeWord acc;
        bool any = false;
        while (true) {
            skip_ws();
            if (pos >= s.size() || s[pos] == ',' || s[pos] == ']') break;
            acc = acc * parse_atom();
            any = true;
            // optional explicit separator
            skip_ws();
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (!any) fail("empty word");
        return acc;
    }
    FreeWord parse_atom() {
        skip_ws();
        FreeWord base;
        if (eat('[')) {
            FreeWord u = parse_word();
            if (!eat(',')) fail("expected ',' in commutator");
            FreeWord v = parse_word();
            if (!eat(']')) fail("expected ']'");
            base = FreeWord::commutator(u, v);
        } else if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            long long idx = parse_int();
            if (idx < 1) fail("generator index must be >= 1");
            base = FreeWord::generator(static_cast<int>(idx));
        } else {
            fail("expected 'x<k>' or '['");
        }
        if (eat('^')) return base.pow(parse_int());
        return base;
    }
};

} // namespace

FreeWord FreeWord::parse(std::string_view text) {
    WordParser p{text, 0};
    FreeWord w = p.parse_word();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return w;
}

std::string FreeWord::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const auto& [i, e] : letters_) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace gtype
