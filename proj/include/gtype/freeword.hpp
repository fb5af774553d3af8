// Words in a free group F_k, reduced as (generator index, exponent) runs.
// The text syntax accepts powers and nested commutators:
//   x1^4      [x1,x2]      [x1,[x1,x2]]^-2
// with [u,v] = u^-1 v^-1 u v.

#ifndef GTYPE_FREEWORD_HPP
#define GTYPE_FREEWORD_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gtype/groups.hpp"

namespace gtype {

class FreeWord {
  public:
    FreeWord() = default;
    explicit FreeWord(std::vector<std::pair<int, long long>> letters);

    static FreeWord generator(int index) { return FreeWord({{index, 1}}); }
    static FreeWord parse(std::string_view text);

    const std::vector<std::pair<int, long long>>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    // highest generator index appearing (0 for the empty word)
    int arity() const;

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    static FreeWord commutator(const FreeWord& a, const FreeWord& b);
    FreeWord pow(long long e) const;

    // evaluation at an assignment of the generators (1-based indices)
    Elem eval(const Carrier& carrier, const std::vector<Elem>& assignment) const;

    std::string str() const;

  private:
    std::vector<std::pair<int, long long>> letters_;
    void reduce();
};

} // namespace gtype

#endif
