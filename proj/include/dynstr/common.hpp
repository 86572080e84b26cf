#ifndef DYNSTR_COMMON_HPP
#define DYNSTR_COMMON_HPP

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynstr {

using i32 = std::int32_t;
using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

// All string positions in this library are 1-based; intervals [i..j] are
// inclusive and empty when j < i.

struct bad_query : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const char* what) {
    if (!cond) throw bad_query(what);
}

// splitmix64, used for deterministic seeding of hash bases and treap priorities
inline u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline int floor_log2(i64 x) {
    assert(x > 0);
    return 63 - __builtin_clzll(static_cast<u64>(x));
}

} // namespace dynstr

#endif
