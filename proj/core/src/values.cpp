#include "scm/values.hpp"

#include <cstdio>
#include <random>

namespace scm {

std::string generate_uuid() {
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    std::uint64_t hi = rng();
    std::uint64_t lo = rng();
    hi = (hi & 0xffffffffffff0fffULL) | 0x0000000000004000ULL; // version 4
    lo = (lo & 0x3fffffffffffffffULL) | 0x8000000000000000ULL; // variant 10
    char buf[37];
    std::snprintf(buf, sizeof buf, "%08llx-%04llx-%04llx-%04llx-%012llx",
                  (unsigned long long)(hi >> 32),
                  (unsigned long long)((hi >> 16) & 0xffff),
                  (unsigned long long)(hi & 0xffff),
                  (unsigned long long)(lo >> 48),
                  (unsigned long long)(lo & 0xffffffffffffULL));
    return buf;
}

} // namespace scm
