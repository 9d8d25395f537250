#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace eszlab::modular {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    std::uint64_t s = a + b;  // a, b < p < 2^63
    return s >= p ? s - p : s;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

// count distinct primes in [2^61, 2^62), drawn from a generator seeded
// with seed.
std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t seed);

// q mod p, or nullopt when p divides the denominator.
std::optional<std::uint64_t> reduce(const mpq_class& q, std::uint64_t p);

} // namespace eszlab::modular
