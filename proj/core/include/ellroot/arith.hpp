#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ellroot {

bool is_prime(std::uint64_t n);

// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// base^e, or nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t e);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);

// Multiplicative inverse modulo m (gcd must be 1).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace ellroot
