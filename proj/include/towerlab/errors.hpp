#pragma once

#include <stdexcept>
#include <string>

namespace towerlab {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_prime_error : error {
    explicit not_prime_error(long long p)
        : error("not a prime: " + std::to_string(p)) {}
};

struct reducible_modulus_error : error {
    std::string factor;  // a discovered nontrivial factor, printed in t
    explicit reducible_modulus_error(std::string f)
        : error("reducible modulus, divisible by " + f), factor(std::move(f)) {}
};

struct field_mismatch_error : error {
    field_mismatch_error() : error("operands belong to different fields") {}
};

struct division_by_zero_error : error {
    division_by_zero_error() : error("division by zero") {}
};

struct zero_denominator_error : error {
    zero_denominator_error() : error("zero denominator") {}
};

struct both_zero_error : error {
    both_zero_error() : error("gcd of two zero polynomials") {}
};

struct syntax_error : error {
    std::size_t position;
    syntax_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct unknown_symbol_error : error {
    explicit unknown_symbol_error(const std::string& sym)
        : error("unknown symbol: " + sym) {}
};

struct search_space_error : error {
    explicit search_space_error(long long size, long long ceiling)
        : error("search space of " + std::to_string(size) +
                " candidates exceeds ceiling " + std::to_string(ceiling)) {}
};

struct level_cap_error : error {
    explicit level_cap_error(int levels, int cap)
        : error("requested " + std::to_string(levels) +
                " levels, cap is " + std::to_string(cap)) {}
};

struct level_mismatch_error : error {
    level_mismatch_error() : error("census and ledger cover different levels") {}
};

struct spec_error : error {
    using error::error;
};

}  // namespace towerlab
