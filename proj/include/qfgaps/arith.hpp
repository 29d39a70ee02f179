// Integer arithmetic foundation: factorization, multiplicative functions,
// Kronecker symbol, primes, primorials and Mertens products.
//
// Everything here is pure and stateless; results are safe to share across
// threads. Big integers are GMP mpz; fast uint64 paths exist for the scan
// loops that hammer small inputs.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "qfgaps/interval.hpp"

namespace qfgaps {

// Prime-exponent list, the shared currency of the arithmetic operations.
// Invariants: primes strictly increasing, all prime, exponents >= 1.
struct Factorization {
    std::vector<std::pair<mpz_class, unsigned long>> entries;

    mpz_class value() const;
    // Checks the invariants; returns false instead of throwing so that
    // certificate verification can report the failure as a diagnostic.
    bool well_formed() const;
};

bool is_prime(std::uint64_t n);  // deterministic Miller-Rabin
bool is_prime(const mpz_class& n);

// Trial division. Inputs here are either modest (<= ~1e14) or big integers
// whose relevant prime content is small; anything with a composite cofactor
// past the trial limit is a resource error.
Factorization factorize(const mpz_class& n, std::uint64_t trial_limit = 10'000'000);

// Full Kronecker extension: n may be zero, negative or even.
int kronecker(const mpz_class& a, const mpz_class& n);
int kronecker(std::int64_t a, std::int64_t n);

// Largest e with p^e | n. p must be prime, n >= 1.
unsigned long valuation(const mpz_class& n, const mpz_class& p);
unsigned long valuation(std::uint64_t n, std::uint64_t p);

mpz_class euler_phi(const mpz_class& n);
int moebius(const mpz_class& n);
mpz_class radical(const mpz_class& n);
// Sum of squarefree divisors of n: product of (p+1) over p | n.
mpz_class squarefree_divisor_sum(const mpz_class& n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t squarefree_divisor_sum(std::uint64_t n);

// Exactly the primes <= x, ascending. x below 2 gives an empty list.
std::vector<std::uint64_t> primes_up_to(double x);

std::uint64_t nth_prime(std::uint64_t k);  // k >= 1, 1-based
// Whether the k-th prime is at most 2k(log k + 1).
bool nth_prime_bound_holds(std::uint64_t k);

mpz_class primorial(unsigned long n);  // product of the first n primes

// prod_{j<=n} (1 - 1/p_j) as a rigorous enclosure.
Interval mertens_product(unsigned long n, mpfr_prec_t prec = kDefaultPrecision);

// Smallest-prime-factor sieve for the scan loops: factoring, phi, moebius
// and squarefree divisor enumeration for every n up to the limit in O(log n).
class SpfSieve {
  public:
    explicit SpfSieve(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factor(std::uint32_t n) const;
    std::vector<std::uint32_t> prime_divisors(std::uint32_t n) const;
    std::uint64_t phi(std::uint32_t n) const;
    int mu(std::uint32_t n) const;
    std::uint64_t squarefree_divisor_sum(std::uint32_t n) const;
    // All squarefree divisors d | n with the sign mu(d), in no particular order.
    std::vector<std::pair<std::uint32_t, int>> squarefree_divisors(std::uint32_t n) const;

  private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> spf_;
};

}  // namespace qfgaps
