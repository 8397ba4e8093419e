#pragma once

#include "suq2/cqalg/peter_weyl.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace suq2::verify {

using cqalg::AlgebraElement;
using cqalg::Monomial;

struct SuiteResult {
    explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}
    std::string name;
    long checked = 0;
    long failures = 0;
    std::string first_failure;
    bool ok() const { return checked > 0 && failures == 0; }
    void record(bool good, const std::string& what);
};

// Integer coefficients in [-3, 3] on random normal monomials of degree <= max_degree.
class RandomSampler {
public:
    explicit RandomSampler(uint64_t seed) : rng_(seed) {}
    Monomial monomial(int max_degree);
    AlgebraElement element(int max_degree, int max_terms = 4);
    // nonzero element
    AlgebraElement nonzero_element(int max_degree, int max_terms = 4);
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// h(t_kl t_ij^*) = delta q_l / d and h(t_ij^* t_kl) = delta / (d q_i), exactly and at q = 7/10,
// for all spins up to twice_max / 2 and all index tuples (mixed spins included).
SuiteResult orthogonality_suite(int twice_max);

// Associativity, confluence, Hopf and star axioms on random triples.
SuiteResult hopf_suite(int trials, int max_degree, uint64_t seed);

// inverse(F(f)) == f and sum d ||F(f)||_HS^2 == h(f f^*)
SuiteResult fourier_suite(int trials, int max_degree, uint64_t seed);

}  // namespace suq2::verify
