#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "kthit/graph.hpp"

namespace kthit {

using BigInt = boost::multiprecision::cpp_int;

// Exact values larger than this many bits are refused with Overflow.
constexpr unsigned kBigIntBitBudget = 1u << 24;

// beta(0,t) = 1 and beta(x,t) = 2^(t * beta(x-1,t)). Throws Overflow past the bit budget.
BigInt beta(int lambda, int t);

// log2 of beta(lambda, t) for lambda >= 1, i.e. t * beta(lambda-1, t). Available one level beyond beta itself.
BigInt beta_log2(int lambda, int t);

// value <= beta(lambda, t), decided without materializing beta when it is too large to store.
bool at_most_beta(const BigInt& value, int lambda, int t);

// c(lambda,t) = (t-1) * beta(lambda,t).
BigInt chunk_bound(int lambda, int t);

// delta(lambda,t) = (t-1) * (2 c(lambda,t) + 2)^lambda.
BigInt kernel_degree(int lambda, int t);

// eta^eta * 2^(eta^2).
BigInt td_mmbs_bound(int eta);

struct BoundParams {
    int lambda = 0;
    int t = 3;
    BigInt beta;
    BigInt chunk_bound;
    BigInt kernel_degree;
};

BoundParams bound_params(int lambda, int t);

// Decimal for moderate values, "2^e" for large powers of two, "~2^e" otherwise.
std::string format_big(const BigInt& value);
// beta(lambda,t) formatted, falling back to "2^e" when the exact value exceeds the budget.
std::string format_beta(int lambda, int t);

// min(value, limit) as a machine integer.
long long saturate(const BigInt& value, long long limit);

struct BoundsReport {
    int mmbs = 0;
    bool mmbs_exact = true;
    int bed = 0;
    int td = 0;
    std::string beta_text;
    std::string td_bound_text;
    bool beta_ok = false;
    bool td_ok = false;
    bool pass = false;
};

// Computes mmbs_t(g), bed+_t(g) and td(g) and checks mmbs <= beta(bed+, t) and mmbs <= td^td * 2^(td^2).
// An inexact mmbs value (search budget exhausted) never passes.
BoundsReport verify_mmbs_bounds(const Graph& g, int t);

}  // namespace kthit
