#include "kthit/blocking.hpp"

#include "kthit/decomposition.hpp"
#include "kthit/errors.hpp"
#include "kthit/oracle.hpp"

namespace kthit {

namespace {

BigInt power_of_two(const BigInt& exponent) {
    if (exponent > kBigIntBitBudget) throw Overflow("2^" + format_big(exponent) + " exceeds the bit budget");
    BigInt one = 1;
    return one << static_cast<unsigned>(exponent);
}

void check_t(int t) {
    if (t < 2) throw PreconditionViolated("t must be at least 2");
}

}  // namespace

BigInt beta(int lambda, int t) {
    check_t(t);
    if (lambda < 0) throw PreconditionViolated("lambda must be non-negative");
    BigInt value = 1;
    for (int x = 1; x <= lambda; ++x) value = power_of_two(BigInt(t) * value);
    return value;
}

BigInt beta_log2(int lambda, int t) {
    if (lambda < 1) throw PreconditionViolated("beta_log2 requires lambda >= 1");
    return BigInt(t) * beta(lambda - 1, t);
}

bool at_most_beta(const BigInt& value, int lambda, int t) {
    if (value <= 1) return true;
    if (lambda == 0) return false;
    BigInt exponent;
    try {
        exponent = beta_log2(lambda, t);
    } catch (const Overflow&) {
        // The exponent itself has more than 2^24 bits, so beta dwarfs any storable value.
        return true;
    }
    unsigned msb = boost::multiprecision::msb(value);
    if (BigInt(msb) < exponent) return true;
    if (BigInt(msb) > exponent) return false;
    return value == (BigInt(1) << msb);
}

BigInt chunk_bound(int lambda, int t) { return BigInt(t - 1) * beta(lambda, t); }

BigInt kernel_degree(int lambda, int t) {
    BigInt base = 2 * chunk_bound(lambda, t) + 2;
    BigInt out = t - 1;
    for (int i = 0; i < lambda; ++i) {
        out *= base;
        if (boost::multiprecision::msb(out) > kBigIntBitBudget) throw Overflow("kernel degree exceeds the bit budget");
    }
    return out;
}

BigInt td_mmbs_bound(int eta) {
    if (eta < 0) throw PreconditionViolated("eta must be non-negative");
    BigInt out = boost::multiprecision::pow(BigInt(eta), static_cast<unsigned>(eta));
    return out * power_of_two(BigInt(eta) * eta);
}

BoundParams bound_params(int lambda, int t) {
    BoundParams p;
    p.lambda = lambda;
    p.t = t;
    p.beta = beta(lambda, t);
    p.chunk_bound = chunk_bound(lambda, t);
    p.kernel_degree = kernel_degree(lambda, t);
    return p;
}

std::string format_big(const BigInt& value) {
    if (value < 0) return "-" + format_big(-value);
    if (value == 0) return "0";
    unsigned msb = boost::multiprecision::msb(value);
    if (msb < 64) return value.str();
    if (value == (BigInt(1) << msb)) return "2^" + std::to_string(msb);
    return "~2^" + std::to_string(msb);
}

std::string format_beta(int lambda, int t) {
    try {
        return format_big(beta(lambda, t));
    } catch (const Overflow&) {
        try {
            return "2^" + format_big(beta_log2(lambda, t));
        } catch (const Overflow&) {
            return "2^(2^...)";
        }
    }
}

long long saturate(const BigInt& value, long long limit) {
    if (value >= limit) return limit;
    return value.convert_to<long long>();
}

BoundsReport verify_mmbs_bounds(const Graph& g, int t) {
    BoundsReport r;
    oracle::MmbsResult m = oracle::mmbs_graph(g, t);
    r.mmbs = m.value;
    r.mmbs_exact = m.exact;
    r.bed = bed_value(g, t, g.num_vertices()).value;
    r.td = treedepth_exact(g).depth;
    r.beta_text = format_beta(r.bed, t);
    r.beta_ok = at_most_beta(BigInt(r.mmbs), r.bed, t);
    BigInt tdb = td_mmbs_bound(r.td);
    r.td_bound_text = format_big(tdb);
    r.td_ok = BigInt(r.mmbs) <= tdb;
    r.pass = r.mmbs_exact && r.beta_ok && r.td_ok;
    return r;
}

}  // namespace kthit
