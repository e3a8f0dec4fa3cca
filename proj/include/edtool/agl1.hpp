#pragma once

// Finite-field verifier for the affine-line action y -> cy + b on monic
// polynomials with vanishing subleading coefficient: stabilizers are
// enumerated exactly over F_q via the substitution identity
// c^n f((x-b)/c) = f(x), never through root extraction.

#include <cstdint>
#include <string>
#include <vector>

namespace edt::genfree {

/// Arithmetic in F_q for a prime power q (q <= 2^16).  Elements are encoded
/// as 0..q-1 via base-p digit vectors against a fixed deterministic
/// irreducible polynomial; full multiplication tables are precomputed.
class Fq {
public:
    /// Throws std::domain_error when q is not a prime power >= 2.
    explicit Fq(unsigned q);

    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned degree() const { return e_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned inv(unsigned a) const;  // a != 0
    unsigned pow(unsigned a, unsigned long e) const;

private:
    unsigned q_ = 0, p_ = 0, e_ = 0;
    std::vector<unsigned> add_, mul_, neg_, inv_;
};

/// Monic polynomial of degree n over F_q with zero x^{n-1} coefficient;
/// coeffs[k] is the coefficient of x^k for k = 0..n-1 (coeffs[n-1] == 0).
struct PolynomialSample {
    unsigned n = 0;
    unsigned q = 0;
    std::vector<unsigned> coeffs;
};

/// Affine map y -> c*y + b.
struct AffinePair {
    unsigned c = 1;
    unsigned b = 0;
};

/// All (c, b) in F_q^x x F_q whose root action fixes f; b is forced to 0
/// when translations are disallowed (they only preserve the zero-trace
/// locus when p | n).  Always contains the identity (1, 0).
std::vector<AffinePair> agl1_stabilizer(const Fq& field, const PolynomialSample& f,
                                        bool allow_translations);

/// Statistics of seeded sampling: split polynomials are drawn by choosing n
/// distinct roots with zero sum, and the exact stabilizer is enumerated for
/// each.  Deterministic for a fixed seed.
struct Agl1Report {
    unsigned n = 0;
    unsigned q = 0;
    unsigned p = 0;
    unsigned field_degree = 0;
    bool translations_allowed = false;       // p | n
    unsigned samples = 0;
    unsigned trivial_count = 0;              // samples with stabilizer {(1,0)}
    bool degenerate_case = false;            // n = 4 in characteristic 2
    std::uint64_t seed = 0;

    /// Exact trivial-stabilizer fraction as numerator/denominator.
    unsigned long fraction_num() const { return trivial_count; }
    unsigned long fraction_den() const { return samples; }
};

Agl1Report agl1_generic_check(unsigned n, unsigned q, unsigned samples, std::uint64_t seed);

}  // namespace edt::genfree
