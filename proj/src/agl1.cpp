#include "edtool/agl1.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace edt::genfree {

namespace {

// Polynomials over F_p as digit vectors, little-endian.
using PPoly = std::vector<unsigned>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    ptrim(c);
    return c;
}

PPoly pmod(PPoly a, const PPoly& m, unsigned p) {
    ptrim(a);
    while (a.size() >= m.size()) {
        unsigned lead = a.back();
        // m is monic
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = (a[shift + i] + (p - 1) * lead % p * m[i]) % p;
        ptrim(a);
    }
    return a;
}

bool pis_zero(const PPoly& a) { return a.empty(); }

// Deterministic first monic irreducible of degree e over F_p, by trial
// division against every monic polynomial of degree <= e/2.
PPoly first_irreducible(unsigned p, unsigned e) {
    auto decode = [&](unsigned long code, unsigned deg) {
        PPoly f(deg + 1, 0);
        for (unsigned i = 0; i < deg; ++i) {
            f[i] = code % p;
            code /= p;
        }
        f[deg] = 1;
        return f;
    };
    unsigned long count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (unsigned long code = 0; code < count; ++code) {
        PPoly cand = decode(code, e);
        bool irreducible = true;
        for (unsigned d = 1; irreducible && 2 * d <= e; ++d) {
            unsigned long dcount = 1;
            for (unsigned i = 0; i < d; ++i) dcount *= p;
            for (unsigned long dc = 0; dc < dcount; ++dc) {
                PPoly div = decode(dc, d);
                if (pis_zero(pmod(cand, div, p))) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Fq::Fq(unsigned q) : q_(q) {
    if (q < 2 || q > 65536) throw std::domain_error("q must be a prime power in [2, 65536]");
    unsigned p = 0;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;  // q itself prime
    unsigned e = 0;
    unsigned rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw std::domain_error(std::to_string(q) + " is not a prime power");
    p_ = p;
    e_ = e;

    // Element k encodes its base-p digit vector; tables are built once.
    auto to_digits = [&](unsigned code) {
        PPoly d(e_, 0);
        for (unsigned i = 0; i < e_; ++i) {
            d[i] = code % p_;
            code /= p_;
        }
        return d;
    };
    auto to_code = [&](const PPoly& d) {
        unsigned code = 0;
        for (std::size_t i = e_; i-- > 0;) code = code * p_ + (i < d.size() ? d[i] : 0);
        return code;
    };

    neg_.resize(q_);
    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    inv_.assign(q_, 0);

    for (unsigned a = 0; a < q_; ++a) {
        PPoly da = to_digits(a);
        PPoly nd(e_);
        for (unsigned i = 0; i < e_; ++i) nd[i] = (p_ - da[i]) % p_;
        neg_[a] = to_code(nd);
        for (unsigned b = 0; b < q_; ++b) {
            PPoly db = to_digits(b);
            PPoly sum(e_);
            for (unsigned i = 0; i < e_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[std::size_t(a) * q_ + b] = to_code(sum);
        }
    }
    if (e_ == 1) {
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b) mul_[std::size_t(a) * q_ + b] = (a * b) % p_;
    } else {
        PPoly modulus = first_irreducible(p_, e_);
        for (unsigned a = 0; a < q_; ++a) {
            PPoly da = to_digits(a);
            ptrim(da);
            for (unsigned b = a; b < q_; ++b) {
                PPoly db = to_digits(b);
                ptrim(db);
                unsigned prod = to_code(pmod(pmul(da, db, p_), modulus, p_));
                mul_[std::size_t(a) * q_ + b] = prod;
                mul_[std::size_t(b) * q_ + a] = prod;
            }
        }
    }
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            if (mul_[std::size_t(a) * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }
}

unsigned Fq::inv(unsigned a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

unsigned Fq::pow(unsigned a, unsigned long e) const {
    unsigned out = 1;  // multiplicative identity encodes as 1
    unsigned base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

std::vector<AffinePair> agl1_stabilizer(const Fq& field, const PolynomialSample& f,
                                        bool allow_translations) {
    if (f.q != field.q()) throw std::invalid_argument("field mismatch");
    const unsigned n = f.n;
    if (f.coeffs.size() != n) throw std::invalid_argument("coefficient vector must have length n");
    if (n >= 2 && f.coeffs[n - 1] != 0)
        throw std::invalid_argument("sample outside the zero-trace locus (x^{n-1} coefficient)");

    // Full coefficient vector a_0..a_n with a_n = 1.
    std::vector<unsigned> a(f.coeffs);
    a.push_back(1);

    std::vector<AffinePair> stab;
    for (unsigned c = 1; c < field.q(); ++c) {
        const unsigned bmax = allow_translations ? field.q() : 1;
        for (unsigned b = 0; b < bmax; ++b) {
            // g(x) = c^n f((x - b)/c) = sum_k a_k c^{n-k} (x - b)^k
            std::vector<unsigned> g(n + 1, 0);
            std::vector<unsigned> pow_xb{1};  // (x - b)^k, little-endian
            for (unsigned k = 0; k <= n; ++k) {
                unsigned scale = field.mul(a[k], field.pow(c, n - k));
                if (scale != 0)
                    for (std::size_t i = 0; i < pow_xb.size(); ++i)
                        g[i] = field.add(g[i], field.mul(scale, pow_xb[i]));
                if (k == n) break;
                // multiply by (x - b)
                std::vector<unsigned> next(pow_xb.size() + 1, 0);
                for (std::size_t i = 0; i < pow_xb.size(); ++i) {
                    next[i + 1] = field.add(next[i + 1], pow_xb[i]);
                    next[i] = field.add(next[i], field.mul(field.neg(b), pow_xb[i]));
                }
                pow_xb = std::move(next);
            }
            bool fixes = true;
            for (unsigned k = 0; k <= n && fixes; ++k)
                if (g[k] != a[k]) fixes = false;
            if (fixes) stab.push_back({c, b});
        }
    }
    return stab;
}

Agl1Report agl1_generic_check(unsigned n, unsigned q, unsigned samples, std::uint64_t seed) {
    if (n < 3) throw std::domain_error("degree n >= 3 required");
    if (samples < 1) throw std::domain_error("at least one sample required");
    Fq field(q);
    if (q < n) throw std::domain_error("q >= n required to draw n distinct roots");

    Agl1Report report;
    report.n = n;
    report.q = q;
    report.p = field.p();
    report.field_degree = field.degree();
    report.translations_allowed = (n % field.p() == 0);
    report.degenerate_case = (n == 4 && field.p() == 2);
    report.seed = seed;
    report.samples = samples;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> draw(0, q - 1);
    for (unsigned s = 0; s < samples; ++s) {
        // n distinct roots with zero sum: draw n-1 distinct, close up, retry
        // on collisions.
        std::vector<unsigned> roots;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 100000) throw std::runtime_error("root sampling failed to converge");
            roots.clear();
            while (roots.size() + 1 < n) {
                unsigned r = draw(rng);
                if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
            unsigned sum = 0;
            for (unsigned r : roots) sum = field.add(sum, r);
            unsigned last = field.neg(sum);
            if (std::find(roots.begin(), roots.end(), last) == roots.end()) {
                roots.push_back(last);
                break;
            }
        }
        // f = prod (x - r_i)
        std::vector<unsigned> coeffs{1};
        for (unsigned r : roots) {
            std::vector<unsigned> next(coeffs.size() + 1, 0);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = field.add(next[i + 1], coeffs[i]);
                next[i] = field.add(next[i], field.mul(field.neg(r), coeffs[i]));
            }
            coeffs = std::move(next);
        }
        PolynomialSample f;
        f.n = n;
        f.q = q;
        f.coeffs.assign(coeffs.begin(), coeffs.end() - 1);
        auto stab = agl1_stabilizer(field, f, report.translations_allowed);
        if (stab.size() == 1) ++report.trivial_count;
    }
    return report;
}

}  // namespace edt::genfree
