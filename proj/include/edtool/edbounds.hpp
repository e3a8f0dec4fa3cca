#pragma once

// Bound engine: group descriptors across isogeny types and characteristics,
// the inequality toolkit (compression, faithful representations, special
// quotient sequences, transfer between SL/GL/PGL quotients), the
// certificate-backed bounds, the externally-cited exact values, and the
// adjoint generic-stabilizer component groups.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edtool/rootsys.hpp"

namespace edt::edbounds {

enum class Isogeny {
    Adjoint,
    SimplyConnected,
    SOEven,       // SO_{2n} inside type D
    HSpin,        // half-spin quotient, D_{n/2} with 4 | n
    SLQuotient,   // SL_n / mu_m, 1 < m < n
    GLQuotient,   // GL_n / mu_m (not simple; carries transfer bounds)
};

std::string to_string(Isogeny iso);

/// A group up to isomorphism: Dynkin type, isogeny data and the field
/// characteristic.  Exceptional isomorphisms are canonicalized on
/// construction (C2 -> B2, D3 -> A3) with the original label retained.
struct GroupDescriptor {
    rootsys::DynkinType type{rootsys::Family::A, 1};
    Isogeny isogeny = Isogeny::Adjoint;
    unsigned mu = 0;             // m for SL_n/mu_m and GL_n/mu_m
    unsigned characteristic = 0; // 0 or a prime
    std::string display;         // e.g. "PSp8", "SL6/mu2", "HSpin12"
    std::string note;            // canonicalization notes
    unsigned so_subscript = 0;   // n for SO_n inputs, kept through aliasing

    /// Matrix size n for the A-family quotients (type rank + 1).
    unsigned linear_n() const { return type.rank + 1; }
};

// Descriptor factories; all validate and canonicalize.
GroupDescriptor adjoint_group(rootsys::DynkinType t, unsigned characteristic);
GroupDescriptor simply_connected_group(rootsys::DynkinType t, unsigned characteristic);
GroupDescriptor pgl(unsigned n, unsigned characteristic);
GroupDescriptor sl_quotient(unsigned n, unsigned m, unsigned characteristic);
GroupDescriptor gl_quotient(unsigned n, unsigned m, unsigned characteristic);
GroupDescriptor sp(unsigned two_n, unsigned characteristic);
GroupDescriptor psp(unsigned two_n, unsigned characteristic);
GroupDescriptor so(unsigned n, unsigned characteristic);
GroupDescriptor spin(unsigned n, unsigned characteristic);
GroupDescriptor hspin(unsigned n, unsigned characteristic);

/// dim G = |roots| + rank (n^2 for the GL quotients).
unsigned long group_dim(const GroupDescriptor& d);
unsigned group_rank(const GroupDescriptor& d);

enum class BoundKind { Exact, Upper, Lower };
std::string to_string(BoundKind k);

struct RuleStep {
    std::string rule;    // stable rule identifier
    std::string anchor;  // criterion or literature tag
    std::vector<std::pair<std::string, long>> inputs;
    long output = 0;
};

struct BoundReport {
    GroupDescriptor group;
    BoundKind kind = BoundKind::Upper;
    long value = 0;
    std::vector<RuleStep> provenance;
    std::vector<std::string> certificate_refs;
    bool external = false;  // cited value, never recomputed
};

/// Replays every provenance step of an engine-derived report and checks the
/// final value; external rows replay trivially.
bool replay(const BoundReport& report);

// -- The inequality toolkit ---------------------------------------------------

/// ed(G) <= dim V - dim G for a generically free linear action; refuses
/// a vacuous (negative) difference.
long bound_genfree_linear(unsigned long dim_v, unsigned long dim_g);
/// ed(G) <= dim X - dim G for a generically free equivariant compression.
long bound_compression(unsigned long dim_x, unsigned long dim_g);
/// ed(G) <= dim V for a faithful representation of a reductive group.
long bound_faithful(unsigned long dim_v);
/// [ed(B), ed(B) + dim C] for an extension 1 -> A -> B -> C -> 1 with C
/// special (trivial H^1).
std::pair<long, long> bound_exact_sequence(long ed_b, unsigned long dim_c);
/// ed(GL_n/mu_m) <= ed(PGL_n) + n/m - 1.
long bound_sl_transfer(long ed_pgl_n, unsigned n, unsigned m);
/// The factor n' of n with the same prime support as m and gcd(n', n/n') = 1.
unsigned coprime_reduce(unsigned n, unsigned m);
/// m = gcd(p^e + epsilon, n) and the bound n^2 - n + 1 for ed(SL_n/mu_m);
/// requires positive characteristic.
std::pair<unsigned, long> frobenius_bound(unsigned n, unsigned p, unsigned e, int epsilon);

// -- Tables and assembly -------------------------------------------------------

/// Externally cited values matching the descriptor (exact, upper and lower
/// rows), each anchored to its source.
std::vector<BoundReport> known_values(const GroupDescriptor& d);

/// Every engine rule applicable to the descriptor, plus the known rows.
std::vector<BoundReport> applicable_bounds(const GroupDescriptor& d);

/// Exact value if one is known, otherwise the smallest upper bound; ties
/// broken by shorter provenance.  Self-audits: the provenance replays, and
/// simple groups other than PGL_2 and the (half-)spin family satisfy
/// value <= dim G - 2 rank G - 1.
BoundReport best_bound(const GroupDescriptor& d);

/// dim G - 2 rk G - 1, the guaranteed ceiling for non-excluded simple groups.
long rank_gap_ceiling(const GroupDescriptor& d);
/// True when the descriptor is excluded from that guarantee (PGL_2, Spin,
/// HSpin, and the non-simple GL quotients).
bool excluded_from_rank_gap(const GroupDescriptor& d);

// -- Adjoint generic stabilizer ------------------------------------------------

struct AdjointStabilizerReport {
    GroupDescriptor group;
    bool connected = true;
    std::string component_group;  // "trivial", "Z/2", "(Z/2)^n"
    bool inversion_action = false;  // the Z/2 acts on the torus by inversion
    std::string note;               // preimage note for non-adjoint inputs
};

/// Component group of the stabilizer in general position for the action on
/// the Lie algebra of the adjoint quotient: the kernel of the Weyl group
/// acting mod the characteristic.
AdjointStabilizerReport adjoint_stabilizer(const GroupDescriptor& d);

}  // namespace edt::edbounds
