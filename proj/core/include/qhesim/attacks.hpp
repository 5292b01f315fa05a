#pragma once

#include "qhesim/ot_protocol.hpp"
#include "qhesim/qhe_scheme.hpp"

#include <string>

namespace qhesim {

/// One adversary evaluation against the guaranteed bound. For floor-type
/// bounds slack = success - bound >= 0; for ceiling-type bounds
/// slack = bound - success >= 0.
struct AttackReport {
    std::string attack;
    double success = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    std::string witness;
};

/// Cheating Alice on Protocol 1: follow the protocol honestly but replace the
/// final measurement by the pretty good measurement over the four final
/// states and guess both data bits. Floor: 1 - f - sqrt(delta(1-delta)).
AttackReport alice_pgm_attack(const ProtocolOneInstance &inst);

/// One-line JSON form {attack, success, bound, slack, witness}.
std::string to_json(const AttackReport &report);

/// Cheating Bob on Protocol 1: run the rounds controlled on a branch
/// register holding the superposition of the two fidelity-maximizing data
/// pairs, align purifications with an Uhlmann unitary on Bob's memory, let
/// honest Alice measure, then discriminate Bob's residual states given
/// Alice's index. Floor: (1 + f - 2 sqrt(2 delta))/2.
AttackReport bob_superposition_attack(const ProtocolOneInstance &inst);
AttackReport bob_superposition_attack(const ProtocolOneInstance &inst, int pair_a, int pair_b);

/// Intermediate quantities recorded by the superposition attack.
struct SuperpositionAttackDetail {
    AttackReport report;
    double delta = 0.0;
    double f = 0.0;
    double residual_trace_distance = 0.0; // Delta(rho_B^(0), rho_B^(1))
    double residual_floor = 0.0;          // f - 2 sqrt(2 delta)
    double accept_defect = 0.0;           // norm of the rejected component
    double cauchy_schwarz_margin = 0.0;   // min over outcomes of rhs - lhs
    int branch_pair_a = 0;
    int branch_pair_b = 0;
};
SuperpositionAttackDetail bob_superposition_attack_detail(const ProtocolOneInstance &inst,
                                                          int pair_a, int pair_b);

/// Cheating Bob on Protocol 4: Helstrom between the key-averaged ciphertexts
/// of |0,0> and |1,0>. Ceiling: (1 + eps_d)/2.
AttackReport bob_helstrom_attack_on_protocol4(const QheScheme &scheme,
                                              std::uint64_t seed = default_seed);

/// Certification of the OT trade-off P_A + 2 P_B + 4 sqrt(delta) >= 2 on one
/// instance, with every intermediate inequality the attacks rely on.
struct OtBoundReport {
    std::string instance;
    double delta = 0.0;
    double f = 0.0;
    double p_a = 0.0;
    double p_a_floor = 0.0;
    double p_b = 0.0;
    double p_b_floor = 0.0;
    double lhs = 0.0;   // p_a + 2 p_b + 4 sqrt(delta)
    double slack = 0.0; // lhs - 2
    double max_complement_fidelity = 0.0;
    double complement_bound = 0.0; // 2 sqrt(delta (1 - delta)) while delta <= 1/2
    double pgm_bound = 0.0;        // 1 - (1/8) sum of pairwise fidelities
    double residual_trace_gap = 0.0;
    double cauchy_schwarz_margin = 0.0;
    bool pass = false;
};
OtBoundReport certify_ot_bound(const ProtocolOneInstance &inst);

/// Consistency chain for the QHE-to-OT reduction on one scheme.
struct SchemeBoundReport {
    std::string scheme;
    double eps = 0.0;
    double eps_d = 0.0;
    double eps_c_ub = 0.0;
    double delta_ot = 0.0; // worst honest Protocol-4 error, exact over keys
    double p_a = 0.0;      // cheating-Alice success (PGM over probes)
    double p_a_ceiling = 0.0;
    double p_b = 0.0; // cheating-Bob success (Helstrom on averages)
    double p_b_ceiling = 0.0;
    double honest_success = 0.0; // min over (i, x0, x1), exact over keys
    double lhs = 0.0;            // eps_d + eps_c_ub + 4 sqrt(eps)
    bool consistent = false;
    bool bound_holds = false;
};
SchemeBoundReport certify_scheme_bound(const QheScheme &scheme, std::uint64_t seed = default_seed);

} // namespace qhesim
