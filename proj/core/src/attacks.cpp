#include "qhesim/attacks.hpp"

#include "qhesim/encoding.hpp"
#include "qhesim/gates.hpp"
#include "qhesim/linalg.hpp"
#include "qhesim/tolerances.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qhesim {

namespace {

std::string pair_name(int p) {
    return "(" + std::to_string(p / 2) + "," + std::to_string(p % 2) + ")";
}

std::array<HonestRunResult, 4> run_all_pairs(const ProtocolOneInstance &inst) {
    return {run_protocol1_honest(inst, 0, 0), run_protocol1_honest(inst, 0, 1),
            run_protocol1_honest(inst, 1, 0), run_protocol1_honest(inst, 1, 1)};
}

struct FidelityTable {
    double values[4][4] = {};
    double f = 0.0;
    int arg_a = 0, arg_b = 1;
    double ordered_pair_sum = 0.0; // over ordered distinct pairs
};

FidelityTable fidelity_table(const std::array<HonestRunResult, 4> &runs) {
    FidelityTable t;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            const double fab = fidelity(runs[a].sigma, runs[b].sigma);
            t.values[a][b] = t.values[b][a] = fab;
            t.ordered_pair_sum += 2.0 * fab;
            if (fab > t.f) {
                t.f = fab;
                t.arg_a = a;
                t.arg_b = b;
            }
        }
    return t;
}

} // namespace

std::string to_json(const AttackReport &report) {
    auto rounded = [](double v) { return std::strtod(format_real(v).c_str(), nullptr); };
    nlohmann::ordered_json j;
    j["attack"] = report.attack;
    j["success"] = rounded(report.success);
    j["bound"] = rounded(report.bound);
    j["slack"] = rounded(report.slack);
    j["witness"] = report.witness;
    return j.dump();
}

AttackReport alice_pgm_attack(const ProtocolOneInstance &inst) {
    const auto runs = run_all_pairs(inst);
    const auto fids = fidelity_table(runs);
    const double delta = completeness_delta(inst).delta;

    std::vector<WeightedState> ensemble;
    for (int p = 0; p < 4; ++p) ensemble.push_back({pair_name(p), 0.25, runs[p].sigma});
    const double success = pgm(ensemble).success;

    AttackReport report;
    report.attack = "alice-pgm";
    report.success = success;
    report.bound = 1.0 - fids.f - std::sqrt(delta * (1.0 - delta));
    report.slack = report.success - report.bound;
    report.witness = "PGM over the four final states of " + inst.name;
    return report;
}

SuperpositionAttackDetail bob_superposition_attack_detail(const ProtocolOneInstance &inst,
                                                          int pair_a, int pair_b) {
    if (pair_a == pair_b || pair_a < 0 || pair_b < 0 || pair_a > 3 || pair_b > 3)
        throw std::invalid_argument("bob_superposition_attack: branch pairs must be distinct");

    SuperpositionAttackDetail detail;
    detail.branch_pair_a = pair_a;
    detail.branch_pair_b = pair_b;
    detail.delta = completeness_delta(inst).delta;

    const auto run_a = run_protocol1_honest(inst, pair_a / 2, pair_a % 2);
    const auto run_b = run_protocol1_honest(inst, pair_b / 2, pair_b % 2);
    detail.f = fidelity(run_a.sigma, run_b.sigma);

    // Joint layout [A, R_A, R_B, B] with a two-dimensional branch register.
    const RegisterShape joint = inst.joint_shape().extended_with(RegisterShape{2});
    const std::size_t branch_reg = joint.num_registers() - 1;

    ComplexMatrix branch_plus(2, 1);
    branch_plus(0, 0) = branch_plus(1, 0) = 1.0 / std::sqrt(2.0);
    ComplexMatrix vec = kron(
        kron(inst.initial_state.vec(), basis_ket(inst.bob_memory_shape.total_dim(), 0)),
        branch_plus);

    // Branch-controlled rounds.
    auto controlled = [&](const ComplexMatrix &u0, const ComplexMatrix &u1,
                          std::vector<std::size_t> positions) {
        positions.push_back(branch_reg);
        const ComplexMatrix op =
            kron(u0, basis_projector(2, 0)) + kron(u1, basis_projector(2, 1));
        return lift_operator(op, positions, joint);
    };
    const auto &rounds_a = inst.bob_unitaries[pair_a];
    const auto &rounds_b = inst.bob_unitaries[pair_b];
    for (int round = 0; round < inst.rounds; ++round) {
        vec = mat_vec(controlled(rounds_a[round], rounds_b[round], inst.bob_positions()), vec);
        vec = mat_vec(lift_operator(inst.alice_unitaries[round], inst.alice_positions(), joint),
                      vec);
    }

    // Honest Alice never aborts on either branch.
    {
        const ComplexMatrix accept =
            lift_operator(inst.alice_accept, inst.alice_positions(), joint);
        detail.accept_defect = (vec - mat_vec(accept, vec)).frobenius_norm();
    }

    // Align the branch purifications on Bob's memory (Uhlmann unitary).
    const auto uhlmann =
        uhlmann_unitary(run_a.final_state, run_b.final_state, inst.bob_memory_positions());
    vec = mat_vec(controlled(uhlmann.unitary, ComplexMatrix::identity(uhlmann.unitary.rows()),
                             inst.bob_memory_positions()),
                  vec);

    // Cauchy-Schwarz margin of the cross terms the floor derivation bounds.
    {
        const ComplexMatrix phi0 =
            mat_vec(lift_operator(uhlmann.unitary, inst.bob_memory_positions(),
                                  inst.joint_shape()),
                    run_a.final_state.vec());
        const ComplexMatrix &phi1 = run_b.final_state.vec();
        double margin = 1.0;
        for (const auto &elem : inst.final_measurement.elements()) {
            const ComplexMatrix n =
                lift_operator(elem.op, inst.alice_positions(), inst.joint_shape());
            const cplx cross = (phi1.adjoint() * n * phi0)(0, 0);
            const double d0 = std::abs((phi0.adjoint() * n * phi0)(0, 0));
            const double d1 = std::abs((phi1.adjoint() * n * phi1)(0, 0));
            margin = std::min(margin, std::sqrt(d0 * d1) - std::abs(cross));
        }
        detail.cauchy_schwarz_margin = margin;
    }

    // Honest Alice's measurement with canonical Kraus operators E = N^{1/2};
    // Bob keeps his memory and the branch register.
    std::vector<std::size_t> bob_residual = inst.bob_memory_positions();
    bob_residual.push_back(branch_reg);

    ComplexMatrix rho_given[2] = {ComplexMatrix(0, 0), ComplexMatrix(0, 0)};
    double p_given[2] = {0.0, 0.0};
    for (const auto &elem : inst.final_measurement.elements()) {
        const int alice_i = elem.key[0] - '0';
        const ComplexMatrix kraus =
            lift_operator(sqrt_psd(elem.op), inst.alice_positions(), joint);
        const ComplexMatrix post = mat_vec(kraus, vec);
        const ComplexMatrix reduced = partial_trace(post * post.adjoint(), joint, bob_residual);
        if (rho_given[alice_i].rows() == 0)
            rho_given[alice_i] = reduced;
        else
            rho_given[alice_i] += reduced;
        p_given[alice_i] += std::pow(post.frobenius_norm(), 2.0);
    }

    if (p_given[0] < 1e-12 || p_given[1] < 1e-12)
        throw std::domain_error("bob_superposition_attack: an index outcome never occurs");
    const RegisterShape residual_shape = kept_shape(joint, bob_residual);
    DensityState rho0(cplx{1.0 / p_given[0], 0.0} * rho_given[0], residual_shape);
    DensityState rho1(cplx{1.0 / p_given[1], 0.0} * rho_given[1], residual_shape);

    detail.residual_trace_distance = trace_distance(rho0, rho1);
    detail.residual_floor = detail.f - 2.0 * std::sqrt(2.0 * detail.delta);

    const auto discrimination = helstrom(rho0, rho1);
    const double success = p_given[0] * (discrimination.povm.element("0") * rho0.mat()).trace().real() +
                           p_given[1] * (discrimination.povm.element("1") * rho1.mat()).trace().real();

    detail.report.attack = "bob-superposition";
    detail.report.success = success;
    detail.report.bound = 0.5 * (1.0 + detail.f - 2.0 * std::sqrt(2.0 * detail.delta));
    detail.report.slack = detail.report.success - detail.report.bound;
    detail.report.witness = "branches " + pair_name(pair_a) + " and " + pair_name(pair_b) +
                            " of " + inst.name;
    return detail;
}

AttackReport bob_superposition_attack(const ProtocolOneInstance &inst, int pair_a, int pair_b) {
    return bob_superposition_attack_detail(inst, pair_a, pair_b).report;
}

AttackReport bob_superposition_attack(const ProtocolOneInstance &inst) {
    const auto runs = run_all_pairs(inst);
    const auto fids = fidelity_table(runs);
    return bob_superposition_attack(inst, fids.arg_a, fids.arg_b);
}

AttackReport bob_helstrom_attack_on_protocol4(const QheScheme &scheme, std::uint64_t seed) {
    const ComplexMatrix in0 = kron(basis_ket(2, 0), basis_ket(2, 0));
    const ComplexMatrix in1 = kron(basis_ket(2, 1), basis_ket(2, 0));
    const DensityState avg0(scheme.average_ciphertext(in0 * in0.adjoint()), scheme.cipher_shape());
    const DensityState avg1(scheme.average_ciphertext(in1 * in1.adjoint()), scheme.cipher_shape());

    AttackReport report;
    report.attack = "bob-helstrom-protocol4";
    report.success = helstrom(avg0, avg1).success;
    report.bound = 0.5 * (1.0 + data_privacy_eps(scheme, seed).value);
    report.slack = report.bound - report.success; // ceiling
    report.witness = "Helstrom on key-averaged ciphertexts of |0,0> vs |1,0>, scheme " +
                     scheme.name();
    return report;
}

OtBoundReport certify_ot_bound(const ProtocolOneInstance &inst) {
    OtBoundReport rep;
    rep.instance = inst.name;
    rep.delta = completeness_delta(inst).delta;

    const auto runs = run_all_pairs(inst);
    const auto fids = fidelity_table(runs);
    rep.f = fids.f;

    const auto alice = alice_pgm_attack(inst);
    rep.p_a = alice.success;
    rep.p_a_floor = alice.bound;
    rep.pgm_bound = 1.0 - fids.ordered_pair_sum / 8.0;

    const auto bob = bob_superposition_attack_detail(inst, fids.arg_a, fids.arg_b);
    rep.p_b = bob.report.success;
    rep.p_b_floor = bob.report.bound;
    rep.residual_trace_gap = bob.residual_trace_distance - bob.residual_floor;
    rep.cauchy_schwarz_margin = bob.cauchy_schwarz_margin;

    rep.lhs = rep.p_a + 2.0 * rep.p_b + 4.0 * std::sqrt(rep.delta);
    rep.slack = rep.lhs - 2.0;

    // The complement-pair fidelity bound is implied only while the required
    // measurement beats guessing (delta <= 1/2); beyond that it is vacuous.
    rep.complement_bound =
        rep.delta <= 0.5 ? 2.0 * std::sqrt(rep.delta * (1.0 - rep.delta)) : 1.0;
    rep.max_complement_fidelity =
        std::max(fids.values[pair_index(0, 0)][pair_index(1, 1)],
                 fids.values[pair_index(0, 1)][pair_index(1, 0)]);

    rep.pass = rep.p_a >= rep.p_a_floor - tol::theorem &&
               rep.p_b >= rep.p_b_floor - tol::theorem && rep.slack >= -tol::theorem &&
               rep.max_complement_fidelity <= rep.complement_bound + tol::theorem &&
               rep.p_a >= rep.pgm_bound - tol::completeness &&
               rep.residual_trace_gap >= -tol::theorem &&
               rep.cauchy_schwarz_margin >= -tol::completeness;
    return rep;
}

SchemeBoundReport certify_scheme_bound(const QheScheme &scheme, std::uint64_t seed) {
    SchemeBoundReport rep;
    rep.scheme = scheme.name();

    rep.eps = correctness_eps(scheme, seed).value;
    rep.eps_d = data_privacy_eps(scheme, seed).value;
    rep.eps_c_ub = circuit_privacy_ub(scheme).value;

    rep.honest_success = 1.0;
    for (int i = 0; i < 2; ++i)
        for (int x0 = 0; x0 < 2; ++x0)
            for (int x1 = 0; x1 < 2; ++x1)
                rep.honest_success =
                    std::min(rep.honest_success, protocol4_success_prob(scheme, i, x0, x1));
    rep.delta_ot = 1.0 - rep.honest_success;

    rep.p_a = 0.0;
    for (const auto &probe : cheating_probes())
        rep.p_a = std::max(rep.p_a, cheating_alice_success(scheme, probe));
    rep.p_a_ceiling = 0.5 + rep.eps_c_ub;

    const auto bob = bob_helstrom_attack_on_protocol4(scheme, seed);
    rep.p_b = bob.success;
    rep.p_b_ceiling = bob.bound;

    rep.lhs = rep.eps_d + rep.eps_c_ub + 4.0 * std::sqrt(rep.eps);
    rep.consistent = rep.delta_ot <= rep.eps + tol::theorem &&
                     rep.p_a <= rep.p_a_ceiling + tol::theorem &&
                     rep.p_b <= rep.p_b_ceiling + tol::theorem;
    rep.bound_holds = rep.lhs >= 0.5 - tol::completeness;
    return rep;
}

} // namespace qhesim
