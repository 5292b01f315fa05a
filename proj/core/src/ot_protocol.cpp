#include "qhesim/ot_protocol.hpp"

#include "qhesim/encoding.hpp"
#include "qhesim/gates.hpp"
#include "qhesim/linalg.hpp"
#include "qhesim/tolerances.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qhesim {

void TranscriptLogger::record(int round, const std::string &sender, const RegisterShape &dims,
                              const ComplexMatrix &payload) {
    TranscriptMessage msg;
    msg.round = round;
    msg.sender = sender;
    msg.register_dims = dims.dims;
    msg.payload_digest = matrix_digest(payload);
    if (include_payloads_) msg.payload_b64 = base64_encode(matrix_to_bytes(payload));
    messages_.push_back(std::move(msg));
}

std::string TranscriptLogger::to_json_lines() const {
    std::ostringstream out;
    for (const auto &m : messages_) {
        nlohmann::ordered_json j;
        j["round"] = m.round;
        j["sender"] = m.sender;
        j["register_dims"] = m.register_dims;
        j["payload_digest"] = m.payload_digest;
        if (!m.payload_b64.empty()) j["payload"] = m.payload_b64;
        out << j.dump() << "\n";
    }
    return out.str();
}

std::vector<TranscriptMessage> TranscriptLogger::parse_json_lines(const std::string &text) {
    std::vector<TranscriptMessage> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        TranscriptMessage m;
        m.round = j.at("round").get<int>();
        m.sender = j.at("sender").get<std::string>();
        m.register_dims = j.at("register_dims").get<std::vector<std::size_t>>();
        m.payload_digest = j.at("payload_digest").get<std::string>();
        if (j.contains("payload")) m.payload_b64 = j.at("payload").get<std::string>();
        out.push_back(std::move(m));
    }
    return out;
}

RegisterShape ProtocolOneInstance::joint_shape() const {
    return message_shape.extended_with(alice_memory_shape).extended_with(bob_memory_shape);
}

std::vector<std::size_t> ProtocolOneInstance::message_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < message_shape.num_registers(); ++i) out.push_back(i);
    return out;
}

std::vector<std::size_t> ProtocolOneInstance::alice_positions() const {
    std::vector<std::size_t> out;
    const std::size_t n = message_shape.num_registers() + alice_memory_shape.num_registers();
    for (std::size_t i = 0; i < n; ++i) out.push_back(i);
    return out;
}

std::vector<std::size_t> ProtocolOneInstance::bob_positions() const {
    std::vector<std::size_t> out = message_positions();
    for (std::size_t i = 0; i < bob_memory_shape.num_registers(); ++i)
        out.push_back(message_shape.num_registers() + alice_memory_shape.num_registers() + i);
    return out;
}

std::vector<std::size_t> ProtocolOneInstance::bob_memory_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bob_memory_shape.num_registers(); ++i)
        out.push_back(message_shape.num_registers() + alice_memory_shape.num_registers() + i);
    return out;
}

namespace {

std::string outcome_key(int i, int x_hat) {
    return std::string{static_cast<char>('0' + i), static_cast<char>('0' + x_hat)};
}

// (I_4 + s * X(x)X)/2, the X-parity projectors of a qubit pair.
ComplexMatrix xx_parity_projector(int parity_bit) {
    const double s = parity_bit == 0 ? 1.0 : -1.0;
    ComplexMatrix xx = kron(pauli_x(), pauli_x());
    return cplx{0.5, 0.0} * (ComplexMatrix::identity(4) + cplx{s, 0.0} * xx);
}

// Two Bell pairs shared between message and memory halves,
// layout [A0, A1, RA0, RA1]: amplitude (a0 a1 r0 r1) = 1/2 [a0=r0][a1=r1].
PureState two_bell_pairs() {
    ComplexMatrix v(16, 1);
    for (std::size_t a0 = 0; a0 < 2; ++a0)
        for (std::size_t a1 = 0; a1 < 2; ++a1) v(((a0 * 2 + a1) * 2 + a0) * 2 + a1, 0) = 0.5;
    return PureState(std::move(v), RegisterShape{2, 2, 2, 2});
}

// Pair i of the [A0, A1, RA0, RA1] space.
std::vector<std::size_t> pair_positions_4q(int i) {
    return {static_cast<std::size_t>(i), static_cast<std::size_t>(2 + i)};
}

Povm pair_readout_povm(const ComplexMatrix &m0, const ComplexMatrix &m1) {
    const RegisterShape space{2, 2, 2, 2};
    std::vector<PovmElement> elems;
    for (int i = 0; i < 2; ++i) {
        const auto pos = pair_positions_4q(i);
        elems.push_back({outcome_key(i, 0), cplx{0.5, 0.0} * lift_operator(m0, pos, space)});
        elems.push_back({outcome_key(i, 1), cplx{0.5, 0.0} * lift_operator(m1, pos, space)});
    }
    return Povm(std::move(elems));
}

ComplexMatrix on_bob_wire(const ComplexMatrix &two_qubit_gate) {
    // A (x) R_B with a trivial one-dimensional R_B register.
    return kron(two_qubit_gate, ComplexMatrix::identity(1));
}

} // namespace

ProtocolOneInstance bell_instance() {
    ProtocolOneInstance inst{
        "bell",
        1,
        RegisterShape{2, 2},
        RegisterShape{2, 2},
        RegisterShape{1},
        two_bell_pairs(),
        {},
        {ComplexMatrix::identity(16)},
        ComplexMatrix::identity(16),
        ComplexMatrix::identity(1),
        pair_readout_povm(xx_parity_projector(0), xx_parity_projector(1)),
    };
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            inst.bob_unitaries[pair_index(x0, x1)] = {
                on_bob_wire(kron(x0 ? pauli_z() : pauli_i(), x1 ? pauli_z() : pauli_i()))};
    return inst;
}

ProtocolOneInstance rotation_instance(double theta) {
    // A Z-rotation by angle theta puts relative phase 2*theta on the encoded
    // pair, so theta = pi/2 is exactly the Z gate of the Bell encoding.
    auto encoded_pair = [&](double phi) {
        ComplexMatrix v(4, 1);
        v(0, 0) = 1.0 / std::sqrt(2.0);
        v(3, 0) = std::polar(1.0 / std::sqrt(2.0), phi);
        return DensityState(v * v.adjoint(), RegisterShape{2, 2});
    };
    const auto discrimination = helstrom(encoded_pair(0.0), encoded_pair(2.0 * theta));

    ProtocolOneInstance inst{
        "rotation(theta=" + format_real(theta) + ")",
        1,
        RegisterShape{2, 2},
        RegisterShape{2, 2},
        RegisterShape{1},
        two_bell_pairs(),
        {},
        {ComplexMatrix::identity(16)},
        ComplexMatrix::identity(16),
        ComplexMatrix::identity(1),
        pair_readout_povm(discrimination.povm.element("0"), discrimination.povm.element("1")),
    };
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            inst.bob_unitaries[pair_index(x0, x1)] = {
                on_bob_wire(kron(phase_gate(2.0 * theta * x0), phase_gate(2.0 * theta * x1)))};
    return inst;
}

ProtocolOneInstance pointer_instance() {
    // Layout [Pm, Qm | F, Pk, Qk]: branch F=0 carries pair P = (Pm, Pk) as a
    // Bell pair with pair Q in |00>, branch F=1 the other way around.
    ComplexMatrix v(32, 1);
    auto at = [&](std::size_t pm, std::size_t qm, std::size_t f, std::size_t pk,
                  std::size_t qk) -> cplx & {
        return v((((pm * 2 + qm) * 2 + f) * 2 + pk) * 2 + qk, 0);
    };
    for (std::size_t b = 0; b < 2; ++b) {
        at(b, 0, 0, b, 0) = 0.5; // F=0: Phi+ on P, |00> on Q
        at(0, b, 1, 0, b) = 0.5; // F=1: |00> on P, Phi+ on Q
    }
    PureState initial(std::move(v), RegisterShape{2, 2, 2, 2, 2});

    const RegisterShape alice_space{2, 2, 2, 2, 2};
    std::vector<PovmElement> elems;
    for (int i = 0; i < 2; ++i) {
        const ComplexMatrix branch = lift_operator(basis_projector(2, i), {2}, alice_space);
        const std::vector<std::size_t> pair_pos =
            i == 0 ? std::vector<std::size_t>{0, 3} : std::vector<std::size_t>{1, 4};
        for (int xh = 0; xh < 2; ++xh)
            elems.push_back({outcome_key(i, xh),
                             branch * lift_operator(xx_parity_projector(xh), pair_pos, alice_space)});
    }

    ProtocolOneInstance inst{
        "pointer",
        1,
        RegisterShape{2, 2},
        RegisterShape{2, 2, 2},
        RegisterShape{1},
        std::move(initial),
        {},
        {ComplexMatrix::identity(32)},
        ComplexMatrix::identity(32),
        ComplexMatrix::identity(1),
        Povm(std::move(elems)),
    };
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            inst.bob_unitaries[pair_index(x0, x1)] = {
                on_bob_wire(kron(x0 ? pauli_z() : pauli_i(), x1 ? pauli_z() : pauli_i()))};
    return inst;
}

ProtocolOneInstance no_encoding_instance() {
    // Alice's coin |+> is the whole message; Bob copies it into R_B no matter
    // what his data bits are, and Alice's x_hat is a fair coin.
    ComplexMatrix plus(2, 1);
    plus(0, 0) = plus(1, 0) = 1.0 / std::sqrt(2.0);
    PureState initial(std::move(plus), RegisterShape{2, 1});

    std::vector<PovmElement> elems;
    for (int i = 0; i < 2; ++i)
        for (int xh = 0; xh < 2; ++xh)
            elems.push_back({outcome_key(i, xh), cplx{0.5, 0.0} * basis_projector(2, i)});

    ProtocolOneInstance inst{
        "no-encoding",
        1,
        RegisterShape{2},
        RegisterShape{1},
        RegisterShape{2},
        std::move(initial),
        {},
        {ComplexMatrix::identity(2)},
        ComplexMatrix::identity(2),
        ComplexMatrix::identity(2),
        Povm(std::move(elems)),
    };
    for (int p = 0; p < 4; ++p) inst.bob_unitaries[p] = {cnot(0, 1)};
    return inst;
}

HonestRunResult run_protocol1_honest(const ProtocolOneInstance &inst, int x0, int x1,
                                     TranscriptLogger *log) {
    const RegisterShape joint = inst.joint_shape();
    const auto &bob_rounds = inst.bob_unitaries[pair_index(x0, x1)];
    if (static_cast<int>(bob_rounds.size()) != inst.rounds ||
        static_cast<int>(inst.alice_unitaries.size()) != inst.rounds)
        throw std::invalid_argument("run_protocol1_honest: round tables do not match N");

    // Bob's memory starts in |0>.
    ComplexMatrix vec =
        kron(inst.initial_state.vec(), basis_ket(inst.bob_memory_shape.total_dim(), 0));

    const auto bob_pos = inst.bob_positions();
    const auto alice_pos = inst.alice_positions();
    for (int round = 0; round < inst.rounds; ++round) {
        if (log) {
            const DensityState snapshot(vec * vec.adjoint(), joint);
            log->record(round + 1, "alice",
                        inst.message_shape, snapshot.marginal(inst.message_positions()).mat());
        }
        vec = mat_vec(lift_operator(bob_rounds[round], bob_pos, joint), vec);
        if (log) {
            const DensityState snapshot(vec * vec.adjoint(), joint);
            log->record(round + 1, "bob",
                        inst.message_shape, snapshot.marginal(inst.message_positions()).mat());
        }
        vec = mat_vec(lift_operator(inst.alice_unitaries[round], alice_pos, joint), vec);
    }

    HonestRunResult result{PureState(vec, joint),
                           DensityState(ComplexMatrix::identity(1), RegisterShape{1}),
                           {},
                           1.0};

    const ComplexMatrix alice_proj = lift_operator(inst.alice_accept, alice_pos, joint);
    const ComplexMatrix bob_proj =
        lift_operator(inst.bob_accept, inst.bob_memory_positions(), joint);
    const ComplexMatrix accepted = mat_vec(bob_proj, mat_vec(alice_proj, vec));
    result.accept_prob = std::pow(accepted.frobenius_norm(), 2.0);

    result.sigma = DensityState(partial_trace(vec * vec.adjoint(), joint, alice_pos),
                                kept_shape(joint, alice_pos));
    result.outcome_probs = measure(inst.final_measurement, result.sigma);
    return result;
}

CompletenessReport completeness_delta(const ProtocolOneInstance &inst) {
    CompletenessReport report;
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
            const auto run = run_protocol1_honest(inst, x0, x1);
            const int data[2] = {x0, x1};
            double theta_sum = 0.0;
            for (int i = 0; i < 2; ++i) {
                const double p_right = run.outcome_probs.at(outcome_key(i, data[i]));
                const double p_wrong = run.outcome_probs.at(outcome_key(i, 1 - data[i]));
                report.max_index_marginal_dev =
                    std::max(report.max_index_marginal_dev, std::abs(p_right + p_wrong - 0.5));
                report.theta[pair_index(x0, x1)][i] = 2.0 * p_wrong;
                theta_sum += 2.0 * p_wrong;
            }
            report.delta = std::max(report.delta, 0.5 * theta_sum);
        }
    if (report.max_index_marginal_dev > tol::theorem)
        throw std::domain_error("completeness_delta: index marginal is not uniform; "
                                "instance violates the completeness definition");
    return report;
}

SrotRunner ideal_srot_runner() {
    return [](int y0, int y1, Rng &rng) {
        SrotResult r;
        r.j = rng.next_bit();
        r.y_hat = r.j == 0 ? y0 : y1;
        return r;
    };
}

SrotRunner noisy_srot_runner(double flip_prob) {
    return [flip_prob](int y0, int y1, Rng &rng) {
        SrotResult r;
        r.j = rng.next_bit();
        r.y_hat = r.j == 0 ? y0 : y1;
        if (rng.next_double() < flip_prob) r.y_hat ^= 1;
        return r;
    };
}

SrotRunner aborting_srot_runner() {
    return [](int, int, Rng &) {
        SrotResult r;
        r.alice_aborted = true;
        r.bob_accepted = false;
        return r;
    };
}

StandardRunner ideal_standard_runner() {
    return [](int i, int x0, int x1, Rng &) {
        StandardResult r;
        r.x_hat = i == 0 ? x0 : x1;
        return r;
    };
}

StandardRunner noisy_standard_runner(double flip_prob) {
    return [flip_prob](int i, int x0, int x1, Rng &rng) {
        StandardResult r;
        r.x_hat = i == 0 ? x0 : x1;
        if (rng.next_double() < flip_prob) r.x_hat ^= 1;
        return r;
    };
}

StandardRunner aborting_standard_runner() {
    return [](int, int, int, Rng &) {
        StandardResult r;
        r.alice_aborted = true;
        r.bob_accepted = false;
        return r;
    };
}

OtOutcome srot_to_standard_with_keys(const SrotRunner &sub, int i, int x0, int x1, int y0, int y1,
                                     Rng &rng) {
    const SrotResult sr = sub(y0, y1, rng);
    OtOutcome out;
    // Both parties declare aborts; either abort takes the whole run down.
    if (sr.alice_aborted || !sr.bob_accepted) {
        out.alice_aborted = true;
        out.bob_accepted = false;
        return out;
    }
    const int j = sr.j, y_hat = sr.y_hat;
    const int r = i ^ j;                    // Alice's masked request
    const int data[2] = {x0, x1};
    const int s0 = data[r] ^ y0;            // Bob's masked replies
    const int s1 = data[r ^ 1] ^ y1;
    out.x_hat = (j == 0 ? s0 : s1) ^ y_hat; // Alice unmasks her slot
    return out;
}

OtOutcome srot_to_standard(const SrotRunner &sub, int i, int x0, int x1, Rng &rng) {
    const int y0 = rng.next_bit();
    const int y1 = rng.next_bit();
    return srot_to_standard_with_keys(sub, i, x0, x1, y0, y1, rng);
}

OtOutcome standard_to_srot(const StandardRunner &sub, int x0, int x1, Rng &rng) {
    const int i = rng.next_bit();
    const StandardResult sr = sub(i, x0, x1, rng);
    OtOutcome out;
    if (sr.alice_aborted) {
        out.alice_aborted = true;
        out.bob_accepted = sr.bob_accepted;
        return out;
    }
    out.bob_accepted = sr.bob_accepted;
    out.index = i;
    out.x_hat = sr.x_hat;
    return out;
}

namespace {

// Two-qubit plaintext |i,0>.
ComplexMatrix protocol4_input(int i) {
    const ComplexMatrix ket = kron(basis_ket(2, i), basis_ket(2, 0));
    return ket * ket.adjoint();
}

// Optimal measurement of honest Alice: Helstrom between the key-conditioned
// decrypted outputs averaged over the data bit she is not entitled to. The
// kernel of the difference is split evenly so indistinguishable hypotheses
// are answered by a fair coin rather than a fixed bit.
Povm protocol4_measurement(const QheScheme &scheme, int i, std::uint32_t key) {
    const RegisterShape out_shape{2, 2};
    ComplexMatrix hypothesis[2] = {ComplexMatrix(4, 4), ComplexMatrix(4, 4)};
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
            const std::string fk{static_cast<char>('0' + x0), static_cast<char>('0' + x1)};
            const KrausChannel round = scheme.round_trip(fk, key);
            const int xi = i == 0 ? x0 : x1;
            hypothesis[xi] += cplx{0.5, 0.0} * round.apply_to_operator(protocol4_input(i));
        }
    const DensityState h0(hypothesis[0], out_shape);
    const DensityState h1(hypothesis[1], out_shape);
    const ComplexMatrix plus = helstrom(h0, h1).povm.element("0");
    const ComplexMatrix minus = helstrom(h1, h0).povm.element("0");
    const ComplexMatrix kernel = ComplexMatrix::identity(4) - plus - minus;
    return Povm({{"0", plus + cplx{0.5, 0.0} * kernel}, {"1", minus + cplx{0.5, 0.0} * kernel}});
}

} // namespace

double protocol4_success_prob(const QheScheme &scheme, int i, int x0, int x1, std::uint32_t key) {
    const std::string fk{static_cast<char>('0' + x0), static_cast<char>('0' + x1)};
    const ComplexMatrix tau = scheme.round_trip(fk, key).apply_to_operator(protocol4_input(i));
    const auto povm = protocol4_measurement(scheme, i, key);
    const int xi = i == 0 ? x0 : x1;
    const double p = (povm.element(xi == 0 ? "0" : "1") * tau).trace().real();
    return std::min(1.0, std::max(0.0, p));
}

double protocol4_success_prob(const QheScheme &scheme, int i, int x0, int x1) {
    double total = 0.0;
    for (std::uint32_t key = 0; key < scheme.num_keys(); ++key)
        total += protocol4_success_prob(scheme, i, x0, x1, key);
    return total / static_cast<double>(scheme.num_keys());
}

Protocol4Run ot_from_qhe(const QheScheme &scheme, int i, int x0, int x1, Rng &rng,
                         TranscriptLogger *log) {
    if ((i | x0 | x1) < 0 || i > 1 || x0 > 1 || x1 > 1)
        throw std::invalid_argument("ot_from_qhe: inputs must be bits");
    Protocol4Run run;
    run.key = scheme.key_gen(rng);

    const std::string fk{static_cast<char>('0' + x0), static_cast<char>('0' + x1)};
    const ComplexMatrix sigma =
        scheme.enc_channel(run.key).apply_to_operator(protocol4_input(i));
    if (log) log->record(1, "alice", scheme.cipher_shape(), sigma);
    const ComplexMatrix theta = scheme.family_member(fk).eval.apply_to_operator(sigma);
    if (log) log->record(1, "bob", scheme.cipher_shape(), theta);
    const ComplexMatrix tau = scheme.dec_channel(run.key).apply_to_operator(theta);

    const auto povm = protocol4_measurement(scheme, i, run.key);
    const auto probs = measure(povm, DensityState(tau, RegisterShape{2, 2}));
    const int x_hat = rng.next_double() < probs.at("0") ? 0 : 1;

    const int xi = i == 0 ? x0 : x1;
    run.p_correct = probs.at(xi == 0 ? "0" : "1");
    run.outcome.index = -1; // standard flavor: Alice chose i herself
    run.outcome.x_hat = x_hat;
    return run;
}

} // namespace qhesim
