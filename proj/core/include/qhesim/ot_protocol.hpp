#pragma once

#include "qhesim/distance.hpp"
#include "qhesim/qhe_scheme.hpp"
#include "qhesim/rng.hpp"
#include "qhesim/states.hpp"

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qhesim {

/// Joint outcome of an oblivious-transfer run. `index` is Alice's index bit
/// in the semi-random flavor and -1 in the standard flavor.
struct OtOutcome {
    bool alice_aborted = false;
    bool bob_accepted = true;
    int index = -1;
    int x_hat = -1;
};

inline int pair_index(int x0, int x1) { return x0 * 2 + x1; }

/// One JSON-lines transcript entry; payloads are optional base64 dumps of the
/// sent density matrix (little-endian real/imag double pairs, row-major).
struct TranscriptMessage {
    int round = 0;
    std::string sender;
    std::vector<std::size_t> register_dims;
    std::string payload_digest;
    std::string payload_b64; // empty unless payload dumping is enabled
};

class TranscriptLogger {
  public:
    explicit TranscriptLogger(bool include_payloads = false)
        : include_payloads_(include_payloads) {}

    void record(int round, const std::string &sender, const RegisterShape &dims,
                const ComplexMatrix &payload);
    const std::vector<TranscriptMessage> &messages() const { return messages_; }

    std::string to_json_lines() const;
    static std::vector<TranscriptMessage> parse_json_lines(const std::string &text);

  private:
    bool include_payloads_;
    std::vector<TranscriptMessage> messages_;
};

/// Generic N-round semi-random OT instance. Joint register layout is
/// [message A..., Alice memory R_A..., Bob memory R_B...]; Bob's unitaries
/// act on (A, R_B), Alice's on (A, R_A). The final POVM over outcomes
/// (i, x_hat) is keyed "ix" ("00", "01", "10", "11") and acts on (A, R_A).
struct ProtocolOneInstance {
    std::string name;
    int rounds = 1;
    RegisterShape message_shape;      // A
    RegisterShape alice_memory_shape; // R_A
    RegisterShape bob_memory_shape;   // R_B
    PureState initial_state;          // Alice's |psi> on A (x) R_A
    std::array<std::vector<ComplexMatrix>, 4> bob_unitaries; // [pair][round] on A (x) R_B
    std::vector<ComplexMatrix> alice_unitaries;              // [round] on A (x) R_A
    ComplexMatrix alice_accept; // projector on A (x) R_A
    ComplexMatrix bob_accept;   // projector on R_B
    Povm final_measurement;

    RegisterShape joint_shape() const;
    std::vector<std::size_t> message_positions() const;
    std::vector<std::size_t> alice_positions() const; // A + R_A
    std::vector<std::size_t> bob_positions() const;   // A + R_B
    std::vector<std::size_t> bob_memory_positions() const;
};

/// Two perfectly encoded Bell pairs, one round, X-parity readout:
/// delta = 0, all four final states orthogonal (f = 0).
ProtocolOneInstance bell_instance();

/// Bell pairs with phase encoding of angle theta*x_j and the optimal pair
/// measurement: delta(theta) = (1 - sin(theta/2))/2, f(theta) = cos(theta/2).
ProtocolOneInstance rotation_instance(double theta);

/// A pointer qubit in Alice's memory selects which pair carries data:
/// delta = 0 with f = 1/2 (states differing in one bit overlap).
ProtocolOneInstance pointer_instance();

/// Degenerate instance: Bob ignores his data bits and copies Alice's coin
/// qubit into his memory. f = 1, delta = 1/2, and Bob can read i exactly.
ProtocolOneInstance no_encoding_instance();

struct HonestRunResult {
    PureState final_state;                       // on A (x) R_A (x) R_B
    DensityState sigma;                          // Alice's marginal on A (x) R_A
    std::map<std::string, double> outcome_probs; // over (i, x_hat) keys
    double accept_prob = 1.0;
};

HonestRunResult run_protocol1_honest(const ProtocolOneInstance &inst, int x0, int x1,
                                     TranscriptLogger *log = nullptr);

/// Completeness error extracted from exact honest-run statistics, together
/// with the per-input error probabilities of the required-measurement shape.
/// Throws std::domain_error when the index marginal deviates from uniform by
/// more than 1e-6.
struct CompletenessReport {
    double delta = 0.0;
    double max_index_marginal_dev = 0.0;
    std::array<std::array<double, 2>, 4> theta{}; // [pair(x0,x1)][i]
};
CompletenessReport completeness_delta(const ProtocolOneInstance &inst);

/// Scripted semi-random OT sub-protocol: given Bob's (y0, y1), returns
/// Alice's (j, y_hat) or abort.
struct SrotResult {
    bool alice_aborted = false;
    bool bob_accepted = true;
    int j = -1;
    int y_hat = -1;
};
using SrotRunner = std::function<SrotResult(int y0, int y1, Rng &rng)>;

SrotRunner ideal_srot_runner();
SrotRunner noisy_srot_runner(double flip_prob);
SrotRunner aborting_srot_runner();

/// Scripted standard OT sub-protocol: Alice's chosen index and Bob's bits in,
/// Alice's learned bit out.
struct StandardResult {
    bool alice_aborted = false;
    bool bob_accepted = true;
    int x_hat = -1;
};
using StandardRunner = std::function<StandardResult(int i, int x0, int x1, Rng &rng)>;

StandardRunner ideal_standard_runner();
StandardRunner noisy_standard_runner(double flip_prob);
StandardRunner aborting_standard_runner();

/// Standard OT from a semi-random sub-protocol: Bob masks his data bits with
/// the sub-protocol keys (y0, y1); Alice requests r = i xor j and unmasks.
/// Sub-protocol aborts propagate to both parties.
OtOutcome srot_to_standard(const SrotRunner &sub, int i, int x0, int x1, Rng &rng);
/// Variant with Bob's key bits pinned (for hand-traced cases).
OtOutcome srot_to_standard_with_keys(const SrotRunner &sub, int i, int x0, int x1, int y0, int y1,
                                     Rng &rng);

/// Semi-random OT from a standard sub-protocol: Alice draws i uniformly.
OtOutcome standard_to_srot(const StandardRunner &sub, int x0, int x1, Rng &rng);

/// One run of the standard-OT-from-QHE construction: Alice encrypts |i,0>,
/// Bob evaluates his strong OT channel, Alice decrypts and measures the
/// optimal two-outcome discrimination between the key-conditioned output
/// hypotheses for x_i = 0 and x_i = 1.
struct Protocol4Run {
    OtOutcome outcome;
    std::uint32_t key = 0;
    double p_correct = 0.0; // exact Pr[x_hat = x_i] for this key
};
Protocol4Run ot_from_qhe(const QheScheme &scheme, int i, int x0, int x1, Rng &rng,
                         TranscriptLogger *log = nullptr);

/// Exact Pr[x_hat = x_i] for a fixed key, and its exact average over keys.
double protocol4_success_prob(const QheScheme &scheme, int i, int x0, int x1, std::uint32_t key);
double protocol4_success_prob(const QheScheme &scheme, int i, int x0, int x1);

} // namespace qhesim
