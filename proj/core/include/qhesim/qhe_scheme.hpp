#pragma once

#include "qhesim/rng.hpp"
#include "qhesim/states.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qhesim {

/// One-round homomorphic encryption scheme over an enumerable key space:
/// a delegable channel family together with KeyGen / Enc / Eval / Dec.
/// Keys are L-bit strings (L <= 8) so key expectations are exact sums.
class QheScheme {
  public:
    struct FamilyMember {
        std::string key;      // "x0x1", e.g. "01"
        KrausChannel ideal;   // F, acts on the plaintext space
        KrausChannel eval;    // F-hat, acts on the ciphertext space
    };

    QheScheme(std::string name, int key_length, RegisterShape input_shape,
              RegisterShape cipher_shape, std::vector<FamilyMember> family,
              std::vector<KrausChannel> enc_by_key, std::vector<KrausChannel> dec_by_key,
              std::vector<std::string> key_labels);

    const std::string &name() const { return name_; }
    int key_length() const { return key_length_; }
    std::size_t num_keys() const { return enc_by_key_.size(); }

    const RegisterShape &input_shape() const { return input_shape_; }
    const RegisterShape &cipher_shape() const { return cipher_shape_; }

    std::vector<std::string> family_keys() const;
    const FamilyMember &family_member(const std::string &key) const;

    const KrausChannel &enc_channel(std::uint32_t key) const;
    const KrausChannel &dec_channel(std::uint32_t key) const;
    const std::string &key_label(std::uint32_t key) const;

    std::uint32_t key_gen(Rng &rng) const;

    /// Dec_k . Eval(F) . Enc_k as one channel on the plaintext space.
    KrausChannel round_trip(const std::string &family_key, std::uint32_t key) const;

    /// Exact key average of Enc_k[rho].
    ComplexMatrix average_ciphertext(const ComplexMatrix &rho) const;

  private:
    std::string name_;
    int key_length_;
    RegisterShape input_shape_;
    RegisterShape cipher_shape_;
    std::vector<FamilyMember> family_;
    std::vector<KrausChannel> enc_by_key_;
    std::vector<KrausChannel> dec_by_key_;
    std::vector<std::string> key_labels_;
};

/// Plaintexts in the clear: L = 0, Enc = Dec = identity, Eval(F) = F.
QheScheme scheme_trivial();
/// Correlated X pads: key (a, b1, b2), Enc = X^a Z^{b1} (x) X^a Z^{b2},
/// Dec flips the output bit by X^a. Perfectly correct; leaks the parity.
QheScheme scheme_correlated_pad();
/// Full independent quantum one-time pad: key (a1, b1, a2, b2). Perfectly
/// data private; the pad scrambles the channel's index bit half the time.
QheScheme scheme_independent_qotp();

std::vector<std::string> scheme_names();
QheScheme scheme_by_name(const std::string &name);

/// A named pure state used as a documented metric-evaluation candidate.
struct NamedPureState {
    std::string name;
    PureState state;
    std::vector<std::size_t> plaintext_registers; // registers carrying A
};

/// Candidate inputs for the correctness supremum: computational-basis states,
/// the four Bell states on the plaintext registers, and `random_count` seeded
/// random purifications with a two-qubit reference.
std::vector<NamedPureState> correctness_inputs(std::uint64_t seed, std::size_t random_count = 64);

/// Candidate plaintext pairs for the data-privacy supremum.
struct NamedDensity {
    std::string name;
    ComplexMatrix mat; // on the plaintext space
};
std::vector<NamedDensity> privacy_input_pool();
std::vector<std::pair<NamedDensity, NamedDensity>> privacy_random_pairs(std::uint64_t seed,
                                                                        std::size_t count = 64);

/// Candidate ciphertext-side probes for the circuit-privacy attack search:
/// basis probes, a Bell probe on the first ciphertext qubit, and the
/// maximally entangled probe.
std::vector<NamedPureState> cheating_probes();

/// One-sided metric value plus the witness achieving it.
struct MetricResult {
    double value = 0.0;
    std::string witness;
};

/// Certified lower bound on the correctness parameter: max over family
/// members, keys and documented inputs of the trace distance between the
/// decrypted round trip and the ideal channel output. Distances below the
/// metric noise floor report as exact zeros.
MetricResult correctness_eps(const QheScheme &scheme, std::uint64_t seed = default_seed,
                             std::size_t random_count = 64);

/// Certified lower bound on the data-privacy parameter: max over documented
/// plaintext pairs of the trace distance between exact key-averaged
/// ciphertexts.
MetricResult data_privacy_eps(const QheScheme &scheme, std::uint64_t seed = default_seed,
                              std::size_t random_count = 64);

/// Error of multi-channel hypothesis testing with a fixed strategy:
/// max over family members F of Tr((I - M_F) (F (x) id)[psi']), a valid
/// circuit-privacy upper bound. The POVM is keyed by family keys and acts on
/// the ideal output joined with psi's reference registers.
double hypothesis_testing_error(const QheScheme &scheme, const NamedPureState &psi_prime,
                                const Povm &povm);

/// Hypothesis-testing witness of the strong-OT family: plaintext |0,0> with
/// a two-qubit reference in |0,0>.
NamedPureState hypothesis_witness_state();
/// The POVM {I_2 (x) (1/2)|x0><x0| (x) I_ref} keyed by family keys.
Povm hypothesis_witness_povm();
/// The uninformative POVM {I/4} keyed by family keys.
Povm hypothesis_uniform_povm();

/// Best certified circuit-privacy upper bound: the identity-simulator route
/// when Eval(F) coincides with F for every family member, else the best
/// hypothesis-testing candidate.
MetricResult circuit_privacy_ub(const QheScheme &scheme);

/// PGM attack success minus 1/2 for one ciphertext probe (floor at 0).
double circuit_privacy_lb_probe(const QheScheme &scheme, const NamedPureState &psi);
/// Attack success itself (used by the soundness certifications).
double cheating_alice_success(const QheScheme &scheme, const NamedPureState &psi);

/// Best certified circuit-privacy lower bound over the documented probes.
MetricResult circuit_privacy_lb(const QheScheme &scheme);

/// Bundled scheme metrics with the no-go report.
struct SchemeMetrics {
    double eps = 0.0;
    double eps_d = 0.0;
    double eps_c_lb = 0.0;
    double eps_c_ub = 0.0;
    std::string eps_witness;
    std::string eps_d_witness;
    std::string eps_c_lb_witness;
    std::string eps_c_ub_witness;
    double bound_lhs = 0.0;   // eps_d + eps_c_ub + 4 sqrt(eps)
    bool bound_holds = false; // bound_lhs >= 1/2 within tolerance
    bool bounds_consistent = false; // eps_c_lb <= eps_c_ub within tolerance
};

SchemeMetrics scheme_metrics(const QheScheme &scheme, std::uint64_t seed = default_seed,
                             std::size_t random_count = 64);

} // namespace qhesim
