#include "qhesim/qhe_scheme.hpp"

#include "qhesim/distance.hpp"
#include "qhesim/gates.hpp"
#include "qhesim/random_states.hpp"
#include "qhesim/sot_channels.hpp"
#include "qhesim/tolerances.hpp"

#include <cmath>
#include <stdexcept>

namespace qhesim {

QheScheme::QheScheme(std::string name, int key_length, RegisterShape input_shape,
                     RegisterShape cipher_shape, std::vector<FamilyMember> family,
                     std::vector<KrausChannel> enc_by_key, std::vector<KrausChannel> dec_by_key,
                     std::vector<std::string> key_labels)
    : name_(std::move(name)), key_length_(key_length), input_shape_(std::move(input_shape)),
      cipher_shape_(std::move(cipher_shape)), family_(std::move(family)),
      enc_by_key_(std::move(enc_by_key)), dec_by_key_(std::move(dec_by_key)),
      key_labels_(std::move(key_labels)) {
    if (key_length_ < 0 || key_length_ > 8)
        throw std::invalid_argument("QheScheme: key length must be in [0, 8]");
    const std::size_t expected = std::size_t{1} << key_length_;
    if (enc_by_key_.size() != expected || dec_by_key_.size() != expected ||
        key_labels_.size() != expected)
        throw std::invalid_argument("QheScheme: key-indexed tables must have 2^L entries");
    if (family_.empty()) throw std::invalid_argument("QheScheme: empty channel family");
}

std::vector<std::string> QheScheme::family_keys() const {
    std::vector<std::string> keys;
    for (const auto &m : family_) keys.push_back(m.key);
    return keys;
}

const QheScheme::FamilyMember &QheScheme::family_member(const std::string &key) const {
    for (const auto &m : family_)
        if (m.key == key) return m;
    throw std::invalid_argument("QheScheme: unknown family key " + key);
}

const KrausChannel &QheScheme::enc_channel(std::uint32_t key) const {
    if (key >= enc_by_key_.size()) throw std::invalid_argument("QheScheme: key out of range");
    return enc_by_key_[key];
}

const KrausChannel &QheScheme::dec_channel(std::uint32_t key) const {
    if (key >= dec_by_key_.size()) throw std::invalid_argument("QheScheme: key out of range");
    return dec_by_key_[key];
}

const std::string &QheScheme::key_label(std::uint32_t key) const {
    if (key >= key_labels_.size()) throw std::invalid_argument("QheScheme: key out of range");
    return key_labels_[key];
}

std::uint32_t QheScheme::key_gen(Rng &rng) const {
    return static_cast<std::uint32_t>(rng.next_below(num_keys()));
}

KrausChannel QheScheme::round_trip(const std::string &family_key, std::uint32_t key) const {
    return enc_channel(key).then(family_member(family_key).eval).then(dec_channel(key));
}

ComplexMatrix QheScheme::average_ciphertext(const ComplexMatrix &rho) const {
    const std::size_t d = cipher_shape_.total_dim();
    ComplexMatrix avg(d, d);
    for (std::size_t k = 0; k < num_keys(); ++k) avg += enc_by_key_[k].apply_to_operator(rho);
    avg *= cplx{1.0 / static_cast<double>(num_keys()), 0.0};
    return avg;
}

namespace {

std::string family_key_of(int x0, int x1) {
    return std::string{static_cast<char>('0' + x0), static_cast<char>('0' + x1)};
}

std::vector<QheScheme::FamilyMember> sot_family() {
    std::vector<QheScheme::FamilyMember> family;
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            family.push_back(
                {family_key_of(x0, x1), sot_channel_compact(x0, x1), sot_channel_compact(x0, x1)});
    return family;
}

KrausChannel identity_channel_2q() {
    return unitary_channel(ComplexMatrix::identity(4), RegisterShape{2, 2});
}

std::string bit_tuple(std::initializer_list<int> bits) {
    std::string s = "(";
    bool first = true;
    for (int b : bits) {
        if (!first) s += ",";
        s += static_cast<char>('0' + b);
        first = false;
    }
    return s + ")";
}

} // namespace

QheScheme scheme_trivial() {
    return QheScheme("trivial", 0, RegisterShape{2, 2}, RegisterShape{2, 2}, sot_family(),
                     {identity_channel_2q()}, {identity_channel_2q()}, {"()"});
}

QheScheme scheme_correlated_pad() {
    std::vector<KrausChannel> enc, dec;
    std::vector<std::string> labels;
    for (std::uint32_t k = 0; k < 8; ++k) {
        const int a = k & 1, b1 = (k >> 1) & 1, b2 = (k >> 2) & 1;
        enc.push_back(pauli_pad(a, b1, a, b2));
        dec.push_back(pauli_pad(0, 0, a, 0)); // undo the X pad on the output bit
        labels.push_back("(a,b1,b2)=" + bit_tuple({a, b1, b2}));
    }
    return QheScheme("correlated-pad", 3, RegisterShape{2, 2}, RegisterShape{2, 2}, sot_family(),
                     std::move(enc), std::move(dec), std::move(labels));
}

QheScheme scheme_independent_qotp() {
    std::vector<KrausChannel> enc, dec;
    std::vector<std::string> labels;
    for (std::uint32_t k = 0; k < 16; ++k) {
        const int a1 = k & 1, b1 = (k >> 1) & 1, a2 = (k >> 2) & 1, b2 = (k >> 3) & 1;
        enc.push_back(pauli_pad(a1, b1, a2, b2));
        dec.push_back(pauli_pad(0, 0, a2, 0));
        labels.push_back("(a1,b1,a2,b2)=" + bit_tuple({a1, b1, a2, b2}));
    }
    return QheScheme("independent-qotp", 4, RegisterShape{2, 2}, RegisterShape{2, 2}, sot_family(),
                     std::move(enc), std::move(dec), std::move(labels));
}

std::vector<std::string> scheme_names() { return {"trivial", "correlated-pad", "independent-qotp"}; }

QheScheme scheme_by_name(const std::string &name) {
    if (name == "trivial") return scheme_trivial();
    if (name == "correlated-pad") return scheme_correlated_pad();
    if (name == "independent-qotp") return scheme_independent_qotp();
    throw std::invalid_argument("unknown scheme: " + name);
}

namespace {

PureState two_qubit_state(std::initializer_list<cplx> amplitudes) {
    ComplexMatrix v(4, 1);
    std::size_t i = 0;
    for (cplx a : amplitudes) v(i++, 0) = a;
    return PureState(std::move(v), RegisterShape{2, 2});
}

std::vector<NamedPureState> basis_and_bell_states() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<NamedPureState> out;
    out.push_back({"|0,0>", two_qubit_state({1, 0, 0, 0}), {0, 1}});
    out.push_back({"|0,1>", two_qubit_state({0, 1, 0, 0}), {0, 1}});
    out.push_back({"|1,0>", two_qubit_state({0, 0, 1, 0}), {0, 1}});
    out.push_back({"|1,1>", two_qubit_state({0, 0, 0, 1}), {0, 1}});
    out.push_back({"bell-phi+", two_qubit_state({s, 0, 0, s}), {0, 1}});
    out.push_back({"bell-phi-", two_qubit_state({s, 0, 0, -s}), {0, 1}});
    out.push_back({"bell-psi+", two_qubit_state({0, s, s, 0}), {0, 1}});
    out.push_back({"bell-psi-", two_qubit_state({0, s, -s, 0}), {0, 1}});
    return out;
}

} // namespace

std::vector<NamedPureState> correctness_inputs(std::uint64_t seed, std::size_t random_count) {
    std::vector<NamedPureState> out = basis_and_bell_states();
    Rng rng(seed);
    for (std::size_t k = 0; k < random_count; ++k) {
        out.push_back({"random#" + std::to_string(k),
                       PureState(random_unit_vector(16, rng), RegisterShape{2, 2, 2, 2}),
                       {0, 1}});
    }
    return out;
}

std::vector<NamedDensity> privacy_input_pool() {
    // |1,0> second: the first candidate pair is the one the reduction's
    // cheating-Bob analysis discriminates.
    const std::size_t order[8] = {0, 2, 1, 3, 4, 5, 6, 7};
    const auto fixed = basis_and_bell_states();
    std::vector<NamedDensity> out;
    for (std::size_t idx : order) out.push_back({fixed[idx].name, fixed[idx].state.projector()});
    return out;
}

std::vector<std::pair<NamedDensity, NamedDensity>> privacy_random_pairs(std::uint64_t seed,
                                                                        std::size_t count) {
    Rng rng(seed);
    std::vector<std::pair<NamedDensity, NamedDensity>> out;
    for (std::size_t k = 0; k < count; ++k) {
        const ComplexMatrix a = random_unit_vector(4, rng);
        const ComplexMatrix b = random_unit_vector(4, rng);
        out.push_back({{"random-pair#" + std::to_string(k) + ".a", a * a.adjoint()},
                       {"random-pair#" + std::to_string(k) + ".b", b * b.adjoint()}});
    }
    return out;
}

std::vector<NamedPureState> cheating_probes() {
    std::vector<NamedPureState> out;
    auto fixed = basis_and_bell_states();
    for (std::size_t i = 0; i < 4; ++i) out.push_back(fixed[i]); // computational probes

    // Bell probe between the first ciphertext qubit and a reference qubit.
    {
        ComplexMatrix v(8, 1); // registers [A1, A2, R]
        const double s = 1.0 / std::sqrt(2.0);
        v(0, 0) = s; // |0,0,0>
        v(5, 0) = s; // |1,0,1>
        out.push_back({"bell-probe", PureState(std::move(v), RegisterShape{2, 2, 2}), {0, 1}});
    }
    // Maximally entangled probe of the whole ciphertext space.
    {
        ComplexMatrix v(16, 1); // registers [A1, A2, R(dim 4)]
        for (std::size_t m = 0; m < 4; ++m) v(m * 4 + m, 0) = 0.5;
        out.push_back({"choi-probe", PureState(std::move(v), RegisterShape{2, 2, 4}), {0, 1}});
    }
    return out;
}

MetricResult correctness_eps(const QheScheme &scheme, std::uint64_t seed,
                             std::size_t random_count) {
    const auto inputs = correctness_inputs(seed, random_count);
    MetricResult best{0.0, "none (all candidates exact)"};
    for (const auto &fk : scheme.family_keys()) {
        const KrausChannel &ideal = scheme.family_member(fk).ideal;
        for (std::uint32_t key = 0; key < scheme.num_keys(); ++key) {
            const KrausChannel actual = scheme.round_trip(fk, key);
            for (const auto &input : inputs) {
                const DensityState in = input.state.to_density();
                const DensityState out_actual = apply_channel(actual, in, input.plaintext_registers);
                const DensityState out_ideal = apply_channel(ideal, in, input.plaintext_registers);
                const double d = trace_distance(out_actual, out_ideal);
                if (d > best.value && d > tol::metric_noise_floor) {
                    best.value = d;
                    best.witness = "channel F_(" + std::string{fk[0]} + "," + std::string{fk[1]} +
                                   "), key " + scheme.key_label(key) + ", input " + input.name;
                }
            }
        }
    }
    return best;
}

MetricResult data_privacy_eps(const QheScheme &scheme, std::uint64_t seed,
                              std::size_t random_count) {
    MetricResult best{0.0, "none (all averages coincide)"};
    auto consider = [&](const NamedDensity &a, const NamedDensity &b) {
        const double d =
            trace_distance(scheme.average_ciphertext(a.mat), scheme.average_ciphertext(b.mat));
        if (d > best.value && d > tol::metric_noise_floor) {
            best.value = d;
            best.witness = a.name + " vs " + b.name;
        }
    };
    const auto pool = privacy_input_pool();
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) consider(pool[i], pool[j]);
    for (const auto &[a, b] : privacy_random_pairs(seed, random_count)) consider(a, b);
    return best;
}

double hypothesis_testing_error(const QheScheme &scheme, const NamedPureState &psi_prime,
                                const Povm &povm) {
    double worst = 0.0;
    for (const auto &fk : scheme.family_keys()) {
        const DensityState out = apply_channel(scheme.family_member(fk).ideal,
                                               psi_prime.state.to_density(),
                                               psi_prime.plaintext_registers);
        if (povm.dim() != out.dim())
            throw std::invalid_argument("hypothesis_testing_error: POVM dimension mismatch");
        const ComplexMatrix &m = povm.element(fk);
        const double err = 1.0 - (m * out.mat()).trace().real();
        worst = std::max(worst, err);
    }
    return worst;
}

NamedPureState hypothesis_witness_state() {
    ComplexMatrix v(16, 1);
    v(0, 0) = 1.0; // |0,0>|0,0>
    return {"|0,0>|0,0>", PureState(std::move(v), RegisterShape{2, 2, 2, 2}), {0, 1}};
}

Povm hypothesis_witness_povm() {
    std::vector<PovmElement> elems;
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
            const ComplexMatrix m =
                kron(kron(ComplexMatrix::identity(2), cplx{0.5, 0.0} * basis_projector(2, x0)),
                     ComplexMatrix::identity(4));
            elems.push_back({family_key_of(x0, x1), m});
        }
    return Povm(std::move(elems));
}

Povm hypothesis_uniform_povm() {
    std::vector<PovmElement> elems;
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            elems.push_back(
                {family_key_of(x0, x1), cplx{0.25, 0.0} * ComplexMatrix::identity(16)});
    return Povm(std::move(elems));
}

MetricResult circuit_privacy_ub(const QheScheme &scheme) {
    double eval_defect = 0.0;
    for (const auto &fk : scheme.family_keys()) {
        const auto &member = scheme.family_member(fk);
        eval_defect = std::max(eval_defect, choi_distance(member.eval, member.ideal));
    }
    if (eval_defect <= tol::completeness)
        return {0.0, "identity simulator (Eval coincides with the ideal channels)"};

    MetricResult best{1.0, "vacuous"};
    const auto psi = hypothesis_witness_state();
    const double witness_err = hypothesis_testing_error(scheme, psi, hypothesis_witness_povm());
    if (witness_err < best.value)
        best = {witness_err, "hypothesis testing, psi'=|0,0>|0,0>, output-bit POVM"};
    const double uniform_err = hypothesis_testing_error(scheme, psi, hypothesis_uniform_povm());
    if (uniform_err < best.value)
        best = {uniform_err, "hypothesis testing, uniform POVM"};
    return best;
}

double cheating_alice_success(const QheScheme &scheme, const NamedPureState &psi) {
    std::vector<WeightedState> ensemble;
    const auto keys = scheme.family_keys();
    for (const auto &fk : keys) {
        const DensityState out = apply_channel(scheme.family_member(fk).eval,
                                               psi.state.to_density(), psi.plaintext_registers);
        ensemble.push_back({fk, 1.0 / static_cast<double>(keys.size()), out});
    }
    return pgm(ensemble).success;
}

double circuit_privacy_lb_probe(const QheScheme &scheme, const NamedPureState &psi) {
    return std::max(0.0, cheating_alice_success(scheme, psi) - 0.5);
}

MetricResult circuit_privacy_lb(const QheScheme &scheme) {
    MetricResult best{0.0, "no probe beats guessing"};
    for (const auto &probe : cheating_probes()) {
        const double lb = circuit_privacy_lb_probe(scheme, probe);
        if (lb > best.value) {
            best.value = lb;
            best.witness = "PGM attack with probe " + probe.name;
        }
    }
    return best;
}

SchemeMetrics scheme_metrics(const QheScheme &scheme, std::uint64_t seed,
                             std::size_t random_count) {
    SchemeMetrics m;
    const auto eps = correctness_eps(scheme, seed, random_count);
    const auto eps_d = data_privacy_eps(scheme, seed, random_count);
    const auto ub = circuit_privacy_ub(scheme);
    const auto lb = circuit_privacy_lb(scheme);
    m.eps = eps.value;
    m.eps_witness = eps.witness;
    m.eps_d = eps_d.value;
    m.eps_d_witness = eps_d.witness;
    m.eps_c_ub = ub.value;
    m.eps_c_ub_witness = ub.witness;
    m.eps_c_lb = lb.value;
    m.eps_c_lb_witness = lb.witness;
    m.bound_lhs = m.eps_d + m.eps_c_ub + 4.0 * std::sqrt(m.eps);
    m.bound_holds = m.bound_lhs >= 0.5 - tol::completeness;
    m.bounds_consistent = m.eps_c_lb <= m.eps_c_ub + tol::completeness;
    return m;
}

} // namespace qhesim
