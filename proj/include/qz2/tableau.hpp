#pragma once

#include <optional>
#include <vector>

#include "qz2/clifford.hpp"
#include "qz2/pauli.hpp"
#include "qz2/rng.hpp"

namespace qz2 {

// Mixed stabilizer state on n qubits: k <= n signed, pairwise-commuting,
// independent generators.  k = n is pure, k = 0 maximally mixed; the state
// entropy is n - k bits.  Internally every generator carries a conjugate
// partner row so that deterministic outcomes and group membership resolve
// in O(k) word operations instead of a fresh Gaussian elimination.
class StabilizerState {
public:
    explicit StabilizerState(int n); // maximally mixed, k = 0
    static StabilizerState all_plus(int n);
    static StabilizerState all_zero(int n);
    // independent, pairwise commuting, Hermitian generators
    static StabilizerState from_generators(int n, const std::vector<Pauli>& gens);

    int n() const { return n_; }
    int k() const { return k_; }
    bool pure() const { return k_ == n_; }
    Pauli generator(int i) const;

    void apply_clifford(const CliffordGate& g, const std::vector<int>& sites);

    struct MeasResult {
        int outcome;        // +1 or -1
        bool deterministic; // outcome was fixed by the state
    };
    MeasResult measure(const Pauli& p, RngStream& rng);

    // replay a measurement with a prescribed outcome; consumes no randomness.
    // possible == false means the outcome had Born probability 0 (trace 0).
    struct ForcedResult {
        bool possible;
        bool deterministic;
    };
    ForcedResult measure_forced(const Pauli& p, int outcome);

    void dephase(const Pauli& p);

    // +1 / -1 when +-p is in the stabilizer group, 0 otherwise
    int contains(const Pauli& p) const;

    // entanglement entropy of a site subset, in bits
    double entropy(const std::vector<int>& region) const;
    double mutual_information(const std::vector<int>& a, const std::vector<int>& b) const;

    // unique signed canonical basis of the group; equal groups compare equal
    std::vector<Pauli> canonical_generators() const;
    bool same_state(const StabilizerState& o) const;

    // generator independence, mutual commutation, pairings; for tests
    bool check_invariants() const;

private:
    int n_, k_, w_;
    std::vector<uint64_t> sx_, sz_, dx_, dz_; // row-major, w_ words per row
    std::vector<uint8_t> sph_;

    uint64_t* srow_x(int r) { return sx_.data() + static_cast<size_t>(r) * w_; }
    uint64_t* srow_z(int r) { return sz_.data() + static_cast<size_t>(r) * w_; }
    uint64_t* drow_x(int r) { return dx_.data() + static_cast<size_t>(r) * w_; }
    uint64_t* drow_z(int r) { return dz_.data() + static_cast<size_t>(r) * w_; }
    const uint64_t* srow_x(int r) const { return sx_.data() + static_cast<size_t>(r) * w_; }
    const uint64_t* srow_z(int r) const { return sz_.data() + static_cast<size_t>(r) * w_; }
    const uint64_t* drow_x(int r) const { return dx_.data() + static_cast<size_t>(r) * w_; }
    const uint64_t* drow_z(int r) const { return dz_.data() + static_cast<size_t>(r) * w_; }

    bool anticommutes_row_(const uint64_t* rx, const uint64_t* rz, const Pauli& p) const;
    void stab_mul_(int dst, int src);   // stab_dst *= stab_src (phase tracked)
    void destab_mul_stab_(int dst, int src);
    void destab_mul_destab_(int dst, int src);
    void set_stab_(int r, const Pauli& p);
    void set_destab_(int r, const Pauli& p);
    Pauli stab_as_pauli_(int r) const;

    struct MeasOutcome {
        int outcome;
        bool deterministic;
        bool possible;
    };
    MeasOutcome measure_impl_(const Pauli& p, const int* forced, RngStream* rng);

    // p commutes with all stabilizers: resolve membership.
    // Returns sign (+1/-1) if +-p in group, 0 if outside; fills syndrome.
    int resolve_commuting_(const Pauli& p, std::vector<int>& syndrome) const;
    void append_generator_(const Pauli& p, int outcome, const std::vector<int>& syndrome);
    int rank_restricted_(const std::vector<uint64_t>& keep_mask) const;
};

} // namespace qz2
