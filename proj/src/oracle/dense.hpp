#pragma once

#include <complex>
#include <vector>

#include "qz2/clifford.hpp"
#include "qz2/pauli.hpp"
#include "qz2/tableau.hpp"

namespace qz2::oracle {

using cplx = std::complex<double>;

// Brute-force density-matrix simulator for n <= ~10 qubits.  Used only as an
// independent oracle in tests and the `verify` CLI subcommand; shares no
// state-evolution code with StabilizerState.
class DenseState {
public:
    explicit DenseState(int n); // maximally mixed
    static DenseState all_plus(int n);
    static DenseState all_zero(int n);
    static DenseState from_stabilizer(const StabilizerState& s);

    int n() const { return n_; }
    double trace() const;

    void apply_unitary(const CliffordGate& g, const std::vector<int>& sites);
    // project onto outcome; returns the Born probability (state normalized,
    // or left untouched if probability ~ 0)
    double project(const Pauli& p, int outcome);
    double outcome_prob(const Pauli& p, int outcome) const;
    void dephase(const Pauli& p);

    cplx expect(const Pauli& p) const; // tr(rho P)

    double entropy_bits(const std::vector<int>& region) const;
    double trace_distance(const DenseState& o) const;

private:
    int n_;
    size_t dim_;
    std::vector<cplx> rho_;
};

// unitary matrix (up to global phase) realizing a 1- or 2-qubit Clifford,
// reconstructed from the conjugation table by BFS over the Clifford group
std::vector<cplx> clifford_matrix(const CliffordGate& g);

} // namespace qz2::oracle
