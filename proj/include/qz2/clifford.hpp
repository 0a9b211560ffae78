#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qz2/rng.hpp"

namespace qz2 {

// 1- or 2-qubit Clifford specified by its conjugation action on the
// single-site generators: X_i -> imgX[i], Z_i -> imgZ[i].
// Local Paulis are encoded as x/z bit masks over the gate's sites plus a
// sign (i-power in {0,2}); the operator convention is i^ph * X^x Z^z.
class CliffordGate {
public:
    struct LocalPauli {
        uint8_t x = 0, z = 0, ph = 0;
        bool operator==(const LocalPauli&) const = default;
    };

    CliffordGate(int nsites, const std::array<LocalPauli, 2>& img_x,
                 const std::array<LocalPauli, 2>& img_z);

    int nsites() const { return q_; }

    // conjugate an arbitrary local Pauli X^x Z^z (phase ph) by the gate
    LocalPauli conjugate(LocalPauli p) const;
    // table lookup: index = x | z << q for an input with ph = 0
    const LocalPauli& image(int idx) const { return table_[idx]; }

    // compose: (g2 * g1)(P) = g2(g1(P))
    static CliffordGate compose(const CliffordGate& g2, const CliffordGate& g1);

    // packed canonical key (images with signs); unique within fixed q
    uint64_t key() const;

    bool operator==(const CliffordGate& o) const { return q_ == o.q_ && key() == o.key(); }

    // named gates
    static CliffordGate identity1();
    static CliffordGate h();
    static CliffordGate s();
    static CliffordGate x1();
    static CliffordGate y1();
    static CliffordGate z1();
    static CliffordGate sqrt_x();
    static CliffordGate identity2();
    static CliffordGate cnot(); // control = site 0
    static CliffordGate cz();
    static CliffordGate swap();
    static CliffordGate tensor(const CliffordGate& a, const CliffordGate& b); // 1q x 1q

    const std::array<LocalPauli, 2>& img_x() const { return ix_; }
    const std::array<LocalPauli, 2>& img_z() const { return iz_; }

private:
    int q_;
    std::array<LocalPauli, 2> ix_, iz_;
    std::array<LocalPauli, 16> table_;
    void build_table_();
};

// full groups / symmetry-restricted subgroups, enumerated once by BFS
const std::vector<CliffordGate>& clifford1_all();      // 24
const std::vector<CliffordGate>& clifford2_all();      // 11520
const std::vector<CliffordGate>& clifford1_fix_x();    // U X U+ = +X  (4)
const std::vector<CliffordGate>& clifford2_fix_xx();   // U XX U+ = +XX (384)
const std::vector<CliffordGate>& clifford2_fix_xi();   // U XI U+ = +XI (384)

inline const CliffordGate& sample(const std::vector<CliffordGate>& g, RngStream& rng) {
    return g[static_cast<size_t>(rng.below(g.size()))];
}

} // namespace qz2
