#include "dense.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace qz2::oracle {

namespace {

const cplx I_UNIT(0.0, 1.0);

cplx ipow(int k) {
    switch (k & 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// X^x Z^z action on a computational basis ket: |b> -> i^ph (-1)^{z.b} |b^x>
struct PauliAction {
    uint64_t x = 0, z = 0;
    cplx phase;
};

PauliAction action_of(const Pauli& p) {
    if (p.n() > 63) throw std::invalid_argument("dense oracle: too many qubits");
    PauliAction a;
    for (int q = 0; q < p.n(); ++q) {
        if (p.x_bit(q)) a.x |= 1ull << q;
        if (p.z_bit(q)) a.z |= 1ull << q;
    }
    a.phase = ipow(p.phase2());
    return a;
}

int parity64(uint64_t v) { return __builtin_popcountll(v) & 1; }

std::vector<cplx> mat_mul(const std::vector<cplx>& a, const std::vector<cplx>& b, int d) {
    std::vector<cplx> c(static_cast<size_t>(d) * d, cplx(0, 0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            cplx aik = a[static_cast<size_t>(i) * d + k];
            if (aik == cplx(0, 0)) continue;
            for (int j = 0; j < d; ++j)
                c[static_cast<size_t>(i) * d + j] += aik * b[static_cast<size_t>(k) * d + j];
        }
    return c;
}

struct GateTable {
    std::unordered_map<uint64_t, std::vector<cplx>> mat;
};

const GateTable& gate_table() {
    static const GateTable t = [] {
        GateTable tab;
        const double s = 1.0 / std::sqrt(2.0);
        std::vector<cplx> H = {s, s, s, -s};
        std::vector<cplx> S = {1, 0, 0, I_UNIT};
        std::vector<cplx> I2 = {1, 0, 0, 1};
        auto kron = [](const std::vector<cplx>& a, const std::vector<cplx>& b) {
            // site 0 = least significant bit: index = b1*2 + b0
            std::vector<cplx> c(16);
            for (int r1 = 0; r1 < 2; ++r1)
                for (int c1 = 0; c1 < 2; ++c1)
                    for (int r0 = 0; r0 < 2; ++r0)
                        for (int c0 = 0; c0 < 2; ++c0)
                            c[static_cast<size_t>(r1 * 2 + r0) * 4 + (c1 * 2 + c0)] =
                                b[static_cast<size_t>(r1) * 2 + c1] * a[static_cast<size_t>(r0) * 2 + c0];
            return c;
        };
        // CNOT control = site 0, target = site 1; index = b1*2 + b0
        std::vector<cplx> CN(16, cplx(0, 0));
        for (int b1 = 0; b1 < 2; ++b1)
            for (int b0 = 0; b0 < 2; ++b0) {
                int in = b1 * 2 + b0;
                int out = ((b1 ^ b0) * 2) + b0;
                CN[static_cast<size_t>(out) * 4 + in] = 1;
            }
        std::vector<cplx> SW(16, cplx(0, 0));
        for (int b1 = 0; b1 < 2; ++b1)
            for (int b0 = 0; b0 < 2; ++b0)
                SW[static_cast<size_t>(b0 * 2 + b1) * 4 + (b1 * 2 + b0)] = 1;

        // BFS of the 1-qubit group
        {
            std::vector<std::pair<CliffordGate, std::vector<cplx>>> frontier;
            frontier.emplace_back(CliffordGate::identity1(), I2);
            tab.mat.emplace(CliffordGate::identity1().key(), I2);
            std::vector<std::pair<CliffordGate, std::vector<cplx>>> gens = {
                {CliffordGate::h(), H}, {CliffordGate::s(), S}};
            for (size_t head = 0; head < frontier.size(); ++head) {
                auto cur = frontier[head];
                for (const auto& [gg, gm] : gens) {
                    CliffordGate ng = CliffordGate::compose(gg, cur.first);
                    if (tab.mat.count(ng.key())) continue;
                    auto nm = mat_mul(gm, cur.second, 2);
                    tab.mat.emplace(ng.key(), nm);
                    frontier.emplace_back(ng, nm);
                }
            }
        }
        // BFS of the 2-qubit group
        {
            auto id1 = CliffordGate::identity1();
            std::vector<std::pair<CliffordGate, std::vector<cplx>>> gens = {
                {CliffordGate::tensor(CliffordGate::h(), id1), kron(H, I2)},
                {CliffordGate::tensor(id1, CliffordGate::h()), kron(I2, H)},
                {CliffordGate::tensor(CliffordGate::s(), id1), kron(S, I2)},
                {CliffordGate::tensor(id1, CliffordGate::s()), kron(I2, S)},
                {CliffordGate::cnot(), CN},
                {CliffordGate::swap(), SW}};
            std::vector<std::pair<CliffordGate, std::vector<cplx>>> frontier;
            auto id2 = CliffordGate::identity2();
            std::vector<cplx> I4(16, cplx(0, 0));
            for (int i = 0; i < 4; ++i) I4[static_cast<size_t>(i) * 4 + i] = 1;
            frontier.emplace_back(id2, I4);
            tab.mat.emplace(id2.key(), I4);
            for (size_t head = 0; head < frontier.size(); ++head) {
                auto cur = frontier[head];
                for (const auto& [gg, gm] : gens) {
                    CliffordGate ng = CliffordGate::compose(gg, cur.first);
                    if (tab.mat.count(ng.key())) continue;
                    auto nm = mat_mul(gm, cur.second, 4);
                    tab.mat.emplace(ng.key(), nm);
                    frontier.emplace_back(ng, nm);
                }
            }
        }
        return tab;
    }();
    return t;
}

} // namespace

std::vector<cplx> clifford_matrix(const CliffordGate& g) {
    const auto& t = gate_table();
    auto it = t.mat.find(g.key());
    if (it == t.mat.end()) throw std::logic_error("clifford_matrix: unknown gate");
    return it->second;
}

DenseState::DenseState(int n) : n_(n), dim_(size_t{1} << n), rho_(dim_ * dim_, cplx(0, 0)) {
    if (n > 12) throw std::invalid_argument("DenseState: n too large");
    double p = 1.0 / static_cast<double>(dim_);
    for (size_t i = 0; i < dim_; ++i) rho_[i * dim_ + i] = p;
}

DenseState DenseState::all_plus(int n) {
    DenseState s(n);
    for (size_t i = 0; i < s.dim_; ++i)
        for (size_t j = 0; j < s.dim_; ++j)
            s.rho_[i * s.dim_ + j] = 1.0 / static_cast<double>(s.dim_);
    return s;
}

DenseState DenseState::all_zero(int n) {
    DenseState s(n);
    for (auto& v : s.rho_) v = 0;
    s.rho_[0] = 1.0;
    return s;
}

DenseState DenseState::from_stabilizer(const StabilizerState& st) {
    DenseState s(st.n()); // I / 2^n
    for (int i = 0; i < st.k(); ++i) {
        Pauli g = st.generator(i);
        // rho <- (rho + G rho) since rho commutes with all projectors here;
        // with the trailing division this implements prod (I+G)/2 * I/2^{n-k}
        PauliAction a = action_of(g);
        std::vector<cplx> add(s.rho_.size(), cplx(0, 0));
        for (size_t b = 0; b < s.dim_; ++b)
            for (size_t c = 0; c < s.dim_; ++c) {
                cplx v = s.rho_[b * s.dim_ + c];
                if (v == cplx(0, 0)) continue;
                add[(b ^ a.x) * s.dim_ + c] += a.phase * (parity64(a.z & b) ? -1.0 : 1.0) * v;
            }
        for (size_t i2 = 0; i2 < s.rho_.size(); ++i2) s.rho_[i2] += add[i2];
    }
    // normalize trace to 1
    double tr = s.trace();
    for (auto& v : s.rho_) v /= tr;
    return s;
}

double DenseState::trace() const {
    double t = 0;
    for (size_t i = 0; i < dim_; ++i) t += rho_[i * dim_ + i].real();
    return t;
}

void DenseState::apply_unitary(const CliffordGate& g, const std::vector<int>& sites) {
    auto U = clifford_matrix(g);
    int q = g.nsites();
    int d = 1 << q;
    // gather sub-indices
    std::vector<size_t> masks(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) masks[i] = size_t{1} << sites[i];
    size_t other_mask = dim_ - 1;
    for (auto m : masks) other_mask &= ~m;

    auto sub_index = [&](size_t base, int s) {
        size_t idx = base;
        for (int i = 0; i < q; ++i)
            if (s >> i & 1) idx |= masks[i];
        return idx;
    };

    // rho <- (U x I) rho (U x I)^dagger
    std::vector<cplx> tmp(static_cast<size_t>(d));
    // left multiply
    for (size_t brest = 0; brest < dim_; ++brest) {
        if (brest & ~other_mask) continue;
        for (size_t col = 0; col < dim_; ++col) {
            for (int r = 0; r < d; ++r) {
                cplx acc(0, 0);
                for (int c = 0; c < d; ++c)
                    acc += U[static_cast<size_t>(r) * d + c] * rho_[sub_index(brest, c) * dim_ + col];
                tmp[static_cast<size_t>(r)] = acc;
            }
            for (int r = 0; r < d; ++r) rho_[sub_index(brest, r) * dim_ + col] = tmp[static_cast<size_t>(r)];
        }
    }
    // right multiply by U^dagger
    for (size_t brest = 0; brest < dim_; ++brest) {
        if (brest & ~other_mask) continue;
        for (size_t row = 0; row < dim_; ++row) {
            for (int c = 0; c < d; ++c) {
                cplx acc(0, 0);
                for (int k = 0; k < d; ++k)
                    acc += rho_[row * dim_ + sub_index(brest, k)] * std::conj(U[static_cast<size_t>(c) * d + k]);
                tmp[static_cast<size_t>(c)] = acc;
            }
            for (int c = 0; c < d; ++c) rho_[row * dim_ + sub_index(brest, c)] = tmp[static_cast<size_t>(c)];
        }
    }
}

cplx DenseState::expect(const Pauli& p) const {
    // tr(P rho) = sum_b P[b^x][b] rho[b][b^x] = sum_b i^ph (-1)^{z.b} rho[b][b^x]
    PauliAction a = action_of(p);
    cplx t(0, 0);
    for (size_t b = 0; b < dim_; ++b) {
        cplx v = rho_[b * dim_ + (b ^ a.x)];
        if (v == cplx(0, 0)) continue;
        t += a.phase * (parity64(a.z & b) ? -1.0 : 1.0) * v;
    }
    return t;
}

double DenseState::outcome_prob(const Pauli& p, int outcome) const {
    cplx e = expect(p);
    return 0.5 * (1.0 + outcome * e.real());
}

double DenseState::project(const Pauli& p, int outcome) {
    double pr = outcome_prob(p, outcome);
    if (pr < 1e-14) return pr;
    PauliAction a = action_of(p);
    double o = outcome;
    // rho' = Pi rho Pi / pr with Pi = (I + o P)/2
    std::vector<cplx> nr(rho_.size(), cplx(0, 0));
    for (size_t b = 0; b < dim_; ++b)
        for (size_t c = 0; c < dim_; ++c) {
            cplx v = rho_[b * dim_ + c];
            if (v == cplx(0, 0)) continue;
            // expand (rho + oP rho + o rho P + P rho P)/4
            cplx pb = a.phase * (parity64(a.z & b) ? -1.0 : 1.0);        // P|b> coeff
            cplx pc = std::conj(a.phase * (parity64(a.z & c) ? -1.0 : 1.0)); // <c|P
            nr[b * dim_ + c] += 0.25 * v;
            nr[(b ^ a.x) * dim_ + c] += 0.25 * o * pb * v;
            nr[b * dim_ + (c ^ a.x)] += 0.25 * o * v * pc;
            nr[(b ^ a.x) * dim_ + (c ^ a.x)] += 0.25 * pb * v * pc;
        }
    for (auto& v : nr) v /= pr;
    rho_.swap(nr);
    return pr;
}

void DenseState::dephase(const Pauli& p) {
    PauliAction a = action_of(p);
    std::vector<cplx> nr(rho_.size(), cplx(0, 0));
    for (size_t b = 0; b < dim_; ++b)
        for (size_t c = 0; c < dim_; ++c) {
            cplx v = rho_[b * dim_ + c];
            if (v == cplx(0, 0)) continue;
            nr[b * dim_ + c] += 0.5 * v;
            int sgn = parity64(a.z & b) ^ parity64(a.z & c);
            nr[(b ^ a.x) * dim_ + (c ^ a.x)] += 0.5 * (sgn ? -1.0 : 1.0) * v;
        }
    rho_.swap(nr);
}

double DenseState::entropy_bits(const std::vector<int>& region) const {
    int na = static_cast<int>(region.size());
    size_t da = size_t{1} << na;
    // partial trace over complement
    std::vector<int> rest;
    std::vector<bool> in_a(static_cast<size_t>(n_), false);
    for (int q : region) in_a[static_cast<size_t>(q)] = true;
    for (int q = 0; q < n_; ++q)
        if (!in_a[static_cast<size_t>(q)]) rest.push_back(q);
    size_t dr = size_t{1} << rest.size();

    auto build = [&](size_t ia, size_t ir) {
        size_t idx = 0;
        for (int i = 0; i < na; ++i)
            if (ia >> i & 1) idx |= size_t{1} << region[static_cast<size_t>(i)];
        for (size_t i = 0; i < rest.size(); ++i)
            if (ir >> i & 1) idx |= size_t{1} << rest[i];
        return idx;
    };

    Eigen::MatrixXcd ra(da, da);
    ra.setZero();
    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < da; ++j) {
            cplx acc(0, 0);
            for (size_t r = 0; r < dr; ++r) acc += rho_[build(i, r) * dim_ + build(j, r)];
            ra(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ra);
    double s = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        if (lam > 1e-12) s -= lam * std::log2(lam);
    }
    return s;
}

double DenseState::trace_distance(const DenseState& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("trace_distance: dim mismatch");
    Eigen::MatrixXcd d(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
            d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                rho_[i * dim_ + j] - o.rho_[i * dim_ + j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d);
    double s = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) s += std::abs(es.eigenvalues()(i));
    return 0.5 * s;
}

} // namespace qz2::oracle
