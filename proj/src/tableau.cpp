#include "qz2/tableau.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace qz2 {

namespace {

// nonzero words of a Pauli, for short-support scans
struct Supp {
    int count = 0;
    bool small = false;
    struct Entry {
        int w;
        uint64_t px, pz;
    } e[4];
};

Supp build_supp(const Pauli& p) {
    Supp s;
    const auto& x = p.xw();
    const auto& z = p.zw();
    for (size_t w = 0; w < x.size(); ++w) {
        if (x[w] | z[w]) {
            if (s.count < 4) s.e[s.count] = {static_cast<int>(w), x[w], z[w]};
            ++s.count;
        }
    }
    s.small = s.count <= 4;
    return s;
}

Pauli signed_copy(const Pauli& p, int outcome) {
    Pauli q = p;
    q.set_phase2(p.phase2() + (outcome < 0 ? 2 : 0));
    return q;
}

} // namespace

StabilizerState::StabilizerState(int n)
    : n_(n), k_(0), w_(Pauli::words(n)),
      sx_(static_cast<size_t>(n) * w_, 0), sz_(static_cast<size_t>(n) * w_, 0),
      dx_(static_cast<size_t>(n) * w_, 0), dz_(static_cast<size_t>(n) * w_, 0),
      sph_(static_cast<size_t>(n), 0) {
    if (n <= 0) throw std::invalid_argument("StabilizerState: n must be positive");
}

StabilizerState StabilizerState::all_plus(int n) {
    StabilizerState s(n);
    for (int q = 0; q < n; ++q) {
        s.set_stab_(q, Pauli::single_x(n, q));
        s.set_destab_(q, Pauli::single_z(n, q));
    }
    s.k_ = n;
    return s;
}

StabilizerState StabilizerState::all_zero(int n) {
    StabilizerState s(n);
    for (int q = 0; q < n; ++q) {
        s.set_stab_(q, Pauli::single_z(n, q));
        s.set_destab_(q, Pauli::single_x(n, q));
    }
    s.k_ = n;
    return s;
}

StabilizerState StabilizerState::from_generators(int n, const std::vector<Pauli>& gens) {
    StabilizerState s(n);
    for (const auto& g : gens) {
        if (g.n() != n) throw std::invalid_argument("from_generators: size mismatch");
        if (!g.hermitian()) throw std::invalid_argument("from_generators: non-Hermitian");
        auto r = s.measure_forced(g, +1);
        if (r.deterministic)
            throw std::invalid_argument("from_generators: dependent or conflicting generator");
    }
    return s;
}

Pauli StabilizerState::generator(int i) const {
    if (i < 0 || i >= k_) throw std::out_of_range("generator index");
    return stab_as_pauli_(i);
}

Pauli StabilizerState::stab_as_pauli_(int r) const {
    return Pauli::from_rows(n_, srow_x(r), srow_z(r), sph_[r]);
}

void StabilizerState::set_stab_(int r, const Pauli& p) {
    std::memcpy(srow_x(r), p.xw().data(), sizeof(uint64_t) * w_);
    std::memcpy(srow_z(r), p.zw().data(), sizeof(uint64_t) * w_);
    sph_[r] = static_cast<uint8_t>(p.phase2());
}

void StabilizerState::set_destab_(int r, const Pauli& p) {
    std::memcpy(drow_x(r), p.xw().data(), sizeof(uint64_t) * w_);
    std::memcpy(drow_z(r), p.zw().data(), sizeof(uint64_t) * w_);
}

bool StabilizerState::anticommutes_row_(const uint64_t* rx, const uint64_t* rz,
                                        const Pauli& p) const {
    uint64_t acc = 0;
    const uint64_t* px = p.xw().data();
    const uint64_t* pz = p.zw().data();
    for (int w = 0; w < w_; ++w) acc ^= (rx[w] & pz[w]) ^ (rz[w] & px[w]);
    return __builtin_popcountll(acc) & 1;
}

void StabilizerState::stab_mul_(int dst, int src) {
    uint64_t* ax = srow_x(dst);
    uint64_t* az = srow_z(dst);
    const uint64_t* bx = srow_x(src);
    const uint64_t* bz = srow_z(src);
    int anti = 0;
    for (int w = 0; w < w_; ++w) {
        anti += __builtin_popcountll(az[w] & bx[w]);
        ax[w] ^= bx[w];
        az[w] ^= bz[w];
    }
    sph_[dst] = static_cast<uint8_t>((sph_[dst] + sph_[src] + 2 * anti) & 3);
}

void StabilizerState::destab_mul_stab_(int dst, int src) {
    uint64_t* ax = drow_x(dst);
    uint64_t* az = drow_z(dst);
    const uint64_t* bx = srow_x(src);
    const uint64_t* bz = srow_z(src);
    for (int w = 0; w < w_; ++w) {
        ax[w] ^= bx[w];
        az[w] ^= bz[w];
    }
}

void StabilizerState::destab_mul_destab_(int dst, int src) {
    uint64_t* ax = drow_x(dst);
    uint64_t* az = drow_z(dst);
    const uint64_t* bx = drow_x(src);
    const uint64_t* bz = drow_z(src);
    for (int w = 0; w < w_; ++w) {
        ax[w] ^= bx[w];
        az[w] ^= bz[w];
    }
}

void StabilizerState::apply_clifford(const CliffordGate& g, const std::vector<int>& sites) {
    int q = g.nsites();
    if (static_cast<int>(sites.size()) != q)
        throw std::invalid_argument("apply_clifford: site count mismatch");
    for (int s : sites)
        if (s < 0 || s >= n_) throw std::out_of_range("apply_clifford: site out of range");
    if (q == 2 && sites[0] == sites[1])
        throw std::invalid_argument("apply_clifford: sites must be distinct");

    auto conj_rows = [&](std::vector<uint64_t>& X, std::vector<uint64_t>& Z, bool phases) {
        for (int r = 0; r < k_; ++r) {
            uint64_t* rx = X.data() + static_cast<size_t>(r) * w_;
            uint64_t* rz = Z.data() + static_cast<size_t>(r) * w_;
            int in = 0;
            for (int i = 0; i < q; ++i) {
                int s = sites[i];
                in |= static_cast<int>((rx[s >> 6] >> (s & 63)) & 1u) << i;
                in |= static_cast<int>((rz[s >> 6] >> (s & 63)) & 1u) << (q + i);
            }
            if (in == 0) continue;
            CliffordGate::LocalPauli img = g.image(in);
            for (int i = 0; i < q; ++i) {
                int s = sites[i];
                uint64_t bit = 1ull << (s & 63);
                if (((in >> i) & 1) != ((img.x >> i) & 1)) rx[s >> 6] ^= bit;
                if (((in >> (q + i)) & 1) != ((img.z >> i) & 1)) rz[s >> 6] ^= bit;
            }
            if (phases) sph_[r] = static_cast<uint8_t>((sph_[r] + img.ph) & 3);
        }
    };
    conj_rows(sx_, sz_, true);
    conj_rows(dx_, dz_, false);
}

int StabilizerState::resolve_commuting_(const Pauli& p, std::vector<int>& syndrome) const {
    syndrome.clear();
    Supp supp = build_supp(p);
    for (int r = 0; r < k_; ++r) {
        bool anti;
        if (supp.small) {
            uint64_t acc = 0;
            const uint64_t* rx = drow_x(r);
            const uint64_t* rz = drow_z(r);
            for (int i = 0; i < supp.count; ++i)
                acc ^= (rx[supp.e[i].w] & supp.e[i].pz) ^ (rz[supp.e[i].w] & supp.e[i].px);
            anti = __builtin_popcountll(acc) & 1;
        } else {
            anti = anticommutes_row_(drow_x(r), drow_z(r), p);
        }
        if (anti) syndrome.push_back(r);
    }
    Pauli c(n_);
    for (int r : syndrome) c.mul(stab_as_pauli_(r));
    if (!c.same_string(p)) return 0;
    // outcome o with c == o * p as operators
    return ((c.phase2() - p.phase2()) & 3) == 0 ? +1 : -1;
}

void StabilizerState::append_generator_(const Pauli& p, int outcome,
                                        const std::vector<int>& syndrome) {
    // residual = p * prod(syndrome stabs) is a non-identity string commuting
    // with every stabilizer; a single-site Pauli anticommuting with it seeds
    // the conjugate partner of the appended generator.
    Pauli res = p;
    for (int r : syndrome) res.mul(stab_as_pauli_(r));
    int site = -1;
    bool rx = false;
    for (int q = 0; q < n_; ++q) {
        rx = res.x_bit(q);
        if (rx || res.z_bit(q)) {
            site = q;
            break;
        }
    }
    if (site < 0) throw std::logic_error("append_generator_: identity residual");
    Pauli d = rx ? Pauli::single_z(n_, site) : Pauli::single_x(n_, site);

    // restore pairings: by construction multiplying by stabilizers fixes the
    // destabilizer pairings without touching anything else, after which
    // multiplying by destabilizers fixes the stabilizer pairings.
    for (int r = 0; r < k_; ++r)
        if (anticommutes_row_(drow_x(r), drow_z(r), d)) d.mul(stab_as_pauli_(r));
    for (int r = 0; r < k_; ++r)
        if (anticommutes_row_(srow_x(r), srow_z(r), d))
            d.mul(Pauli::from_rows(n_, drow_x(r), drow_z(r), 0));

    set_stab_(k_, signed_copy(p, outcome));
    set_destab_(k_, d);
    ++k_;
}

StabilizerState::MeasOutcome StabilizerState::measure_impl_(const Pauli& p,
                                                            const int* forced,
                                                            RngStream* rng) {
    if (!p.hermitian()) throw std::invalid_argument("measure: non-Hermitian Pauli");
    Supp supp = build_supp(p);
    auto anti_stab = [&](int r) -> bool {
        if (supp.small) {
            uint64_t acc = 0;
            const uint64_t* rx = srow_x(r);
            const uint64_t* rz = srow_z(r);
            for (int i = 0; i < supp.count; ++i)
                acc ^= (rx[supp.e[i].w] & supp.e[i].pz) ^ (rz[supp.e[i].w] & supp.e[i].px);
            return __builtin_popcountll(acc) & 1;
        }
        return anticommutes_row_(srow_x(r), srow_z(r), p);
    };
    auto anti_destab = [&](int r) -> bool {
        if (supp.small) {
            uint64_t acc = 0;
            const uint64_t* rx = drow_x(r);
            const uint64_t* rz = drow_z(r);
            for (int i = 0; i < supp.count; ++i)
                acc ^= (rx[supp.e[i].w] & supp.e[i].pz) ^ (rz[supp.e[i].w] & supp.e[i].px);
            return __builtin_popcountll(acc) & 1;
        }
        return anticommutes_row_(drow_x(r), drow_z(r), p);
    };

    int pivot = -1;
    for (int r = 0; r < k_; ++r)
        if (anti_stab(r)) {
            pivot = r;
            break;
        }
    if (pivot >= 0) {
        for (int r = pivot + 1; r < k_; ++r)
            if (anti_stab(r)) stab_mul_(r, pivot);
        for (int r = 0; r < k_; ++r)
            if (r != pivot && anti_destab(r)) destab_mul_stab_(r, pivot);
        // old pivot stabilizer becomes the conjugate partner of +-p
        std::memcpy(drow_x(pivot), srow_x(pivot), sizeof(uint64_t) * w_);
        std::memcpy(drow_z(pivot), srow_z(pivot), sizeof(uint64_t) * w_);
        int outcome = forced ? *forced : (rng->bit() ? -1 : +1);
        set_stab_(pivot, signed_copy(p, outcome));
        return {outcome, false, true};
    }
    std::vector<int> syndrome;
    int o = resolve_commuting_(p, syndrome);
    if (o != 0) {
        bool ok = forced ? (*forced == o) : true;
        return {o, true, ok};
    }
    int outcome = forced ? *forced : (rng->bit() ? -1 : +1);
    append_generator_(p, outcome, syndrome);
    return {outcome, false, true};
}

StabilizerState::MeasResult StabilizerState::measure(const Pauli& p, RngStream& rng) {
    auto r = measure_impl_(p, nullptr, &rng);
    return {r.outcome, r.deterministic};
}

StabilizerState::ForcedResult StabilizerState::measure_forced(const Pauli& p, int outcome) {
    auto r = measure_impl_(p, &outcome, nullptr);
    return {r.possible, r.deterministic};
}

void StabilizerState::dephase(const Pauli& p) {
    if (!p.hermitian()) throw std::invalid_argument("dephase: non-Hermitian Pauli");
    int pivot = -1;
    for (int r = 0; r < k_; ++r)
        if (anticommutes_row_(srow_x(r), srow_z(r), p)) {
            pivot = r;
            break;
        }
    if (pivot < 0) return;
    for (int r = pivot + 1; r < k_; ++r)
        if (anticommutes_row_(srow_x(r), srow_z(r), p)) stab_mul_(r, pivot);
    int last = k_ - 1;
    if (pivot != last) {
        std::memcpy(srow_x(pivot), srow_x(last), sizeof(uint64_t) * w_);
        std::memcpy(srow_z(pivot), srow_z(last), sizeof(uint64_t) * w_);
        std::memcpy(drow_x(pivot), drow_x(last), sizeof(uint64_t) * w_);
        std::memcpy(drow_z(pivot), drow_z(last), sizeof(uint64_t) * w_);
        sph_[pivot] = sph_[last];
    }
    std::memset(srow_x(last), 0, sizeof(uint64_t) * w_);
    std::memset(srow_z(last), 0, sizeof(uint64_t) * w_);
    std::memset(drow_x(last), 0, sizeof(uint64_t) * w_);
    std::memset(drow_z(last), 0, sizeof(uint64_t) * w_);
    sph_[last] = 0;
    --k_;
}

int StabilizerState::contains(const Pauli& p) const {
    if (!p.hermitian()) throw std::invalid_argument("contains: non-Hermitian Pauli");
    Supp supp = build_supp(p);
    for (int r = 0; r < k_; ++r) {
        bool anti;
        if (supp.small) {
            uint64_t acc = 0;
            const uint64_t* rx = srow_x(r);
            const uint64_t* rz = srow_z(r);
            for (int i = 0; i < supp.count; ++i)
                acc ^= (rx[supp.e[i].w] & supp.e[i].pz) ^ (rz[supp.e[i].w] & supp.e[i].px);
            anti = __builtin_popcountll(acc) & 1;
        } else {
            anti = anticommutes_row_(srow_x(r), srow_z(r), p);
        }
        if (anti) return 0;
    }
    std::vector<int> syndrome;
    return resolve_commuting_(p, syndrome);
}

int StabilizerState::rank_restricted_(const std::vector<uint64_t>& keep) const {
    std::vector<uint64_t> rows(static_cast<size_t>(k_) * 2 * w_);
    for (int r = 0; r < k_; ++r) {
        uint64_t* dst = rows.data() + static_cast<size_t>(r) * 2 * w_;
        const uint64_t* rx = srow_x(r);
        const uint64_t* rz = srow_z(r);
        for (int w = 0; w < w_; ++w) {
            dst[w] = rx[w] & keep[w];
            dst[w_ + w] = rz[w] & keep[w];
        }
    }
    int rank = 0;
    std::vector<int> pivot_of(static_cast<size_t>(k_), -1);
    for (int r = 0; r < k_; ++r) {
        uint64_t* row = rows.data() + static_cast<size_t>(r) * 2 * w_;
        for (int pr = 0; pr < rank; ++pr) {
            int pb = pivot_of[pr];
            if ((row[pb >> 6] >> (pb & 63)) & 1u) {
                const uint64_t* prow = rows.data() + static_cast<size_t>(pr) * 2 * w_;
                for (int w = 0; w < 2 * w_; ++w) row[w] ^= prow[w];
            }
        }
        int pb = -1;
        for (int w = 0; w < 2 * w_ && pb < 0; ++w)
            if (row[w]) pb = w * 64 + __builtin_ctzll(row[w]);
        if (pb >= 0) {
            if (rank != r) {
                uint64_t* dst = rows.data() + static_cast<size_t>(rank) * 2 * w_;
                std::memcpy(dst, row, sizeof(uint64_t) * 2 * w_);
            }
            pivot_of[rank] = pb;
            ++rank;
        }
    }
    return rank;
}

double StabilizerState::entropy(const std::vector<int>& region) const {
    std::vector<uint64_t> comp(static_cast<size_t>(w_), ~0ull);
    int top = n_ & 63;
    if (top) comp[w_ - 1] = (1ull << top) - 1;
    int na = 0;
    for (int q : region) {
        if (q < 0 || q >= n_) throw std::out_of_range("entropy: site out of range");
        uint64_t m = 1ull << (q & 63);
        if (!(comp[q >> 6] & m)) throw std::invalid_argument("entropy: duplicate site");
        comp[q >> 6] &= ~m;
        ++na;
    }
    // S_A = |A| - (k - rank of generators truncated to the complement)
    int rank_comp = rank_restricted_(comp);
    return static_cast<double>(na - (k_ - rank_comp));
}

double StabilizerState::mutual_information(const std::vector<int>& a,
                                           const std::vector<int>& b) const {
    std::vector<int> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    return entropy(a) + entropy(b) - entropy(ab); // entropy() rejects overlap
}

std::vector<Pauli> StabilizerState::canonical_generators() const {
    std::vector<Pauli> rows;
    rows.reserve(k_);
    for (int r = 0; r < k_; ++r) rows.push_back(stab_as_pauli_(r));
    int i = 0;
    int k = static_cast<int>(rows.size());
    for (int q = 0; q < n_ && i < k; ++q) {
        int piv = -1;
        for (int r = i; r < k; ++r)
            if (rows[r].x_bit(q)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[i], rows[piv]);
        for (int r = 0; r < k; ++r)
            if (r != i && rows[r].x_bit(q)) rows[r].mul(rows[i]);
        ++i;
    }
    for (int q = 0; q < n_ && i < k; ++q) {
        int piv = -1;
        for (int r = i; r < k; ++r)
            if (rows[r].z_bit(q)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[i], rows[piv]);
        for (int r = 0; r < k; ++r)
            if (r != i && rows[r].z_bit(q)) rows[r].mul(rows[i]);
        ++i;
    }
    return rows;
}

bool StabilizerState::same_state(const StabilizerState& o) const {
    if (n_ != o.n_ || k_ != o.k_) return false;
    auto a = canonical_generators();
    auto b = o.canonical_generators();
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

bool StabilizerState::check_invariants() const {
    for (int r = 0; r < k_; ++r) {
        Pauli pr = stab_as_pauli_(r);
        if (!pr.hermitian()) return false;
        for (int s = r + 1; s < k_; ++s)
            if (!pr.commutes(stab_as_pauli_(s))) return false;
    }
    std::vector<uint64_t> all(static_cast<size_t>(w_), ~0ull);
    int top = n_ & 63;
    if (top) all[w_ - 1] = (1ull << top) - 1;
    if (rank_restricted_(all) != k_) return false;
    for (int r = 0; r < k_; ++r) {
        Pauli dr = Pauli::from_rows(n_, drow_x(r), drow_z(r), 0);
        for (int s = 0; s < k_; ++s) {
            bool anti = !dr.commutes(stab_as_pauli_(s));
            if (anti != (r == s)) return false;
        }
        for (int s = r + 1; s < k_; ++s) {
            Pauli ds = Pauli::from_rows(n_, drow_x(s), drow_z(s), 0);
            if (!dr.commutes(ds)) return false;
        }
    }
    return true;
}

} // namespace qz2
