#include "fc/fusion_ring.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace fc {

FusionRing::FusionRing(std::vector<std::string> labels, size_t unit, std::vector<size_t> dual,
                       std::vector<std::vector<std::vector<int>>> tensor)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), tensor_(std::move(tensor)) {
    const size_t r = labels_.size();
    if (unit_ >= r) throw ShapeMismatch("unit index out of range");
    if (dual_.size() != r) throw ShapeMismatch("dual involution size != rank");
    for (size_t i = 0; i < r; ++i) {
        if (dual_[i] >= r || dual_[dual_[i]] != i)
            throw ShapeMismatch("dual is not an involution");
    }
    if (tensor_.size() != r) throw ShapeMismatch("fusion tensor has wrong shape");
    for (const auto& plane : tensor_) {
        if (plane.size() != r) throw ShapeMismatch("fusion tensor has wrong shape");
        for (const auto& row : plane) {
            if (row.size() != r) throw ShapeMismatch("fusion tensor has wrong shape");
            for (int v : row)
                if (v < 0) throw ShapeMismatch("fusion multiplicities must be non-negative");
        }
    }
}

std::optional<size_t> FusionRing::label_index(const std::string& name) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return i;
    return std::nullopt;
}

namespace {

std::string triple(const FusionRing& r, size_t i, size_t j, size_t k) {
    return "N^" + r.label(k) + "_{" + r.label(i) + "," + r.label(j) + "}";
}

} // namespace

ValidationReport validate(const FusionRing& r) {
    ValidationReport rep;
    const size_t n = r.rank();
    const size_t u = r.unit();
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            int want = j == k ? 1 : 0;
            if (r.n(u, j, k) != want)
                rep.violations.push_back({"unit row: " + triple(r, u, j, k) + " != " + std::to_string(want)});
            if (r.n(j, u, k) != want)
                rep.violations.push_back({"unit column: " + triple(r, j, u, k) + " != " + std::to_string(want)});
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int want = j == r.dual(i) ? 1 : 0;
            if (r.n(i, j, u) != want)
                rep.violations.push_back({"duality pairing: " + triple(r, i, j, u) + " != " + std::to_string(want)});
        }
    // rigidity symmetry N^z_{xy} = N^{y*}_{z*x}
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z)
                if (r.n(x, y, z) != r.n(r.dual(z), x, r.dual(y)))
                    rep.violations.push_back({"rigidity symmetry: " + triple(r, x, y, z) + " != " +
                                              triple(r, r.dual(z), x, r.dual(y))});
    // associativity
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z)
                for (size_t w = 0; w < n; ++w) {
                    long long lhs = 0, rhs = 0;
                    for (size_t s = 0; s < n; ++s) {
                        lhs += static_cast<long long>(r.n(x, y, s)) * r.n(s, z, w);
                        rhs += static_cast<long long>(r.n(y, z, s)) * r.n(x, s, w);
                    }
                    if (lhs != rhs)
                        rep.violations.push_back({"associativity at (" + r.label(x) + "," + r.label(y) +
                                                  "," + r.label(z) + ";" + r.label(w) + "): " +
                                                  std::to_string(lhs) + " != " + std::to_string(rhs)});
                }
    return rep;
}

FusionRing rank3_ring() {
    const size_t U = 0, Y = 1, X = 2;
    std::vector t(3, std::vector(3, std::vector<int>(3, 0)));
    for (size_t j = 0; j < 3; ++j) {
        t[U][j][j] = 1;
        if (j != U) t[j][U][j] = 1;
    }
    t[Y][Y][U] = 1;
    t[X][Y][X] = 1;
    t[Y][X][X] = 1;
    t[X][X][U] = 1;
    t[X][X][Y] = 1;
    t[X][X][X] = 2;
    return FusionRing({"1", "y", "x"}, U, {0, 1, 2}, std::move(t));
}

FusionRing trivial_ring() {
    return FusionRing({"1"}, 0, {0}, {{{1}}});
}

FusionRing cyclic_group_ring(size_t n) {
    std::vector<std::string> labels;
    std::vector<size_t> dual;
    for (size_t i = 0; i < n; ++i) {
        labels.push_back("g" + std::to_string(i));
        dual.push_back((n - i) % n);
    }
    std::vector t(n, std::vector(n, std::vector<int>(n, 0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i][j][(i + j) % n] = 1;
    return FusionRing(std::move(labels), 0, std::move(dual), std::move(t));
}

int hom_dim(const FusionRing& r, const std::vector<size_t>& word, size_t target) {
    if (word.empty()) throw ShapeMismatch("hom_dim: empty word");
    for (size_t s : word)
        if (s >= r.rank()) throw UnknownLabel(std::to_string(s));
    if (target >= r.rank()) throw UnknownLabel(std::to_string(target));
    // state[t] = dim Hom(prefix, t)
    std::vector<long long> state(r.rank(), 0);
    state[word[0]] = 1;
    for (size_t pos = 1; pos < word.size(); ++pos) {
        std::vector<long long> next(r.rank(), 0);
        for (size_t t = 0; t < r.rank(); ++t) {
            if (state[t] == 0) continue;
            for (size_t k = 0; k < r.rank(); ++k) {
                int m = r.n(t, word[pos], k);
                if (m) next[k] += state[t] * m;
            }
        }
        state = std::move(next);
    }
    return static_cast<int>(state[target]);
}

namespace {

struct Enumerator {
    const EnumerationOptions& opt;
    size_t rank;
    // orbit structure under the rigidity symmetry (x,y,z) -> (z*, x, y*)
    std::vector<std::vector<std::array<size_t, 3>>> orbits;
    std::vector<std::vector<int>> orbit_allowed;  // candidate values per orbit
    std::vector<std::vector<std::vector<int>>> tensor;
    uint64_t nodes = 0;
    std::vector<FusionRing> found;

    explicit Enumerator(const EnumerationOptions& o) : opt(o), rank(o.rank) {}

    // associativity over the quadruples whose sums are fully determined
    bool partial_assoc_ok() const {
        for (size_t x = 0; x < rank; ++x)
            for (size_t y = 0; y < rank; ++y)
                for (size_t z = 0; z < rank; ++z)
                    for (size_t w = 0; w < rank; ++w) {
                        long long lhs = 0, rhs = 0;
                        bool known = true;
                        for (size_t s = 0; s < rank && known; ++s) {
                            int a = tensor[x][y][s], b = tensor[s][z][w];
                            int c = tensor[y][z][s], d = tensor[x][s][w];
                            if (a < 0 || b < 0 || c < 0 || d < 0) {
                                known = false;
                                break;
                            }
                            lhs += static_cast<long long>(a) * b;
                            rhs += static_cast<long long>(c) * d;
                        }
                        if (known && lhs != rhs) return false;
                    }
        return true;
    }

    void run() {
        std::vector<size_t> dual = opt.dual;
        if (dual.empty()) {
            dual.resize(rank);
            std::iota(dual.begin(), dual.end(), 0);
        }
        const size_t u = opt.unit;

        tensor.assign(rank, std::vector(rank, std::vector<int>(rank, -1)));
        // unit constraints and duality pairing are forced
        for (size_t j = 0; j < rank; ++j)
            for (size_t k = 0; k < rank; ++k) {
                tensor[u][j][k] = j == k ? 1 : 0;
                tensor[j][u][k] = j == k ? 1 : 0;
            }
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j)
                if (i != u && j != u) tensor[i][j][u] = j == dual[i] ? 1 : 0;

        // caller constraints
        std::map<std::array<size_t, 3>, std::vector<int>> pinned;
        for (const auto& c : opt.constraints) pinned[{c.i, c.j, c.k}] = c.allowed;

        // group the remaining free entries into rigidity orbits
        std::vector<std::vector<std::vector<bool>>> seen(
            rank, std::vector(rank, std::vector<bool>(rank, false)));
        for (size_t x = 0; x < rank; ++x)
            for (size_t y = 0; y < rank; ++y)
                for (size_t z = 0; z < rank; ++z) {
                    if (seen[x][y][z] || tensor[x][y][z] >= 0) continue;
                    std::vector<std::array<size_t, 3>> orbit;
                    std::array<size_t, 3> cur = {x, y, z};
                    while (!seen[cur[0]][cur[1]][cur[2]]) {
                        seen[cur[0]][cur[1]][cur[2]] = true;
                        orbit.push_back(cur);
                        cur = {dual[cur[2]], cur[0], dual[cur[1]]};
                    }
                    std::vector<int> allowed;
                    for (int v = 0; v <= opt.max_entry; ++v) allowed.push_back(v);
                    for (const auto& cell : orbit) {
                        auto it = pinned.find(cell);
                        if (it == pinned.end()) continue;
                        std::vector<int> merged;
                        for (int v : allowed)
                            if (std::find(it->second.begin(), it->second.end(), v) != it->second.end())
                                merged.push_back(v);
                        allowed = std::move(merged);
                    }
                    orbits.push_back(std::move(orbit));
                    orbit_allowed.push_back(std::move(allowed));
                }

        // entries forced by symmetry from pinned cells that overlap forced ones
        // are handled by the orbit merge above
        search(0);
    }

    void search(size_t idx) {
        if (++nodes > opt.node_budget)
            throw BudgetExceeded("fusion ring enumeration exceeded node budget");
        if (idx == orbits.size()) {
            std::vector<std::string> labels = opt.labels;
            if (labels.empty())
                for (size_t i = 0; i < rank; ++i) labels.push_back("s" + std::to_string(i));
            std::vector<size_t> dual = opt.dual;
            if (dual.empty()) {
                dual.resize(rank);
                std::iota(dual.begin(), dual.end(), 0);
            }
            FusionRing candidate(labels, opt.unit, dual, tensor);
            if (validate(candidate).ok()) found.push_back(std::move(candidate));
            return;
        }
        for (int v : orbit_allowed[idx]) {
            for (const auto& cell : orbits[idx]) tensor[cell[0]][cell[1]][cell[2]] = v;
            if (partial_assoc_ok()) search(idx + 1);
        }
        for (const auto& cell : orbits[idx]) tensor[cell[0]][cell[1]][cell[2]] = -1;
    }
};

// canonical form under label permutations fixing unit and commuting with dual
std::string canonical_key(const FusionRing& r) {
    const size_t n = r.rank();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        if (perm[r.unit()] != r.unit()) continue;
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            if (perm[r.dual(i)] != r.dual(perm[i])) ok = false;
        if (!ok) continue;
        // entry (i,j,k) of the relabeled ring is N(perm^-1 i, perm^-1 j, perm^-1 k)
        std::vector<size_t> inv(n);
        for (size_t i = 0; i < n; ++i) inv[perm[i]] = i;
        std::string pkey;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    pkey.push_back(static_cast<char>('0' + r.n(inv[i], inv[j], inv[k])));
        if (best.empty() || pkey < best) best = pkey;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::vector<FusionRing> enumerate_rings(const EnumerationOptions& opt) {
    if (opt.rank == 0 || opt.rank > 4)
        throw ShapeMismatch("enumerate_rings supports rank 1..4");
    if (opt.max_entry < 0 || opt.max_entry > 3)
        throw ShapeMismatch("enumerate_rings supports max_entry 0..3");
    Enumerator e(opt);
    e.run();
    std::vector<FusionRing> unique;
    std::vector<std::string> keys;
    for (auto& ring : e.found) {
        std::string key = canonical_key(ring);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            keys.push_back(std::move(key));
            unique.push_back(std::move(ring));
        }
    }
    return unique;
}

} // namespace fc
