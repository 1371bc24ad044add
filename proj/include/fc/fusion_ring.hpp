#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fc {

struct UnknownLabel : std::invalid_argument {
    explicit UnknownLabel(const std::string& name)
        : std::invalid_argument("unknown strand label: " + name) {}
};

struct ShapeMismatch : std::invalid_argument {
    explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Fusion-rule data: rank, strand labels, unit, dual involution and the
// multiplicity tensor N[i][j][k] = N^{x_k}_{x_i x_j}.
class FusionRing {
public:
    FusionRing() = default;
    FusionRing(std::vector<std::string> labels, size_t unit, std::vector<size_t> dual,
               std::vector<std::vector<std::vector<int>>> tensor);

    size_t rank() const { return labels_.size(); }
    size_t unit() const { return unit_; }
    size_t dual(size_t i) const { return dual_[i]; }
    const std::vector<size_t>& dual_involution() const { return dual_; }
    const std::string& label(size_t i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<size_t> label_index(const std::string& name) const;

    int n(size_t i, size_t j, size_t k) const { return tensor_[i][j][k]; }
    const std::vector<std::vector<std::vector<int>>>& tensor() const { return tensor_; }

    friend bool operator==(const FusionRing& a, const FusionRing& b) {
        return a.labels_ == b.labels_ && a.unit_ == b.unit_ && a.dual_ == b.dual_ &&
               a.tensor_ == b.tensor_;
    }

private:
    std::vector<std::string> labels_;
    size_t unit_ = 0;
    std::vector<size_t> dual_;
    std::vector<std::vector<std::vector<int>>> tensor_;
};

struct RingViolation {
    std::string identity;  // which axiom, with indices
};

struct ValidationReport {
    std::vector<RingViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks unit constraints, duality pairing, rigidity symmetry
// N^z_{xy} = N^{y*}_{z*x} and associativity of the tensor.
ValidationReport validate(const FusionRing& r);

// The rank-3 ring with labels [1, y, x]:
//   x(x)x = 1 + y + 2x,  xy = yx = x,  yy = 1,  all strands self-dual.
FusionRing rank3_ring();

// Trivial rank-1 ring.
FusionRing trivial_ring();

// Pointed ring of a cyclic group Z_n (labels g0..g{n-1}, g_i* = g_{-i}).
FusionRing cyclic_group_ring(size_t n);

// dim Hom(word -> target), by iterated contraction.
int hom_dim(const FusionRing& r, const std::vector<size_t>& word, size_t target);

// A constraint pins tensor entry (i,j,k) to one of the allowed values.
struct EntryConstraint {
    size_t i, j, k;
    std::vector<int> allowed;
};

struct EnumerationOptions {
    size_t rank = 0;
    int max_entry = 3;
    std::vector<std::string> labels;          // optional; defaults to s0..s{r-1}
    size_t unit = 0;
    std::vector<size_t> dual;                 // involution; identity if empty
    std::vector<EntryConstraint> constraints;
    uint64_t node_budget = 50'000'000;
};

// Exhaustive enumeration of valid fusion rings subject to the constraints,
// deduplicated up to label permutations that fix the unit and commute with
// the dual involution.
std::vector<FusionRing> enumerate_rings(const EnumerationOptions& opt);

} // namespace fc
