#pragma once

#include "fc/cyclotomic.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fc {

// Multivariate polynomial over Q(zeta_12). Exponent vectors all share the
// system's variable count. Used by the pentagon and hexagon solvers to carry
// equations symbolically; never needed on a hot path.
class Poly {
public:
    using Expo = std::vector<unsigned>;

    Poly() = default;
    Poly(long long c) { *this = constant(Cyclotomic(c), 0); }
    static Poly constant(const Cyclotomic& c, size_t nvars);
    static Poly variable(size_t var, size_t nvars);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && is_constant_term(terms_.begin()->first)); }
    const Cyclotomic constant_value() const;

    const std::map<Expo, Cyclotomic>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }
    friend Poly operator*(const Cyclotomic& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    unsigned degree_in(size_t var) const;
    unsigned total_degree() const;
    // support variables (those with a positive exponent somewhere)
    std::set<size_t> support() const;

    // coefficients as polynomials in the remaining variables, keyed by the
    // exponent of var
    std::map<unsigned, Poly> collect(size_t var) const;

    Poly substitute(size_t var, const Poly& value) const;
    Poly substitute(size_t var, const Cyclotomic& value) const;
    Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    size_t nvars_ = 0;
    std::map<Expo, Cyclotomic> terms_;

    static bool is_constant_term(const Expo& e);
    void prune();
    friend class PolyBuilder;
};

// Equation p = 0 with a provenance tag for logs and certificates.
struct Equation {
    Poly p;
    std::string source;
};

struct PolySystem {
    std::vector<std::string> names;
    std::vector<Equation> eqs;
    std::set<size_t> invertible;  // variables known to be nonzero

    size_t nvars() const { return names.size(); }
    Poly var(size_t i) const { return Poly::variable(i, names.size()); }
    Poly con(const Cyclotomic& c) const { return Poly::constant(c, names.size()); }
};

struct SolutionFamily {
    std::map<size_t, Poly> assign;      // solved variables, as polys in the free ones
    std::vector<size_t> free_vars;
    std::set<size_t> implicit;          // auxiliary vars determined but not materialized
    std::vector<Equation> residual;     // unresolved but non-contradictory relations
    bool fully_resolved() const { return residual.empty() && free_vars.empty(); }
    std::vector<Cyclotomic> point(size_t nvars) const;  // requires fully resolved
};

struct DeadBranch {
    std::vector<std::string> steps;
    std::string contradiction;
};

struct SolveResult {
    std::vector<SolutionFamily> families;
    std::vector<DeadBranch> dead;
    std::vector<std::string> log;
    bool stuck = false;
};

struct SolveOptions {
    bool numeric_roots = true;       // lift roots of constant-coefficient
                                     // univariates through recognition,
                                     // verified exactly afterwards
    long long recognize_bound = 16;
    size_t max_branches = 64;
    size_t max_rounds = 256;
    // When a branch ends parametric, pin free variables to these candidate
    // values (with backtracking) instead of reporting a family. Used by
    // searches that only need existence plus one witness.
    std::vector<Cyclotomic> pin_values;
};

struct SolverIncomplete : std::runtime_error {
    explicit SolverIncomplete(const std::string& what) : std::runtime_error(what) {}
};

// Sequential exact elimination: invertible-content removal, linear
// substitution, exact quadratics, recognized numeric roots for univariate
// equations, and resultants for small residual systems. Deterministic.
SolveResult solve_system(const PolySystem& system, const SolveOptions& opt = {});

// Sylvester resultant eliminating var; zero when either input is zero or
// does not involve var.
Poly resultant(const Poly& p, const Poly& q, size_t var);

} // namespace fc
