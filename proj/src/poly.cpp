#include "fc/poly.hpp"

#include "fc/matrix.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace fc {

bool Poly::is_constant_term(const Expo& e) {
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

void Poly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Poly Poly::constant(const Cyclotomic& c, size_t nvars) {
    Poly p;
    p.nvars_ = nvars;
    if (!c.is_zero()) p.terms_[Expo(nvars, 0)] = c;
    return p;
}

Poly Poly::variable(size_t var, size_t nvars) {
    Poly p;
    p.nvars_ = nvars;
    Expo e(nvars, 0);
    e.at(var) = 1;
    p.terms_[e] = Cyclotomic(1);
    return p;
}

const Cyclotomic Poly::constant_value() const {
    if (terms_.empty()) return Cyclotomic();
    return terms_.begin()->second;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a.nvars_ >= b.nvars_ ? a : b;
    const Poly& other = a.nvars_ >= b.nvars_ ? b : a;
    for (const auto& [e, c] : other.terms_) {
        Poly::Expo ee = e;
        ee.resize(r.nvars_, 0);
        r.terms_[ee] += c;
    }
    r.prune();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    r.nvars_ = std::max(a.nvars_, b.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Poly::Expo e(r.nvars_, 0);
            for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.terms_[e] += ca * cb;
        }
    r.prune();
    return r;
}

Poly operator*(const Cyclotomic& c, const Poly& p) {
    Poly r = p;
    for (auto& [e, v] : r.terms_) v *= c;
    r.prune();
    return r;
}

unsigned Poly::degree_in(size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        if (var < e.size()) d = std::max(d, e[var]);
    return d;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::set<size_t> Poly::support() const {
    std::set<size_t> s;
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) s.insert(i);
    return s;
}

std::map<unsigned, Poly> Poly::collect(size_t var) const {
    std::map<unsigned, Poly> out;
    for (const auto& [e, c] : terms_) {
        unsigned d = var < e.size() ? e[var] : 0;
        Expo rest = e;
        if (var < rest.size()) rest[var] = 0;
        auto& p = out[d];
        p.nvars_ = nvars_;
        p.terms_[rest] += c;
    }
    for (auto& [d, p] : out) p.prune();
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Poly Poly::substitute(size_t var, const Poly& value) const {
    auto parts = collect(var);
    Poly r = constant(Cyclotomic(), std::max(nvars_, value.nvars_));
    Poly power = constant(Cyclotomic(1), r.nvars_);
    unsigned cur = 0;
    for (const auto& [d, coeff] : parts) {
        while (cur < d) {
            power = power * value;
            ++cur;
        }
        r = r + coeff * power;
    }
    return r;
}

Poly Poly::substitute(size_t var, const Cyclotomic& value) const {
    return substitute(var, constant(value, nvars_));
}

Cyclotomic Poly::evaluate(const std::vector<Cyclotomic>& point) const {
    Cyclotomic r;
    for (const auto& [e, c] : terms_) {
        Cyclotomic t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= point.at(i);
        r += t;
    }
    return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            s += "*" + (i < names.size() ? names[i] : "v" + std::to_string(i));
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

std::vector<Cyclotomic> SolutionFamily::point(size_t nvars) const {
    std::vector<Cyclotomic> p(nvars);
    for (const auto& [v, poly] : assign) {
        if (!poly.is_constant()) throw SolverIncomplete("family is not fully resolved");
        p[v] = poly.constant_value();
    }
    return p;
}

Poly resultant(const Poly& p, const Poly& q, size_t var) {
    auto cp = p.collect(var);
    auto cq = q.collect(var);
    unsigned dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp == 0 || dq == 0) return Poly::constant(Cyclotomic(), p.nvars());
    const size_t n = dp + dq;
    const size_t nv = std::max(p.nvars(), q.nvars());
    Mat<Poly> syl(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) syl.at(i, j) = Poly::constant(Cyclotomic(), nv);
    // rows 0..dq-1: shifted p coefficients (descending powers)
    for (size_t r = 0; r < dq; ++r)
        for (unsigned k = 0; k <= dp; ++k) {
            auto it = cp.find(dp - k);
            if (it != cp.end()) syl.at(r, r + k) = it->second;
        }
    for (size_t r = 0; r < dp; ++r)
        for (unsigned k = 0; k <= dq; ++k) {
            auto it = cq.find(dq - k);
            if (it != cq.end()) syl.at(dq + r, r + k) = it->second;
        }
    return det_cofactor(syl);
}

namespace {

struct Branch {
    std::vector<Equation> eqs;
    std::map<size_t, Poly> assign;
    std::vector<std::string> steps;
    std::set<size_t> extra_invertible;  // implied-nonzero variables
    std::set<size_t> implicit;          // discharged auxiliary variables
};

// the non-constant terms' common monomial support; empty when none
std::set<size_t> nonconstant_content_vars(const Poly& p) {
    std::set<size_t> common;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool is_const = true;
        for (unsigned x : e)
            if (x) is_const = false;
        if (is_const) continue;
        std::set<size_t> vars;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) vars.insert(i);
        if (first) {
            common = vars;
            first = false;
        } else {
            std::set<size_t> inter;
            std::set_intersection(common.begin(), common.end(), vars.begin(), vars.end(),
                                  std::inserter(inter, inter.begin()));
            common = inter;
        }
        if (common.empty()) break;
    }
    return first ? std::set<size_t>{} : common;
}

// strip monomial factors of known-nonzero variables
bool strip_invertible_content(Poly& p, const std::set<size_t>& invertible, std::string* note) {
    if (p.is_zero()) return false;
    bool changed = false;
    for (size_t v : invertible) {
        unsigned minexp = UINT_MAX;
        for (const auto& [e, c] : p.terms()) minexp = std::min(minexp, v < e.size() ? e[v] : 0u);
        if (minexp == 0 || minexp == UINT_MAX) continue;
        // divide by v^minexp
        Poly q;
        for (const auto& [e, c] : p.terms()) {
            Poly::Expo ee = e;
            ee[v] -= minexp;
            q += Poly::constant(c, p.nvars()) *
                 [&] {
                     Poly m = Poly::constant(Cyclotomic(1), p.nvars());
                     for (size_t i = 0; i < ee.size(); ++i)
                         for (unsigned k = 0; k < ee[i]; ++k) m *= Poly::variable(i, p.nvars());
                     return m;
                 }();
        }
        p = q;
        changed = true;
        if (note) *note += " /" + std::to_string(v);
    }
    return changed;
}

// exact roots of a constant-coefficient univariate polynomial, found
// numerically and verified exactly
std::vector<Cyclotomic> exact_roots(const std::map<unsigned, Cyclotomic>& coeffs, unsigned deg,
                                    const SolveOptions& opt) {
    std::vector<std::complex<double>> c(deg + 1);
    for (const auto& [d, v] : coeffs) c[d] = v.embed();
    // Durand-Kerner
    std::vector<std::complex<double>> roots(deg);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> cur(1, 0);
    for (unsigned i = 0; i < deg; ++i) {
        cur *= seed;
        roots[i] = cur;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> r = 0;
        for (unsigned d = deg + 1; d-- > 0;) r = r * x + c[d];
        return r;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double move = 0;
        for (unsigned i = 0; i < deg; ++i) {
            std::complex<double> num = eval(roots[i]) / c[deg];
            std::complex<double> den(1, 0);
            for (unsigned j = 0; j < deg; ++j)
                if (j != i) den *= roots[i] - roots[j];
            std::complex<double> delta = num / den;
            roots[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-14) break;
    }
    std::vector<Cyclotomic> out;
    for (auto r : roots) {
        auto cand = recognize(r, opt.recognize_bound);
        if (!cand) throw SolverIncomplete("univariate root did not lift to the field");
        // exact verification
        Cyclotomic val;
        Cyclotomic pow(1);
        for (unsigned d = 0; d <= deg; ++d) {
            auto it = coeffs.find(d);
            if (it != coeffs.end()) val += it->second * pow;
            pow *= *cand;
        }
        if (!val.is_zero()) throw SolverIncomplete("recognized root failed exact verification");
        bool dup = false;
        for (const auto& e : out)
            if (e == *cand) dup = true;
        if (!dup) out.push_back(*cand);
    }
    return out;
}

} // namespace

SolveResult solve_system(const PolySystem& system, const SolveOptions& opt) {
    SolveResult result;
    std::vector<Branch> work{Branch{system.eqs, {}, {}, {}, {}}};

    auto substitute_all = [](Branch& b, size_t var, const Poly& val) {
        for (auto& eq : b.eqs) eq.p = eq.p.substitute(var, val);
        for (auto& [v, p] : b.assign) p = p.substitute(var, val);
        b.assign[var] = val;
    };

    while (!work.empty()) {
        Branch br = std::move(work.back());
        work.pop_back();
        if (result.families.size() + work.size() > opt.max_branches)
            throw SolverIncomplete("branch budget exceeded");

        bool dead = false;
        bool progress = true;
        size_t rounds = 0;
        size_t resultants_added = 0;
        while (progress && !dead) {
            if (++rounds > opt.max_rounds) throw SolverIncomplete("round budget exceeded");
            progress = false;

            std::set<size_t> invertible = system.invertible;
            invertible.insert(br.extra_invertible.begin(), br.extra_invertible.end());

            // normalize: strip content, drop zeros, detect contradictions
            for (auto it = br.eqs.begin(); it != br.eqs.end() && !dead;) {
                strip_invertible_content(it->p, invertible, nullptr);
                if (it->p.is_zero()) {
                    it = br.eqs.erase(it);
                    continue;
                }
                if (it->p.is_constant()) {
                    result.dead.push_back(
                        {br.steps, it->source + " reduces to the nonzero constant " +
                                       it->p.constant_value().to_string()});
                    dead = true;
                    break;
                }
                ++it;
            }
            if (dead) break;

            // nonzero-constant + monomial-divisible remainder implies the
            // content variables are nonzero on every solution
            for (const auto& eq : br.eqs) {
                bool has_const = false;
                for (const auto& [e, c] : eq.p.terms()) {
                    bool is_const = true;
                    for (unsigned xx : e)
                        if (xx) is_const = false;
                    if (is_const) has_const = true;
                }
                if (!has_const) continue;
                for (size_t v : nonconstant_content_vars(eq.p))
                    if (!invertible.count(v)) {
                        br.extra_invertible.insert(v);
                        progress = true;
                    }
            }
            if (progress) continue;

            // sort for determinism: fewest terms, lowest degree first
            std::stable_sort(br.eqs.begin(), br.eqs.end(), [](const Equation& a, const Equation& b) {
                if (a.p.term_count() != b.p.term_count()) return a.p.term_count() < b.p.term_count();
                if (a.p.total_degree() != b.p.total_degree())
                    return a.p.total_degree() < b.p.total_degree();
                return a.source < b.source;
            });

            // linear substitution with constant coefficient
            for (size_t i = 0; i < br.eqs.size() && !progress; ++i) {
                const Poly& p = br.eqs[i].p;
                for (size_t v : p.support()) {
                    if (p.degree_in(v) != 1) continue;
                    auto parts = p.collect(v);
                    const Poly& lead = parts.at(1);
                    if (!lead.is_constant()) continue;
                    Poly rest = parts.count(0) ? parts.at(0) : Poly::constant(Cyclotomic(), p.nvars());
                    Poly val = (-lead.constant_value().inverse()) * rest;
                    std::string step = br.eqs[i].source + ": " +
                                       (v < system.names.size() ? system.names[v] : "v") + " = " +
                                       val.to_string(system.names);
                    br.steps.push_back(step);
                    br.eqs.erase(br.eqs.begin() + i);
                    substitute_all(br, v, val);
                    progress = true;
                    break;
                }
            }
            if (progress) continue;

            // discharge auxiliary variables: v occurs in exactly one
            // equation, linearly, with an invertible-monomial coefficient
            for (size_t i = 0; i < br.eqs.size() && !progress; ++i) {
                const Poly& p = br.eqs[i].p;
                for (size_t v : p.support()) {
                    if (p.degree_in(v) != 1) continue;
                    size_t occurrences = 0;
                    for (const auto& eq : br.eqs)
                        if (eq.p.degree_in(v) > 0) ++occurrences;
                    if (occurrences != 1) continue;
                    bool used_in_assign = false;
                    for (const auto& [av, ap] : br.assign)
                        if (ap.degree_in(v) > 0) used_in_assign = true;
                    if (used_in_assign) continue;
                    auto parts = p.collect(v);
                    const Poly& lead = parts.at(1);
                    bool invertible_coeff = true;
                    if (lead.term_count() != 1) invertible_coeff = false;
                    if (invertible_coeff)
                        for (size_t lv : lead.support())
                            if (!invertible.count(lv)) invertible_coeff = false;
                    if (!invertible_coeff) continue;
                    if (invertible.count(v)) {
                        // the determined value must itself be nonzero
                        Poly rest = parts.count(0) ? parts.at(0) : Poly();
                        strip_invertible_content(rest, invertible, nullptr);
                        if (!(rest.is_constant() && !rest.is_zero())) continue;
                    }
                    br.steps.push_back(br.eqs[i].source + ": discharges " +
                                       (v < system.names.size() ? system.names[v] : "v") +
                                       " (invertible coefficient)");
                    br.implicit.insert(v);
                    br.eqs.erase(br.eqs.begin() + i);
                    progress = true;
                    break;
                }
            }
            if (progress) continue;

            // univariate equations with constant coefficients: exact roots
            for (size_t i = 0; i < br.eqs.size() && !progress; ++i) {
                const Poly& p = br.eqs[i].p;
                auto sup = p.support();
                if (sup.size() != 1) continue;
                size_t v = *sup.begin();
                auto parts = p.collect(v);
                bool all_const = true;
                for (const auto& [d, cp] : parts)
                    if (!cp.is_constant()) all_const = false;
                if (!all_const) continue;
                unsigned deg = p.degree_in(v);
                std::map<unsigned, Cyclotomic> coeffs;
                for (const auto& [d, cp] : parts) coeffs[d] = cp.constant_value();

                std::vector<Cyclotomic> roots;
                if (deg == 2 && !opt.numeric_roots) {
                    // quadratic formula, exact
                    Cyclotomic a = coeffs.count(2) ? coeffs[2] : Cyclotomic();
                    Cyclotomic b = coeffs.count(1) ? coeffs[1] : Cyclotomic();
                    Cyclotomic cc = coeffs.count(0) ? coeffs[0] : Cyclotomic();
                    auto disc = try_sqrt(b * b - Cyclotomic(4) * a * cc);
                    if (!disc) throw SolverIncomplete("quadratic discriminant has no field square root");
                    Cyclotomic inv2a = (Cyclotomic(2) * a).inverse();
                    roots = {(-b + *disc) * inv2a, (-b - *disc) * inv2a};
                    if (roots[0] == roots[1]) roots.pop_back();
                } else {
                    roots = exact_roots(coeffs, deg, opt);
                }
                std::string src = br.eqs[i].source;
                Equation removed = br.eqs[i];
                br.eqs.erase(br.eqs.begin() + i);
                for (const auto& root : roots) {
                    if (system.invertible.count(v) && root.is_zero()) continue;
                    Branch next = br;
                    next.steps.push_back(src + ": " +
                                         (v < system.names.size() ? system.names[v] : "v") + " = " +
                                         root.to_string());
                    substitute_all(next, v, Poly::constant(root, removed.p.nvars()));
                    work.push_back(std::move(next));
                }
                if (roots.empty())
                    result.dead.push_back({br.steps, src + " has no roots in the field"});
                dead = true;  // branch replaced by children (or dead if no roots)
                progress = false;
                break;
            }
            if (progress || dead) continue;

            // last resort: eliminate a variable by a resultant of the two
            // smallest equations containing it
            if (resultants_added < 8) {
                size_t best_v = SIZE_MAX;
                size_t bi = 0, bj = 0;
                size_t best_cost = SIZE_MAX;
                std::set<size_t> vars;
                for (const auto& eq : br.eqs)
                    for (size_t v : eq.p.support()) vars.insert(v);
                for (size_t v : vars) {
                    std::vector<size_t> holders;
                    for (size_t i = 0; i < br.eqs.size(); ++i)
                        if (br.eqs[i].p.degree_in(v) > 0) holders.push_back(i);
                    if (holders.size() < 2) continue;
                    size_t cost = br.eqs[holders[0]].p.term_count() +
                                  br.eqs[holders[1]].p.term_count() +
                                  4 * (br.eqs[holders[0]].p.degree_in(v) +
                                       br.eqs[holders[1]].p.degree_in(v));
                    if (cost < best_cost) {
                        best_cost = cost;
                        best_v = v;
                        bi = holders[0];
                        bj = holders[1];
                    }
                }
                if (best_v != SIZE_MAX) {
                    Poly r = resultant(br.eqs[bi].p, br.eqs[bj].p, best_v);
                    bool duplicate = r.is_zero();
                    for (const auto& eq : br.eqs)
                        if (eq.p == r) duplicate = true;
                    if (!duplicate) {
                        ++resultants_added;
                        br.eqs.push_back({r, "resultant of " + br.eqs[bi].source + " and " +
                                                 br.eqs[bj].source + " eliminating " +
                                                 (best_v < system.names.size()
                                                      ? system.names[best_v]
                                                      : "v")});
                        progress = true;
                    } else if (r.is_zero() && br.eqs[bi].p.support().size() == 1) {
                        // nothing new; give up on this pair
                    }
                }
            }
        }
        if (dead) continue;

        // remaining freedom: variables in the residual or in non-constant
        // assignments
        std::set<size_t> free_vars;
        for (const auto& eq : br.eqs)
            for (size_t s : eq.p.support()) free_vars.insert(s);
        {
            std::set<size_t> assigned;
            for (const auto& [v, p] : br.assign) assigned.insert(v);
            for (const auto& [v, p] : br.assign)
                for (size_t s : p.support())
                    if (!assigned.count(s) && !br.implicit.count(s)) free_vars.insert(s);
        }

        if (!free_vars.empty() && !opt.pin_values.empty()) {
            // pin one free variable per level, preferring known-nonzero ones,
            // and keep solving
            std::set<size_t> invertible = system.invertible;
            invertible.insert(br.extra_invertible.begin(), br.extra_invertible.end());
            size_t pick = SIZE_MAX;
            for (size_t v : free_vars)
                if (invertible.count(v)) { pick = v; break; }
            if (pick == SIZE_MAX) pick = *free_vars.begin();
            for (const Cyclotomic& val : opt.pin_values) {
                Branch child = br;
                child.steps.push_back("pinned free parameter " +
                                      (pick < system.names.size() ? system.names[pick] : "v") +
                                      " = " + val.to_string());
                child.eqs.push_back({Poly::variable(pick, system.nvars()) -
                                         Poly::constant(val, system.nvars()),
                                     "pin"});
                work.push_back(std::move(child));
            }
            continue;
        }

        SolutionFamily fam;
        fam.assign = br.assign;
        fam.implicit = br.implicit;
        fam.residual = br.eqs;
        fam.free_vars.assign(free_vars.begin(), free_vars.end());
        if (!br.eqs.empty()) result.stuck = true;
        result.log.insert(result.log.end(), br.steps.begin(), br.steps.end());
        result.families.push_back(std::move(fam));
    }
    return result;
}

} // namespace fc
