#ifndef LINDO_CNF_HPP
#define LINDO_CNF_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lindo/error.hpp"

namespace lindo {

// Clause list over integer variables 1..num_vars; literals are signed,
// never zero. An empty clause appears only in the canonical FALSE
// formula.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    static CnfFormula canonical_false() { return {0, {{}}}; }

    bool is_false() const { return clauses.size() == 1 && clauses[0].empty(); }

    void validate_literals() const {
        for (const auto& cl : clauses)
            for (int lit : cl) {
                if (lit == 0) throw ContractViolation("zero literal");
                if (std::abs(lit) > num_vars)
                    throw ContractViolation("literal " + std::to_string(lit) +
                                            " exceeds variable count");
            }
    }

    void validate() const {
        validate_literals();
        for (const auto& cl : clauses)
            if (cl.empty() && !is_false())
                throw ContractViolation("empty clause outside the canonical FALSE formula");
    }

    bool operator==(const CnfFormula&) const = default;
};

// DIMACS cnf: "p cnf <vars> <clauses>", then clause lines of signed
// integers each terminated by 0.
inline CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula phi;
    std::string line;
    int lineno = 0;
    long long declared = -1;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            long long nv = -1, nc = -1;
            if (!(ls >> kind >> nv >> nc) || kind != "cnf" || nv < 0 || nc < 0)
                throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
            if (declared >= 0) throw ParseError(lineno, "duplicate header");
            phi.num_vars = static_cast<int>(nv);
            declared = nc;
            continue;
        }
        if (declared < 0) throw ParseError(lineno, "expected 'p cnf' header first");
        std::istringstream body(line);
        long long lit;
        while (body >> lit) {
            if (lit == 0) {
                phi.clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > phi.num_vars)
                    throw ParseError(lineno, "literal out of range: " + std::to_string(lit));
                current.push_back(static_cast<int>(lit));
            }
        }
        if (!body.eof()) throw ParseError(lineno, "expected integer literal");
    }
    if (declared < 0) throw ParseError(lineno, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(lineno, "unterminated clause at end of input");
    if (static_cast<long long>(phi.clauses.size()) != declared)
        throw ParseError(lineno, "expected " + std::to_string(declared) + " clauses, found " +
                                     std::to_string(phi.clauses.size()));
    return phi;
}

inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

inline void write_dimacs(std::ostream& os, const CnfFormula& phi) {
    os << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& cl : phi.clauses) {
        for (int lit : cl) os << lit << ' ';
        os << "0\n";
    }
}

inline std::string write_dimacs(const CnfFormula& phi) {
    std::ostringstream os;
    write_dimacs(os, phi);
    return os.str();
}

// Complete backtracking search: chronological branching over variables
// in index order plus unit propagation. Deliberately no heuristics,
// learning, or restarts: the point is an auditable exhaustive oracle
// for desk-scale formulas, not solver performance.
inline bool satisfiable_exhaustive(const CnfFormula& phi, int max_vars = 64) {
    phi.validate_literals();
    if (phi.num_vars > max_vars)
        throw ScaleGuardError("formula has " + std::to_string(phi.num_vars) +
                              " variables, exhaustive guard is " + std::to_string(max_vars));
    for (const auto& cl : phi.clauses)
        if (cl.empty()) return false;

    // assignment[v]: 0 unknown, 1 true, -1 false
    std::vector<signed char> assignment(phi.num_vars + 1, 0);
    std::vector<int> trail;
    auto assign = [&](int lit) {
        assignment[std::abs(lit)] = static_cast<signed char>(lit > 0 ? 1 : -1);
        trail.push_back(std::abs(lit));
    };

    // scan all clauses to a fixpoint; false on conflict
    auto propagate = [&] {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& cl : phi.clauses) {
                int unassigned = 0, last_open = 0;
                bool satisfied = false;
                for (int lit : cl) {
                    signed char a = assignment[std::abs(lit)];
                    if (a == 0) {
                        ++unassigned;
                        last_open = lit;
                    } else if ((lit > 0) == (a > 0)) {
                        satisfied = true;
                        break;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    assign(last_open);
                    changed = true;
                }
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self) -> bool {
        int var = 0;
        for (int v = 1; v <= phi.num_vars; ++v)
            if (assignment[v] == 0) {
                var = v;
                break;
            }
        if (var == 0) return true;
        for (int val : {1, -1}) {
            std::size_t mark = trail.size();
            assign(val * var);
            if (propagate() && self(self)) return true;
            while (trail.size() > mark) {
                assignment[trail.back()] = 0;
                trail.pop_back();
            }
        }
        return false;
    };
    if (!propagate()) return false;
    return dfs(dfs);
}

// Evaluate a full assignment (indexed 1..num_vars).
inline bool evaluates_true(const CnfFormula& phi, const std::vector<bool>& assignment) {
    for (const auto& cl : phi.clauses) {
        bool sat = false;
        for (int lit : cl)
            if (assignment[std::abs(lit)] == (lit > 0)) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

// Normalize to strict 3SAT: every clause gets exactly three literals
// over three distinct variables. Long clauses split with chained fresh
// variables; short clauses pad with fresh variables over all sign
// patterns so padding alone can never satisfy them. Tautological
// clauses drop. Equisatisfiable with the input.
inline CnfFormula cnf_to_3sat(const CnfFormula& phi) {
    phi.validate_literals();
    CnfFormula out;
    out.num_vars = phi.num_vars;
    auto fresh = [&out] { return ++out.num_vars; };

    for (const auto& clause : phi.clauses) {
        // canonical literal order, duplicates collapsed
        std::vector<int> lits = clause;
        std::sort(lits.begin(), lits.end(),
                  [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        bool tautology = false;
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if (lits[i] == -lits[i + 1]) tautology = true;
        if (tautology) continue;

        const std::size_t r = lits.size();
        if (r == 0) {
            int p = fresh(), q = fresh(), s = fresh();
            for (int sp : {1, -1})
                for (int sq : {1, -1})
                    for (int ss : {1, -1}) out.clauses.push_back({sp * p, sq * q, ss * s});
        } else if (r == 1) {
            int p = fresh(), q = fresh();
            for (int sp : {1, -1})
                for (int sq : {1, -1}) out.clauses.push_back({lits[0], sp * p, sq * q});
        } else if (r == 2) {
            int p = fresh();
            for (int sp : {1, -1}) out.clauses.push_back({lits[0], lits[1], sp * p});
        } else if (r == 3) {
            out.clauses.push_back(lits);
        } else {
            int z = fresh();
            out.clauses.push_back({lits[0], lits[1], z});
            for (std::size_t i = 2; i + 2 < r; ++i) {
                int z2 = fresh();
                out.clauses.push_back({-z, lits[i], z2});
                z = z2;
            }
            out.clauses.push_back({-z, lits[r - 2], lits[r - 1]});
        }
    }
    return out;
}

// Strict 3SAT: exactly three literals per clause over three distinct
// variables.
inline bool is_strict_3sat(const CnfFormula& phi) {
    for (const auto& cl : phi.clauses) {
        if (cl.size() != 3) return false;
        int a = std::abs(cl[0]), b = std::abs(cl[1]), c = std::abs(cl[2]);
        if (a == b || a == c || b == c) return false;
    }
    return true;
}

} // namespace lindo

#endif
