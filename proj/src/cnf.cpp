#include "hpt/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hpt/errors.hpp"

namespace hpt {

namespace {

// Clause canonical order: by variable, positive literal before negative.
int literal_key(int lit) { return 2 * std::abs(lit) + (lit < 0 ? 1 : 0); }

std::size_t occ_index(int lit, int var_count) {
    int v = std::abs(lit);
    return static_cast<std::size_t>(lit > 0 ? v - 1 : var_count + v - 1);
}

}  // namespace

CnfFormula::CnfFormula(int var_count, std::vector<std::vector<int>> clauses)
    : var_count_(var_count), clauses_(std::move(clauses)) {
    if (var_count_ < 0) throw DomainError("cnf: negative variable count");
    for (auto& clause : clauses_) {
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > var_count_)
                throw DomainError("cnf: literal out of range");
        }
        std::sort(clause.begin(), clause.end(),
                  [](int a, int b) { return literal_key(a) < literal_key(b); });
        for (std::size_t i = 1; i < clause.size(); ++i)
            if (clause[i] == clause[i - 1]) throw DomainError("cnf: repeated literal in clause");
    }
}

bool validate_kc(const CnfFormula& f, int k, int c) {
    for (const auto& clause : f.clauses())
        if (static_cast<int>(clause.size()) > k) return false;
    std::vector<int> occ(2 * static_cast<std::size_t>(f.var_count()), 0);
    for (const auto& clause : f.clauses())
        for (int lit : clause) ++occ[occ_index(lit, f.var_count())];
    for (int count : occ)
        if (count != c) return false;
    return true;
}

int literal_occurrences(const CnfFormula& f, int lit) {
    int count = 0;
    for (const auto& clause : f.clauses())
        if (std::find(clause.begin(), clause.end(), lit) != clause.end()) ++count;
    return count;
}

int max_literal_occurrence(const CnfFormula& f) {
    std::vector<int> occ(2 * static_cast<std::size_t>(f.var_count()), 0);
    for (const auto& clause : f.clauses())
        for (int lit : clause) ++occ[occ_index(lit, f.var_count())];
    int best = 0;
    for (int count : occ) best = std::max(best, count);
    return best;
}

bool clause_satisfied(const std::vector<int>& clause, const std::vector<bool>& assignment) {
    for (int lit : clause) {
        bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
        if ((lit > 0) == value) return true;
    }
    return false;
}

int count_satisfied(const CnfFormula& f, const std::vector<bool>& assignment) {
    int count = 0;
    for (const auto& clause : f.clauses())
        if (clause_satisfied(clause, assignment)) ++count;
    return count;
}

namespace {

// Enumerates assignments in lexicographic tuple order (x1,...,xn), false<true.
template <typename Fn>
void for_each_assignment(int n, Fn&& fn) {
    const std::uint64_t total = 1ULL << n;
    std::vector<bool> a(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int i = 0; i < n; ++i)
            a[static_cast<std::size_t>(i)] = ((mask >> (n - 1 - i)) & 1ULL) != 0;
        if (!fn(a)) return;
    }
}

}  // namespace

std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f, int var_limit) {
    if (f.var_count() > var_limit)
        throw CapacityError("brute_force_sat: " + std::to_string(f.var_count()) +
                            " variables exceeds limit " + std::to_string(var_limit));
    std::optional<std::vector<bool>> found;
    for_each_assignment(f.var_count(), [&](const std::vector<bool>& a) {
        if (count_satisfied(f, a) == f.clause_count()) {
            found = a;
            return false;
        }
        return true;
    });
    return found;
}

namespace {

struct DpllState {
    const CnfFormula& f;
    std::vector<int> value;  // 0 unknown, 1 true, -1 false
    std::uint64_t nodes = 0;
    std::uint64_t budget;

    bool lit_true(int lit) const {
        int v = value[static_cast<std::size_t>(std::abs(lit) - 1)];
        return v != 0 && (v > 0) == (lit > 0);
    }
    bool lit_false(int lit) const {
        int v = value[static_cast<std::size_t>(std::abs(lit) - 1)];
        return v != 0 && (v > 0) != (lit > 0);
    }

    // Unit propagation to fixpoint. Returns false on conflict; appends forced
    // variables to the trail.
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : f.clauses()) {
                int unassigned = 0;
                int last = 0;
                bool sat = false;
                for (int lit : clause) {
                    if (lit_true(lit)) {
                        sat = true;
                        break;
                    }
                    if (!lit_false(lit)) {
                        ++unassigned;
                        last = lit;
                    }
                }
                if (sat) continue;
                if (unassigned == 0) return false;
                if (unassigned == 1) {
                    value[static_cast<std::size_t>(std::abs(last) - 1)] = last > 0 ? 1 : -1;
                    trail.push_back(std::abs(last));
                    changed = true;
                }
            }
        }
        return true;
    }

    bool search() {
        if (++nodes > budget) throw CapacityError("dpll_sat: node budget exceeded");
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int v : trail) value[static_cast<std::size_t>(v - 1)] = 0;
            return false;
        }
        int branch = 0;
        for (int v = 1; v <= f.var_count(); ++v)
            if (value[static_cast<std::size_t>(v - 1)] == 0) {
                branch = v;
                break;
            }
        if (branch == 0) return true;
        for (int val : {-1, 1}) {
            value[static_cast<std::size_t>(branch - 1)] = val;
            if (search()) return true;
        }
        value[static_cast<std::size_t>(branch - 1)] = 0;
        for (int v : trail) value[static_cast<std::size_t>(v - 1)] = 0;
        return false;
    }
};

}  // namespace

std::optional<std::vector<bool>> dpll_sat(const CnfFormula& f, std::uint64_t node_budget) {
    DpllState state{f, std::vector<int>(static_cast<std::size_t>(f.var_count()), 0), 0,
                    node_budget};
    if (!state.search()) return std::nullopt;
    std::vector<bool> out(static_cast<std::size_t>(f.var_count()));
    for (int v = 1; v <= f.var_count(); ++v)
        out[static_cast<std::size_t>(v - 1)] = state.value[static_cast<std::size_t>(v - 1)] > 0;
    return out;
}

Rational max_sat_fraction(const CnfFormula& f, int var_limit) {
    if (f.clause_count() == 0) return Rational(1);
    if (f.var_count() > var_limit) throw CapacityError("max_sat_fraction: over variable limit");
    int best = 0;
    for_each_assignment(f.var_count(), [&](const std::vector<bool>& a) {
        best = std::max(best, count_satisfied(f, a));
        return best < f.clause_count();
    });
    return Rational(best, f.clause_count());
}

Rational sat_distance(const CnfFormula& f, int var_limit) {
    return Rational(1) - max_sat_fraction(f, var_limit);
}

CnfIncidenceOracle::CnfIncidenceOracle(const CnfFormula& f) : f_(f) {
    occ_lists_.resize(2 * static_cast<std::size_t>(f.var_count()));
    occ_numbers_.resize(static_cast<std::size_t>(f.clause_count()));
    for (int j = 1; j <= f.clause_count(); ++j) {
        const auto& clause = f.clauses()[static_cast<std::size_t>(j - 1)];
        for (int lit : clause) {
            auto& list = occ_lists_[occ_index(lit, f.var_count())];
            list.push_back(j);
            occ_numbers_[static_cast<std::size_t>(j - 1)].push_back(
                static_cast<int>(list.size()));
        }
    }
}

AnnotatedClause CnfIncidenceOracle::annotate(int j) const {
    const auto& clause = f_.clauses()[static_cast<std::size_t>(j - 1)];
    AnnotatedClause out;
    out.index = j;
    for (std::size_t i = 0; i < clause.size(); ++i)
        out.literals.emplace_back(clause[i],
                                  occ_numbers_[static_cast<std::size_t>(j - 1)][i]);
    return out;
}

AnnotatedClause CnfIncidenceOracle::clause(int j) {
    if (j < 1 || j > f_.clause_count()) throw DomainError("cnf oracle: clause index out of range");
    ++count_;
    return annotate(j);
}

AnnotatedClause CnfIncidenceOracle::occurrence(int lit, int t) {
    if (lit == 0 || std::abs(lit) > f_.var_count())
        throw DomainError("cnf oracle: literal out of range");
    const auto& list = occ_lists_[occ_index(lit, f_.var_count())];
    if (t < 1 || t > static_cast<int>(list.size()))
        throw DomainError("cnf oracle: occurrence index out of range");
    ++count_;
    return annotate(list[static_cast<std::size_t>(t - 1)]);
}

RegularizeResult regularize(const CnfFormula& f) {
    for (const auto& clause : f.clauses())
        if (clause.empty() || clause.size() > 3)
            throw DomainError("regularize: clause width must be 1..3");
    const int n = f.var_count();
    std::vector<std::int64_t> occ(2 * static_cast<std::size_t>(n), 0);
    for (const auto& clause : f.clauses())
        for (int lit : clause) ++occ[occ_index(lit, n)];
    std::int64_t max_occ = 1;
    for (auto count : occ) max_occ = std::max(max_occ, count);
    const int d = static_cast<int>(max_occ);

    std::int64_t deficit_total = 0;
    for (auto count : occ) deficit_total += d - count;
    if (deficit_total == 0) return {f, d};

    // Fresh variable z absorbs up to d deficits through tautology clauses
    // {lit, z, ~z}; leftover capacity is burned by {z, ~z} pads. Both clause
    // shapes contain z OR ~z, so satisfying assignments are untouched.
    std::vector<int> deficit_slots;
    for (int v = 1; v <= n; ++v) {
        for (std::int64_t r = occ[occ_index(v, n)]; r < d; ++r) deficit_slots.push_back(v);
        for (std::int64_t r = occ[occ_index(-v, n)]; r < d; ++r) deficit_slots.push_back(-v);
    }
    std::vector<std::vector<int>> clauses = f.clauses();
    int next_var = n;
    std::size_t slot = 0;
    while (slot < deficit_slots.size()) {
        int z = ++next_var;
        int absorbed = 0;
        while (absorbed < d && slot < deficit_slots.size()) {
            clauses.push_back({deficit_slots[slot++], z, -z});
            ++absorbed;
        }
        for (int pad = absorbed; pad < d; ++pad) clauses.push_back({z, -z});
    }
    CnfFormula out(next_var, std::move(clauses));
    if (!validate_kc(out, 3, d))
        throw GenerationError("regularize: internal bookkeeping failed");
    return {std::move(out), d};
}

}  // namespace hpt
