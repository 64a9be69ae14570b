#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hpt/rational.hpp"

namespace hpt {

// CNF over variables 1..var_count. Literals are signed DIMACS-style ints
// (+v / -v). Each clause is a set: stored sorted by (variable, polarity),
// no repeated literal. The clause sequence order is fixed.
class CnfFormula {
public:
    CnfFormula(int var_count, std::vector<std::vector<int>> clauses);

    int var_count() const { return var_count_; }
    const std::vector<std::vector<int>>& clauses() const { return clauses_; }
    int clause_count() const { return static_cast<int>(clauses_.size()); }

    friend bool operator==(const CnfFormula& a, const CnfFormula& b) {
        return a.var_count_ == b.var_count_ && a.clauses_ == b.clauses_;
    }

private:
    int var_count_;
    std::vector<std::vector<int>> clauses_;
};

// True iff every clause has <= k literals and every literal (each polarity of
// every variable 1..n) appears in exactly c clauses.
bool validate_kc(const CnfFormula& f, int k, int c);

// Occurrences of literal `lit` across the clause list.
int literal_occurrences(const CnfFormula& f, int lit);
// Max occurrence count over all 2n literals.
int max_literal_occurrence(const CnfFormula& f);

bool clause_satisfied(const std::vector<int>& clause, const std::vector<bool>& assignment);
int count_satisfied(const CnfFormula& f, const std::vector<bool>& assignment);

// Exhaustive SAT in lexicographic assignment order (x1 most significant,
// false < true); returns the lexicographically smallest satisfying assignment.
// Throws CapacityError when var_count exceeds the limit.
std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& f, int var_limit = 24);

// Complete DPLL (unit propagation + branching) with a node budget, for
// definitional encodings past the exhaustive limit. Witness is not
// lexicographically canonical.
std::optional<std::vector<bool>> dpll_sat(const CnfFormula& f,
                                          std::uint64_t node_budget = 50'000'000);

// Max over assignments of satisfied/m (exact). Empty formula -> 1.
Rational max_sat_fraction(const CnfFormula& f, int var_limit = 24);
// 1 - max_sat_fraction: the epsilon-far measure on clause edits.
Rational sat_distance(const CnfFormula& f, int var_limit = 24);

// A clause with each literal annotated by its occurrence number (this clause
// is the literal's t-th clause in formula order).
struct AnnotatedClause {
    int index;                                   // 1-based clause index
    std::vector<std::pair<int, int>> literals;   // (literal, occurrence number)
};

// Counted incidence access to a formula: the query model reductions sit on.
// Both lookups cost one query.
class CnfIncidenceOracle {
public:
    explicit CnfIncidenceOracle(const CnfFormula& f);

    AnnotatedClause clause(int j);               // clause by index
    AnnotatedClause occurrence(int lit, int t);  // t-th clause containing lit

    std::uint64_t count() const { return count_; }
    void reset_count() { count_ = 0; }
    const CnfFormula& formula() const { return f_; }

private:
    AnnotatedClause annotate(int j) const;

    const CnfFormula& f_;
    std::vector<std::vector<int>> occ_lists_;    // per literal key, clause indices
    std::vector<std::vector<int>> occ_numbers_;  // per clause, occurrence number per literal
    std::uint64_t count_ = 0;
};

// Pads an exactly-3-CNF to exact (3,d)-regularity with fresh-variable
// tautologies; equisatisfiable (every added clause contains z OR ~z).
struct RegularizeResult {
    CnfFormula formula;
    int d;  // the achieved uniform occurrence count
};
RegularizeResult regularize(const CnfFormula& f);

}  // namespace hpt
