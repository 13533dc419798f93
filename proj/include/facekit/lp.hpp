#pragma once

// Exact linear programming:  minimize c·x  subject to  a_i·x >= b_i.
//
// Two-phase primal simplex over the rationals. Pivoting follows Dantzig's
// rule while the objective strictly improves and falls back to Bland's rule
// after a long degenerate stall, so termination is unconditional — no
// cycling, no tolerances, no perturbation. Every outcome carries a
// certificate that closes the loop exactly:
//
//   infeasible  -> Farkas multipliers   f >= 0, f^T A = 0, f^T b > 0
//   unbounded   -> feasible point + ray r with  A r >= 0, c·r < 0
//   optimal     -> point + duals        d >= 0, A^T d = c, d^T b = value,
//                  complementary slackness  d_i > 0 => a_i·x = b_i
//
// verify_outcome() re-checks whichever certificate was produced, using only
// arithmetic — it never trusts the solver's internals.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace facekit {

struct LinProgram {
    std::vector<LinRel> constraints;  // each: normal · x >= offset
    Vector objective;                 // minimized
};

struct LpInfeasible {
    std::vector<Rational> farkas;  // one multiplier per constraint
};

struct LpUnbounded {
    Vector feasible;
    Vector ray;
};

struct LpOptimal {
    Vector point;
    Rational value;
    std::vector<Rational> dual;  // one multiplier per constraint
};

using LpOutcome = std::variant<LpInfeasible, LpUnbounded, LpOptimal>;

namespace detail {

// Dense simplex tableau over columns [x+ | x- | slack | artificial | rhs].
// Free variables are split into positive parts; each constraint row i is
// stored as  sign_i * (a_i·x - s_i) + z_i = sign_i * b_i  with sign chosen so
// the right-hand side starts nonnegative and the artificial basis is
// feasible. The artificial columns begin as the identity and therefore hold
// the running basis inverse, which is where dual values are read from.
class SimplexTableau {
public:
    SimplexTableau(const std::vector<LinRel>& rows, std::size_t dim)
        : dim_(dim), m_(rows.size()), cols_(2 * dim + 2 * rows.size() + 1) {
        tab_.assign(m_, std::vector<Rational>(cols_, Rational(0)));
        basis_.resize(m_);
        sign_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational s = rows[i].offset >= 0 ? 1 : -1;
            sign_[i] = s;
            for (std::size_t j = 0; j < dim_; ++j) {
                tab_[i][j] = s * rows[i].normal[j];
                tab_[i][dim_ + j] = -s * rows[i].normal[j];
            }
            tab_[i][slack_col(i)] = -s;
            tab_[i][artif_col(i)] = 1;
            tab_[i][rhs_col()] = s * rows[i].offset;
            basis_[i] = artif_col(i);
        }
    }

    std::size_t slack_col(std::size_t i) const { return 2 * dim_ + i; }
    std::size_t artif_col(std::size_t i) const { return 2 * dim_ + m_ + i; }
    std::size_t rhs_col() const { return cols_ - 1; }
    bool is_artificial(std::size_t col) const { return col >= 2 * dim_ + m_ && col < rhs_col(); }

    // Phase objective as a full cost row; cost[j] applies to column j.
    // Runs to optimality; returns the entering column on which the program
    // is unbounded, or nullopt when an optimum was reached. The reduced-cost
    // row is computed once and then kept in step by every pivot, so the
    // entering scan is comparisons only. Entering choice: most negative
    // reduced cost (smallest column on ties) until the objective has stalled
    // on degenerate pivots for too long, then smallest negative column —
    // Bland's rule — which cannot cycle from any tableau.
    std::optional<std::size_t> optimize(const std::vector<Rational>& cost, bool allow_artificial) {
        costrow_ = cost;
        for (std::size_t i = 0; i < m_; ++i) {
            if (cost[basis_[i]] == 0) continue;
            const Rational f = cost[basis_[i]];
            for (std::size_t j = 0; j < cols_; ++j)
                if (tab_[i][j] != 0) costrow_[j] -= f * tab_[i][j];
        }

        const std::size_t stall_limit = 2 * (m_ + cols_) + 8;
        std::size_t stall = 0;
        bool bland = false;
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j + 1 < cols_; ++j) {
                if (!allow_artificial && is_artificial(j)) continue;
                if (costrow_[j] >= 0) continue;
                if (bland) { entering = j; break; }
                if (!entering || costrow_[j] < costrow_[*entering]) entering = j;
            }
            if (!entering) { costrow_.clear(); return std::nullopt; }

            std::optional<std::size_t> leaving;
            Rational best_ratio = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][*entering] <= 0) continue;
                const Rational ratio = tab_[i][rhs_col()] / tab_[i][*entering];
                if (!leaving || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving) {
                const std::size_t witness = *entering;
                costrow_.clear();
                return witness;  // column proves unboundedness
            }
            if (best_ratio == 0) {
                if (++stall > stall_limit) bland = true;
            } else {
                stall = 0;
            }
            pivot(*leaving, *entering);
        }
    }

    Rational reduced_cost(const std::vector<Rational>& cost, std::size_t col) const {
        Rational rc = cost[col];
        for (std::size_t i = 0; i < m_; ++i) {
            if (cost[basis_[i]] == 0) continue;
            rc -= cost[basis_[i]] * tab_[i][col];
        }
        return rc;
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = Rational(1) / tab_[row][col];
        for (auto& entry : tab_[row]) entry *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            const Rational factor = tab_[i][col];
            for (std::size_t j = 0; j < cols_; ++j)
                if (tab_[row][j] != 0) tab_[i][j] -= factor * tab_[row][j];
        }
        if (!costrow_.empty() && costrow_[col] != 0) {
            const Rational factor = costrow_[col];
            for (std::size_t j = 0; j < cols_; ++j)
                if (tab_[row][j] != 0) costrow_[j] -= factor * tab_[row][j];
        }
        basis_[row] = col;
    }

    // After phase one: degenerate-pivot every basic artificial onto a real
    // column when possible. Rows whose real part vanished are identities
    // 0 = 0; their artificial stays basic at value zero and the row is inert
    // from here on (its real entries remain zero under later pivots).
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (!is_artificial(basis_[i])) continue;
            if (tab_[i][rhs_col()] != 0)
                throw InternalError("simplex: basic artificial with nonzero value after phase one");
            for (std::size_t j = 0; j < 2 * dim_ + m_; ++j) {
                if (tab_[i][j] != 0) { pivot(i, j); break; }
            }
        }
    }

    Vector basic_point() const {
        Vector plus(dim_, Rational(0)), minus(dim_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < dim_) plus[basis_[i]] = tab_[i][rhs_col()];
            else if (basis_[i] < 2 * dim_) minus[basis_[i] - dim_] = tab_[i][rhs_col()];
        }
        return sub(plus, minus);
    }

    // Improving ray of the entering column that had no blocking row.
    Vector ray_of(std::size_t entering) const {
        Vector dir_plus(dim_, Rational(0)), dir_minus(dim_, Rational(0));
        auto put = [&](std::size_t col, const Rational& value) {
            if (col < dim_) dir_plus[col] = value;
            else if (col < 2 * dim_) dir_minus[col - dim_] = value;
        };
        put(entering, Rational(1));
        for (std::size_t i = 0; i < m_; ++i) put(basis_[i], -tab_[i][entering]);
        return sub(dir_plus, dir_minus);
    }

    // cost_B * B^{-1}, row i — read off the artificial columns, which track
    // the basis inverse. Multiplied by the stored row sign this is the dual
    // multiplier of original row i.
    Rational dual_of_row(const std::vector<Rational>& cost, std::size_t i) const {
        return sign_[i] * reduced_cost_free(cost, artif_col(i));
    }

    Rational objective_value(const std::vector<Rational>& cost) const {
        Rational value = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (cost[basis_[i]] != 0) value += cost[basis_[i]] * tab_[i][rhs_col()];
        return value;
    }

    std::size_t real_cols() const { return 2 * dim_ + m_; }
    std::size_t total_cols() const { return cols_; }

private:
    // Like reduced_cost with cost[col] treated as zero (the raw price).
    Rational reduced_cost_free(const std::vector<Rational>& cost, std::size_t col) const {
        Rational rc = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (cost[basis_[i]] == 0) continue;
            rc += cost[basis_[i]] * tab_[i][col];
        }
        return rc;
    }

    std::size_t dim_;
    std::size_t m_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> sign_;
    std::vector<Rational> costrow_;  // reduced costs, live only inside optimize()
};

}  // namespace detail

/// Solve min objective·x over the constraint rows. Deterministic: equal
/// programs produce identical outcomes, certificates included.
inline LpOutcome solve(const LinProgram& lp) {
    const std::size_t dim = lp.objective.size();
    for (const LinRel& rel : lp.constraints)
        if (rel.normal.size() != dim) throw UsageError("solve: constraint dimension mismatch");

    const std::size_t total = lp.constraints.size();

    // Rows with a zero normal are decided immediately: 0 >= b is vacuous for
    // b <= 0 and unsatisfiable otherwise (unit Farkas certificate).
    std::vector<std::size_t> live;  // solver row -> original row
    for (std::size_t i = 0; i < total; ++i) {
        if (!is_zero(lp.constraints[i].normal)) { live.push_back(i); continue; }
        if (lp.constraints[i].offset > 0) {
            std::vector<Rational> farkas(total, Rational(0));
            farkas[i] = 1;
            return LpInfeasible{std::move(farkas)};
        }
    }

    std::vector<LinRel> rows;
    rows.reserve(live.size());
    for (std::size_t i : live) rows.push_back(lp.constraints[i]);

    detail::SimplexTableau tableau(rows, dim);

    // Phase one: minimize the sum of artificials.
    std::vector<Rational> phase1(tableau.total_cols(), Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i) phase1[tableau.artif_col(i)] = 1;
    if (tableau.optimize(phase1, true))
        throw InternalError("simplex: phase one unbounded");

    if (tableau.objective_value(phase1) > 0) {
        std::vector<Rational> farkas(total, Rational(0));
        for (std::size_t i = 0; i < rows.size(); ++i)
            farkas[live[i]] = tableau.dual_of_row(phase1, i);
        return LpInfeasible{std::move(farkas)};
    }
    tableau.expel_artificials();

    // Phase two: the real objective on the split variables.
    std::vector<Rational> phase2(tableau.total_cols(), Rational(0));
    for (std::size_t j = 0; j < dim; ++j) {
        phase2[j] = lp.objective[j];
        phase2[dim + j] = -lp.objective[j];
    }
    if (const auto entering = tableau.optimize(phase2, false))
        return LpUnbounded{tableau.basic_point(), tableau.ray_of(*entering)};

    LpOptimal opt;
    opt.point = tableau.basic_point();
    opt.value = dot(lp.objective, opt.point);
    opt.dual.assign(total, Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        opt.dual[live[i]] = tableau.dual_of_row(phase2, i);
    return opt;
}

/// True iff every point of the constraint set satisfies every row.
inline bool satisfies(const std::vector<LinRel>& constraints, const Vector& x) {
    for (const LinRel& rel : constraints)
        if (dot(rel.normal, x) < rel.offset) return false;
    return true;
}

/// Check the certificate carried by an outcome against the program, by
/// direct arithmetic only.
inline bool verify_outcome(const LinProgram& lp, const LpOutcome& outcome) {
    const std::size_t dim = lp.objective.size();
    const std::size_t m = lp.constraints.size();

    if (const auto* inf = std::get_if<LpInfeasible>(&outcome)) {
        if (inf->farkas.size() != m) return false;
        Vector combo = zero_vector(dim);
        Rational rhs = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (inf->farkas[i] < 0) return false;
            combo = add(combo, scale(inf->farkas[i], lp.constraints[i].normal));
            rhs += inf->farkas[i] * lp.constraints[i].offset;
        }
        return is_zero(combo) && rhs > 0;
    }
    if (const auto* unb = std::get_if<LpUnbounded>(&outcome)) {
        if (unb->feasible.size() != dim || unb->ray.size() != dim) return false;
        if (!satisfies(lp.constraints, unb->feasible)) return false;
        for (const LinRel& rel : lp.constraints)
            if (dot(rel.normal, unb->ray) < 0) return false;
        return dot(lp.objective, unb->ray) < 0;
    }
    const auto& opt = std::get<LpOptimal>(outcome);
    if (opt.point.size() != dim || opt.dual.size() != m) return false;
    if (!satisfies(lp.constraints, opt.point)) return false;
    if (dot(lp.objective, opt.point) != opt.value) return false;
    Vector combo = zero_vector(dim);
    Rational dual_value = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (opt.dual[i] < 0) return false;
        combo = add(combo, scale(opt.dual[i], lp.constraints[i].normal));
        dual_value += opt.dual[i] * lp.constraints[i].offset;
        // complementary slackness, exactly
        if (opt.dual[i] > 0 && dot(lp.constraints[i].normal, opt.point) != lp.constraints[i].offset)
            return false;
    }
    return combo == lp.objective && dual_value == opt.value;
}

}  // namespace facekit
