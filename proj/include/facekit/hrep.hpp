#pragma once

// Polyhedra as finite systems of linear relations  normal·x >= offset  (an
// "H-form"). Identity here is the literal row sequence; the set-semantic
// quotient lives one layer up. Inclusion and equivalence are decided by
// linear programming, projection by Fourier–Motzkin elimination with
// LP-backed pruning once the row count crosses a threshold.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "linalg.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace facekit {

struct HPoly {
    std::size_t dim = 0;
    std::vector<LinRel> rows;

    friend bool operator==(const HPoly&, const HPoly&) = default;
};

inline void validate(const HPoly& p, const char* who) {
    for (const LinRel& row : p.rows)
        if (row.normal.size() != p.dim) throw UsageError(std::string(who) + ": row dimension mismatch");
}

/// The canonical empty system in a given dimension: the single row 0 >= 1.
inline HPoly hpoly_empty(std::size_t dim) {
    return HPoly{dim, {LinRel{zero_vector(dim), Rational(1)}}};
}

/// The whole space: no rows at all.
inline HPoly hpoly_whole(std::size_t dim) { return HPoly{dim, {}}; }

inline bool member(const HPoly& p, const Vector& x) {
    if (x.size() != p.dim) throw UsageError("member: point dimension mismatch");
    return satisfies(p.rows, x);
}

inline bool hpoly_is_empty(const HPoly& p) {
    LinProgram lp{p.rows, zero_vector(p.dim)};
    return std::holds_alternative<LpInfeasible>(solve(lp));
}

/// Least value of objective·x over p, as an LP outcome.
inline LpOutcome minimize(const HPoly& p, const Vector& objective) {
    return solve(LinProgram{p.rows, objective});
}

/// Decide  p ⊆ q  by minimizing each row of q over p. An empty p is a
/// subset of everything (each minimization reports infeasible).
inline bool subset(const HPoly& p, const HPoly& q) {
    if (p.dim != q.dim) throw UsageError("subset: ambient dimension mismatch");
    for (const LinRel& row : q.rows) {
        const LpOutcome outcome = minimize(p, row.normal);
        if (std::holds_alternative<LpInfeasible>(outcome)) return true;
        if (std::holds_alternative<LpUnbounded>(outcome)) return false;
        if (std::get<LpOptimal>(outcome).value < row.offset) return false;
    }
    return true;
}

/// A point of p that violates some row of q, when one exists.
inline std::optional<Vector> not_subset_witness(const HPoly& p, const HPoly& q) {
    if (p.dim != q.dim) throw UsageError("not_subset_witness: ambient dimension mismatch");
    for (const LinRel& row : q.rows) {
        const LpOutcome outcome = minimize(p, row.normal);
        if (std::holds_alternative<LpInfeasible>(outcome)) return std::nullopt;
        if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
            if (opt->value < row.offset) return opt->point;
            continue;
        }
        // Unbounded below along the ray: walk far enough to cross the
        // hyperplane, landing at an exactly computed violating point.
        const auto& unb = std::get<LpUnbounded>(outcome);
        const Rational along = dot(row.normal, unb.ray);  // < 0
        Rational t = (dot(row.normal, unb.feasible) - row.offset) / -along;
        if (t < 0) t = 0;
        return add(unb.feasible, scale(t + 1, unb.ray));
    }
    return std::nullopt;
}

inline bool equiv(const HPoly& p, const HPoly& q) { return subset(p, q) && subset(q, p); }

/// Scale a row so the stacked (normal | offset) vector is a primitive
/// integer vector; the sign is preserved, so the halfspace is unchanged.
/// Zero normals degrade gracefully: 0 >= c maps to 0 >= sign(c).
inline LinRel normalize_row(const LinRel& row) {
    Integer common_den = 1;
    for (const Rational& e : row.normal) common_den = lcm(common_den, denominator(e));
    common_den = lcm(common_den, denominator(row.offset));
    Integer common_num = 0;
    auto fold = [&](const Rational& e) { common_num = gcd(common_num, numerator(e) * (common_den / denominator(e))); };
    for (const Rational& e : row.normal) fold(e);
    fold(row.offset);
    if (common_num == 0) return row;  // the all-zero row
    const Rational factor(common_den, common_num < 0 ? -common_num : common_num);
    LinRel out{scale(factor, row.normal), row.offset * factor};
    return out;
}

namespace config {
/// Row-count threshold beyond which each elimination step prunes redundant
/// rows with LPs instead of relying on syntactic deduplication alone.
/// Pruning early keeps the pairwise-combination growth in check; the LPs on
/// small systems cost far less than one late pass over a blown-up one.
inline std::size_t& fm_threshold() {
    static std::size_t value = 16;
    return value;
}
}  // namespace config

inline HPoly remove_redundancy(const HPoly& p);

namespace detail {

/// Drop syntactic duplicates (after primitive rescaling), keeping first
/// occurrences in order.
inline std::vector<LinRel> dedup_rows(const std::vector<LinRel>& rows) {
    std::vector<LinRel> out;
    std::set<std::pair<Vector, Rational>> seen;
    for (const LinRel& row : rows) {
        LinRel n = normalize_row(row);
        if (seen.emplace(n.normal, n.offset).second) out.push_back(std::move(n));
    }
    return out;
}

/// Stronger syntactic pruning for elimination steps: after primitive
/// rescaling, rows sharing a normal collapse to the largest offset (the only
/// binding one in an intersection) and vacuous rows (0 >= nonpositive)
/// disappear. First occurrences keep their positions.
inline std::vector<LinRel> dominance_dedup(const std::vector<LinRel>& rows) {
    std::vector<LinRel> out;
    std::map<Vector, std::size_t> strongest;
    for (const LinRel& row : rows) {
        LinRel n = normalize_row(row);
        if (is_zero(n.normal) && n.offset <= 0) continue;
        const auto [it, fresh] = strongest.emplace(n.normal, out.size());
        if (fresh) out.push_back(std::move(n));
        else if (n.offset > out[it->second].offset) out[it->second].offset = n.offset;
    }
    return out;
}

/// A row whose negation is also present describes an equation mentioning
/// the coordinate; returns its index, or none. pre: rows are normalized.
inline std::optional<std::size_t> equation_on_coord(const std::vector<LinRel>& rows,
                                                    std::size_t coord) {
    std::set<std::pair<Vector, Rational>> keys;
    for (const LinRel& r : rows) keys.emplace(r.normal, r.offset);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].normal[coord] == 0) continue;
        if (keys.count({negate(rows[i].normal), -rows[i].offset})) return i;
    }
    return std::nullopt;
}

/// One Fourier–Motzkin step: eliminate coordinate `coord`.
///
/// When some equation a·x = b (a row present with its negation) mentions the
/// coordinate, adding the right multiple of it to every other row cancels
/// the coordinate everywhere without changing the solution set — a Gaussian
/// substitution, no growth. Otherwise every (positive, negative) row pair
/// combines into one row with the coordinate cancelled by a positive
/// combination. Either way the output describes exactly the projection.
inline HPoly eliminate_coord(const HPoly& p, std::size_t coord) {
    if (coord >= p.dim) throw UsageError("eliminate_coord: coordinate out of range");
    auto without = [&](const Vector& v) {
        Vector out;
        out.reserve(v.size() - 1);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (j != coord) out.push_back(v[j]);
        return out;
    };

    const std::vector<LinRel> source = dominance_dedup(p.rows);
    std::vector<LinRel> rows;

    if (const auto eq = equation_on_coord(source, coord)) {
        const LinRel& pivot = source[*eq];
        const Rational a = pivot.normal[coord];
        for (const LinRel& s : source) {
            const Rational factor = s.normal[coord] / a;
            if (factor == 0) {
                rows.push_back(LinRel{without(s.normal), s.offset});
            } else {
                // The pivot row itself (and its negation) lands on 0 >= 0
                // and is swept out by the dominance pass below.
                rows.push_back(LinRel{without(sub(s.normal, scale(factor, pivot.normal))),
                                      s.offset - factor * pivot.offset});
            }
        }
        return HPoly{p.dim - 1, dominance_dedup(rows)};
    }

    std::vector<const LinRel*> pos, neg;
    for (const LinRel& row : source) {
        const int s = sign(row.normal[coord]);
        if (s > 0) pos.push_back(&row);
        else if (s < 0) neg.push_back(&row);
        else rows.push_back(LinRel{without(row.normal), row.offset});
    }
    for (const LinRel* hi : pos) {
        for (const LinRel* lo : neg) {
            const Rational a = hi->normal[coord];   // > 0
            const Rational b = -lo->normal[coord];  // > 0
            rows.push_back(LinRel{add(scale(b, without(hi->normal)), scale(a, without(lo->normal))),
                                  b * hi->offset + a * lo->offset});
        }
    }

    HPoly out{p.dim - 1, dominance_dedup(rows)};
    if (out.rows.size() > config::fm_threshold()) out = remove_redundancy(out);
    return out;
}

}  // namespace detail

/// Project away the first coordinate.
inline HPoly proj0(const HPoly& p) {
    if (p.dim == 0) throw UsageError("proj0: nothing to project in dimension zero");
    return detail::eliminate_coord(p, 0);
}

/// Project away an arbitrary coordinate set (0-based). The elimination
/// order is chosen adaptively: a coordinate a present equation can
/// substitute away goes first (that step cannot grow the system), otherwise
/// the one with the fewest positive×negative row pairs. Ties fall to the
/// smallest index, so the walk is deterministic.
inline HPoly project_out(const HPoly& p, const std::set<std::size_t>& coords) {
    for (std::size_t c : coords)
        if (c >= p.dim) throw UsageError("project_out: coordinate out of range");

    HPoly out = p;
    std::vector<std::size_t> pending(coords.begin(), coords.end());
    while (!pending.empty()) {
        const std::vector<LinRel> rows = detail::dominance_dedup(out.rows);
        std::size_t choice = 0;
        std::size_t best_growth = 0;
        bool first = true;
        for (std::size_t k = 0; k < pending.size(); ++k) {
            const std::size_t c = pending[k];
            if (detail::equation_on_coord(rows, c)) {
                choice = k;
                break;
            }
            std::size_t pos = 0, neg = 0;
            for (const LinRel& row : rows) {
                const int s = sign(row.normal[c]);
                if (s > 0) ++pos;
                else if (s < 0) ++neg;
            }
            const std::size_t growth = pos * neg;
            if (first || growth < best_growth) {
                choice = k;
                best_growth = growth;
                first = false;
            }
        }
        const std::size_t victim = pending[choice];
        out = detail::eliminate_coord(out, victim);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(choice));
        for (std::size_t& c : pending)
            if (c > victim) --c;
    }
    return out;
}

/// An equivalent subsystem of p's rows with no redundant row left, found by
/// minimizing each row against the others. Infeasible input collapses to
/// the canonical empty system. Order is preserved; the result's rows are a
/// subsequence of p's (each possibly rescaled to primitive form).
inline HPoly remove_redundancy(const HPoly& p) {
    validate(p, "remove_redundancy");
    if (hpoly_is_empty(p)) return hpoly_empty(p.dim);

    std::vector<LinRel> rows = detail::dedup_rows(p.rows);
    // Vacuous rows (0 >= nonpositive) say nothing; drop them up front.
    std::erase_if(rows, [](const LinRel& r) { return is_zero(r.normal) && r.offset <= 0; });

    for (std::size_t i = 0; i < rows.size();) {
        std::vector<LinRel> rest;
        rest.reserve(rows.size() - 1);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != i) rest.push_back(rows[j]);
        const LpOutcome outcome = solve(LinProgram{rest, rows[i].normal});
        bool redundant = false;
        if (const auto* opt = std::get_if<LpOptimal>(&outcome))
            redundant = opt->value >= rows[i].offset;
        if (redundant) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        else ++i;
    }
    return HPoly{p.dim, std::move(rows)};
}

}  // namespace facekit
