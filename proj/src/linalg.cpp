#include "jf/linalg.hpp"

#include <algorithm>

namespace jf {

namespace {

// Clear denominators and strip content; zero rows are dropped.
std::vector<std::vector<Integer>> integerize(const std::vector<RatRow>& rows, std::size_t ncols) {
    std::vector<std::vector<Integer>> m;
    for (const auto& row : rows) {
        if (row.size() != ncols) throw StructureError("ragged row in linear system");
        Integer l(1);
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Integer> r(ncols);
        Integer content(0);
        for (std::size_t j = 0; j < ncols; ++j) {
            r[j] = row[j].get_num() * (l / row[j].get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), r[j].get_mpz_t());
        }
        if (content == 0) continue;
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        m.push_back(std::move(r));
    }
    return m;
}

void make_primitive(RatRow& v) {
    Integer l(1);
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    Integer content(0);
    std::vector<Integer> w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        w[j] = v[j].get_num() * (l / v[j].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[j].get_mpz_t());
    }
    if (content == 0) return;
    int sign = 0;
    for (const auto& x : w)
        if (x != 0) { sign = mpz_sgn(x.get_mpz_t()); break; }
    if (sign < 0) content = -content;
    for (std::size_t j = 0; j < v.size(); ++j) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), w[j].get_mpz_t(), content.get_mpz_t());
        v[j] = Rational(q);
    }
}

} // namespace

NullspaceResult nullspace(std::vector<RatRow> rows, std::size_t ncols) {
    auto m = integerize(rows, ncols);
    std::vector<bool> row_used(m.size(), false), col_used(ncols, false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col) per step
    Integer prev(1);
    while (true) {
        // pivot column: first column of maximal support among remaining rows
        std::size_t best_col = ncols;
        std::size_t best_support = 0;
        for (std::size_t c = 0; c < ncols; ++c) {
            if (col_used[c]) continue;
            std::size_t s = 0;
            for (std::size_t r = 0; r < m.size(); ++r)
                if (!row_used[r] && m[r][c] != 0) ++s;
            if (s > best_support) { best_support = s; best_col = c; }
        }
        if (best_support == 0) break;
        std::size_t pr = m.size();
        for (std::size_t r = 0; r < m.size(); ++r)
            if (!row_used[r] && m[r][best_col] != 0) { pr = r; break; }
        const Integer piv = m[pr][best_col];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (row_used[r] || r == pr) continue;
            const Integer f = m[r][best_col];
            for (std::size_t j = 0; j < ncols; ++j) {
                Integer t = piv * m[r][j] - f * m[pr][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[r][j] = std::move(t);
            }
        }
        row_used[pr] = true;
        col_used[best_col] = true;
        pivots.emplace_back(pr, best_col);
        prev = piv;
    }

    NullspaceResult out;
    out.rank = static_cast<i64>(pivots.size());
    for (std::size_t f = 0; f < ncols; ++f) {
        if (col_used[f]) continue;
        RatRow x(ncols, Rational(0));
        x[f] = 1;
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            auto [r, c] = *it;
            Rational s(0);
            for (std::size_t j = 0; j < ncols; ++j) {
                if (j == c || m[r][j] == 0 || x[j] == 0) continue;
                s += Rational(m[r][j]) * x[j];
            }
            x[c] = -s / Rational(m[r][c]);
        }
        make_primitive(x);
        out.basis.push_back(std::move(x));
    }
    return out;
}

std::optional<RatRow> solve_square(std::vector<RatRow> a, RatRow b) {
    const std::size_t n = b.size();
    for (const auto& row : a)
        if (row.size() != n) throw StructureError("ragged row in linear system");
    if (a.size() != n) throw StructureError("solve_square needs an n x n system");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    RatRow x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = b[c] / a[c][c];
    return x;
}

} // namespace jf
