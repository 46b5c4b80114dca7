#include "test_helpers.hpp"

#include <map>

namespace milnor::testing {

namespace {

// det of the square matrix rows x cols by expansion along the first row,
// memoized on the set of used columns. Exponential but fine for n <= 12.
MPoly minor_det(const std::vector<std::vector<MPoly>>& m, unsigned row, unsigned used_cols,
                std::map<unsigned, MPoly>& memo, VarSet vs) {
    size_t n = m.size();
    if (row == n) return MPoly::constant(vs, 1);
    auto it = memo.find(used_cols);
    if (it != memo.end()) return it->second;
    MPoly acc(vs);
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        if (used_cols & (1u << c)) continue;
        if (!m[row][c].is_zero()) {
            MPoly sub = minor_det(m, row + 1, used_cols | (1u << c), memo, vs);
            acc = (sign > 0) ? acc + m[row][c] * sub : acc - m[row][c] * sub;
        }
        sign = -sign;
    }
    memo.emplace(used_cols, acc);
    return acc;
}

}  // namespace

MPoly sylvester_determinant_oracle(const UniPoly& p, const UniPoly& q) {
    int n = p.degree(), m = q.degree();
    VarSet vs = p.coeff_vars().united(q.coeff_vars());
    if (n < 0 || m < 0) throw internal_error("oracle: zero polynomial");
    if (n == 0 && m == 0) throw internal_error("oracle: both constant");
    size_t size = static_cast<size_t>(n + m);
    if (m == 0) {
        MPoly r = MPoly::constant(vs, 1);
        for (int i = 0; i < n; ++i) r = r * q.lc().promoted(vs);
        return r;
    }
    if (n == 0) {
        MPoly r = MPoly::constant(vs, 1);
        for (int i = 0; i < m; ++i) r = r * p.lc().promoted(vs);
        return r;
    }
    std::vector<std::vector<MPoly>> mat(size, std::vector<MPoly>(size, MPoly(vs)));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) mat[r][r + k] = p.coeff(n - k).promoted(vs);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) mat[m + r][r + k] = q.coeff(m - k).promoted(vs);
    std::map<unsigned, MPoly> memo;
    return minor_det(mat, 0, 0, memo, vs);
}

int quotient_dimension_oracle(const MPoly& g, Var u, Var v) {
    MPoly gu = g.partial(u), gv = g.partial(v);
    auto dim_at = [&](int N) {
        // basis: monomials u^a v^b with a+b < N
        std::map<std::pair<int, int>, int> index;
        int nb = 0;
        for (int a = 0; a < N; ++a)
            for (int b = 0; a + b < N; ++b) index[{a, b}] = nb++;
        std::vector<std::vector<Rat>> rows;
        for (const MPoly* gen : {&gu, &gv}) {
            if (gen->is_zero()) continue;
            for (int a = 0; a < N; ++a)
                for (int b = 0; a + b < N; ++b) {
                    // u^a v^b * gen, truncated below degree N
                    std::vector<Rat> row(static_cast<size_t>(nb), Rat(0));
                    bool nonzero = false;
                    for (const auto& [mono, c] : gen->terms()) {
                        int da = a + mono[u], db = b + mono[v];
                        if (da + db >= N) continue;
                        row[static_cast<size_t>(index[{da, db}])] += c;
                        nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
        }
        // Gaussian elimination over Q
        int rank = 0;
        for (int col = 0; col < nb && rank < static_cast<int>(rows.size()); ++col) {
            int piv = -1;
            for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
                if (rows[r][static_cast<size_t>(col)] != 0) {
                    piv = static_cast<int>(r);
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(piv)]);
            const Rat pval = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (size_t r = 0; r < rows.size(); ++r) {
                if (static_cast<int>(r) == rank) continue;
                Rat f = rows[r][static_cast<size_t>(col)] / pval;
                if (f == 0) continue;
                for (int c2 = col; c2 < nb; ++c2)
                    rows[r][static_cast<size_t>(c2)] -= f * rows[static_cast<size_t>(rank)][static_cast<size_t>(c2)];
            }
            ++rank;
        }
        return nb - rank;
    };
    int prev = -1;
    for (int N = 2; N <= 24; ++N) {
        int d = dim_at(N);
        if (d == prev) return d;
        prev = d;
    }
    return prev;
}

}  // namespace milnor::testing
