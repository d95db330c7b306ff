#include "nonarch/linalg.hpp"

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

// index of the nonzero entry of minimal valuation in column `col` among rows
// [from, end); -1 if the column is zero there
std::ptrdiff_t pick_pivot(const std::vector<std::vector<Scalar>>& a,
                          std::size_t from, std::size_t col) {
    std::ptrdiff_t best = -1;
    Valuation best_v = Valuation::infinity();
    for (std::size_t r = from; r < a.size(); ++r) {
        if (a[r][col].is_zero()) continue;
        const Valuation v = a[r][col].valuation();
        if (best < 0 || v < best_v) {
            best = static_cast<std::ptrdiff_t>(r);
            best_v = v;
        }
    }
    return best;
}

}  // namespace

std::size_t exact_rank(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw DomainError("exact_rank: ragged row lengths");
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        const std::ptrdiff_t piv = pick_pivot(rows, r, c);
        if (piv < 0) continue;
        std::swap(rows[r], rows[static_cast<std::size_t>(piv)]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            const Scalar factor = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] = rows[i][j] - factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

Scalar exact_det(std::vector<std::vector<Scalar>> a) {
    const std::size_t n = a.size();
    if (n == 0) throw DomainError("exact_det: empty matrix");
    const FieldSpec F = a[0][0].field();
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("exact_det: matrix not square");
    Scalar det = Scalar::one(F);
    for (std::size_t c = 0; c < n; ++c) {
        const std::ptrdiff_t piv = pick_pivot(a, c, c);
        if (piv < 0) return Scalar::zero(F);
        if (static_cast<std::size_t>(piv) != c) {
            std::swap(a[c], a[static_cast<std::size_t>(piv)]);
            det = -det;
        }
        det = det * a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            const Scalar factor = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[i][j] = a[i][j] - factor * a[c][j];
        }
    }
    return det;
}

std::vector<Scalar> exact_solve(std::vector<std::vector<Scalar>> a,
                                std::vector<Scalar> b) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n)
        throw DomainError("exact_solve: shape mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("exact_solve: matrix not square");
    for (std::size_t c = 0; c < n; ++c) {
        const std::ptrdiff_t piv = pick_pivot(a, c, c);
        if (piv < 0) throw DomainError("exact_solve: singular matrix");
        if (static_cast<std::size_t>(piv) != c) {
            std::swap(a[c], a[static_cast<std::size_t>(piv)]);
            std::swap(b[c], b[static_cast<std::size_t>(piv)]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            const Scalar factor = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[i][j] = a[i][j] - factor * a[c][j];
            b[i] = b[i] - factor * b[c];
        }
    }
    std::vector<Scalar> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.push_back(b[i] / a[i][i]);
    return x;
}

}  // namespace nonarch
