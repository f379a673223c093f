#include "agor/linalg.hpp"

namespace agor {

namespace {

// returns pivot column of each pivot row after in-place forward elimination
std::vector<size_t> eliminate(std::vector<Scalar>& a, size_t rows, size_t cols,
                              const Field& f) {
    (void)f;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr * cols + c].is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (size_t k = c; k < cols; ++k)
                std::swap(a[pr * cols + k], a[r * cols + k]);
        Scalar inv = a[r * cols + c].inv();
        for (size_t k = c; k < cols; ++k) a[r * cols + k] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || a[rr * cols + c].is_zero()) continue;
            Scalar fct = a[rr * cols + c];
            for (size_t k = c; k < cols; ++k)
                a[rr * cols + k] -= fct * a[r * cols + k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

size_t Matrix::rank() const {
    std::vector<Scalar> a(data_);
    return eliminate(a, rows_, cols_, field_).size();
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
    std::vector<Scalar> a(data_);
    std::vector<size_t> pivots = eliminate(a, rows_, cols_, field_);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(cols_, Scalar(field_));
        v[c] = Scalar(field_, 1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r * cols_ + c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Scalar>>
invert_matrix(const std::vector<std::vector<Scalar>>& M, const Field& f) {
    size_t n = M.size();
    std::vector<Scalar> a;
    a.reserve(n * 2 * n);
    for (size_t r = 0; r < n; ++r) {
        if (M[r].size() != n) throw MathError("matrix not square");
        for (size_t c = 0; c < n; ++c) a.push_back(M[r][c]);
        for (size_t c = 0; c < n; ++c)
            a.push_back(Scalar(f, r == c ? 1 : 0));
    }
    std::vector<size_t> pivots = eliminate(a, n, 2 * n, f);
    if (pivots.size() != n ||
        [&] { for (size_t i = 0; i < n; ++i) if (pivots[i] != i) return true;
              return false; }())
        throw MathError("matrix is singular");
    std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar(f)));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv[r][c] = a[r * 2 * n + n + c];
    return inv;
}

} // namespace agor
