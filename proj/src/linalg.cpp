#include "qschur/linalg.hpp"

#include <algorithm>

namespace qschur {

int rank(BigMatrix rows) {
    size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.size());
    for (auto& r : rows) r.resize(cols, 0);
    const size_t m = rows.size();
    size_t rk = 0;
    BigInt prev = 1;
    for (size_t c = 0; c < cols && rk < m; ++c) {
        size_t piv = rk;
        while (piv < m && rows[piv][c] == 0) ++piv;
        if (piv == m) continue;
        std::swap(rows[piv], rows[rk]);
        for (size_t i = rk + 1; i < m; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                rows[i][j] = (rows[rk][c] * rows[i][j] - rows[i][c] * rows[rk][j]) / prev;
            rows[i][c] = 0;
        }
        prev = rows[rk][c];
        ++rk;
    }
    return static_cast<int>(rk);
}

bool in_row_span(const BigMatrix& rows, const std::vector<BigInt>& v) {
    BigMatrix ext = rows;
    ext.push_back(v);
    return rank(ext) == rank(rows);
}

}  // namespace qschur
