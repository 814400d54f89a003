#include "tropideal/lp.hpp"

#include "tropideal/errors.hpp"

#include <algorithm>

namespace tropideal::lp {

// Free variables x = (z, t) are shifted to a feasible start x0 and split as
// y+ - y-, which leaves the slack basis feasible:
//   G y+ - G y- + s = h - G x0 >= 0,   maximize t.
SlackResult max_slack(const MatrixQ& a, const VectorQ& b) {
    const Eigen::Index m = a.rows();
    const Eigen::Index n = a.cols();
    if (b.size() != m) throw DimensionError("max_slack: right-hand side length mismatch");
    const Eigen::Index nx = n + 1;       // z and t
    const Eigen::Index rows = m + 1;     // A z + t <= b, t <= 1
    const Eigen::Index cols = 2 * nx + rows;

    Rational t0 = 1;
    for (Eigen::Index i = 0; i < m; ++i) t0 = std::min(t0, b(i));

    // tableau: rows x (cols + 1), last column is the right-hand side
    MatrixQ tab = MatrixQ::Zero(rows, cols + 1);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < nx; ++j) {
            Rational g = 0;
            if (j == n)
                g = 1;
            else if (i < m)
                g = a(i, j);
            tab(i, j) = g;
            tab(i, nx + j) = -g;
        }
        tab(i, 2 * nx + i) = 1;
        tab(i, cols) = (i < m ? b(i) : Rational(1)) - t0;
    }
    std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
    for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = 2 * nx + i;

    // reduced costs of the objective  maximize y+_t - y-_t
    VectorQ rc = VectorQ::Zero(cols);
    rc(n) = 1;
    rc(nx + n) = -1;

    while (true) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < cols; ++j)
            if (rc(j) > 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        Eigen::Index leave = -1;
        Rational best_ratio;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (tab(i, enter) <= 0) continue;
            const Rational ratio = tab(i, cols) / tab(i, enter);
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw InvariantError("max_slack: objective unbounded despite t <= 1");
        const Rational piv = tab(leave, enter);
        for (Eigen::Index j = 0; j <= cols; ++j) tab(leave, j) /= piv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == leave || tab(i, enter) == 0) continue;
            const Rational f = tab(i, enter);
            for (Eigen::Index j = 0; j <= cols; ++j)
                if (tab(leave, j) != 0) tab(i, j) -= f * tab(leave, j);
        }
        const Rational f = rc(enter);
        for (Eigen::Index j = 0; j < cols; ++j)
            if (tab(leave, j) != 0) rc(j) -= f * tab(leave, j);
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    VectorQ y = VectorQ::Zero(cols);
    for (Eigen::Index i = 0; i < rows; ++i) y(basis[static_cast<std::size_t>(i)]) = tab(i, cols);
    SlackResult out;
    out.point = VectorQ(n);
    for (Eigen::Index j = 0; j < n; ++j) out.point(j) = y(j) - y(nx + j);
    out.slack = t0 + y(n) - y(nx + n);
    if (out.slack == 0) {
        // dual value of row i is minus the reduced cost of its slack
        for (Eigen::Index i = 0; i < m; ++i)
            if (rc(2 * nx + i) < 0) out.implied.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace tropideal::lp
