#pragma once

#include "tropideal/rational.hpp"

#include <vector>

namespace tropideal::lp {

struct SlackResult {
    Rational slack;             // optimal t; negative means infeasible
    VectorQ point;              // optimal z
    std::vector<int> implied;   // rows tight at every feasible point (set when slack == 0)
};

/// Exact simplex for   max t  s.t.  A z + t <= b,  t <= 1,   z free.
/// Bland's rule, so it always terminates.
SlackResult max_slack(const MatrixQ& a, const VectorQ& b);

}  // namespace tropideal::lp
