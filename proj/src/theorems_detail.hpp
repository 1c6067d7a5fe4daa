#pragma once

#include "freeboson/theorems.hpp"

namespace freeboson::detail {

/// [t^k] (1 - t)^n
Scalar one_minus_power(int n, int k);
/// c^k / k!, zero for k < 0
Scalar exp_coeff(const Scalar& c, int k);
/// Y[u, y01] v with y01 = -log(1 - r), as a series in r up to r^top.
VectorSeries log_bracket(const FockVector& u, const FockVector& v, int top);
/// Res_y of the x1^{-m} coefficient of delta(e^{-y} x1/x2) times the bracket series.
FockVector comm_residue(const VectorSeries& bracket, int m, int order);
/// [X_m(a), X_n(b)] w
FockVector commutator(const FockVector& a, int m, const FockVector& b, int n, const FockVector& w);
Json vector_list(const std::vector<FockVector>& vs);
Json base_params(const TheoremParams& p, const std::string& identity);

CheckReport genjacobi_check(const TheoremParams& p);
CheckReport gencomm_check(const TheoremParams& p);
CheckReport fourterm_check(const TheoremParams& p);
CheckReport specialize_check(const TheoremParams& p);

}  // namespace freeboson::detail
