#include "lefscalc/io.hpp"

namespace lefscalc {

MorseReport morse_report(const ConstructibleFunction& phi, const VertexFunctional& ell) {
  MorseReport r;
  r.table = cc_table(phi, ell);
  r.integral = euler_integral(phi);
  r.equal = r.table.total() == r.integral;
  return r;
}

IndexCheckReport index_check_report(const ProblemFile& p) {
  const ConstructibleFunction phi = problem_function(p);
  const VertexFunctional ell = problem_functional(p);
  IndexCheckReport r;
  r.integral = euler_integral(phi);
  r.index_sum = index_sum(phi, ell);
  r.index_sum_negated = index_sum(phi, ell.negated());
  r.equal = r.index_sum == r.integral && r.index_sum_negated == r.integral;
  if (p.complex) {
    const TracedProblem t = problem_traced(p);
    const auto components = fixed_components(t);
    for (int i = 0; i < static_cast<int>(components.size()); ++i) {
      IndexComponent c;
      c.component = i;
      c.microlocal_index = microlocal_index(t, i, ell);
      c.signed_contribution = signed_local_contribution(t, i).value;
      c.equal = c.microlocal_index == c.signed_contribution;
      r.equal = r.equal && c.equal;
      r.components.push_back(std::move(c));
    }
  }
  return r;
}

PushforwardReport pushforward_report(const SimplicialMap& g, const ConstructibleFunction& phi) {
  PushforwardReport r;
  const ConstructibleFunction pushed = pushforward(g, phi);
  r.function = function_report(pushed);
  r.source_integral = euler_integral(phi);
  r.target_integral = euler_integral(pushed);
  r.equal = r.source_integral == r.target_integral;
  return r;
}

}  // namespace lefscalc
